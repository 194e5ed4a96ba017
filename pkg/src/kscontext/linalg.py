"""Exact linear algebra over the rationals.

Vectors, matrices, subspaces and projectors all carry `fractions.Fraction`
entries, so every predicate in this module (equality of subspaces,
membership of a vector, idempotence of a projector, orthogonality) is
decided exactly, with zero tolerance.

A subspace of Q^d is stored as the reduced row-echelon basis of its
spanning set.  That form is unique, so two `Subspace` values compare equal
iff they describe the same set of vectors, and hashing is structural.

The lattice operations follow the usual subspace lattice:

>>> a = Subspace.from_span([Vector([0, 0, 0, 1])])
>>> orthocomplement(a).rank
3
>>> meet(a, orthocomplement(a)).rank
0
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[Fraction, int]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Vector:
    """Immutable vector with exact rational entries."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[Rational]):
        self._entries = tuple(_frac(e) for e in entries)
        if not self._entries:
            raise ValueError("a vector needs at least one entry")

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._entries

    @property
    def dim(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self._entries)

    def dot(self, other: "Vector") -> Fraction:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return sum((a * b for a, b in zip(self._entries, other._entries)), Fraction(0))

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i: int) -> Fraction:
        return self._entries[i]

    def __add__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return Vector(a + b for a, b in zip(self._entries, other._entries))

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __neg__(self) -> "Vector":
        return Vector(-e for e in self._entries)

    def __mul__(self, scalar: Rational) -> "Vector":
        s = _frac(scalar)
        return Vector(s * e for e in self._entries)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return "Vector((%s))" % ", ".join(str(e) for e in self._entries)


class Matrix:
    """Immutable matrix with exact rational entries.

    Most matrices here are square operators on Q^d, but rectangular shapes
    are allowed: row reduction of stacked bases needs them.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Rational]]):
        self._rows = tuple(tuple(_frac(e) for e in row) for row in rows)
        if not self._rows or not self._rows[0]:
            raise ValueError("a matrix needs at least one row and one column")
        width = len(self._rows[0])
        if any(len(r) != width for r in self._rows):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([[0] * (m or n) for _ in range(n)])

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(e == 0 for row in self._rows for e in row)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def is_idempotent(self) -> bool:
        return self.is_square() and self @ self == self

    def row(self, i: int) -> Vector:
        return Vector(self._rows[i])

    def column(self, j: int) -> Vector:
        return Vector(r[j] for r in self._rows)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._rows))

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace needs a square matrix")
        return sum((self._rows[i][i] for i in range(self.nrows)), Fraction(0))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            (a + b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            (a - b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows)
        )

    def __mul__(self, scalar: Rational) -> "Matrix":
        s = _frac(scalar)
        return Matrix((s * e for e in row) for row in self._rows)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Vector):
            if self.ncols != other.dim:
                raise ValueError(f"dimension mismatch: {self.ncols} vs {other.dim}")
            return Vector(
                sum((a * b for a, b in zip(row, other.entries)), Fraction(0))
                for row in self._rows
            )
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"dimension mismatch: {self.ncols} vs {other.nrows}")
            cols = other.transpose()._rows
            return Matrix(
                [
                    sum((a * b for a, b in zip(row, col)), Fraction(0))
                    for col in cols
                ]
                for row in self._rows
            )
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in row) for row in self._rows)
        return f"Matrix([{body}])"


def _rref_rows(rows: Sequence[Sequence[Fraction]], ncols: int):
    """Reduced row echelon form of a row list.

    Returns (nonzero reduced rows, pivot column per row).  Pivot columns
    are strictly increasing, pivots are 1, and pivot columns are cleared
    above and below, which makes the output unique for a given row space.
    """
    work = [list(r) for r in rows]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(ncols):
        hit = next((i for i in range(pivot_row, len(work)) if work[i][col] != 0), None)
        if hit is None:
            continue
        work[pivot_row], work[hit] = work[hit], work[pivot_row]
        lead = work[pivot_row][col]
        if lead != 1:
            work[pivot_row] = [e / lead for e in work[pivot_row]]
        for i in range(len(work)):
            if i != pivot_row and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[pivot_row])]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(work):
            break
    reduced = [tuple(r) for r in work[: len(pivots)]]
    return reduced, pivots


def rref(m: Matrix) -> Matrix:
    """Unique reduced row-echelon form of `m`, same shape, exact over Q."""
    reduced, _ = _rref_rows(m.rows, m.ncols)
    padded = list(reduced) + [tuple([Fraction(0)] * m.ncols)] * (m.nrows - len(reduced))
    return Matrix(padded)


class Subspace:
    """Closed subspace of Q^d held as its canonical reduced-row-echelon basis.

    Construct through `from_span`, `zero`, or `full`; any spanning set is
    canonicalized on entry, so structural equality coincides with equality
    of the spanned sets.
    """

    __slots__ = ("_basis", "_ambient", "_pivots")

    def __init__(self, basis_rows, dim_ambient: int, pivots):
        self._basis = tuple(Vector(r) for r in basis_rows)
        self._ambient = dim_ambient
        self._pivots = tuple(pivots)

    @classmethod
    def from_span(cls, vectors: Iterable[Vector | Sequence[Rational]],
                  dim_ambient: int | None = None) -> "Subspace":
        vecs = [v if isinstance(v, Vector) else Vector(v) for v in vectors]
        if not vecs:
            if dim_ambient is None:
                raise ValueError("empty span needs an explicit ambient dimension")
            return cls.zero(dim_ambient)
        d = vecs[0].dim
        if dim_ambient is not None and dim_ambient != d:
            raise ValueError(f"dimension mismatch: {dim_ambient} vs {d}")
        if any(v.dim != d for v in vecs):
            raise ValueError("spanning vectors have mixed dimensions")
        reduced, pivots = _rref_rows([v.entries for v in vecs], d)
        return cls(reduced, d, pivots)

    @classmethod
    def zero(cls, dim_ambient: int) -> "Subspace":
        return cls([], dim_ambient, [])

    @classmethod
    def full(cls, dim_ambient: int) -> "Subspace":
        return cls(Matrix.identity(dim_ambient).rows, dim_ambient,
                   range(dim_ambient))

    @property
    def basis(self) -> tuple[Vector, ...]:
        return self._basis

    @property
    def dim_ambient(self) -> int:
        return self._ambient

    @property
    def rank(self) -> int:
        return len(self._basis)

    def is_zero(self) -> bool:
        return not self._basis

    def is_full(self) -> bool:
        return len(self._basis) == self._ambient

    def __contains__(self, v: Vector) -> bool:
        return member(v, self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self._ambient == other._ambient
            and self._basis == other._basis
        )

    def __hash__(self) -> int:
        return hash((self._ambient, self._basis))

    def __repr__(self) -> str:
        if self.is_zero():
            return f"Subspace.zero({self._ambient})"
        rows = ", ".join(repr(list(map(str, v.entries))) for v in self._basis)
        return f"Subspace<rank {self.rank} of Q^{self._ambient}: {rows}>"


class Projector:
    """Idempotent symmetric rational matrix, optionally labeled.

    Over Q idempotence plus symmetry already pin the eigenvalues to
    exactly 0 and 1, so construction only has those two checks.
    """

    __slots__ = ("_matrix", "_label")

    def __init__(self, matrix: Matrix, label: str | None = None):
        if not matrix.is_square():
            raise ValueError("projector matrix must be square")
        if not matrix.is_symmetric():
            raise ValueError("projector matrix must be symmetric")
        if matrix @ matrix != matrix:
            raise ValueError("projector matrix must be idempotent")
        self._matrix = matrix
        self._label = label

    @classmethod
    def zero(cls, dim: int, label: str | None = None) -> "Projector":
        return cls(Matrix.zero(dim), label)

    @classmethod
    def identity(cls, dim: int, label: str | None = None) -> "Projector":
        return cls(Matrix.identity(dim), label)

    @property
    def matrix(self) -> Matrix:
        return self._matrix

    @property
    def label(self) -> str | None:
        return self._label

    @property
    def dim(self) -> int:
        return self._matrix.nrows

    @property
    def rank(self) -> int:
        # trace of an idempotent equals its rank, and it is an exact integer
        t = self._matrix.trace()
        assert t.denominator == 1
        return int(t)

    @property
    def range(self) -> Subspace:
        return column_space(self._matrix)

    @property
    def kernel(self) -> Subspace:
        return null_space(self._matrix)

    def relabel(self, label: str | None) -> "Projector":
        return Projector(self._matrix, label)

    def __eq__(self, other) -> bool:
        # labels are metadata; identity of the operator is the matrix
        return isinstance(other, Projector) and self._matrix == other._matrix

    def __hash__(self) -> int:
        return hash(self._matrix)

    def __repr__(self) -> str:
        tag = f" {self._label!r}" if self._label else ""
        return f"Projector<{tag} rank {self.rank} on Q^{self.dim}>"


def column_space(m: Matrix) -> Subspace:
    """Canonical subspace spanned by the columns of `m`."""
    return Subspace.from_span([m.column(j) for j in range(m.ncols)])


def null_space(m: Matrix) -> Subspace:
    """Canonical subspace of all v with m @ v = 0."""
    reduced, pivots = _rref_rows(m.rows, m.ncols)
    free = [j for j in range(m.ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return Subspace.from_span(basis, dim_ambient=m.ncols)


def member(v: Vector, s: Subspace) -> bool:
    """Exact membership of `v` in `s`."""
    if v.dim != s.dim_ambient:
        raise ValueError(f"dimension mismatch: {v.dim} vs {s.dim_ambient}")
    residual = list(v.entries)
    for row, p in zip(s.basis, s._pivots):
        c = residual[p]
        if c != 0:
            residual = [a - c * b for a, b in zip(residual, row.entries)]
    return all(e == 0 for e in residual)


def contains(a: Subspace, b: Subspace) -> bool:
    """True iff b is a subset of a."""
    if a.dim_ambient != b.dim_ambient:
        raise ValueError("dimension mismatch")
    return all(member(v, a) for v in b.basis)


def join(a: Subspace, b: Subspace) -> Subspace:
    """Smallest subspace containing both: the span of the union of bases."""
    if a.dim_ambient != b.dim_ambient:
        raise ValueError("dimension mismatch")
    return Subspace.from_span(list(a.basis) + list(b.basis), a.dim_ambient)


def orthocomplement(a: Subspace) -> Subspace:
    """All vectors orthogonal to every vector of `a` (w.r.t. the dot product)."""
    if a.is_zero():
        return Subspace.full(a.dim_ambient)
    return null_space(Matrix(v.entries for v in a.basis))


def meet(a: Subspace, b: Subspace) -> Subspace:
    """Set intersection of two subspaces.

    Solved as one stacked linear system: x lies in a subspace iff the
    basis of the subspace's orthocomplement annihilates it, so the
    intersection is the kernel of the two stacked annihilator bases.
    (The product-of-projectors shortcut is NOT used here; it is only
    valid for commuting projectors and is kept as a test oracle.)
    """
    if a.dim_ambient != b.dim_ambient:
        raise ValueError("dimension mismatch")
    d = a.dim_ambient
    rows = [v.entries for v in orthocomplement(a).basis]
    rows += [v.entries for v in orthocomplement(b).basis]
    if not rows:
        return Subspace.full(d)
    return null_space(Matrix(rows))


def projector_from_span(vectors: Sequence[Vector | Sequence[Rational]],
                        label: str | None = None) -> Projector:
    """Orthogonal projector onto span{vectors}.

    Linearly dependent spanning sets are reduced, not rejected.  The
    matrix is assembled from an unnormalized Gram-Schmidt basis u_i as
    sum_i (u_i u_i^T) / (u_i . u_i), which keeps everything in Q.
    """
    vecs = [v if isinstance(v, Vector) else Vector(v) for v in vectors]
    if not vecs:
        raise ValueError("projector_from_span needs at least one vector")
    span = Subspace.from_span(vecs)
    d = span.dim_ambient
    ortho: list[Vector] = []
    for v in span.basis:
        u = v
        for w in ortho:
            u = u - (v.dot(w) / w.dot(w)) * w
        ortho.append(u)
    result = Matrix.zero(d)
    for u in ortho:
        nrm = u.dot(u)
        outer = Matrix([[a * b / nrm for b in u.entries] for a in u.entries])
        result = result + outer
    return Projector(result, label)


def complement(p: Projector) -> Projector:
    """Negation 1 - p, projecting onto the orthocomplement of ran(p)."""
    label = f"¬{p.label}" if p.label else None
    return Projector(Matrix.identity(p.dim) - p.matrix, label)


def is_orthogonal(p: Projector, q: Projector) -> bool:
    """True iff both operator products pq and qp vanish exactly."""
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return (p.matrix @ q.matrix).is_zero() and (q.matrix @ p.matrix).is_zero()
