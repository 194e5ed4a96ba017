"""Tour of the exact subspace lattice of Q^d.

Run:
    python demos/lattice_tour.py

Everything is a Fraction: no tolerances, no epsilon, no "almost equal".
"""

from fractions import Fraction

from kscontext import (Matrix, Subspace, Vector, column_space, complement,
                       contains, join, meet, member, null_space,
                       orthocomplement, projector_from_span, rref)

# ---------------------------------------------------------------------------
# 1) Subspaces are canonical: any spanning set reduces to one basis.
# ---------------------------------------------------------------------------
s1 = Subspace.from_span([Vector((2, 0, 2, 0)), Vector((3, 0, 3, 0))])
s2 = Subspace.from_span([Vector((1, 0, 1, 0))])
print(f"span{{(2,0,2,0),(3,0,3,0)}} == span{{(1,0,1,0)}}: {s1 == s2}")
print(f"canonical basis: {[tuple(map(str, v.entries)) for v in s1.basis]}")

# ---------------------------------------------------------------------------
# 2) Meet, join, orthocomplement.
# ---------------------------------------------------------------------------
plane = Subspace.from_span([Vector((1, 0, 0, 0)), Vector((0, 1, 0, 0))])
line = Subspace.from_span([Vector((1, 1, 0, 0))])
other = Subspace.from_span([Vector((0, 0, 1, 1))])
print(f"\nline inside plane: {contains(plane, line)}")
print(f"plane ^ line rank: {meet(plane, line).rank}")
print(f"plane v other rank: {join(plane, other).rank}")
perp = orthocomplement(plane)
print(f"plane-perp rank: {perp.rank}, meet with plane is zero: "
      f"{meet(plane, perp).is_zero()}")

# De Morgan on subspaces, exactly
lhs = join(plane, other)
rhs = orthocomplement(meet(orthocomplement(plane), orthocomplement(other)))
print(f"join = perp(meet(perps)): {lhs == rhs}")

# ---------------------------------------------------------------------------
# 3) Projectors from spans; rationals stay rational.
# ---------------------------------------------------------------------------
p = projector_from_span([Vector((1, 0, 1, 0))], "p")
print(f"\nprojector onto (1,0,1,0):")
for row in p.matrix.rows:
    print("  " + "  ".join(f"{e!s:>4}" for e in row))
print(f"idempotent: {p.matrix @ p.matrix == p.matrix}")
print(f"rank (= trace): {p.rank}")
print(f"complement rank: {complement(p).rank}")

# ---------------------------------------------------------------------------
# 4) Ranges and kernels; membership is a decision, not an approximation.
# ---------------------------------------------------------------------------
v = Vector((Fraction(1, 2), 0, Fraction(1, 2), 0))
print(f"\n(1/2,0,1/2,0) in ran(p): {member(v, column_space(p.matrix))}")
print(f"(1/2,0,1/2,0) in ker(p): {member(v, null_space(p.matrix))}")

# row reduction is the canonicalization workhorse
m = Matrix([[2, 4, 6], [1, 2, 3], [0, 1, 1]])
print("\nrref of a rank-2 matrix:")
for row in rref(m).rows:
    print("  " + "  ".join(str(e) for e in row))
