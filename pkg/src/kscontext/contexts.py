"""Projector families, context validity, and maximal-context discovery.

A context is a family of two or more mutually orthogonal projectors; it is
maximal when the members sum to the identity.  Contexts are referenced by
projector label, never by matrix copy, so a projector shared between two
contexts keeps a single identity — the structure a noncontextual value
assignment quantifies over.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, Projector, is_orthogonal


class UnknownLabelError(KeyError):
    """A referenced projector label is not present in the set."""


@dataclass(frozen=True)
class Context:
    """Ordered family of mutually orthogonal projectors, by label."""

    members: tuple[str, ...]
    maximal: bool
    label: str | None = None

    def display_name(self) -> str:
        return self.label or "{" + " ".join(self.members) + "}"


@dataclass(frozen=True)
class ContextReport:
    """Outcome of validating one candidate context."""

    members: tuple[str, ...]
    non_orthogonal_pairs: tuple[tuple[str, str], ...]
    maximal: bool

    @property
    def valid(self) -> bool:
        return not self.non_orthogonal_pairs


class ProjectorSet:
    """Labeled projectors on one ambient space, plus declared contexts.

    Declared contexts are *not* required to be valid at construction:
    reporting non-orthogonal pairs is `validate_context`'s job, and the
    command line needs to load broken files in order to complain about
    them.  Labels must resolve and contexts must have at least two
    members; everything else is checked lazily.
    """

    def __init__(self, dimension: int,
                 projectors: Mapping[str, Projector],
                 contexts: Sequence[Context | tuple] = ()):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        self.dimension = dimension
        self.projectors: dict[str, Projector] = {}
        for label, p in projectors.items():
            if p.dim != dimension:
                raise ValueError(
                    f"projector {label!r} lives on Q^{p.dim}, expected Q^{dimension}")
            self.projectors[label] = p if p.label == label else p.relabel(label)
        normalized = []
        for ctx in contexts:
            if not isinstance(ctx, Context):
                name, members = ctx
                ctx = Context(tuple(members), maximal=False, label=name)
            missing = [m for m in ctx.members if m not in self.projectors]
            if missing:
                raise UnknownLabelError(missing[0])
            if len(ctx.members) < 2:
                raise ValueError(
                    f"context {ctx.display_name()} needs at least two members")
            report = validate_context(self, ctx.members)
            normalized.append(Context(ctx.members, report.maximal, ctx.label))
        self.contexts: tuple[Context, ...] = tuple(normalized)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.projectors)

    def __getitem__(self, label: str) -> Projector:
        try:
            return self.projectors[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def __contains__(self, label: str) -> bool:
        return label in self.projectors

    def __len__(self) -> int:
        return len(self.projectors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProjectorSet)
            and self.dimension == other.dimension
            and self.projectors == other.projectors
            and list(self.projectors) == list(other.projectors)
            and self.contexts == other.contexts
        )

    def __repr__(self) -> str:
        return (f"ProjectorSet<dim {self.dimension}, "
                f"{len(self.projectors)} projectors, "
                f"{len(self.contexts)} contexts>")

    def context_named(self, name: str) -> Context:
        for ctx in self.contexts:
            if ctx.label == name:
                return ctx
        raise UnknownLabelError(name)


def validate_context(ps: ProjectorSet, labels: Iterable[str]) -> ContextReport:
    """Report every non-orthogonal pair and the maximality verdict.

    An empty pair list means the family is a valid context; `maximal` is
    claimed only for valid families whose members sum to the identity.
    """
    members = tuple(labels)
    projs = [ps[m] for m in members]
    bad = tuple(
        (members[i], members[j])
        for i in range(len(members))
        for j in range(i + 1, len(members))
        if not is_orthogonal(projs[i], projs[j])
    )
    maximal = not bad and _sums_to_identity(ps, members)
    return ContextReport(members, bad, maximal)


def is_maximal(ps: ProjectorSet, ctx: Context | Iterable[str]) -> bool:
    """True iff the members' matrices sum exactly to the identity."""
    members = ctx.members if isinstance(ctx, Context) else tuple(ctx)
    return _sums_to_identity(ps, members)


def _sums_to_identity(ps: ProjectorSet, members: Sequence[str]) -> bool:
    if not members:
        return False
    total = Matrix.zero(ps.dimension)
    for m in members:
        total = total + ps[m].matrix
    return total == Matrix.identity(ps.dimension)


def orthogonality_graph(ps: ProjectorSet) -> dict[str, frozenset[str]]:
    """Adjacency of the (undirected) orthogonality relation between labels."""
    labels = list(ps.projectors)
    adj: dict[str, set[str]] = {l: set() for l in labels}
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if is_orthogonal(ps[a], ps[b]):
                adj[a].add(b)
                adj[b].add(a)
    return {l: frozenset(s) for l, s in adj.items()}


def find_maximal_contexts(ps: ProjectorSet) -> tuple[Context, ...]:
    """All maximal contexts hiding in the set.

    Enumerates inclusion-maximal cliques of the orthogonality graph
    (Bron-Kerbosch with pivoting), then keeps those with at least two
    members that resolve to the identity.  Output is deterministic:
    members sorted by label, contexts sorted by member tuple.  A clique
    matching a declared context is returned with the declared label and
    member order.
    """
    adj = orthogonality_graph(ps)
    cliques: list[frozenset[str]] = []

    def extend(clique: set[str], candidates: set[str], excluded: set[str]):
        if not candidates and not excluded:
            cliques.append(frozenset(clique))
            return
        pivot = max(sorted(candidates | excluded), key=lambda v: len(adj[v] & candidates))
        for v in sorted(candidates - adj[pivot]):
            extend(clique | {v}, candidates & adj[v], excluded & adj[v])
            candidates.remove(v)
            excluded.add(v)

    extend(set(), set(ps.projectors), set())

    declared = {frozenset(c.members): c for c in ps.contexts}
    found = []
    for clique in cliques:
        if len(clique) < 2 or not _sums_to_identity(ps, tuple(clique)):
            continue
        if clique in declared:
            found.append(declared[clique])
        else:
            members = tuple(sorted(clique))
            found.append(Context(members, maximal=True, label=None))
    found.sort(key=lambda c: tuple(sorted(c.members)))
    return tuple(found)
