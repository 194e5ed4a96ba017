"""Noncontextual {0,1} assignments: checking and exhaustive search.

An assignment is admissible when every maximal context hiding in the set
sums to exactly 1, any two orthogonal projectors carry at most one 1
(the sub-maximal exclusivity rule), and zero/identity projectors carry
their forced values.  `admissible_assignments` decides satisfiability by
backtracking with unit propagation; UNSAT answers are exhaustive-search
certificates, never heuristic.

The search may partition its top-level branches across worker processes.
Status, witness, model count and the witness list are identical for any
worker count; only `nodes_explored` depends on how the tree was split.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Literal, Mapping

from .contexts import (Context, ProjectorSet, UnknownLabelError,
                       find_maximal_contexts, orthogonality_graph)
from .linalg import Matrix

Mode = Literal["first", "all", "count"]


@dataclass(frozen=True)
class Assignment:
    """Map from projector label to 0 or 1; one value per label, no context index."""

    values: Mapping[str, int]

    def __post_init__(self):
        bad = {k: v for k, v in self.values.items() if v not in (0, 1)}
        if bad:
            raise ValueError(f"assignment values must be 0 or 1, got {bad}")

    def is_total_for(self, ps: ProjectorSet) -> bool:
        return set(self.values) >= set(ps.projectors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Assignment) and dict(self.values) == dict(other.values)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.values.items())))


@dataclass(frozen=True)
class Violation:
    """A maximal context whose assigned values do not sum to 1."""

    context: Context
    assigned_sum: int


class InconsistentAssignmentError(ValueError):
    """A fixed assignment already breaks a context or an orthogonal pair."""

    def __init__(self, message: str, context: tuple[str, ...] | None = None):
        super().__init__(message)
        self.context = context


class PinVerdict(enum.Enum):
    """Fate of a projector once a partial assignment is fixed."""

    FORCED_ONE = "forced-1"
    FORCED_ZERO = "forced-0"
    BOTH_CONTRADICT = "both-contradict"
    UNCONSTRAINED = "unconstrained"


@dataclass(frozen=True)
class SearchResult:
    status: Literal["SAT", "UNSAT"]
    witness: Assignment | None
    nodes_explored: int
    count: int | None = None
    witnesses: tuple[Assignment, ...] | None = None
    violated_context: str | None = None          # display name, diagnostics only
    violated_members: tuple[str, ...] | None = None


def check_assignment(ps: ProjectorSet, assignment: Assignment | Mapping[str, int]
                     ) -> list[Violation]:
    """One Violation per fully-assigned maximal context with sum != 1.

    Partial assignments are allowed; a context with an unassigned member
    is undetermined, not violated.
    """
    values = dict(assignment.values if isinstance(assignment, Assignment)
                  else assignment)
    unknown = [k for k in values if k not in ps.projectors]
    if unknown:
        raise UnknownLabelError(unknown[0])
    if any(v not in (0, 1) for v in values.values()):
        raise ValueError("assignment values must be 0 or 1")
    violations = []
    for ctx in find_maximal_contexts(ps):
        member_values = [values.get(m) for m in ctx.members]
        if any(v is None for v in member_values):
            continue
        total = sum(member_values)
        if total != 1:
            violations.append(Violation(ctx, total))
    return violations


# ---------------------------------------------------------------------------
# constraint network + backtracking core
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Network:
    """Index-based view of the constraints; plain tuples so it pickles."""

    labels: tuple[str, ...]                 # decision order
    adjacency: tuple[tuple[int, ...], ...]  # orthogonality, by index
    contexts: tuple[tuple[int, ...], ...]
    context_names: tuple[str, ...]
    contexts_of: tuple[tuple[int, ...], ...]
    forced: tuple[tuple[int, int], ...]     # (var, value) for zero/identity


def _build_network(ps: ProjectorSet) -> _Network:
    maximal = find_maximal_contexts(ps)
    graph = orthogonality_graph(ps)
    degree = {l: 0 for l in ps.projectors}
    for ctx in maximal:
        for m in ctx.members:
            degree[m] += 1
    # most-constrained labels first; pure performance, correctness is
    # order-independent and tested as such
    order = sorted(ps.projectors, key=lambda l: (-degree[l], l))
    index = {l: i for i, l in enumerate(order)}
    adjacency = tuple(tuple(sorted(index[n] for n in graph[l])) for l in order)
    contexts = tuple(tuple(sorted(index[m] for m in ctx.members)) for ctx in maximal)
    names = tuple(ctx.display_name() for ctx in maximal)
    contexts_of: list[list[int]] = [[] for _ in order]
    for ci, members in enumerate(contexts):
        for m in members:
            contexts_of[m].append(ci)
    forced = []
    ident = Matrix.identity(ps.dimension)
    for l, p in ps.projectors.items():
        if p.matrix.is_zero():
            forced.append((index[l], 0))
        elif p.matrix == ident:
            forced.append((index[l], 1))
    return _Network(tuple(order), adjacency, contexts,
                    names, tuple(tuple(c) for c in contexts_of), tuple(forced))


def _common_context(net: _Network, i: int, j: int) -> int | None:
    for c in net.contexts_of[i]:
        if c in net.contexts_of[j]:
            return c
    return None


def _assign(net: _Network, values: list, var: int, val: int, trail: list):
    """Assign and propagate; returns a conflicting context index, -1 for a
    conflict with no single context to blame, or None on success."""
    stack = [(var, val, None)]
    while stack:
        i, v, why = stack.pop()
        cur = values[i]
        if cur is not None:
            if cur != v:
                return why if why is not None else -1
            continue
        values[i] = v
        trail.append(i)
        if v == 1:
            for j in net.adjacency[i]:
                w = values[j]
                if w is None:
                    stack.append((j, 0, _common_context(net, i, j)))
                elif w == 1:
                    c = _common_context(net, i, j)
                    return c if c is not None else -1
        for c in net.contexts_of[i]:
            ones = 0
            unassigned = []
            for m in net.contexts[c]:
                x = values[m]
                if x is None:
                    unassigned.append(m)
                elif x == 1:
                    ones += 1
            if ones > 1 or (not unassigned and ones != 1):
                return c
            if ones == 0 and len(unassigned) == 1:
                stack.append((unassigned[0], 1, c))
    return None


class _Acc:
    __slots__ = ("nodes", "count", "first", "solutions", "last_conflict")

    def __init__(self):
        self.nodes = 0
        self.count = 0
        self.first = None
        self.solutions = []
        self.last_conflict = None


def _record_solution(net: _Network, values, mode: Mode, acc: _Acc) -> bool:
    acc.count += 1
    if acc.first is None:
        acc.first = {net.labels[i]: values[i] for i in range(len(values))}
    if mode == "all":
        acc.solutions.append({net.labels[i]: values[i] for i in range(len(values))})
    return mode == "first"


def _dfs(net: _Network, values, mode: Mode, acc: _Acc) -> bool:
    var = next((i for i, v in enumerate(values) if v is None), None)
    if var is None:
        return _record_solution(net, values, mode, acc)
    for val in (1, 0):
        acc.nodes += 1
        trail: list[int] = []
        conflict = _assign(net, values, var, val, trail)
        if conflict is None:
            if _dfs(net, values, mode, acc):
                return True
        else:
            acc.last_conflict = conflict
        for i in trail:
            values[i] = None
    return False


def _search_task(net: _Network, seed: tuple[tuple[int, int], ...], mode: Mode):
    """Exhaust the subtree under `seed`; module-level so pools can pickle it."""
    acc = _Acc()
    values: list = [None] * len(net.labels)
    trail: list[int] = []
    acc.nodes += 1
    conflict = None
    for var, val in seed:
        conflict = _assign(net, values, var, val, trail)
        if conflict is not None:
            acc.last_conflict = conflict
            break
    if conflict is None:
        _dfs(net, values, mode, acc)
    return acc.count, acc.first, acc.solutions, acc.nodes, acc.last_conflict


def _merge(net: _Network, parts, mode: Mode) -> SearchResult:
    count = 0
    witness = None
    solutions: list[dict] = []
    nodes = 0
    conflict = None
    for part_count, part_first, part_solutions, part_nodes, part_conflict in parts:
        count += part_count
        nodes += part_nodes
        if witness is None and part_first is not None:
            witness = part_first
        if mode == "all":
            solutions.extend(part_solutions)
        if part_conflict is not None:
            conflict = part_conflict
    violated_name = None
    violated_members = None
    if conflict is not None and conflict >= 0:
        violated_name = net.context_names[conflict]
        violated_members = tuple(net.labels[i] for i in net.contexts[conflict])
    return SearchResult(
        status="SAT" if count else "UNSAT",
        witness=Assignment(witness) if witness else None,
        nodes_explored=nodes,
        count=None if mode == "first" else count,
        witnesses=tuple(Assignment(s) for s in solutions) if mode == "all" else None,
        violated_context=violated_name,
        violated_members=violated_members,
    )


def _seed_from_fixed(net: _Network, fixed: Mapping[str, int]):
    index = {l: i for i, l in enumerate(net.labels)}
    seed = list(net.forced)
    for label, val in fixed.items():
        seed.append((index[label], val))
    return tuple(seed)


def admissible_assignments(ps: ProjectorSet, mode: Mode = "first",
                           workers: int = 1,
                           fixed: Mapping[str, int] | None = None) -> SearchResult:
    """Search for total admissible assignments.

    mode="first" stops at the first witness (canonical order: labels by
    descending context-degree then name, value 1 tried before 0);
    "all" collects every witness; "count" counts them exhaustively.
    `fixed` pins labels before the search starts.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    fixed = dict(fixed or {})
    unknown = [k for k in fixed if k not in ps.projectors]
    if unknown:
        raise UnknownLabelError(unknown[0])
    if any(v not in (0, 1) for v in fixed.values()):
        raise ValueError("fixed values must be 0 or 1")
    net = _build_network(ps)
    seed = _seed_from_fixed(net, fixed)

    if workers == 1 or len(net.labels) <= len(fixed):
        return _merge(net, [_search_task(net, seed, mode)], mode)

    # split on the first undecided decision variables, prefixes in DFS order
    decided = {var for var, _ in seed}
    free = [i for i in range(len(net.labels)) if i not in decided]
    depth = min(len(free), max(1, (workers - 1).bit_length()))
    prefixes = [
        seed + tuple(zip(free[:depth], combo))
        for combo in itertools.product((1, 0), repeat=depth)
    ]
    try:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_task, itertools.repeat(net),
                                  prefixes, itertools.repeat(mode)))
    except (OSError, PermissionError):
        # sandboxed environments may forbid subprocesses; same partition,
        # same merge, identical results
        parts = [_search_task(net, prefix, mode) for prefix in prefixes]
    return _merge(net, parts, mode)


def _validate_fixed_locally(net: _Network, fixed: Mapping[str, int]) -> None:
    """Reject fixed assignments that already break their own contexts."""
    index = {l: i for i, l in enumerate(net.labels)}
    for var, val in net.forced:
        label = net.labels[var]
        if fixed.get(label, val) != val:
            raise InconsistentAssignmentError(
                f"{label} is the {'identity' if val else 'zero'} projector and "
                f"must carry value {val}")
    ones = [l for l, v in fixed.items() if v == 1]
    for i, a in enumerate(ones):
        for b in ones[i + 1:]:
            if index[b] in net.adjacency[index[a]]:
                raise InconsistentAssignmentError(
                    f"orthogonal projectors {a} and {b} both fixed to 1",
                    context=_blame(net, index[a], index[b]))
    for ci, members in enumerate(net.contexts):
        vals = [fixed.get(net.labels[m]) for m in members]
        if None in vals:
            continue
        total = sum(vals)
        if total != 1:
            raise InconsistentAssignmentError(
                f"context {net.context_names[ci]} fixed to sum {total}, expected 1",
                context=tuple(net.labels[m] for m in members))


def _blame(net: _Network, i: int, j: int) -> tuple[str, ...] | None:
    c = _common_context(net, i, j)
    if c is None:
        return None
    return tuple(net.labels[m] for m in net.contexts[c])


def localized_indefiniteness_certificate(
        ps: ProjectorSet, fixed: Mapping[str, int] | None = None
) -> dict[str, PinVerdict]:
    """Classify every unfixed label by pinning it to 1 and to 0.

    Each pin runs a full exhaustive search on top of `fixed`; a label
    whose both pins are UNSAT is value indefinite given the fixings.
    An inconsistent `fixed` is reported, not silently repaired.
    """
    fixed = dict(fixed or {})
    unknown = [k for k in fixed if k not in ps.projectors]
    if unknown:
        raise UnknownLabelError(unknown[0])
    if any(v not in (0, 1) for v in fixed.values()):
        raise ValueError("fixed values must be 0 or 1")
    net = _build_network(ps)
    _validate_fixed_locally(net, fixed)

    def satisfiable(pins: Mapping[str, int]) -> bool:
        seed = _seed_from_fixed(net, pins)
        count, first, _, _, _ = _search_task(net, seed, "first")
        return first is not None or count > 0

    verdicts: dict[str, PinVerdict] = {}
    for label in sorted(ps.projectors):
        if label in fixed:
            continue
        sat_one = satisfiable({**fixed, label: 1})
        sat_zero = satisfiable({**fixed, label: 0})
        if sat_one and sat_zero:
            verdicts[label] = PinVerdict.UNCONSTRAINED
        elif sat_one:
            verdicts[label] = PinVerdict.FORCED_ONE
        elif sat_zero:
            verdicts[label] = PinVerdict.FORCED_ZERO
        else:
            verdicts[label] = PinVerdict.BOTH_CONTRADICT
    return verdicts
