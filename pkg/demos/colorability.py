"""Noncontextual colorability, from one context to the full 18-ray set.

Run:
    python demos/colorability.py

A single maximal context colors in exactly four ways (one true member).
The 18-ray corpus admits no coloring at all: every ray sits in exactly
two of the nine contexts, so the number of satisfied contexts would be
even, but nine are required.  The searcher proves it exhaustively.
"""

from kscontext import (ProjectorSet, admissible_assignments, builtin,
                       check_assignment, find_maximal_contexts,
                       localized_indefiniteness_certificate, PinVerdict,
                       projector_from_span)

# ---------------------------------------------------------------------------
# 1) One context: four admissible colorings.
# ---------------------------------------------------------------------------
rays = {"a": (0, 0, 0, 1), "b": (0, 1, 0, 0), "c": (1, 0, 1, 0),
        "d": (1, 0, -1, 0)}
one = ProjectorSet(4, {l: projector_from_span([v], l) for l, v in rays.items()})
result = admissible_assignments(one, mode="all")
print(f"single context: {result.status}, {result.count} colorings")
for w in result.witnesses:
    true_member = next(l for l, v in w.values.items() if v == 1)
    print(f"  true member: {true_member}")

# ---------------------------------------------------------------------------
# 2) Two overlapping contexts are still colorable.
# ---------------------------------------------------------------------------
pair = builtin("cabello-c1c6")
result = admissible_assignments(pair, mode="count")
print(f"\ntwo contexts (c1c6): SAT with {result.count} colorings")

# ---------------------------------------------------------------------------
# 3) The full set is not.
# ---------------------------------------------------------------------------
full = builtin("cabello-18")
print(f"\n18 rays, {len(find_maximal_contexts(full))} maximal contexts")
result = admissible_assignments(full, mode="count")
print(f"exhaustive search: {result.status}, {result.count} colorings, "
      f"{result.nodes_explored} nodes")

# every context saturates twice per true ray: parity makes 9 unreachable
incidence = sum(len(c.members) for c in full.contexts)
print(f"parity view: 9 contexts x 4 slots = {incidence} memberships, "
      f"2 per ray -> any coloring satisfies an even number of contexts")

# ---------------------------------------------------------------------------
# 4) Pinning one ray true: nothing survives either way.
# ---------------------------------------------------------------------------
verdicts = localized_indefiniteness_certificate(full, {"P1_1": 1})
stuck = [l for l, v in verdicts.items() if v is PinVerdict.BOTH_CONTRADICT]
print(f"\nwith P1_1 pinned to 1, labels contradicting both ways: {len(stuck)}")

# a concrete failed assignment and its report
bad = {m: 0 for m in full.context_named("C6").members}
violations = check_assignment(full, bad)
for v in violations:
    print(f"all-zero on {v.context.label}: sum {v.assigned_sum}, expected 1")
