"""Walkthrough of the two-context worked example on Q^4.

Run:
    python demos/worked_example.py

The state e4 = (0,0,0,1) is an eigenstate of the first context, so every
member of C1 gets a definite truth value.  Against the second context C6
the same state sits in neither the range nor the kernel of three members:
those propositions have no bivalent truth value at all, yet the exact
weight semantics values the whole context to 1.
"""

from kscontext import (Vector, born_value, born_context_sum, builtin,
                       column_space, evaluate_context,
                       localize_indefiniteness, meet, null_space)

ps = builtin("cabello-c1c6")
e4 = Vector((0, 0, 0, 1))

# ---------------------------------------------------------------------------
# 1) Bivalent valuation context by context.
# ---------------------------------------------------------------------------
print("state: (0, 0, 0, 1)\n")
for ctx in ps.contexts:
    out = evaluate_context(e4, ps, ctx)
    cells = "  ".join(f"{m}={t.value}" for m, t in zip(ctx.members, out.values))
    total = "undefined" if out.total is None else out.total
    print(f"{ctx.label}: {cells}   sum = {total}")

# ---------------------------------------------------------------------------
# 2) Why the gaps are forced: the subspace geometry.
# ---------------------------------------------------------------------------
print("\nmeets of ran(P1_1) with the C6 ranges and kernels:")
a = column_space(ps["P1_1"].matrix)
for i in (1, 2, 3, 4):
    ran_i = column_space(ps[f"P6_{i}"].matrix)
    ker_i = null_space(ps[f"P6_{i}"].matrix)
    against_range = meet(a, ran_i)
    against_kernel = meet(a, ker_i)
    def shape(s):
        return "{0}" if s.is_zero() else f"rank {s.rank}"
    note = "  <- e4 inside the kernel" if against_kernel == a else ""
    print(f"  ran ^ ran(P6_{i}) = {shape(against_range):7}"
          f"  ran ^ ker(P6_{i}) = {shape(against_kernel)}{note}")

# ---------------------------------------------------------------------------
# 3) The localization report makes the contradiction pair explicit.
# ---------------------------------------------------------------------------
report = localize_indefiniteness(e4, ps)
print(f"\ngaps: {' '.join(report.gaps)}")
for n in report.narratives:
    print(f"reading the {n.context.label} gaps as all-false gives sum "
          f"{n.sum_gaps_as_false}; as all-true gives sum {n.sum_gaps_as_true}; "
          f"both miss the required 1")

# ---------------------------------------------------------------------------
# 4) The weight semantics fills the gaps with exact rationals.
# ---------------------------------------------------------------------------
print("\nexact weights over C6:")
c6 = ps.context_named("C6")
for m in c6.members:
    print(f"  {m}: {born_value(e4, ps[m])}")
print(f"  sum: {born_context_sum(e4, ps, c6)}")
