"""Author a PSET corpus from scratch and push it through the pipeline.

Run:
    python demos/custom_corpus.py

Builds a small corpus in dimension 3 with a shared ray between two
contexts, validates it, colors it, and shows the emit/parse round-trip.
"""

from kscontext import (admissible_assignments, emit, find_maximal_contexts,
                       parse, to_projector_set, validate_context)

TEXT = """\
# two orthogonal bases of Q^3 sharing the ray r1
dim 3
vec r1 = 1 0 0
vec r2 = 0 1 0
vec r3 = 0 0 1
vec r4 = 0 1 1
vec r5 = 0 1 -1
context A = r1 r2 r3
context B = r1 r4 r5
state diag = 1 1 1
"""

# ---------------------------------------------------------------------------
# 1) Parse and validate.
# ---------------------------------------------------------------------------
cf = parse(TEXT)
ps = to_projector_set(cf)
print(f"parsed: {ps}")
for name, members in cf.contexts:
    report = validate_context(ps, members)
    print(f"context {name}: valid={report.valid} maximal={report.maximal}")

# discovery can see more than was declared
found = find_maximal_contexts(ps)
print(f"maximal contexts discovered: {len(found)}")
for ctx in found:
    print(f"  {ctx.display_name()}: {' '.join(ctx.members)}")

# ---------------------------------------------------------------------------
# 2) Color it: r1 true forces everything else.
# ---------------------------------------------------------------------------
result = admissible_assignments(ps, mode="all")
print(f"\ncolorings: {result.count}")
for w in result.witnesses:
    ones = sorted(l for l, v in w.values.items() if v == 1)
    print(f"  true: {' '.join(ones)}")

# ---------------------------------------------------------------------------
# 3) Round-trip: emit is canonical, parse(emit(x)) == x.
# ---------------------------------------------------------------------------
assert parse(emit(cf)) == cf
assert to_projector_set(parse(emit(ps))) == ps
print("\nround-trip: parse(emit(...)) reproduces the corpus exactly")
print("\ncanonical emission:")
print(emit(cf))
