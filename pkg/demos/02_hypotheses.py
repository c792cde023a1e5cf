"""
Checking the gap hypotheses
===========================

The measure formulas hold under a separation condition and a condition on
sums of gaps.  Here we test both on the corpus and look at a failure.
"""

from cantormeasure.corpus import CORPUS
from cantormeasure.hypotheses import cond2_ratio, report

for label, spec in CORPUS.items():
    rep = report(spec)
    print(f"{label:20s} c={rep.separation_c:.3f} gap-sums={'ok' if rep.cond2_ok else 'fail'} "
          f"M={rep.branching_M}")

# The lopsided set has one wide and one narrow gap; the narrow coarse gap is
# outweighed by the wide gap one level down.
spec = CORPUS["lopsided-fifths"]
w = report(spec).cond2_witness
print("\nwitness:", f"n={w.n} J1={sorted(w.J1)} J2={sorted(w.J2)} j={w.j}")
lhs, rhs = cond2_ratio(spec, w.n, w.J1, w.J2, w.j)
print(f"lhs = {lhs:.4f} > rhs = {rhs:.4f}")
