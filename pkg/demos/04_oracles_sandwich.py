"""
Squeezing the Hausdorff measure
===============================

Two brute-force bounds that do not use the formula: the cheapest cover by
runs of basic intervals from above, and the Frostman constant from below.
"""

from cantormeasure.corpus import CORPUS
from cantormeasure.measures import hausdorff_dim, hausdorff_measure
from cantormeasure.oracles import sandwich

for label in ("middle-thirds", "quarters-thirds", "warmup-then-thirds", "lopsided-fifths"):
    spec = CORPUS[label]
    s = hausdorff_dim(spec).value
    B = hausdorff_measure(spec)
    print(f"\n{label}: formula B_s = {B.value:.10f}" + (f"  [{B.note}]" if B.note else ""))
    print("   n   1/frostman        cover      mu(n)s_n^s")
    for row in sandwich(spec, 7, s):
        print(f"  {row.n:2d}  {row.lower_bound:.10f}  {row.dp_value:.10f}  {row.mu_sn_s:.10f}")

# For the lopsided set the gap-sum condition fails, and the cheapest cover
# dips below mu(n) s_n^s: merging the two close children pays off.
