"""
The middle-thirds set, level by level
=====================================

Build the classical set, look at its basic intervals and gaps, and evaluate
the two measure formulas on it.
"""

import math

from cantormeasure import enumerate_intervals, gaps, hausdorff_measure, packing_measure
from cantormeasure.corpus import middle_thirds

spec = middle_thirds()

# Each level keeps two children of relative length 1/3 at digit offsets 0 and 2.
for n in range(1, 4):
    ivs = enumerate_intervals(spec, n)
    print(f"level {n}: {len(ivs)} intervals of length {ivs[0][1].b - ivs[0][1].a:.6f}")
    for word, g in ivs[:4]:
        print("   ", "-".join(map(str, word)), f"[{g.a:.6f}, {g.b:.6f}]")

# Gaps inside one parent interval have the same length at every position.
print("level-3 gaps:", [round(g.length, 6) for g in gaps(spec, 3)])

# The Hausdorff measure at s = log 2 / log 3 is 1, and the packing measure is 4^s.
B = hausdorff_measure(spec)
P = packing_measure(spec)
s = math.log(2) / math.log(3)
print(f"B_s = {B.value:.15f} ({B.mode}, levels {B.window[0]}..{B.window[1]})")
print(f"P_t = {P.value:.15f}, 4^t = {4 ** s:.15f}")
