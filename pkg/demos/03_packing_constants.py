"""
Where the packing measure comes from
====================================

The packing measure is the largest of three window densities: windows
anchored at the left end of a parent, at its right end, and in its interior.
"""

from cantormeasure.corpus import CORPUS
from cantormeasure.measures import gamma_level, packing_measure

for label in ("middle-thirds", "fifths-three", "sevenths-uneven", "mixed-branching"):
    pc = packing_measure(CORPUS[label])
    parts = ", ".join(f"{k}={v:.6f}" for k, v in pc.candidates.items())
    print(f"{label:16s} t={pc.t:.6f}  {parts}  ->  P_t={pc.value:.6f}")

# With three equally spaced children the interior window is the middle child
# with its two flanking gaps; its midpoint lies in the set, so no correction.
spec = CORPUS["fifths-three"]
g = gamma_level(spec, 3, packing_measure(spec).t)
print(f"\ninterior window at level 3: children {g.k1}..{g.k2}, "
      f"[{g.a:.6f}, {g.b:.6f}], distance of midpoint to the set {g.d}")

# A mixed cycle alternates two and three children, so the interior window
# only exists on every other level.
pc = packing_measure(CORPUS["mixed-branching"])
print("gamma samples:", {n: round(v, 6) for n, v in list(pc.gamma.samples.items())[:6]})
