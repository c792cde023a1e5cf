"""
Lower densities at random points
================================

For a point drawn from the natural measure, the smallest value of
mu(B(x, r)) / (2r)^t over small r should be the reciprocal of the packing
measure.  We sample points and compare.
"""

from cantormeasure.construction import _raw_scale, tail_window
from cantormeasure.corpus import CORPUS
from cantormeasure.measures import packing_measure
from cantormeasure.oracles import density_scan

for label in ("middle-thirds", "quarter-pair", "sevenths-uneven", "thirds-quarters"):
    spec = CORPUS[label]
    pc = packing_measure(spec)
    start, _ = tail_window(spec)
    scan = density_scan(spec, pc.t, 40, _raw_scale(spec, start + 15), seed=1)
    lo, med, hi = scan.spread
    print(f"{label:16s} P_t={pc.value:.6f}  1/min density={1 / scan.min_density:.6f}  "
          f"spread of liminfs {lo:.4f} / {med:.4f} / {hi:.4f}")

# One profile in detail: the density dips each time the ball's edge reaches
# the far side of a gap.
spec = CORPUS["middle-thirds"]
prof = density_scan(spec, packing_measure(spec).t, 1, 3.0 ** -8, seed=3).profiles[0]
print(f"\nx = {prof.x:.12f}")
for r, mu, dens in prof.points[::6]:
    print(f"  r={r:.3e}  mu={mu:.6e}  density={dens:.6f}")
