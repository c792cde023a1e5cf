"""Formula-independent checks of the two measure formulas.

* :func:`optimal_cover` - the cheapest cover of C_n by simple intervals of
  order n (an upper bound for the Hausdorff measure).
* :func:`frostman_constant` - the largest ratio ``mu(P) / |P|**s`` over simple
  intervals; its reciprocal bounds the Hausdorff measure from below when the
  gap hypotheses hold.
* :func:`density_scan` - lower densities at random points of the set, whose
  reciprocal should reproduce the packing measure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .construction import (
    MAX_COUNT, CantorSpec, _raw_scale, count, enumerate_intervals, level, tail_window,
)
from .hypotheses import check_separation
from .measures import mass_scale
from .natural_measure import DensityProfile, lower_density, sample_word

__all__ = [
    "CoverSolution", "DensityScan", "SandwichRow", "optimal_cover", "frostman_constant",
    "density_scan", "sandwich", "interval_arrays",
]


@dataclass
class CoverSolution:
    depth: int
    value: float
    # 1-based (first, last) basic-interval indices of each run
    blocks: List[Tuple[int, int]]


@dataclass
class DensityScan:
    min_density: float
    profiles: List[DensityProfile]
    spread: Tuple[float, float, float] = (math.nan, math.nan, math.nan)
    note: str = ""

    @property
    def liminfs(self) -> np.ndarray:
        return np.array([p.liminf_estimate for p in self.profiles])


@dataclass(frozen=True)
class SandwichRow:
    n: int
    lower_bound: float
    dp_value: float
    mu_sn_s: float


def interval_arrays(spec: CantorSpec, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Left and right endpoints of the order-n basic intervals, left to right."""
    ivs = enumerate_intervals(spec, n)
    return (np.array([g.a for _, g in ivs]), np.array([g.b for _, g in ivs]))


def optimal_cover(spec: CantorSpec, n: int, s: float) -> CoverSolution:
    """Minimum of sum |run|^s over partitions of C_n's intervals into consecutive runs."""
    a, b = interval_arrays(spec, n)
    N = len(a)
    best = np.empty(N + 1)
    best[0] = 0.0
    cut = np.zeros(N + 1, dtype=np.int64)
    for j in range(1, N + 1):
        # run i..j (1-based) costs (b_j - a_i)^s on top of best[i - 1]
        costs = best[:j] + (b[j - 1] - a[:j]) ** s
        low = costs.min()
        # ties within rounding go to the shortest final run (finest partition)
        i = int(np.flatnonzero(costs <= low * (1.0 + 1e-12))[-1])
        best[j] = costs[i]
        cut[j] = i
    blocks = []
    j = N
    while j > 0:
        i = int(cut[j])
        blocks.append((i + 1, j))
        j = i
    blocks.reverse()
    return CoverSolution(n, float(best[N]), blocks)


def frostman_constant(spec: CantorSpec, n: int, s: float) -> float:
    """max mu(P) / |P|^s over all simple intervals of order <= n."""
    out = 0.0
    for k in range(n + 1):
        a, b = interval_arrays(spec, k)
        mass = 1.0 / count(spec, k)
        for i in range(len(a)):
            runs = np.arange(1, len(a) - i + 1)
            out = max(out, float(np.max(runs * mass / (b[i:] - a[i]) ** s)))
    return out


def sandwich(spec: CantorSpec, n_max: int, s: float, n_min: int = 1) -> List[SandwichRow]:
    """Per-depth table of 1/frostman, optimal cover value and mu(n) s_n^s."""
    rows = []
    for n in range(n_min, n_max + 1):
        rows.append(SandwichRow(n, 1.0 / frostman_constant(spec, n, s),
                                optimal_cover(spec, n, s).value, mass_scale(spec, n, s)))
    return rows


def _depth_for(spec: CantorSpec, scale_target: float) -> int:
    """Smallest depth with s_n <= scale_target, capped where mu(n) stays exact."""
    s, mu, n = 1.0, 1, 0
    while s > scale_target:
        lv = level(spec, n + 1)
        if mu * lv.m > MAX_COUNT:
            break
        n += 1
        s *= lv.r
        mu *= lv.m
    return n


def density_scan(spec: CantorSpec, t: float, num_points: int, r_min: float,
                 tol: float = 1e-9, seed: int = 0, r_max: Optional[float] = None,
                 samples_per_decade: int = 10) -> DensityScan:
    """Lower-density profiles at ``num_points`` points drawn from the natural measure.

    ``1 / min_density`` is the packing-measure cross-check.  By default the
    largest radius is the scale where the periodic tail begins (capped at
    1/2), so non-recurring opening levels do not enter the profiles.
    """
    if r_max is None:
        start, _ = tail_window(spec)
        r_max = min(0.5, _raw_scale(spec, start - 1))
    rng = np.random.default_rng(seed)
    depth = _depth_for(spec, r_min * 1e-6)
    profiles = []
    for _ in range(num_points):
        w = sample_word(spec, rng, depth)
        profiles.append(lower_density(spec, w, t, r_min, r_max, samples_per_decade, tol))
    lims = np.array([p.liminf_estimate for p in profiles])
    note = "" if check_separation(spec) > 1.0 else "packing hypotheses fail; formula-only comparison"
    return DensityScan(float(lims.min()), profiles,
                       tuple(float(q) for q in np.quantile(lims, [0.0, 0.5, 1.0])), note)
