"""Dimensions, the Hausdorff measure formula and the packing constants.

Per-level quantities factor as ``mu(n) * s_n**t`` (the *mass-scale factor*)
times a number that depends on level n alone.  Under either tail policy the
factor is periodic once ``t`` is the critical exponent, so every lim inf / lim
sup below is attained on one tail period and can be read off exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .construction import (
    CantorSpec, LevelSpec, _left, _right, distance_to_set, level, shift, tail_window,
)
from .hypotheses import check_cond2, check_separation

__all__ = [
    "LimitEstimate", "GammaLevel", "PackingConstants",
    "mass_scale", "hausdorff_dim", "packing_dim", "hausdorff_measure",
    "alpha_level", "beta_level", "gamma_level", "packing_measure", "lower_density_bound",
    "salto_violations", "salto_depth",
]

EXACT = "exact-periodic"
WINDOWED = "windowed"
_PERIOD_RTOL = 1e-9


@dataclass
class LimitEstimate:
    value: float
    mode: str
    window: Tuple[int, int]
    samples: Dict[int, float] = field(default_factory=dict)
    # per-level maximisers or auxiliary data, keyed by level
    details: Dict[int, object] = field(default_factory=dict)
    note: str = ""


@dataclass(frozen=True)
class GammaLevel:
    value: float
    k1: int
    k2: int
    a: float
    b: float
    d: float


@dataclass
class PackingConstants:
    t: float
    alpha: LimitEstimate
    beta: LimitEstimate
    gamma: Optional[LimitEstimate]
    value: float
    note: str = ""

    @property
    def candidates(self) -> Dict[str, float]:
        out = {"2^t*alpha": 2.0 ** self.t * self.alpha.value,
               "2^t*beta": 2.0 ** self.t * self.beta.value}
        if self.gamma is not None:
            out["gamma"] = self.gamma.value
        return out


def mass_scale(spec: CantorSpec, n: int, t: float) -> float:
    """``mu(n) * s_n**t`` evaluated in log space (no overflow for deep n)."""
    return math.exp(math.fsum(
        math.log(level(spec, k).m) + t * math.log(level(spec, k).r) for k in range(1, n + 1)))


def _log_ratio(spec: CantorSpec, n: int) -> float:
    num = math.fsum(math.log(level(spec, k).m) for k in range(1, n + 1))
    den = math.fsum(-math.log(level(spec, k).r) for k in range(1, n + 1))
    return num / den


def _critical_exponent(spec: CantorSpec) -> float:
    # log mu(n) / |log s_n| converges along the tail: one period's ratio is the limit
    start, period = tail_window(spec)
    levels = [level(spec, k) for k in range(start, start + period)]
    return (math.fsum(math.log(lv.m) for lv in levels)
            / math.fsum(-math.log(lv.r) for lv in levels))


def _dimension(spec: CantorSpec, depth: int, lower: bool) -> LimitEstimate:
    if depth < 2:
        raise ValueError("depth must be >= 2")
    samples = {n: _log_ratio(spec, n) for n in range(1, depth + 1)}
    start, period = tail_window(spec)
    note = "lim inf" if lower else "lim sup"
    return LimitEstimate(_critical_exponent(spec), EXACT, (start, start + period - 1), samples,
                         note=f"{note} of log mu(n)/log s_n; ratio converges along the tail")


def hausdorff_dim(spec: CantorSpec, depth: int = 40) -> LimitEstimate:
    return _dimension(spec, depth, lower=True)


def packing_dim(spec: CantorSpec, depth: int = 40) -> LimitEstimate:
    return _dimension(spec, depth, lower=False)


def _limit(spec: CantorSpec, samples: Dict[int, float], depth: int, upper: bool,
           details: Optional[dict] = None, windowed: bool = False) -> LimitEstimate:
    """Exact lim sup/inf over one tail period when samples repeat, else a tail window."""
    pick = max if upper else min
    start, period = tail_window(spec)
    levels = [n for n in samples if n >= start]
    periodic = not windowed and all(
        math.isclose(samples[n], samples[n + period], rel_tol=_PERIOD_RTOL, abs_tol=1e-300)
        for n in levels if n + period in samples)
    if periodic:
        first = min(levels)
        window = (first, first + period - 1)
        value = pick(samples[n] for n in range(window[0], window[1] + 1) if n in samples)
        return LimitEstimate(value, EXACT, window, samples, details or {})
    lo = max(1, depth // 2)
    window = (lo, depth)
    value = pick(samples[n] for n in range(lo, depth + 1) if n in samples)
    return LimitEstimate(value, WINDOWED, window, samples, details or {})


def _levels_needed(spec: CantorSpec, depth: int) -> int:
    start, period = tail_window(spec)
    return max(depth, start + 2 * period)


def hausdorff_measure(spec: CantorSpec, depth: int = 40, windowed: bool = False) -> LimitEstimate:
    """lim inf of ``mu(n) s_n**s`` at the Hausdorff dimension s."""
    s = hausdorff_dim(spec, depth).value
    top = _levels_needed(spec, depth)
    samples = {n: mass_scale(spec, n, s) for n in range(1, top + 1)}
    est = _limit(spec, samples, depth, upper=False, windowed=windowed)
    ok, _ = check_cond2(spec)
    if not (ok and check_separation(spec) > 1.0):
        est.note = "formula value only - theorem hypotheses unverified"
    return est


# Level-local parts.  Each returns the value divided by the mass-scale factor,
# with lengths in units of s_n.

@lru_cache(maxsize=None)
def _alpha_local(lv: LevelSpec, t: float) -> Tuple[float, int]:
    g = lv.unit_gaps()
    best, arg, run = -1.0, 0, 0.0
    for k in range(1, lv.m):
        run += g[k - 1]
        v = (k + run) ** t / k
        if v > best:
            best, arg = v, k
    return best, arg


@lru_cache(maxsize=None)
def _beta_local(lv: LevelSpec, t: float) -> Tuple[float, int]:
    # mirror of alpha: the last w children and the w gaps left of them
    g = lv.unit_gaps()
    m = lv.m
    cands = []
    run = 0.0
    for w in range(1, m):
        run += g[m - 1 - w]
        cands.append(((w + run) ** t / w, m - w + 1))
    # ties go to the smallest k
    best = max(v for v, _ in cands)
    arg = min(k for v, k in cands if v == best)
    return best, arg


@lru_cache(maxsize=None)
def _gamma_local(lv: LevelSpec, t: float) -> Optional[Tuple[float, int, int]]:
    m = lv.m
    if m < 3:
        return None
    g = lv.unit_gaps()
    best, arg = -1.0, (0, 0)
    for k1 in range(2, m):
        for k2 in range(k1, m):
            w = k2 - k1 + 1
            # gaps k1-1 .. k2 flank and separate children k1..k2
            v = (w + sum(g[k1 - 2:k2])) ** t / w
            if v > best:
                best, arg = v, (k1, k2)
    return best, arg[0], arg[1]


def alpha_level(spec: CantorSpec, n: int, t: float) -> Tuple[float, int]:
    local, k = _alpha_local(level(spec, n), t)
    return mass_scale(spec, n, t) * local, k


def beta_level(spec: CantorSpec, n: int, t: float) -> Tuple[float, int]:
    local, k = _beta_local(level(spec, n), t)
    return mass_scale(spec, n, t) * local, k


def _gamma_parent(spec: CantorSpec, n: int, t: float) -> Tuple[int, ...]:
    word = []
    for j in range(1, n):
        found = _gamma_local(level(spec, j), t)
        word.append(found[1] if found else 1)
    return tuple(word)


def gamma_level(spec: CantorSpec, n: int, t: float, tol: float = 1e-12) -> Optional[GammaLevel]:
    """Interior-window constant at level n, or None when m_n < 3.

    ``a``/``b`` are the gap ends flanking children k1..k2 inside one parent
    interval; ``d`` is the distance from their midpoint to the set, resolved
    in the parent's own frame to relative accuracy ``tol``.
    """
    lv = level(spec, n)
    found = _gamma_local(lv, t)
    if found is None:
        return None
    _, k1, k2 = found
    parent = _gamma_parent(spec, n, t)
    a = _right(spec, parent + (k1 - 1,))
    b = _left(spec, parent + (k2 + 1,))
    # same quantities with the parent rescaled to [0, 1]
    local = shift(spec, n - 1)
    la = lv.r * (lv.digits[k1 - 2] + 1.0)
    lb = lv.r * lv.digits[k2]
    d_local = distance_to_set(local, 0.5 * (la + lb), tol)
    s_parent = math.prod(level(spec, k).r for k in range(1, n))
    width = (lb - la - 2.0 * d_local) / lv.r
    value = mass_scale(spec, n, t) * width ** t / (k2 - k1 + 1)
    return GammaLevel(value, k1, k2, a, b, d_local * s_parent)


def packing_measure(spec: CantorSpec, depth: int = 40, tol: float = 1e-12,
                    windowed: bool = False) -> PackingConstants:
    """max{2^t alpha, 2^t beta, gamma} at the packing dimension t."""
    t = packing_dim(spec, depth).value
    top = _levels_needed(spec, depth)
    al, be, ga = {}, {}, {}
    al_k, be_k, ga_d = {}, {}, {}
    for n in range(1, top + 1):
        al[n], al_k[n] = alpha_level(spec, n, t)
        be[n], be_k[n] = beta_level(spec, n, t)
        g = gamma_level(spec, n, t, tol)
        if g is not None:
            ga[n], ga_d[n] = g.value, g
    alpha = _limit(spec, al, depth, True, al_k, windowed)
    beta = _limit(spec, be, depth, True, be_k, windowed)
    start, _ = tail_window(spec)
    gamma = None
    # gamma only counts when m >= 3 recurs, i.e. on some tail level
    if any(n >= start for n in ga):
        tail_ga = {n: v for n, v in ga.items() if n >= start}
        gamma = _limit(spec, tail_ga, depth, True, ga_d, windowed)
    two_t = 2.0 ** t
    value = max(two_t * alpha.value, two_t * beta.value,
                gamma.value if gamma is not None else -math.inf)
    note = "" if check_separation(spec) > 1.0 else "formula value only - separation fails"
    return PackingConstants(t, alpha, beta, gamma, value, note)


def lower_density_bound(pc: PackingConstants) -> float:
    """min{2^-t / alpha, 2^-t / beta, 1 / gamma}: lower bound for every lower density."""
    return 1.0 / pc.value


def salto_depth(c: float) -> int:
    """ceil(|log(c - 1)| / log 2); 0 when c = 2."""
    return math.ceil(abs(math.log(c - 1.0)) / math.log(2.0))


def salto_violations(spec: CantorSpec, n: int, t: float, max_ell: int) -> List[Tuple[int, int, float, float]]:
    """Instances (ell, gap index, lhs, gap) where the alpha window at level n exceeds
    a gap of level n - ell, in units of s_n."""
    lv = level(spec, n)
    _, k = _alpha_local(lv, t)
    lhs = k + sum(lv.unit_gaps()[:k])
    out = []
    ratio = 1.0
    for ell in range(1, max_ell + 1):
        if n - ell < 1:
            break
        ratio /= level(spec, n - ell + 1).r
        for j, g in enumerate(level(spec, n - ell).unit_gaps(), 1):
            if lhs > g * ratio:
                out.append((ell, j, lhs, g * ratio))
    return out
