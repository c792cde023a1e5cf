"""The natural probability measure (mass ``1/mu(n)`` on each basic interval of order n).

Interval masses come from a recursive descent: children fully inside the
query count exactly, the at most two children straddling an end are refined,
and refinement stops once the straddling mass is below the tolerance.  The
result is a certified bracket.  Query ends within float rounding (about
3e-14) of a node boundary are taken to lie on it, so computed endpoints of
basic intervals give exact masses and shared ends split mass exactly.

Small balls around a point of the set are evaluated in a frame anchored at
that point: every node offset is built from digit differences below the
common ancestor, so a radius of 1e-12 is resolved to full relative precision
even though the point itself sits near 0.5.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .construction import (
    MIN_SCALE, CantorSpec, LevelSpec, Word, _left, level, scale,
)

__all__ = [
    "MeasureValue", "DensityProfile", "mu_interval", "mu_ball", "sample_word",
    "sample_point", "lower_density", "address",
]

Point = Union[float, Sequence[int]]


@dataclass(frozen=True)
class MeasureValue:
    lo: float
    hi: float
    tol: float

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)


@dataclass
class DensityProfile:
    x: float
    t: float
    # (r, mu(B(x, r)), (2r)^-t * mu(B(x, r))), r decreasing
    points: List[Tuple[float, float, float]] = field(default_factory=list)
    liminf_estimate: float = math.inf


class _Frame:
    """Node offsets measured from the left end of a fixed word's interval."""

    def __init__(self, spec: CantorSpec, path: Sequence[int] = ()):
        self.spec = spec
        self.path = tuple(path)
        D = len(self.path)
        s = [1.0]
        for j in range(1, D + 1):
            s.append(s[-1] * level(spec, j).r)
        # tails[j] = a(path) - a(path|j)
        tails = [0.0] * (D + 1)
        for j in range(D, 0, -1):
            lv = level(spec, j)
            tails[j - 1] = tails[j] + lv.digits[self.path[j - 1] - 1] * s[j]
        self.tails = tails

    def root(self) -> Tuple[float, bool]:
        return -self.tails[0], True

    def children(self, depth: int, off: float, on_path: bool, s_child: float):
        lv = level(self.spec, depth + 1)
        follow = self.path[depth] if on_path and depth < len(self.path) else 0
        for i, d in enumerate(lv.digits, 1):
            if i == follow:
                yield -self.tails[depth + 1], True
            else:
                yield off + d * s_child, False


def _mass(frame: _Frame, lo: float, hi: float, tol: float) -> MeasureValue:
    off, on = frame.root()
    s, mass = 1.0, 1.0
    if lo <= off and off + s <= hi:
        return MeasureValue(1.0, 1.0, tol)
    if off + s < lo or off > hi:
        return MeasureValue(0.0, 0.0, tol)
    inside = 0.0
    frontier = [(off, on)]
    depth = 0
    while frontier and len(frontier) * mass > tol:
        lv = level(frame.spec, depth + 1)
        s_child = s * lv.r
        if s_child < MIN_SCALE:
            break
        m_child = mass / lv.m
        nxt = []
        for off, on in frontier:
            for c_off, c_on in frame.children(depth, off, on, s_child):
                c_end = c_off + s_child
                if c_end < lo or c_off > hi:
                    continue
                if lo <= c_off and c_end <= hi:
                    inside += m_child
                else:
                    nxt.append((c_off, c_on))
        frontier, s, mass, depth = nxt, s_child, m_child, depth + 1
    return MeasureValue(inside, inside + len(frontier) * mass, tol)


def _check_finite(*xs: float) -> None:
    for x in xs:
        if not math.isfinite(x):
            raise ValueError(f"non-finite input {x!r}")


# Query endpoints closer than this (relative to max(1, |x|)) to a node boundary
# are identified with it: float endpoints carry about this much rounding.
_SNAP = 2.0 ** -45


def _side(spec: CantorSpec, depth: int, u: float, s: float, eta: float,
          mass: float, budget: float) -> Tuple[float, float]:
    """Bracket for the fraction of a node's mass left of position ``u`` (node units).

    Stops once the unresolved mass is at most ``budget``.
    """
    base, w = 0.0, 1.0
    while True:
        if u <= eta / s:
            return base, base
        if u >= 1.0 - eta / s:
            return base + w, base + w
        if w * mass <= budget:
            return base, base + w
        lv = level(spec, depth + 1)
        s_child = s * lv.r
        if s_child < MIN_SCALE:
            return base, base + w
        v = u / lv.r
        for i, d in enumerate(lv.digits):
            if v - d < 1.0 - eta / s_child:
                break
        else:
            return base + w, base + w
        w /= lv.m
        base += i * w
        u, s, depth = v - d, s_child, depth + 1


def _locate(lv: LevelSpec, u: float, eta_child: float, right: bool) -> Tuple[int, Optional[float]]:
    """Child index (0-based) met by a query end, and its position there if it falls inside.

    For a left end, the first child whose right end lies beyond u; for a right
    end, the last child whose left end lies before u.
    """
    v = u / lv.r
    if right:
        for i in range(lv.m - 1, -1, -1):
            pos = v - lv.digits[i]
            if pos > eta_child:
                return i, (pos if pos < 1.0 - eta_child else None)
        return -1, None
    for i, d in enumerate(lv.digits):
        pos = v - d
        if pos < 1.0 - eta_child:
            return i, (pos if pos > eta_child else None)
    return lv.m, None


def mu_interval(spec: CantorSpec, x1: float, x2: float, tol: float = 1e-12) -> MeasureValue:
    """Certified bracket for the mass of the closed interval [x1, x2].

    Both ends are followed down the tree in node-relative coordinates; whole
    children between them count exactly and only the two end paths are refined.
    """
    _check_finite(x1, x2, tol)
    if x1 > x2:
        raise ValueError(f"x1={x1} > x2={x2}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    eta = _SNAP * max(1.0, abs(x1), abs(x2))
    u1, u2, s, depth, mu = x1, x2, 1.0, 0, 1
    while True:
        mass = 1.0 / mu
        if u1 >= 1.0 - eta / s or u2 <= eta / s or u2 - u1 <= 2 * eta / s:
            return MeasureValue(0.0, 0.0, tol)
        if u1 <= eta / s and u2 >= 1.0 - eta / s:
            return MeasureValue(mass, mass, tol)
        if mass <= tol:
            return MeasureValue(0.0, mass, tol)
        lv = level(spec, depth + 1)
        s_child = s * lv.r
        if s_child < MIN_SCALE:
            return MeasureValue(0.0, mass, tol)
        eta_child = eta / s_child
        i, p1 = _locate(lv, u1, eta_child, right=False)
        j, p2 = _locate(lv, u2, eta_child, right=True)
        if i == j:
            # both ends meet the same child; an end outside it sits on its boundary
            u1 = 0.0 if p1 is None else p1
            u2 = 1.0 if p2 is None else p2
            s, depth, mu = s_child, depth + 1, mu * lv.m
            continue
        child = 1.0 / (mu * lv.m)
        full = (j - 1 if p2 is not None else j) - (i + 1 if p1 is not None else i) + 1
        lo = hi = max(full, 0) * child
        if p1 is not None:
            a, b = _side(spec, depth + 1, p1, s_child, eta, child, tol / 2)
            lo, hi = lo + (1.0 - b) * child, hi + (1.0 - a) * child
        if p2 is not None:
            a, b = _side(spec, depth + 1, p2, s_child, eta, child, tol / 2)
            lo, hi = lo + a * child, hi + b * child
        return MeasureValue(max(0.0, lo), min(1.0, hi), tol)


def mu_ball(spec: CantorSpec, x: float, r: float, tol: float = 1e-12) -> MeasureValue:
    if not r > 0:
        raise ValueError("r must be positive")
    return mu_interval(spec, x - r, x + r, tol)


def sample_word(spec: CantorSpec, rng: Union[int, np.random.Generator], depth: int) -> Word:
    """Word of length ``depth`` with independent uniform indices (the measure's law)."""
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    return tuple(int(rng.integers(1, level(spec, j).m + 1)) for j in range(1, depth + 1))


def sample_point(spec: CantorSpec, seed: int, depth: int) -> float:
    """Left end of a random basic interval of order ``depth``; always a point of the set."""
    scale(spec, depth)
    return _left(spec, sample_word(spec, seed, depth))


def address(spec: CantorSpec, x: float, max_depth: int = 200) -> Word:
    """Word of the deepest basic interval containing x (stops where x meets a gap).

    Descends in node-relative coordinates and stops once the node is no longer
    resolvable against the rounding of x.
    """
    if not math.isfinite(x):
        raise ValueError(f"non-finite input {x!r}")
    eta = _SNAP * max(1.0, abs(x))
    if not -eta <= x <= 1.0 + eta:
        return ()
    w: List[int] = []
    u, s = x, 1.0
    for n in range(1, max_depth + 1):
        lv = level(spec, n)
        s_child = s * lv.r
        if s_child < MIN_SCALE or s_child < 4.0 * eta:
            break
        v = u / lv.r
        e = eta / s_child
        hit = next((i for i, d in enumerate(lv.digits, 1) if -e <= v - d <= 1.0 + e), None)
        if hit is None:
            break
        w.append(hit)
        u, s = min(max(v - lv.digits[hit - 1], 0.0), 1.0), s_child
    return tuple(w)


def _critical_radii(frame: _Frame, delta: float, r_min: float, r_max: float) -> List[float]:
    """Distances at which a ball edge reaches the far side of a gap.

    For each depth n the nodes within s_{n-1} of the centre are scanned; left
    ends to the right of the centre and right ends to its left are where the
    density quotient has its local minima.
    """
    out = set()
    off, on = frame.root()
    nodes = [(off, on)]
    s, depth = 1.0, 0
    while nodes:
        lv = level(frame.spec, depth + 1)
        s_child = s * lv.r
        if s_child < MIN_SCALE:
            break
        window = s
        nxt = []
        for off, on in nodes:
            for c_off, c_on in frame.children(depth, off, on, s_child):
                if c_off + s_child < delta - window or c_off > delta + window:
                    continue
                nxt.append((c_off, c_on))
                if c_off > delta:
                    r = c_off - delta
                elif c_off + s_child < delta:
                    r = delta - (c_off + s_child)
                else:
                    continue
                if r_min <= r <= r_max:
                    out.add(r)
        nodes, s, depth = nxt, s_child, depth + 1
        if window < r_min:
            break
    return sorted(out)


def lower_density(spec: CantorSpec, x: Point, t: float, r_min: float, r_max: float,
                  samples_per_decade: int = 10, tol: float = 1e-9) -> DensityProfile:
    """Profile of ``(2r)^-t mu(B(x, r))`` over a geometric grid plus critical radii.

    ``x`` may be a float or the word of a basic interval (meaning its left
    end); words give exact small-radius geometry.  Each density value is
    accurate to ``tol``.  ``liminf_estimate`` is the minimum over radii not
    exceeding ``r_max / 10``.
    """
    if not 0 < r_min < r_max:
        raise ValueError("need 0 < r_min < r_max")
    if isinstance(x, (int, float, np.floating)) and not isinstance(x, bool):
        xf = float(x)
        path = address(spec, xf)
        frame = _Frame(spec, path)
        delta = xf - _left(spec, path)
    else:
        path = tuple(int(i) for i in x)
        frame = _Frame(spec, path)
        xf = _left(spec, path)
        delta = 0.0
    decades = math.log10(r_max / r_min)
    grid = [r_max * 10.0 ** (-k / samples_per_decade)
            for k in range(int(math.floor(decades * samples_per_decade)) + 1)]
    radii = sorted(set(grid) | set(_critical_radii(frame, delta, r_min, r_max)), reverse=True)
    prof = DensityProfile(xf, t)
    cut = r_max / 10.0
    for r in radii:
        w = (2.0 * r) ** t
        mv = _mass(frame, delta - r, delta + r, tol * w)
        dens = mv.mid / w
        prof.points.append((r, mv.mid, dens))
        if r <= cut and dens < prof.liminf_estimate:
            prof.liminf_estimate = dens
    return prof
