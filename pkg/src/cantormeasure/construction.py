"""Geometry of linear Cantor sets built from per-level rules.

A set is described by a finite list of levels (contraction ratio ``r`` and a
digit list) plus a tail policy that extends the list to every level ``n >= 1``.
Level ``n`` places ``m_n`` children of length ``s_n = r_1 ... r_n`` inside each
basic interval of order ``n - 1``; child ``i`` starts at offset
``d_i * s_n`` from the parent's left end.

Words are tuples of 1-based child indices.  All positions are floats.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

__all__ = [
    "CantorError", "InvalidSpec", "DepthTooLarge", "BudgetExceeded",
    "LevelSpec", "CantorSpec", "IntervalGeom", "GapRef", "Word",
    "TAIL_POLICIES", "DIGIT_RTOL", "MAX_COUNT", "MIN_SCALE",
    "level", "tail_window", "resolved_levels", "scale", "count", "gap", "gaps",
    "endpoints", "enumerate_intervals", "distance_to_set", "shift", "mirror",
    "enumeration_budget", "check_word",
]

Word = Tuple[int, ...]

TAIL_POLICIES = ("repeat-last", "cycle")
DIGIT_RTOL = 1e-12
MAX_COUNT = 2 ** 53
MIN_SCALE = 1e-300
DEFAULT_BUDGET = 10_000


class CantorError(Exception):
    """Base class for errors raised by this package."""


class InvalidSpec(CantorError, ValueError):
    """A level or spec violates one of its invariants.

    ``invariant`` names the violated rule, e.g. ``"last-digit"``.
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class DepthTooLarge(CantorError):
    pass


class BudgetExceeded(CantorError):
    pass


@dataclass(frozen=True)
class LevelSpec:
    r: float
    digits: Tuple[float, ...]

    def __post_init__(self):
        r = float(self.r)
        digits = tuple(float(d) for d in self.digits)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "digits", digits)
        if not (0.0 < r < 0.5):
            raise InvalidSpec("ratio-range", f"r={r!r} must satisfy 0 < r < 1/2")
        if len(digits) < 2:
            raise InvalidSpec("branching", f"need at least 2 digits, got {len(digits)}")
        if digits[0] != 0.0:
            raise InvalidSpec("first-digit", f"first digit must be 0, got {digits[0]!r}")
        last = (1.0 - r) / r
        if abs(digits[-1] - last) > DIGIT_RTOL * max(1.0, last):
            raise InvalidSpec(
                "last-digit", f"last digit must equal (1-r)/r = {last!r}, got {digits[-1]!r}")
        for j in range(len(digits) - 1):
            if not digits[j + 1] - digits[j] > 1.0:
                raise InvalidSpec(
                    "digit-spacing",
                    f"digits {j + 1} and {j + 2} are {digits[j + 1] - digits[j]!r} apart; "
                    "spacing must exceed 1")

    @property
    def m(self) -> int:
        return len(self.digits)

    def unit_gaps(self) -> List[float]:
        """Gap lengths in units of this level's child length."""
        d = self.digits
        return [d[j + 1] - d[j] - 1.0 for j in range(len(d) - 1)]


@dataclass(frozen=True)
class CantorSpec:
    prefix: Tuple[LevelSpec, ...]
    tail: str = "repeat-last"
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        if not self.prefix:
            raise InvalidSpec("levels", "at least one level is required")
        if self.tail not in TAIL_POLICIES:
            raise InvalidSpec("tail", f"unknown tail policy {self.tail!r}")

    @classmethod
    def homogeneous(cls, r: float, digits: Sequence[float], label: str = "") -> "CantorSpec":
        return cls((LevelSpec(r, tuple(digits)),), "repeat-last", label)


@dataclass(frozen=True)
class IntervalGeom:
    a: float
    b: float
    depth: int


@dataclass(frozen=True)
class GapRef:
    level: int
    index: int
    length: float


def enumeration_budget() -> int:
    """Maximum number of intervals an enumeration may produce (env ``CANTOR_BUDGET``)."""
    raw = os.environ.get("CANTOR_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def level(spec: CantorSpec, n: int) -> LevelSpec:
    if n < 1:
        raise ValueError(f"levels are numbered from 1, got {n}")
    p = len(spec.prefix)
    if n <= p:
        return spec.prefix[n - 1]
    if spec.tail == "repeat-last":
        return spec.prefix[-1]
    return spec.prefix[(n - 1) % p]


def tail_window(spec: CantorSpec) -> Tuple[int, int]:
    """First level of the periodic tail and its period.

    Every level-local quantity repeats with this period from the returned
    start onwards.
    """
    if spec.tail == "cycle":
        return 1, len(spec.prefix)
    return len(spec.prefix), 1


def resolved_levels(spec: CantorSpec) -> Tuple[LevelSpec, ...]:
    """The finitely many distinct level rules that occur."""
    return spec.prefix


def _raw_scale(spec: CantorSpec, n: int) -> float:
    s = 1.0
    for k in range(1, n + 1):
        s *= level(spec, k).r
    return s


def scale(spec: CantorSpec, n: int) -> float:
    """``s_n``; raises DepthTooLarge past the depth cap."""
    if n < 0:
        raise ValueError("n must be >= 0")
    s, mu = 1.0, 1
    for k in range(1, n + 1):
        lv = level(spec, k)
        s *= lv.r
        mu *= lv.m
        if mu > MAX_COUNT or s < MIN_SCALE:
            raise DepthTooLarge(f"depth {n} exceeds the cap (mu={mu}, s={s:.3g})")
    return s


def count(spec: CantorSpec, n: int) -> int:
    """``mu(n)``, the number of basic intervals of order n."""
    scale(spec, n)
    mu = 1
    for k in range(1, n + 1):
        mu *= level(spec, k).m
    return mu


def gap(spec: CantorSpec, n: int, j: int) -> float:
    lv = level(spec, n)
    if not 1 <= j <= lv.m - 1:
        raise IndexError(f"gap index {j} out of range 1..{lv.m - 1} at level {n}")
    return scale(spec, n) * (lv.digits[j] - lv.digits[j - 1] - 1.0)


def gaps(spec: CantorSpec, n: int) -> List[GapRef]:
    s = scale(spec, n)
    return [GapRef(n, j, s * g) for j, g in enumerate(level(spec, n).unit_gaps(), 1)]


def check_word(spec: CantorSpec, w: Sequence[int]) -> Word:
    w = tuple(int(i) for i in w)
    for j, i in enumerate(w, 1):
        m = level(spec, j).m
        if not 1 <= i <= m:
            raise IndexError(f"index {i} at position {j} outside 1..{m}")
    return w


def _horner(spec: CantorSpec, w: Sequence[int], last: float) -> float:
    # r1*(d1 + r2*(d2 + ... + rn*(dn + last))); nested form keeps rounding relative
    acc = last
    for j in range(len(w), 0, -1):
        lv = level(spec, j)
        acc = lv.r * (lv.digits[w[j - 1] - 1] + acc)
    return acc


def _left(spec: CantorSpec, w: Sequence[int]) -> float:
    return _horner(spec, w, 0.0)


def _right(spec: CantorSpec, w: Sequence[int]) -> float:
    return _horner(spec, w, 1.0) if w else 1.0


def endpoints(spec: CantorSpec, w: Sequence[int]) -> IntervalGeom:
    w = check_word(spec, w)
    scale(spec, len(w))
    return IntervalGeom(_left(spec, w), _right(spec, w), len(w))


def _words(spec: CantorSpec, n: int) -> Iterator[Word]:
    if n == 0:
        yield ()
        return
    m = level(spec, n).m
    for head in _words(spec, n - 1):
        for i in range(1, m + 1):
            yield head + (i,)


def enumerate_intervals(spec: CantorSpec, n: int) -> List[Tuple[Word, IntervalGeom]]:
    """All basic intervals of order n, left to right."""
    mu = count(spec, n)
    budget = enumeration_budget()
    if mu > budget:
        raise BudgetExceeded(f"{mu} intervals at depth {n} exceed the budget of {budget}")
    return [(w, IntervalGeom(_left(spec, w), _right(spec, w), n)) for w in _words(spec, n)]


def distance_to_set(spec: CantorSpec, x: float, tol: float = 1e-12) -> float:
    """Distance from x to the Cantor set, within ``tol``.

    Descends through the basic interval containing x.  Once x falls in a gap
    the answer is exact (the gap's ends belong to the set); otherwise the
    descent stops when the interval is shorter than ``tol`` and returns 0.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if x <= 0.0:
        return -x
    if x >= 1.0:
        return x - 1.0
    a, s, n = 0.0, 1.0, 0
    while s > tol:
        n += 1
        lv = level(spec, n)
        s_child = s * lv.r
        lefts = [a + d * s_child for d in lv.digits]
        i = 0
        while i + 1 < len(lefts) and lefts[i + 1] <= x:
            i += 1
        if x > lefts[i] + s_child:
            # x lies in the gap after child i
            if i + 1 == len(lefts):
                return x - (lefts[i] + s_child)
            return min(x - (lefts[i] + s_child), lefts[i + 1] - x)
        a, s = lefts[i], s_child
        if s < MIN_SCALE:
            break
    return 0.0


def shift(spec: CantorSpec, k: int) -> CantorSpec:
    """The set generated by levels k+1, k+2, ... (a basic interval of order k, rescaled)."""
    if k <= 0:
        return spec
    p = len(spec.prefix)
    if spec.tail == "cycle":
        j = k % p
        return CantorSpec(spec.prefix[j:] + spec.prefix[:j], "cycle", spec.label)
    return CantorSpec(spec.prefix[min(k, p - 1):], "repeat-last", spec.label)


def mirror(spec: CantorSpec) -> CantorSpec:
    """Reflection x -> 1 - x, applied level by level."""
    levels = []
    for lv in spec.prefix:
        last = lv.digits[-1]
        levels.append(LevelSpec(lv.r, tuple(last - d for d in reversed(lv.digits))))
    return CantorSpec(tuple(levels), spec.tail, spec.label + " (mirrored)" if spec.label else "")
