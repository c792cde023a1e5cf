"""Checks of the separation, gap-sum and bounded-branching hypotheses.

Gap ratios are scale free, so every comparison is made in units of the
coarser level's child length: a gap of level n-1 is ``d_{j+1} - d_j - 1`` and a
gap of level n is ``r_n * (d_{t+1} - d_t - 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterator, List, Optional, Tuple

from .construction import CantorSpec, LevelSpec, level, tail_window

__all__ = [
    "Cond2Witness", "HypothesisReport", "check_separation", "check_cond2",
    "check_bounded_branching", "level_pairs", "cond2_ratio", "report",
]

# equality cases (e.g. equal gaps) must not be reported as violations
_SLACK = 1e-12


@dataclass(frozen=True)
class Cond2Witness:
    n: int
    J1: FrozenSet[int]
    J2: FrozenSet[int]
    j: int
    lhs: float
    rhs: float


@dataclass(frozen=True)
class HypothesisReport:
    separation_c: float
    cond2_ok: bool
    cond2_witness: Optional[Cond2Witness]
    branching_M: int

    @property
    def separation_ok(self) -> bool:
        return self.separation_c > 1.0

    @property
    def hausdorff_ok(self) -> bool:
        return self.separation_ok and self.cond2_ok

    @property
    def packing_ok(self) -> bool:
        return self.separation_ok


def check_separation(spec: CantorSpec) -> float:
    """Smallest spacing between consecutive digits over all levels."""
    return min(
        lv.digits[j + 1] - lv.digits[j]
        for lv in spec.prefix for j in range(lv.m - 1))


def check_bounded_branching(spec: CantorSpec) -> int:
    return max(lv.m for lv in spec.prefix)


def level_pairs(spec: CantorSpec) -> Iterator[int]:
    """Levels n >= 2 whose pair (n-1, n) represents every pair occurring infinitely often.

    Cycles contribute all p consecutive pairs including the wrap-around
    (reported as n = p + 1); repeat-last contributes the prefix pairs and the
    self pair of the final level.
    """
    start, period = tail_window(spec)
    if spec.tail == "cycle":
        yield from range(2, period + 2)
    else:
        yield from range(2, start + 2)


def cond2_ratio(spec: CantorSpec, n: int, J1, J2, j: int) -> Tuple[float, float]:
    """(lhs, rhs) of the gap-sum inequality for one instance, evaluated literally."""
    prev, cur = level(spec, n - 1), level(spec, n)
    coarse = prev.unit_gaps()[j - 1]
    fine = [cur.r * g for g in cur.unit_gaps()]
    num = sum(fine[t - 1] for t in J2)
    den = coarse + sum(fine[t - 1] for t in J1)
    rhs = 1.0 - (len(J1) - len(J2) + 1) / (len(J1) + 1)
    return num / den, rhs


def _pair_violation(prev: LevelSpec, cur: LevelSpec, n: int) -> Optional[Cond2Witness]:
    coarse = prev.unit_gaps()
    fine = [cur.r * g for g in cur.unit_gaps()]
    j = min(range(len(coarse)), key=lambda i: (coarse[i], i))
    # a monotone ratio: the worst J2 takes the largest gaps, the worst J1 the smallest
    asc = sorted(range(len(fine)), key=lambda i: (fine[i], i))
    desc = sorted(range(len(fine)), key=lambda i: (-fine[i], i))
    for p in range(1, len(fine) + 1):
        den = coarse[j] + sum(fine[i] for i in asc[:p])
        for q in range(1, p + 1):
            lhs = sum(fine[i] for i in desc[:q]) / den
            rhs = q / (p + 1)
            if lhs > rhs + _SLACK:
                return Cond2Witness(
                    n, frozenset(i + 1 for i in asc[:p]), frozenset(i + 1 for i in desc[:q]),
                    j + 1, lhs, rhs)
    return None


def _pair_violation_exhaustive(prev: LevelSpec, cur: LevelSpec, n: int) -> Optional[Cond2Witness]:
    coarse = prev.unit_gaps()
    fine = [cur.r * g for g in cur.unit_gaps()]
    idx = range(1, len(fine) + 1)
    subsets: List[Tuple[int, ...]] = [c for k in range(len(fine) + 1) for c in combinations(idx, k)]
    for J1 in subsets:
        for J2 in subsets:
            if len(J2) > len(J1) or not J2:
                continue
            num = sum(fine[t - 1] for t in J2)
            for j, g in enumerate(coarse, 1):
                lhs = num / (g + sum(fine[t - 1] for t in J1))
                rhs = 1.0 - (len(J1) - len(J2) + 1) / (len(J1) + 1)
                if lhs > rhs + _SLACK:
                    return Cond2Witness(n, frozenset(J1), frozenset(J2), j, lhs, rhs)
    return None


def check_cond2(spec: CantorSpec, exhaustive: bool = False) -> Tuple[bool, Optional[Cond2Witness]]:
    """Gap-sum condition over every recurring level pair.

    The default uses sorted prefix sums per cardinality pair; ``exhaustive``
    enumerates all subset pairs instead (exponential, kept as an oracle).
    """
    find = _pair_violation_exhaustive if exhaustive else _pair_violation
    for n in level_pairs(spec):
        w = find(level(spec, n - 1), level(spec, n), n)
        if w is not None:
            return False, w
    return True, None


def report(spec: CantorSpec) -> HypothesisReport:
    ok, witness = check_cond2(spec)
    return HypothesisReport(
        check_separation(spec), ok, witness, check_bounded_branching(spec))
