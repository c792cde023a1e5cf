"""Named example sets used by the demos and the test-suite."""
from __future__ import annotations

from typing import Dict

from .construction import CantorSpec, LevelSpec


def middle_thirds() -> CantorSpec:
    return CantorSpec.homogeneous(1 / 3, (0, 2), "middle-thirds")


def quarter_pair() -> CantorSpec:
    """r = 1/4 with the two end children: dimension 1/2."""
    return CantorSpec.homogeneous(1 / 4, (0, 3), "quarter-pair")


def fifths_three() -> CantorSpec:
    """r = 1/5, three equally spaced children."""
    return CantorSpec.homogeneous(1 / 5, (0, 2, 4), "fifths-three")


def ninths_five() -> CantorSpec:
    return CantorSpec.homogeneous(1 / 9, (0, 2, 4, 6, 8), "ninths-five")


def sevenths_uneven() -> CantorSpec:
    """Three children with unequal gaps (1.5 and 2.5 child lengths)."""
    return CantorSpec.homogeneous(1 / 7, (0, 2.5, 6), "sevenths-uneven")


def lopsided_fifths() -> CantorSpec:
    """r = 1/5, D = {0, 2.9, 4}: separated but fails the gap-sum condition."""
    return CantorSpec.homogeneous(1 / 5, (0, 2.9, 4), "lopsided-fifths")


def thirds_quarters() -> CantorSpec:
    """Alternates r = 1/3 and r = 1/4 (two children each); not self-similar."""
    return CantorSpec(
        (LevelSpec(1 / 3, (0, 2)), LevelSpec(1 / 4, (0, 3))), "cycle", "thirds-quarters")


def quarters_thirds() -> CantorSpec:
    """Same levels as :func:`thirds_quarters` in the opposite order."""
    return CantorSpec(
        (LevelSpec(1 / 4, (0, 3)), LevelSpec(1 / 3, (0, 2))), "cycle", "quarters-thirds")


def mixed_branching() -> CantorSpec:
    """Cycles a two-child and a three-child level."""
    return CantorSpec(
        (LevelSpec(1 / 3, (0, 2)), LevelSpec(1 / 5, (0, 2, 4))), "cycle", "mixed-branching")


def warmup_then_thirds() -> CantorSpec:
    """Two distinct opening levels, then middle-thirds forever."""
    return CantorSpec(
        (LevelSpec(1 / 5, (0, 2, 4)), LevelSpec(1 / 4, (0, 3)), LevelSpec(1 / 3, (0, 2))),
        "repeat-last", "warmup-then-thirds")


CORPUS: Dict[str, CantorSpec] = {
    spec.label: spec
    for spec in (
        middle_thirds(), quarter_pair(), fifths_three(), ninths_five(), sevenths_uneven(),
        lopsided_fifths(), thirds_quarters(), quarters_thirds(), mixed_branching(),
        warmup_then_thirds(),
    )
}
