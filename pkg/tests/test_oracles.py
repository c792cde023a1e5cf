import itertools
import math

import pytest

from cantormeasure.construction import count, scale
from cantormeasure.corpus import CORPUS, middle_thirds, quarter_pair
from cantormeasure.measures import hausdorff_dim, hausdorff_measure, mass_scale
from cantormeasure.oracles import density_scan, frostman_constant, interval_arrays, optimal_cover, sandwich

LOG23 = math.log(2) / math.log(3)


def _exhaustive_cover(spec, n, s):
    a, b = interval_arrays(spec, n)
    N = len(a)
    best = math.inf
    for cuts in itertools.product((False, True), repeat=N - 1):
        total, start = 0.0, 0
        for i, cut in enumerate(cuts + (True,)):
            if cut:
                total += (b[i] - a[start]) ** s
                start = i + 1
        best = min(best, total)
    return best


def test_cover_middle_thirds():
    sol = optimal_cover(middle_thirds(), 3, LOG23)
    assert sol.value == pytest.approx(1.0, abs=1e-12)
    assert sol.blocks == [(i, i) for i in range(1, 9)]


@pytest.mark.parametrize("label,n", [
    ("middle-thirds", 3), ("fifths-three", 2), ("thirds-quarters", 3),
    ("mixed-branching", 3), ("lopsided-fifths", 2), ("sevenths-uneven", 2),
])
def test_dp_matches_exhaustive(label, n):
    spec = CORPUS[label]
    assert count(spec, n) <= 12
    for s in (hausdorff_dim(spec).value, 0.3, 0.9):
        assert optimal_cover(spec, n, s).value == pytest.approx(_exhaustive_cover(spec, n, s), rel=1e-12)


def test_cover_blocks_partition(corpus_spec):
    sol = optimal_cover(corpus_spec, 3, hausdorff_dim(corpus_spec).value)
    flat = [i for first, last in sol.blocks for i in range(first, last + 1)]
    assert flat == list(range(1, count(corpus_spec, 3) + 1))


def test_cover_at_exponent_one(corpus_spec):
    for n in (2, 4):
        sol = optimal_cover(corpus_spec, n, 1.0)
        assert sol.value == pytest.approx(count(corpus_spec, n) * scale(corpus_spec, n), rel=1e-12)


def test_frostman_examples():
    for n in range(0, 6):
        assert frostman_constant(middle_thirds(), n, LOG23) == pytest.approx(1.0, abs=1e-12)
        assert frostman_constant(quarter_pair(), n, 0.5) == pytest.approx(1.0, abs=1e-12)


def test_sandwich_rows():
    spec = CORPUS["sevenths-uneven"]
    s = hausdorff_dim(spec).value
    B = hausdorff_measure(spec).value
    for row in sandwich(spec, 5, s):
        assert row.lower_bound <= B * (1 + 1e-9)
        assert B <= row.dp_value * (1 + 1e-9)
        assert row.dp_value <= row.mu_sn_s * (1 + 1e-12)
        assert row.mu_sn_s == pytest.approx(mass_scale(spec, row.n, s))


def test_lopsided_cover_drops_below_mass_scale():
    spec = CORPUS["lopsided-fifths"]
    s = hausdorff_dim(spec).value
    row = sandwich(spec, 4, s, n_min=4)[0]
    assert row.dp_value < row.mu_sn_s


def test_density_scan_middle_thirds():
    scan = density_scan(middle_thirds(), LOG23, 20, 3.0 ** -16, seed=4)
    assert 1 / scan.min_density == pytest.approx(4 ** LOG23, rel=0.05)
    lo, med, hi = scan.spread
    assert lo <= med <= hi
    assert scan.note == ""
    # identical seeds give identical profiles
    again = density_scan(middle_thirds(), LOG23, 20, 3.0 ** -16, seed=4)
    assert [p.points for p in scan.profiles] == [p.points for p in again.profiles]
