"""Exact Hausdorff and packing measures of linear Cantor sets built level by level."""
from .construction import (
    BudgetExceeded, CantorError, CantorSpec, DepthTooLarge, GapRef, IntervalGeom, InvalidSpec,
    LevelSpec, count, distance_to_set, endpoints, enumerate_intervals, gap, gaps, level, mirror,
    scale, shift,
)
from .hypotheses import HypothesisReport, check_bounded_branching, check_cond2, check_separation
from .measures import (
    LimitEstimate, PackingConstants, alpha_level, beta_level, gamma_level, hausdorff_dim,
    hausdorff_measure, packing_dim, packing_measure,
)
from .natural_measure import DensityProfile, MeasureValue, lower_density, mu_ball, mu_interval, sample_point
from .oracles import CoverSolution, density_scan, frostman_constant, optimal_cover
from .specfile import format_spec, load_spec, parse_spec

__version__ = "0.1.0"
