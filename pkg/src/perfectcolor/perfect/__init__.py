"""Grid neighborhoods, torus configurations, verdicts and search."""

from .grids import GridKind, block, neighborhood
from .search import AnyPerfect, Covering, MatrixConstraint, search
from .torus import (
    ColoringMatrix,
    TorusConfig,
    TorusTooSmall,
    abelian_complexity,
    check_torus,
    covering_identity_holds,
    extract_matrix,
    fit_torus,
    minimal_periods,
    neighborhood_counts,
    pattern_complexity,
    periodic_product,
    verify_covering,
)
from .verdict import (
    Verdict,
    VerdictKind,
    det_shifted,
    verdict_abelian,
    verdict_coloring,
    verdict_covering,
    verdict_covering_convex,
)
