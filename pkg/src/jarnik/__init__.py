"""Lattice polygons with primitive-vector edges, their limit curves, and
the exact Farey/continued-fraction analysis of their local curvature."""

from .analysis import (
    ConvergenceRecord,
    convergence_table,
    distance_to_curve,
    expected_curve,
    lemma_check,
)
from .curvature import (
    CurvatureBounds,
    CurvatureSample,
    circumradius_squared,
    curvature_trace,
    limit_curve_radius,
    limsup_liminf_estimate,
    local_radius,
    predicted_radius,
)
from .domains import (
    DomainSpec,
    MomentPair,
    ball,
    contains,
    diamond,
    moment_integrals,
    octagon,
    parse_domain,
    scale_factor_asymptote,
    square,
)
from .limit_curves import (
    BetaKernel,
    LimitCurve,
    curve_C,
    curve_C1,
    curve_Cdelta,
    curve_Cp,
    curve_Cp_alternate_y,
    parse_curve,
    reg_inc_beta,
    rotate_scale_C,
)
from .number_theory import (
    ContinuedFraction,
    FareyNeighbors,
    MoebiusTable,
    QuadraticSurd,
    RationalReal,
    RealSpec,
    cf_expand,
    convergents,
    farey_neighbors,
    farey_neighbors_sided,
    farey_sequence,
    moebius_sieve,
    parse_real,
    partial_zeta_inverse,
)
from .polygon import (
    LatticePolygon,
    PrimitiveVector,
    ScaledPolygon,
    build_polygon,
    fundamental_vertex,
    primitive_vectors,
    scale_polygon,
    sort_ccw,
)

__version__ = "0.1.0"
