"""Computational toolkit for the space of oriented geodesics of hyperbolic
3-space: its neutral Kaehler structure, geodesic charts, congruence analysis,
variational machinery for maximal surfaces, and equidistant-surface
reconstruction."""

from .congruence import (
    Congruence,
    OpticalData,
    Partials,
    Rank2Graph,
    classify_metric,
    complex_point_defect,
    flatness_defect,
    jacobians,
    lagrangian_defect,
    optical_scalars,
    pullback_metric,
    rank,
    reduced_densities,
)
from .errors import (
    BranchError,
    CausticError,
    ChartSingularError,
    DegenerateError,
    InputError,
    IntegrabilityError,
    InvalidGeodesicError,
    LH3Error,
    ModelDomainError,
)
from .extcomplex import INF, ExtComplex, chordal
from .halfspace import (
    BallPoint,
    GeodesicArc,
    HalfSpacePoint,
    TangentH3,
    apply_mobius,
    ball_from_halfspace,
    distance_point_to_geodesic,
    geodesic_from_initial,
    halfspace_from_ball,
    hyp_distance,
    hyp_inner,
    integrate_geodesic_ode_state,
)
from .kahler import (
    TangentL,
    closedness_defect,
    complex_structure,
    gram_matrix,
    metric,
    signature,
    symplectic_form,
)
from .lines import (
    OrientedGeodesic,
    XiEtaChart,
    arc_of,
    endpoints,
    from_endpoints,
    geodesic_from_point_direction,
    geodesic_from_xi_eta,
    point_at,
    reverse_orientation,
    shift_into_chart,
    velocity_at,
    xi_eta_of,
)
from .reconstruct import (
    FamilyScalars,
    RField,
    SampledSurface,
    ShapeOperator,
    best_fit_axis,
    equidistance_spread,
    export_csv,
    export_obj,
    family_axis,
    family_scalars,
    family_surface,
    family_surface_mapping,
    fit_symmetric_triple,
    principal_curvatures_from_scalars,
    r_closed_form_family,
    read_obj_vertices,
    shape_operator_numeric,
    solve_r_pde,
    surface_from_rfield,
    surface_point,
    tube_congruence,
    tube_family,
    tube_inverse,
)
from .variational import (
    AngleField,
    Bump,
    MaximalFamily,
    Rank1Chart,
    Rank1Geometry,
    Rank1Partials,
    angle_grid,
    angle_pde_residual,
    axis_geodesics,
    first_variation,
    harmonic_defect,
    harmonic_defect_field,
    lagrangian_maximality_residual,
    maximal_family_graph,
    maximality_residual,
    mu2_from_angle,
    rank1_geometry,
    rank1_lagrangian_defect,
    sigma0,
    sigma0_and_angle,
)
from .verify import CheckRecord, all_passed, run_all_checks

__version__ = "0.1.0"

__all__ = [
    "AngleField",
    "BallPoint",
    "BranchError",
    "Bump",
    "CausticError",
    "ChartSingularError",
    "CheckRecord",
    "Congruence",
    "DegenerateError",
    "ExtComplex",
    "FamilyScalars",
    "GeodesicArc",
    "HalfSpacePoint",
    "INF",
    "InputError",
    "IntegrabilityError",
    "InvalidGeodesicError",
    "LH3Error",
    "MaximalFamily",
    "ModelDomainError",
    "OpticalData",
    "OrientedGeodesic",
    "Partials",
    "RField",
    "Rank1Chart",
    "Rank1Geometry",
    "Rank1Partials",
    "Rank2Graph",
    "SampledSurface",
    "ShapeOperator",
    "TangentH3",
    "TangentL",
    "XiEtaChart",
    "all_passed",
    "angle_grid",
    "angle_pde_residual",
    "apply_mobius",
    "arc_of",
    "axis_geodesics",
    "ball_from_halfspace",
    "best_fit_axis",
    "chordal",
    "classify_metric",
    "closedness_defect",
    "complex_point_defect",
    "complex_structure",
    "distance_point_to_geodesic",
    "endpoints",
    "equidistance_spread",
    "export_csv",
    "export_obj",
    "family_axis",
    "family_scalars",
    "family_surface",
    "family_surface_mapping",
    "first_variation",
    "fit_symmetric_triple",
    "flatness_defect",
    "from_endpoints",
    "geodesic_from_initial",
    "geodesic_from_point_direction",
    "geodesic_from_xi_eta",
    "gram_matrix",
    "halfspace_from_ball",
    "harmonic_defect",
    "harmonic_defect_field",
    "hyp_distance",
    "hyp_inner",
    "integrate_geodesic_ode_state",
    "jacobians",
    "lagrangian_defect",
    "lagrangian_maximality_residual",
    "maximal_family_graph",
    "maximality_residual",
    "metric",
    "mu2_from_angle",
    "optical_scalars",
    "point_at",
    "principal_curvatures_from_scalars",
    "pullback_metric",
    "r_closed_form_family",
    "rank",
    "rank1_geometry",
    "rank1_lagrangian_defect",
    "read_obj_vertices",
    "reduced_densities",
    "reverse_orientation",
    "run_all_checks",
    "shape_operator_numeric",
    "shift_into_chart",
    "sigma0",
    "sigma0_and_angle",
    "signature",
    "solve_r_pde",
    "surface_from_rfield",
    "surface_point",
    "symplectic_form",
    "tube_congruence",
    "tube_family",
    "tube_inverse",
    "velocity_at",
    "xi_eta_of",
]
