"""String cones and string polytopes."""

from .cones import (
    BUILTIN_C2,
    BUILTIN_E6,
    BUILTIN_GT,
    E6_SUFFIX,
    EMPIRICAL,
    EXTERNAL,
    StringCone,
    builtin_cone,
    certify_external,
    default_degree,
    format_cone_file,
    lambda_coefficients,
    lambda_inequalities,
    load_cone_file,
    parse_cone_file,
    string_cone,
)
from .fan import chamber, fan_summary, minkowski_test, projected_face_cones, string_fan
from .gt import g_to_x, gt_change_of_coords, gt_polytope, gt_vertices, x_to_g
from .limits import dual_map, moment_polytope_limit, spherical_limit_cone
from .polytopes import (
    LatticeCounter,
    StringPolytope,
    big_cone,
    extremal_weight_vertices,
    fiber_polytope,
    fiber_volume,
    highest_weight_vertex,
    pi_lambda,
    projection_matrix,
    string_polytope,
)
from .verdicts import (
    anticanonical_check,
    e6_counterexample,
    e6_suffix_cone,
    hw_tangent_cone_check,
    origin_cone_simplicial,
    origin_tangent_cone,
)

__all__ = [
    "BUILTIN_C2",
    "BUILTIN_E6",
    "BUILTIN_GT",
    "E6_SUFFIX",
    "EMPIRICAL",
    "EXTERNAL",
    "LatticeCounter",
    "StringCone",
    "StringPolytope",
    "anticanonical_check",
    "big_cone",
    "builtin_cone",
    "certify_external",
    "chamber",
    "default_degree",
    "dual_map",
    "e6_counterexample",
    "e6_suffix_cone",
    "extremal_weight_vertices",
    "fan_summary",
    "fiber_polytope",
    "fiber_volume",
    "format_cone_file",
    "g_to_x",
    "gt_change_of_coords",
    "gt_polytope",
    "gt_vertices",
    "highest_weight_vertex",
    "hw_tangent_cone_check",
    "lambda_coefficients",
    "lambda_inequalities",
    "load_cone_file",
    "minkowski_test",
    "moment_polytope_limit",
    "origin_cone_simplicial",
    "origin_tangent_cone",
    "parse_cone_file",
    "pi_lambda",
    "projected_face_cones",
    "projection_matrix",
    "spherical_limit_cone",
    "string_cone",
    "string_fan",
    "string_polytope",
    "x_to_g",
]
