"""Centrally symmetric polytopes: cs transforms, face tests, and exact
neighborliness certification backed by rational arithmetic.

All rationals cross the boundary as strings ("3/4") so nothing is
rounded; `fractions.Fraction` accepts them directly.
"""

from ._csneighborly import (
    Configuration,
    antipodal_pair,
    cs_transform,
    euclidean_l1_distortion,
    forbidden_count,
    gg_margin,
    greedy_family,
    inverse_transform,
    is_antipodal_polytope,
    is_dominant,
    is_face_dual,
    is_face_primal,
    is_valid_vertex_transform,
    kashin_configuration,
    kashin_margin,
    max_neighborliness,
    max_neighborliness_primal,
    min_dominant_size,
    nonexistence_bound,
    random_orthogonal,
    s_max_norm,
    sample_gaussian_configuration,
    subspace_ratio,
    translate_packing_check,
    volume_ratio,
    zonotope_gauge,
)

__all__ = [
    "Configuration",
    "antipodal_pair",
    "cs_transform",
    "euclidean_l1_distortion",
    "forbidden_count",
    "gg_margin",
    "greedy_family",
    "inverse_transform",
    "is_antipodal_polytope",
    "is_dominant",
    "is_face_dual",
    "is_face_primal",
    "is_valid_vertex_transform",
    "kashin_configuration",
    "kashin_margin",
    "max_neighborliness",
    "max_neighborliness_primal",
    "min_dominant_size",
    "nonexistence_bound",
    "random_orthogonal",
    "s_max_norm",
    "sample_gaussian_configuration",
    "subspace_ratio",
    "translate_packing_check",
    "volume_ratio",
    "zonotope_gauge",
]
