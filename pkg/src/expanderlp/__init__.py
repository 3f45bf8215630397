"""Linear-programming order bounds for regular graphs with few distinct eigenvalues.

The package bounds the number of vertices of a connected k-regular graph
whose adjacency eigenvalues below k lie in a prescribed finite set, and
certifies concrete graphs as attaining that bound.
"""

from .certify import (
    CertificationReport,
    VERDICT_CERTIFIED,
    VERDICT_FAILED,
    VERDICT_NOT_APPLICABLE,
    certify,
    moore_bound,
    moore_polygon_array,
    tutte_bound,
)
from .families import (
    FamilySpec,
    Profile,
    TABLE_SPECS,
    UnsupportedFamilyError,
    build,
    expected_profile,
    parse_family,
)
from .graphcore import (
    EXPANSION_CAP,
    ExpansionResult,
    Graph,
    Graph6Error,
    IntersectionArray,
    SizeCapError,
    all_pairs_distances,
    diameter,
    distance_matrix,
    edge_expansion,
    girth_bfs,
    is_bipartite,
    is_connected,
    is_distance_regular,
    nonbacktracking_walk_count,
    parse_graph6,
    regularity,
    write_graph6,
)
from .lpbound import (
    BoundCertificate,
    CertificateConditions,
    ConditionReport,
    LPSolution,
    TightnessReport,
    certificate_from_spectrum,
    check_attainment,
    check_certificate,
    lp_bound_dual,
    lp_bound_primal,
)
from .orthopoly import (
    MAX_DEGREE,
    MonomialPoly,
    SphereBasisPoly,
    ball_poly,
    linearize_product,
    sphere_poly,
    sphere_poly_monomial,
    to_sphere_basis,
    tree_weight,
    weight_quadrature,
)
from .spectral import (
    HoffmanData,
    SPECTRAL_SIZE_CAP,
    Spectrum,
    girth_spectral,
    hoffman_decomposition,
    spectral_gap,
    sphere_poly_matrix,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "CertificateConditions",
    "CertificationReport",
    "ConditionReport",
    "EXPANSION_CAP",
    "ExpansionResult",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "HoffmanData",
    "IntersectionArray",
    "LPSolution",
    "MAX_DEGREE",
    "MonomialPoly",
    "Profile",
    "SPECTRAL_SIZE_CAP",
    "SizeCapError",
    "SphereBasisPoly",
    "Spectrum",
    "TABLE_SPECS",
    "TightnessReport",
    "UnsupportedFamilyError",
    "VERDICT_CERTIFIED",
    "VERDICT_FAILED",
    "VERDICT_NOT_APPLICABLE",
    "all_pairs_distances",
    "ball_poly",
    "build",
    "certificate_from_spectrum",
    "certify",
    "check_attainment",
    "check_certificate",
    "diameter",
    "distance_matrix",
    "edge_expansion",
    "expected_profile",
    "girth_bfs",
    "girth_spectral",
    "hoffman_decomposition",
    "is_bipartite",
    "is_connected",
    "is_distance_regular",
    "linearize_product",
    "lp_bound_dual",
    "lp_bound_primal",
    "moore_bound",
    "moore_polygon_array",
    "nonbacktracking_walk_count",
    "parse_family",
    "parse_graph6",
    "regularity",
    "spectral_gap",
    "spectrum",
    "sphere_poly",
    "sphere_poly_matrix",
    "sphere_poly_monomial",
    "to_sphere_basis",
    "tree_weight",
    "tutte_bound",
    "weight_quadrature",
    "write_graph6",
]
