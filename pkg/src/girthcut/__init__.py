"""Explicit SDP vector solutions with hyperplane rounding for MaxCut on
d-regular graphs of girth >= 2k.

The construction assigns every vertex an implicit unit vector whose
coordinates depend only on graph distance; the common edge inner product
is the minimum eigenvalue of a small tridiagonal operator, and rounding
the vectors with a random hyperplane cuts an arccos(sigma)/pi fraction of
edges in expectation.
"""

from .bounds import (
    BoundReport,
    bound_report,
    comparison_table,
    cut_fraction,
    lyons_xi,
    normalized_value,
    relative_expectation,
    table1_rows,
    dominance_threshold,
    truncate,
)
from .errors import CertificationError, GenerationError, GirthCutError, IngestionError
from .graph import (
    BUILTIN_NAMES,
    Graph,
    GraphCertificate,
    builtin,
    certify,
    distances_within,
    load_edge_list,
    random_regular,
)
from .rounding import (
    Cut,
    RoundingReport,
    cut_size,
    expected_cut_exact,
    gaussian_draw,
    hyperplane_round,
    kernel_name,
    monte_carlo,
    projections,
)
from .solution import (
    VectorSolution,
    build_vectors,
    closed_form_profile,
    materialize,
    optimal_profile,
    sdp_objective,
)
from .spectral import (
    CoefficientProfile,
    Eigenpair,
    PathOperator,
    b_min_eigenvalue,
    beta_to_alpha,
    closed_form_w,
    min_eigenpair,
    path_operator,
    quadratic_form,
    sigma_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES",
    "BoundReport",
    "CertificationError",
    "CoefficientProfile",
    "Cut",
    "Eigenpair",
    "GenerationError",
    "GirthCutError",
    "Graph",
    "GraphCertificate",
    "IngestionError",
    "PathOperator",
    "RoundingReport",
    "VectorSolution",
    "b_min_eigenvalue",
    "beta_to_alpha",
    "bound_report",
    "build_vectors",
    "builtin",
    "certify",
    "closed_form_profile",
    "closed_form_w",
    "comparison_table",
    "cut_fraction",
    "cut_size",
    "distances_within",
    "expected_cut_exact",
    "gaussian_draw",
    "hyperplane_round",
    "kernel_name",
    "load_edge_list",
    "lyons_xi",
    "materialize",
    "min_eigenpair",
    "monte_carlo",
    "normalized_value",
    "optimal_profile",
    "path_operator",
    "projections",
    "quadratic_form",
    "random_regular",
    "relative_expectation",
    "sdp_objective",
    "sigma_closed_form",
    "table1_rows",
    "dominance_threshold",
    "truncate",
]
