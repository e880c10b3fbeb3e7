"""Mutually unbiased measurements, SIC measurements, and entropic bounds.

Construct complete sets of d + 1 mutually unbiased measurements in any
finite dimension, build general symmetric informationally complete
measurements, compute outcome statistics on density matrices, and verify
the closed-form entropic uncertainty bounds those measurements obey.

Hot numeric paths run on a compiled extension when it is available;
``mumkit.kernels.BACKEND`` names the active implementation and the
environment variable MUMKIT_PURE_PYTHON=1 forces the fallback.
"""

from .bounds import (
    BoundReport,
    BoundStats,
    SweepResult,
    VIOLATION_GAP,
    bound_table,
    evaluate_states,
    flag_violations,
    ht_bound_state_independent,
    ht_bound_total,
    max_prob_bound,
    min_entropy_bound,
    renyi_bound,
    reports_from_csv,
    reports_to_csv,
    sample_states,
    shannon_bound,
    sic_ht_bound,
    sweep_to_json,
    tsallis_bound,
    verify_bounds,
)
from .entropy import (
    alpha_log,
    index_of_coincidence,
    min_entropy,
    prob_vector,
    renyi,
    shannon,
    tsallis,
)
from .errors import ValidationError
from .gellmann import OperatorBasis, gellmann_basis, gellmann_matrices, validate_operator_basis
from .mums import (
    MumSet,
    build_f_operators,
    build_mums,
    coincidence_bruteforce,
    coincidence_closed_form,
    kappa_from_t,
    max_t,
    measure,
    mums_from_json,
    mums_to_json,
    validate_mums,
)
from .operators import (
    density_from_json,
    density_matrix,
    density_to_json,
    hermitian,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    hs_inner,
    is_hermitian,
    purity,
    random_density_matrix,
)
from .sic import (
    SicSet,
    depolarized_sic,
    sic_coincidence_closed_form,
    sic_from_json,
    sic_measure,
    sic_to_json,
    tetrahedron_sic,
    validate_sic,
)
from .validation import CheckResult, ValidationReport

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BoundStats",
    "CheckResult",
    "MumSet",
    "OperatorBasis",
    "SicSet",
    "SweepResult",
    "ValidationError",
    "ValidationReport",
    "VIOLATION_GAP",
    "alpha_log",
    "bound_table",
    "build_f_operators",
    "build_mums",
    "coincidence_bruteforce",
    "coincidence_closed_form",
    "density_from_json",
    "density_matrix",
    "density_to_json",
    "depolarized_sic",
    "evaluate_states",
    "flag_violations",
    "gellmann_basis",
    "gellmann_matrices",
    "hermitian",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "hs_inner",
    "ht_bound_state_independent",
    "ht_bound_total",
    "index_of_coincidence",
    "is_hermitian",
    "kappa_from_t",
    "max_prob_bound",
    "max_t",
    "measure",
    "min_entropy",
    "min_entropy_bound",
    "mums_from_json",
    "mums_to_json",
    "prob_vector",
    "purity",
    "random_density_matrix",
    "renyi",
    "renyi_bound",
    "reports_from_csv",
    "reports_to_csv",
    "sample_states",
    "shannon",
    "shannon_bound",
    "sic_coincidence_closed_form",
    "sic_from_json",
    "sic_ht_bound",
    "sic_measure",
    "sic_to_json",
    "sweep_to_json",
    "tetrahedron_sic",
    "tsallis",
    "tsallis_bound",
    "validate_mums",
    "validate_operator_basis",
    "validate_sic",
    "verify_bounds",
    "__version__",
]
