"""Uncertainty functionals and uncertainty-relation checks for finite-dimensional quantum states."""

from .errors import (
    AlphaOutOfRange,
    BadSpec,
    DimensionMismatch,
    MalformedDocument,
    NegativeSpectrum,
    NoConvergence,
    NotHermitian,
    SkewrelError,
    TraceNotOne,
    ValidationError,
)
from .linalg import (
    SpectralDecomposition,
    anticommutator,
    commutator,
    frobenius_distance,
    hermitian_eig,
    matrix_power,
)
from .quantities import (
    CenteredObservable,
    DensityMatrix,
    Observable,
    SpectralSums,
    UncertaintyReport,
    center,
    commutator_average,
    correlation,
    covariance,
    expectation,
    full_report,
    j_quantity,
    matrix_elements,
    spectral_j_diagonal_term,
    spectral_j_lower_bound,
    spectral_skew_information,
    spectral_sums,
    u_quantity,
    variance,
    wy_skew_information,
    wyd_skew_information,
)
from .relations import (
    InequalityVerdict,
    ProofChainTrace,
    check_heisenberg,
    check_luo,
    check_schrodinger,
    check_schrodinger_wy,
    eval_false_cov_variant,
    eval_lhs_difference,
    eval_re_ordering,
    proof_chain,
    verdict_from_report,
    verdicts_from_report,
)
from .ensembles import EnsembleSpec, random_density, random_observable
from .search import SearchTask, Witness, refine_witness, run_search

__version__ = "0.1.0"

__all__ = [
    "AlphaOutOfRange",
    "BadSpec",
    "CenteredObservable",
    "DensityMatrix",
    "DimensionMismatch",
    "EnsembleSpec",
    "InequalityVerdict",
    "MalformedDocument",
    "NegativeSpectrum",
    "NoConvergence",
    "NotHermitian",
    "Observable",
    "ProofChainTrace",
    "SearchTask",
    "SkewrelError",
    "SpectralDecomposition",
    "SpectralSums",
    "TraceNotOne",
    "UncertaintyReport",
    "ValidationError",
    "Witness",
    "anticommutator",
    "center",
    "commutator_average",
    "check_heisenberg",
    "check_luo",
    "check_schrodinger",
    "check_schrodinger_wy",
    "commutator",
    "correlation",
    "covariance",
    "eval_false_cov_variant",
    "eval_lhs_difference",
    "eval_re_ordering",
    "expectation",
    "frobenius_distance",
    "full_report",
    "hermitian_eig",
    "j_quantity",
    "matrix_elements",
    "matrix_power",
    "proof_chain",
    "random_density",
    "random_observable",
    "refine_witness",
    "run_search",
    "spectral_j_diagonal_term",
    "spectral_j_lower_bound",
    "spectral_skew_information",
    "spectral_sums",
    "u_quantity",
    "variance",
    "verdict_from_report",
    "verdicts_from_report",
    "wy_skew_information",
    "wyd_skew_information",
]
