"""Weak values encoded on entangled probes.

Simulates pre/post-selected ancillas weakly coupled to one subsystem of an
entangled bipartite probe, predicts the probe's entanglement-entropy change
at first order in the coupling, validates the prediction against exact
unitary evolution, and searches ancilla ingredient spaces for working
entanglement-concentration protocols.
"""

from .concentrate import (
    ConcentrationReport,
    concentration_report,
    entropy_ratio_exact,
    entropy_ratio_first_order,
    omega_state,
    procrustean_coefficients,
    witness_gap,
)
from .core import (
    DensityMatrix,
    HermitianObservable,
    SchmidtForm,
    StateVector,
    computational_schmidt_form,
    expectation,
    hermitian_log_weighted,
    hermitian_phase_exponential,
    partial_trace,
    schmidt_decompose,
    trace_distance,
    von_neumann_entropy,
)
from .errors import (
    ConfigError,
    DegenerateProbe,
    DimensionMismatch,
    InvariantViolation,
    NotNormalized,
    ObservableNotSchmidtDiagonal,
    PostSelectionImpossible,
    PostSelectionOrthogonal,
    WeakProbeError,
)
from .measurement import (
    AncillaSelection,
    ApproximationError,
    EvolutionResult,
    WeakMeasurementSetup,
    approximation_error,
    exact_evolve_postselect,
    kappa_spectrum_from_matrix,
    weak_limit_state,
    weak_value,
)
from .search import (
    CandidateResult,
    CandidateSpace,
    Ingredients,
    SearchConfig,
    bloch_state,
    evaluate_candidate,
    grid_search,
    haar_state,
    pareto_filter,
    random_search,
)

__all__ = [
    "AncillaSelection",
    "ApproximationError",
    "CandidateResult",
    "CandidateSpace",
    "ConcentrationReport",
    "ConfigError",
    "DegenerateProbe",
    "DensityMatrix",
    "DimensionMismatch",
    "EvolutionResult",
    "HermitianObservable",
    "Ingredients",
    "InvariantViolation",
    "NotNormalized",
    "ObservableNotSchmidtDiagonal",
    "PostSelectionImpossible",
    "PostSelectionOrthogonal",
    "SchmidtForm",
    "SearchConfig",
    "StateVector",
    "WeakMeasurementSetup",
    "WeakProbeError",
    "approximation_error",
    "bloch_state",
    "computational_schmidt_form",
    "concentration_report",
    "entropy_ratio_exact",
    "entropy_ratio_first_order",
    "evaluate_candidate",
    "exact_evolve_postselect",
    "expectation",
    "grid_search",
    "haar_state",
    "hermitian_log_weighted",
    "hermitian_phase_exponential",
    "kappa_spectrum_from_matrix",
    "omega_state",
    "pareto_filter",
    "partial_trace",
    "procrustean_coefficients",
    "random_search",
    "schmidt_decompose",
    "trace_distance",
    "von_neumann_entropy",
    "weak_limit_state",
    "weak_value",
    "witness_gap",
]

__version__ = "0.1.0"
