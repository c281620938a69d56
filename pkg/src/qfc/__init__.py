"""Quantum Fisher information and QFI-based correlation quantifiers.

A small numpy library for finite-dimensional bipartite states: QFI of
unitary families, symmetric logarithmic derivatives, measurement-induced
Fisher information, two QFI-based quantum-correlation quantifiers with
their optimizer, and entropic/geometric discord baselines.
"""

from .correlations import (
    ConditionalEnsemble,
    QuantifierResult,
    basis_qfi_sum,
    conditional_states,
    lift_a,
    lift_b,
    measurement_correlation,
    measurement_projectors,
    mfi,
    observable_basis,
    observable_correlation,
    pure_local_qfi_b,
    pure_mfi_b,
    pure_state_correlation,
    total_local_qfi_b,
    total_mfi,
    validate_measurement,
)
from .discord import (
    DiscordResult,
    entropic_discord,
    geometric_discord,
    measured_state,
    mutual_information,
    von_neumann_entropy,
)
from .errors import (
    DegeneratePointError,
    DimensionGuardError,
    HermiticityError,
    NormalizationError,
    OptimizationError,
    OrthonormalityError,
    PositivityError,
    PurityError,
    ShapeError,
    TraceError,
    ValidationError,
)
from .fisher import classical_fi, evolve, qfi, qfi_weight_matrix, sld, validate_povm, variance
from .linalg import (
    SchmidtDecomposition,
    Spectrum,
    complete_basis,
    dag,
    eigh,
    hermitian_basis,
    kron,
    partial_trace,
    schmidt,
)
from .optimize import (
    OptimizerConfig,
    OptimizerReport,
    nelder_mead,
    optimize_basis,
    unitary_from_params,
)
from .states import (
    BipartiteState,
    KrausChannel,
    apply_channel_b,
    bipartite,
    haar_unitary,
    make_cc,
    make_cq,
    make_witness_state,
    max_entangled,
    pure_from_schmidt,
    pure_state,
    random_density,
    random_hermitian,
    random_kraus_channel,
    random_pure,
    state_vector,
    validate_density,
    werner,
)

__version__ = "0.1.0"
