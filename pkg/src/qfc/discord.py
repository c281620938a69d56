"""Reference correlation measures: entropic and geometric quantum discord.

Both are defined through rank-1 von Neumann measurements on party a and are
used to cross-validate the QFI-based quantifiers. Entropies use the natural
logarithm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionGuardError
from .linalg import dag
from .optimize import OptimizerConfig, OptimizerReport, optimize_basis, unitary_from_params
from .states import PURITY_TOL, BipartiteState, state_vector
from .correlations import validate_measurement

ENTROPY_CUTOFF = 1e-15
#: Entropic discord optimizes over a full basis of party a; cost grows
#: steeply with dim_a, so larger parties are refused.
MAX_DIM_A = 4


@dataclass(frozen=True)
class DiscordResult:
    """A discord value with the measurement that attains it."""

    value: float
    argopt: np.ndarray
    method: str  # "closed-form" or "optimized"
    report: OptimizerReport | None = None


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy ``-sum_i p_i ln p_i`` of a density matrix (0 ln 0 = 0)."""
    vals = np.linalg.eigvalsh((np.asarray(rho, dtype=complex) + dag(rho)) / 2)
    vals = vals[vals > ENTROPY_CUTOFF]
    return float(-np.sum(vals * np.log(vals)))


def mutual_information(state: BipartiteState) -> float:
    """``S(rho_a) + S(rho_b) - S(rho)`` in nats."""
    return (
        von_neumann_entropy(state.marginal("a"))
        + von_neumann_entropy(state.marginal("b"))
        - von_neumann_entropy(state.rho)
    )


def _measured_blocks(state: BipartiteState, u: np.ndarray) -> np.ndarray:
    m, n = state.dims
    r4 = state.rho.reshape(m, n, m, n)
    return np.einsum("an,aibj,bn->nij", u.conj(), r4, u)


def _measured_rho(state: BipartiteState, u: np.ndarray) -> np.ndarray:
    blocks = _measured_blocks(state, u)
    d = state.dim
    return np.einsum("an,nij,bn->aibj", u, blocks, u.conj()).reshape(d, d)


def measured_state(state: BipartiteState, measurement: np.ndarray) -> BipartiteState:
    """Dephased state ``sum_n (P_n (x) 1) rho (P_n (x) 1)`` after measuring a."""
    u = validate_measurement(measurement, state.dim_a)
    return BipartiteState(_measured_rho(state, u), state.dim_a, state.dim_b)


def entropic_discord(
    state: BipartiteState, config: OptimizerConfig | None = None
) -> DiscordResult:
    """Minimal loss of mutual information under measurement on party a.

    ``min over measurements of I(rho) - I(measured rho)``, restricted to
    rank-1 projective measurements. Zero exactly on CQ/CC states; equals the
    entanglement entropy on pure states.
    """
    if state.dim_a > MAX_DIM_A:
        raise DimensionGuardError(
            f"entropic discord supports dim_a <= {MAX_DIM_A}, got {state.dim_a}"
        )
    base = mutual_information(state)

    def measured_information(u: np.ndarray) -> float:
        rho = _measured_rho(state, u)
        measured = BipartiteState(rho, state.dim_a, state.dim_b)
        return mutual_information(measured)

    report = optimize_basis(measured_information, state.dim_a, "max", config)
    return DiscordResult(
        value=base - report.best_value,
        argopt=unitary_from_params(report.best_params, state.dim_a),
        method="optimized",
        report=report,
    )


def geometric_discord(
    state: BipartiteState,
    config: OptimizerConfig | None = None,
    method: str = "auto",
) -> DiscordResult:
    """Minimal squared Hilbert-Schmidt distance to a state measured on party a.

    For pure inputs the closed form ``1 - sum_i s_i^2`` applies, attained by
    measuring in the Schmidt basis; pass ``method="optimized"`` to force the
    numerical search instead (used for cross-validation).
    """
    if method not in ("auto", "optimized"):
        raise ValueError(f"method must be 'auto' or 'optimized', got {method!r}")
    if method == "auto" and state.purity() >= 1.0 - PURITY_TOL:
        sd = linalg.schmidt(state_vector(state), state.dims)
        value = float(1.0 - np.sum(sd.coefficients**2))
        argopt = linalg.complete_basis(sd.a_vectors, state.dim_a)
        return DiscordResult(value=value, argopt=argopt, method="closed-form")

    def distance(u: np.ndarray) -> float:
        diff = state.rho - _measured_rho(state, u)
        return float(np.real(np.sum(diff * diff.conj())))

    report = optimize_basis(distance, state.dim_a, "min", config)
    return DiscordResult(
        value=report.best_value,
        argopt=unitary_from_params(report.best_params, state.dim_a),
        method="optimized",
        report=report,
    )
