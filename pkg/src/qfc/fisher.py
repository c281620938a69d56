"""Quantum Fisher information of unitary families and related quantities.

Conventions: for a state rho driven as ``rho_theta = exp(-i theta H) rho
exp(i theta H)`` the QFI carries the 1/4 normalization under which the QFI
of a pure state equals the plain variance of H. The symmetric logarithmic
derivative L is the Hermitian solution of ``i[rho, H] = (L rho + rho L)/2``
on the support of rho, and QFI = (1/4) tr(rho L^2).
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import DegeneratePointError, PositivityError, ShapeError, ValidationError
from .linalg import SUPPORT_CUTOFF, dag

#: Outcome probabilities below this floor are treated as vanishing.
PROBABILITY_FLOOR = 1e-12
#: Probability derivatives below this threshold are treated as stationary.
DERIVATIVE_FLOOR = 1e-8
DEFAULT_FD_STEP = 1e-4


def _check_same_dim(rho: np.ndarray, h: np.ndarray) -> None:
    if rho.shape != h.shape:
        raise ShapeError(f"state shape {rho.shape} does not match observable {h.shape}")


def validate_povm(elements, dim: int | None = None) -> list[np.ndarray]:
    """Validate a POVM: Hermitian positive elements resolving the identity."""
    mats = [linalg.require_hermitian(e, "POVM element") for e in elements]
    if not mats:
        raise ShapeError("POVM needs at least one element")
    d = mats[0].shape[0] if dim is None else dim
    if any(e.shape != (d, d) for e in mats):
        raise ShapeError("POVM elements must share the state dimension")
    for e in mats:
        lowest = float(np.linalg.eigvalsh((e + dag(e)) / 2)[0])
        if lowest < -1e-10:
            raise PositivityError(f"POVM element has eigenvalue {lowest:.3e} < 0")
    defect = np.linalg.norm(sum(mats) - np.eye(d))
    if defect > 1e-10:
        raise ValidationError(f"POVM does not resolve the identity: defect {defect:.3e}")
    return mats


def evolve(rho: np.ndarray, h: np.ndarray, theta: float) -> np.ndarray:
    """Unitary orbit ``exp(-i theta H) rho exp(i theta H)``."""
    rho = np.asarray(rho, dtype=complex)
    h = linalg.require_hermitian(h, "observable")
    _check_same_dim(rho, h)
    vals, vecs = np.linalg.eigh((h + dag(h)) / 2)
    u = (vecs * np.exp(-1j * theta * vals)) @ dag(vecs)
    return u @ rho @ dag(u)


def qfi_weight_matrix(values: np.ndarray) -> np.ndarray:
    """Spectral weights ``(p_i - p_j)^2 / (2 (p_i + p_j))`` with support cutoff.

    Pairs whose eigenvalue sum falls below the cutoff are excluded (weight 0).
    """
    p = np.asarray(values, dtype=float)
    sums = p[:, None] + p[None, :]
    diffs = p[:, None] - p[None, :]
    w = np.zeros_like(sums)
    mask = sums > SUPPORT_CUTOFF
    w[mask] = diffs[mask] ** 2 / (2.0 * sums[mask])
    return w


def qfi(rho: np.ndarray, h: np.ndarray) -> float:
    """Quantum Fisher information of the unitary family generated by ``h``.

    Evaluated spectrally: ``sum_ij (p_i - p_j)^2 / (2(p_i + p_j))
    |<psi_i|H|psi_j>|^2`` over eigenpairs inside the support.
    """
    h = linalg.require_hermitian(h, "observable")
    rho = np.asarray(rho, dtype=complex)
    _check_same_dim(rho, h)
    spectrum = linalg.eigh(rho, "state")
    elems = dag(spectrum.vectors) @ h @ spectrum.vectors
    w = qfi_weight_matrix(spectrum.values)
    return float(np.sum(w * (elems.real**2 + elems.imag**2)))


def variance(rho: np.ndarray, h: np.ndarray) -> float:
    """Variance ``tr(rho H^2) - (tr rho H)^2`` of an observable."""
    h = linalg.require_hermitian(h, "observable")
    rho = np.asarray(rho, dtype=complex)
    _check_same_dim(rho, h)
    first = float(np.real(np.trace(rho @ h)))
    second = float(np.real(np.trace(rho @ h @ h)))
    return second - first**2


def sld(rho: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Symmetric logarithmic derivative of the unitary family generated by ``h``.

    Built in the eigenbasis of rho with elements ``2 <psi_x| i[rho, H]
    |psi_y> / (p_x + p_y)``; eigenvalue pairs outside the support contribute
    zero.
    """
    h = linalg.require_hermitian(h, "observable")
    rho = np.asarray(rho, dtype=complex)
    _check_same_dim(rho, h)
    spectrum = linalg.eigh(rho, "state")
    p = spectrum.values
    elems = dag(spectrum.vectors) @ h @ spectrum.vectors
    # <psi_x| i[rho,H] |psi_y> = i (p_x - p_y) <psi_x|H|psi_y>
    drho = 1j * (p[:, None] - p[None, :]) * elems
    sums = p[:, None] + p[None, :]
    core = np.zeros_like(drho)
    mask = sums > SUPPORT_CUTOFF
    core[mask] = 2.0 * drho[mask] / sums[mask]
    l = spectrum.vectors @ core @ dag(spectrum.vectors)
    return (l + dag(l)) / 2


def classical_fi(
    rho: np.ndarray,
    h: np.ndarray,
    povm,
    theta: float = 0.0,
    step: float = DEFAULT_FD_STEP,
) -> float:
    """Classical Fisher information of a POVM on the unitary orbit of ``rho``.

    ``(1/4) sum_x (d p_x / d theta)^2 / p_x`` with the derivative taken by
    central finite differences. Outcomes with probability below the floor
    contribute zero when their derivative also vanishes; a near-zero
    probability with a non-vanishing derivative is an undefined 0/0 point
    and raises, suggesting evaluation at an offset theta.
    """
    if step <= 0:
        raise ValueError(f"finite-difference step must be positive, got {step}")
    mats = validate_povm(povm, np.asarray(rho).shape[0])
    r0 = evolve(rho, h, theta)
    rp = evolve(rho, h, theta + step)
    rm = evolve(rho, h, theta - step)
    total = 0.0
    for x, m in enumerate(mats):
        p0 = float(np.real(np.trace(m @ r0)))
        dp = float(np.real(np.trace(m @ rp) - np.trace(m @ rm))) / (2.0 * step)
        if p0 < PROBABILITY_FLOOR:
            if abs(dp) < DERIVATIVE_FLOOR:
                continue
            raise DegeneratePointError(
                f"outcome {x} has probability {p0:.3e} with derivative {dp:.3e}; "
                "evaluate at an offset theta"
            )
        total += dp**2 / p0
    return 0.25 * total
