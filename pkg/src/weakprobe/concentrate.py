"""Entropy-change machinery: the omega state, witness gap, first-order and
exact entanglement-entropy ratios, the Procrustean coefficient map, and the
concentration verdict.

The first-order prediction is
    S_f / S_i = (1 + 2 phi Im(O_w) Tr(K omega)) / (1 + 2 phi Im(O_w) Tr(K sigma_i))
with omega = sigma_i ln(sigma_i) / Tr(sigma_i ln(sigma_i)).  Entanglement
grows exactly when Im(O_w) * Tr(K (omega - sigma_i)) > 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DensityMatrix,
    hermitian_log_weighted,
    partial_trace,
    von_neumann_entropy,
)
from .errors import DegenerateProbe, DimensionMismatch
from .measurement import WeakMeasurementSetup, exact_evolve_postselect, weak_value

# below this entropy the probe counts as separable and omega is undefined
EPS_ENTROPY = 1e-9
# verdict threshold on the first-order gain
EPS_GAIN = 1e-12


@dataclass(frozen=True)
class ConcentrationReport:
    weak_value: complex
    witness_gap: float
    first_order_gain: float
    ratio_first_order: float
    ratio_exact: float
    success_probability_exact: float
    verdict: str  # "concentrated" | "diluted" | "unchanged"


def omega_state(sigma: DensityMatrix) -> DensityMatrix:
    """omega = sigma ln(sigma) / Tr(sigma ln(sigma)).

    Positive semidefinite because numerator and denominator are both
    negative; raises DegenerateProbe when sigma is (numerically) pure.
    """
    weighted = hermitian_log_weighted(sigma)
    tr = float(np.trace(weighted).real)
    if -tr < EPS_ENTROPY:
        raise DegenerateProbe(f"entropy {-tr:.3e} below {EPS_ENTROPY}; omega undefined")
    return DensityMatrix(weighted / tr)


def witness_gap(kappa_spectrum, sigma: DensityMatrix) -> float:
    """Tr(K (omega - sigma)) from Schmidt-basis diagonals.

    ``sigma`` must be expressed in the Schmidt basis so that the spectrum
    pairs with its diagonal entries.
    """
    lam = np.asarray(kappa_spectrum, dtype=float)
    if lam.size != sigma.dim:
        raise DimensionMismatch(f"spectrum length {lam.size} vs sigma dim {sigma.dim}")
    omega = omega_state(sigma)
    diag_gap = np.diag(omega.matrix).real - np.diag(sigma.matrix).real
    return float(np.sum(lam * diag_gap))


def _schmidt_diagonals(setup: WeakMeasurementSetup) -> tuple[float, float, float]:
    """(entropy, Tr(K sigma_i), Tr(K omega)) by scalar arithmetic on the
    Schmidt-basis diagonals; raises DegenerateProbe for a separable probe."""
    p = setup.probe.coefficients ** 2
    lam = np.asarray(setup.kappa_spectrum)
    mask = p > 1e-15
    plnp = np.zeros_like(p)
    plnp[mask] = p[mask] * np.log(p[mask])
    entropy = float(-np.sum(plnp))
    if entropy < EPS_ENTROPY:
        raise DegenerateProbe(f"probe entropy {entropy:.3e} below {EPS_ENTROPY}")
    tr_k_sigma = float(np.sum(lam * p))
    tr_k_omega = float(np.sum(lam * plnp) / np.sum(plnp))
    return entropy, tr_k_sigma, tr_k_omega


def entropy_ratio_first_order(setup: WeakMeasurementSetup) -> float:
    """First-order prediction for S_f / S_i, evaluated exactly as stated
    (no further truncation)."""
    o_w = weak_value(setup.ancilla)
    _, tr_k_sigma, tr_k_omega = _schmidt_diagonals(setup)
    two_phi_im = 2.0 * setup.phi * o_w.imag
    return (1.0 + two_phi_im * tr_k_omega) / (1.0 + two_phi_im * tr_k_sigma)


def entropy_ratio_exact(setup: WeakMeasurementSetup) -> float:
    """S_f / S_i with S_f computed from the exact post-selected evolution."""
    entropy_i = von_neumann_entropy(partial_trace(setup.probe, "A"))
    if entropy_i < EPS_ENTROPY:
        raise DegenerateProbe(f"probe entropy {entropy_i:.3e} below {EPS_ENTROPY}")
    result = exact_evolve_postselect(setup)
    entropy_f = von_neumann_entropy(partial_trace(result.final_probe, "A"))
    return entropy_f / entropy_i


def procrustean_coefficients(setup: WeakMeasurementSetup) -> np.ndarray:
    """Output Schmidt coefficients of the weak-limit filtering map,
    t_k = s_k |1 - i phi O_w lambda_k| / norm, in the probe's basis order
    (the basis itself is untouched)."""
    o_w = weak_value(setup.ancilla)
    s = setup.probe.coefficients
    lam = np.asarray(setup.kappa_spectrum)
    factors = np.abs(1.0 - 1j * setup.phi * o_w * lam)
    t = s * factors
    return t / np.sqrt(np.sum(t**2))


def concentration_report(setup: WeakMeasurementSetup) -> ConcentrationReport:
    """Aggregate weak value, witness gap, both entropy ratios, exact success
    probability, and the sign-rule verdict."""
    o_w = weak_value(setup.ancilla)
    sigma = DensityMatrix(np.diag(setup.probe.coefficients ** 2).astype(complex))
    gap = witness_gap(setup.kappa_spectrum, sigma)
    gain = o_w.imag * gap
    ratio_fo = entropy_ratio_first_order(setup)
    exact = exact_evolve_postselect(setup)
    entropy_i = von_neumann_entropy(sigma)
    entropy_f = von_neumann_entropy(partial_trace(exact.final_probe, "A"))
    if gain > EPS_GAIN:
        verdict = "concentrated"
    elif gain < -EPS_GAIN:
        verdict = "diluted"
    else:
        verdict = "unchanged"
    return ConcentrationReport(
        weak_value=o_w,
        witness_gap=gap,
        first_order_gain=gain,
        ratio_first_order=ratio_fo,
        ratio_exact=entropy_f / entropy_i,
        success_probability_exact=exact.success_probability,
        verdict=verdict,
    )
