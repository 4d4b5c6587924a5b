"""Weak values and post-selected evolution of an entangled probe.

An ancilla is prepared in |i>, coupled to one probe subsystem through
exp(-i phi K x O), and post-selected in |f>. The probe observable K is
diagonal in the probe's Schmidt basis, so the exact evolution factorizes:
branch k of the probe evolves the ancilla by exp(-i phi lambda_k O).
The weak-limit path instead applies (I - i phi O_w K) and renormalizes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .core import (
    ATOL,
    HermitianObservable,
    SchmidtForm,
    StateVector,
    hermitian_phase_exponential,
    partial_trace,
    trace_distance,
)
from .errors import (
    DimensionMismatch,
    InvariantViolation,
    ObservableNotSchmidtDiagonal,
    PostSelectionImpossible,
    PostSelectionOrthogonal,
)

DEFAULT_EPS_OVERLAP = 1e-10
# total post-selected weight below this means the conditioning never succeeds
EPS_SUCCESS = 1e-20


def overlap_epsilon() -> float:
    """Orthogonality threshold for |<f|i>|; WEAKPROBE_EPS_OVERLAP overrides
    the default (testing only)."""
    raw = os.environ.get("WEAKPROBE_EPS_OVERLAP")
    return DEFAULT_EPS_OVERLAP if raw is None else float(raw)


@dataclass(frozen=True, eq=False)
class AncillaSelection:
    """Pre-selection |i>, post-selection |f>, and observable O on the
    ancilla space."""

    pre: StateVector
    post: StateVector
    observable: HermitianObservable
    overlap: complex = field(init=False)
    orthogonal: bool = field(init=False)

    def __post_init__(self):
        d = self.pre.dim
        if self.post.dim != d or self.observable.dim != d:
            raise DimensionMismatch(
                f"ancilla dims differ: pre {d}, post {self.post.dim}, "
                f"observable {self.observable.dim}"
            )
        ov = self.post.overlap(self.pre)
        object.__setattr__(self, "overlap", ov)
        object.__setattr__(self, "orthogonal", abs(ov) < overlap_epsilon())

    @property
    def dim(self) -> int:
        return self.pre.dim


@dataclass(frozen=True, eq=False)
class WeakMeasurementSetup:
    """One full experiment: entangled probe, K spectrum in the Schmidt
    basis, ancilla selection, and dimensionless coupling phi."""

    probe: SchmidtForm
    kappa_spectrum: tuple[float, ...]
    ancilla: AncillaSelection
    phi: float

    def __post_init__(self):
        spectrum = tuple(float(x) for x in self.kappa_spectrum)
        if len(spectrum) != self.probe.rank:
            raise DimensionMismatch(
                f"kappa_spectrum has {len(spectrum)} entries for probe rank {self.probe.rank}"
            )
        if self.phi < 0:
            raise InvariantViolation(f"phi must be >= 0, got {self.phi}")
        object.__setattr__(self, "kappa_spectrum", spectrum)
        object.__setattr__(self, "phi", float(self.phi))


@dataclass(frozen=True, eq=False)
class EvolutionResult:
    final_probe: SchmidtForm
    success_probability: float
    mode: str  # "exact" | "weak_limit"
    probability_clamped: bool = False

    def __post_init__(self):
        p = float(self.success_probability)
        if not -ATOL <= p <= 1.0 + ATOL:
            raise InvariantViolation(f"success probability {p!r} outside [0, 1]")
        object.__setattr__(self, "success_probability", min(max(p, 0.0), 1.0))


def kappa_spectrum_from_matrix(kappa: HermitianObservable, probe: SchmidtForm) -> tuple[float, ...]:
    """Spectrum of a probe observable given as a full matrix on the coupled
    (B) side. The matrix must commute with every Schmidt projector, i.e.
    each |b_k> must be an eigenvector; otherwise ObservableNotSchmidtDiagonal.
    """
    if kappa.dim != probe.dim_b:
        raise DimensionMismatch(f"observable dim {kappa.dim} vs probe B dim {probe.dim_b}")
    spectrum = []
    for b in probe.basis_b:
        image = kappa.matrix @ b.amplitudes
        lam = complex(np.vdot(b.amplitudes, image))
        if abs(lam.imag) > ATOL:
            raise ObservableNotSchmidtDiagonal(f"complex diagonal value {lam!r}")
        residual = float(np.max(np.abs(image - lam.real * b.amplitudes)))
        if residual > ATOL:
            raise ObservableNotSchmidtDiagonal(
                f"observable does not commute with a Schmidt projector "
                f"(residual {residual:.3e})"
            )
        spectrum.append(lam.real)
    return tuple(spectrum)


def weak_value(sel: AncillaSelection) -> complex:
    """<f|O|i> / <f|i>; raises PostSelectionOrthogonal when the overlap is
    below the orthogonality threshold."""
    if sel.orthogonal:
        raise PostSelectionOrthogonal(
            f"|<f|i>| = {abs(sel.overlap):.3e} below epsilon = {overlap_epsilon():.3e}"
        )
    numer = complex(np.vdot(sel.post.amplitudes, sel.observable.matrix @ sel.pre.amplitudes))
    return numer / sel.overlap


def _assemble_final_probe(branch_amplitudes: np.ndarray, probe: SchmidtForm) -> SchmidtForm:
    """Normalize branch amplitudes into a SchmidtForm: magnitudes become the
    coefficients (re-sorted descending, stably), relative phases move into
    basis B, and the arbitrary global phase is set to zero by making the
    dominant branch amplitude real positive."""
    mags = np.abs(branch_amplitudes)
    lead = branch_amplitudes[int(np.argmax(mags))]
    if abs(lead) > 0:
        branch_amplitudes = branch_amplitudes * (abs(lead) / lead)
    norm = float(np.linalg.norm(mags))
    coeffs = mags / norm
    basis_a = list(probe.basis_a)
    basis_b = []
    for c, b in zip(branch_amplitudes, probe.basis_b):
        phase = c / abs(c) if abs(c) > 0 else 1.0
        basis_b.append(StateVector(b.amplitudes * phase) if phase != 1.0 else b)
    order = np.argsort(-coeffs, kind="stable")
    return SchmidtForm(
        coeffs[order],
        tuple(basis_a[k] for k in order),
        tuple(basis_b[k] for k in order),
    )


def exact_evolve_postselect(setup: WeakMeasurementSetup) -> EvolutionResult:
    """Exact unitary evolution followed by post-selection, with no
    weak-coupling approximation.

    Branch k acquires the amplitude c_k = s_k <f| exp(-i phi lambda_k O) |i>;
    the success probability is sum_k |c_k|^2 and the final probe carries the
    renormalized magnitudes over the original Schmidt bases.
    """
    sel = setup.ancilla
    pre = sel.pre.amplitudes
    post = sel.post.amplitudes
    c = np.empty(setup.probe.rank, dtype=complex)
    for k, (s_k, lam) in enumerate(zip(setup.probe.coefficients, setup.kappa_spectrum)):
        u = hermitian_phase_exponential(sel.observable, setup.phi * lam)
        c[k] = s_k * np.vdot(post, u @ pre)
    total = float(np.sum(np.abs(c) ** 2))
    if total < EPS_SUCCESS:
        raise PostSelectionImpossible(f"total post-selected weight {total:.3e}")
    return EvolutionResult(_assemble_final_probe(c, setup.probe), total, "exact")


def weak_limit_state(setup: WeakMeasurementSetup) -> EvolutionResult:
    """First-order probe state: apply (I - i phi O_w K) branch-wise and
    normalize by the exact norm of the truncated state.

    The reported success probability is the first-order formula
    |<f|i>|^2 (1 + 2 phi Im(O_w) Tr(K sigma_i)), clamped to [0, 1] with
    ``probability_clamped`` set when clamping fires.
    """
    o_w = weak_value(setup.ancilla)
    s = setup.probe.coefficients
    lam = np.asarray(setup.kappa_spectrum)
    branch = s * (1.0 - 1j * setup.phi * o_w * lam)
    tr_k_sigma = float(np.sum(lam * s**2))
    raw = abs(setup.ancilla.overlap) ** 2 * (1.0 + 2.0 * setup.phi * o_w.imag * tr_k_sigma)
    clamped = not 0.0 <= raw <= 1.0
    return EvolutionResult(
        _assemble_final_probe(branch, setup.probe),
        min(max(raw, 0.0), 1.0),
        "weak_limit",
        probability_clamped=clamped,
    )


@dataclass(frozen=True)
class ApproximationError:
    state_distance: float
    prob_gap: float


def approximation_error(setup: WeakMeasurementSetup) -> ApproximationError:
    """Size of the first-order truncation: trace distance between the
    reduced density matrices of the exact and weak-limit results, plus the
    gap between their success probabilities."""
    exact = exact_evolve_postselect(setup)
    weak = weak_limit_state(setup)
    dist = trace_distance(
        partial_trace(exact.final_probe, "A"),
        partial_trace(weak.final_probe, "A"),
    )
    return ApproximationError(dist, abs(exact.success_probability - weak.success_probability))
