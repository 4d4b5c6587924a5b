"""Dense linear-algebra foundation: pure states, Hermitian operators,
density matrices, Schmidt decomposition, entropy, and Hermitian matrix
functions.

Everything is a plain function over small immutable values; target
dimensions are <= 64, so dense numpy throughout and no sparsity.
All entropies are in nats.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, InvariantViolation, NotNormalized

ATOL = 1e-10
# eigenvalues below this contribute nothing to rho ln rho
EIG_FLOOR = 1e-12
# density-matrix eigenvalues in [-NEG_EIG_TOL, 0) clip to 0; more negative is an error
NEG_EIG_TOL = 1e-10
# singular values below this are dropped from a Schmidt decomposition
SCHMIDT_CUTOFF = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.array(a)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state, amplitudes in a fixed computational basis."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _readonly(np.asarray(self.amplitudes, dtype=complex).reshape(-1))
        if amps.size == 0:
            raise InvariantViolation("state vector must have positive dimension")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > ATOL:
            raise NotNormalized(f"state norm^2 = {norm_sq!r}, expected 1 within {ATOL}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def overlap(self, other: "StateVector") -> complex:
        """Inner product <self|other>."""
        if self.dim != other.dim:
            raise DimensionMismatch(f"dims {self.dim} and {other.dim}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True, eq=False)
class HermitianObservable:
    """d x d complex Hermitian matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _readonly(np.asarray(self.matrix, dtype=complex))
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvariantViolation(f"observable must be square, got shape {m.shape}")
        dev = float(np.max(np.abs(m - m.conj().T)))
        if dev > ATOL:
            raise InvariantViolation(f"matrix not Hermitian (max deviation {dev:.3e})")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _readonly(np.asarray(self.matrix, dtype=complex))
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvariantViolation(f"density matrix must be square, got shape {m.shape}")
        dev = float(np.max(np.abs(m - m.conj().T)))
        if dev > ATOL:
            raise InvariantViolation(f"density matrix not Hermitian (max deviation {dev:.3e})")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > ATOL:
            raise InvariantViolation(f"trace = {tr!r}, expected 1 within {ATOL}")
        lo = float(np.min(np.linalg.eigvalsh(m)))
        if lo < -NEG_EIG_TOL:
            raise InvariantViolation(f"negative eigenvalue {lo:.3e} below -{NEG_EIG_TOL}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class SchmidtForm:
    """Bipartite pure state sum_k s_k |a_k>|b_k> with s_k >= 0 descending
    and orthonormal basis vectors on each side."""

    coefficients: np.ndarray
    basis_a: tuple[StateVector, ...] = field(repr=False)
    basis_b: tuple[StateVector, ...] = field(repr=False)

    def __post_init__(self):
        s = _readonly(np.asarray(self.coefficients, dtype=float).reshape(-1))
        if s.size == 0:
            raise InvariantViolation("Schmidt form must have rank >= 1")
        if np.any(s < 0):
            raise InvariantViolation("Schmidt coefficients must be nonnegative")
        if np.any(np.diff(s) > 0):
            raise InvariantViolation("Schmidt coefficients must be sorted descending")
        total = float(np.sum(s**2))
        if abs(total - 1.0) > ATOL:
            raise NotNormalized(f"sum of squared coefficients = {total!r}")
        basis_a = tuple(self.basis_a)
        basis_b = tuple(self.basis_b)
        if len(basis_a) != s.size or len(basis_b) != s.size:
            raise DimensionMismatch("one basis vector per coefficient on each side")
        for name, basis in (("A", basis_a), ("B", basis_b)):
            vecs = np.array([v.amplitudes for v in basis])
            gram = vecs.conj() @ vecs.T
            if float(np.max(np.abs(gram - np.eye(s.size)))) > ATOL:
                raise InvariantViolation(f"basis {name} is not orthonormal")
        object.__setattr__(self, "coefficients", s)
        object.__setattr__(self, "basis_a", basis_a)
        object.__setattr__(self, "basis_b", basis_b)

    @property
    def rank(self) -> int:
        return self.coefficients.size

    @property
    def dim_a(self) -> int:
        return self.basis_a[0].dim

    @property
    def dim_b(self) -> int:
        return self.basis_b[0].dim

    def state_matrix(self) -> np.ndarray:
        """Recompose the dA x dB coefficient matrix sum_k s_k a_k b_k^T."""
        out = np.zeros((self.dim_a, self.dim_b), dtype=complex)
        for s, a, b in zip(self.coefficients, self.basis_a, self.basis_b):
            out += s * np.outer(a.amplitudes, b.amplitudes)
        return out


def computational_schmidt_form(coefficients) -> SchmidtForm:
    """Schmidt form whose bases are the computational bases of dimension
    len(coefficients) on both sides."""
    s = np.asarray(coefficients, dtype=float).reshape(-1)
    eye = np.eye(s.size, dtype=complex)
    basis = tuple(StateVector(eye[k]) for k in range(s.size))
    return SchmidtForm(s, basis, basis)


def _fix_pair_phase(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # rotate so the largest-magnitude component of the A-side vector is
    # real positive; counter-rotate b so the pair product is unchanged
    j = int(np.argmax(np.abs(a)))
    mag = abs(a[j])
    if mag == 0.0:
        return a, b
    phase = a[j] / mag
    return a * np.conj(phase), b * phase


def schmidt_decompose(coefficient_matrix: np.ndarray) -> SchmidtForm:
    """Schmidt-decompose a bipartite pure state given as its dA x dB
    coefficient matrix (unit Frobenius norm required).

    Coefficients are the singular values, descending, with values below
    SCHMIDT_CUTOFF dropped. Each retained pair is phase-fixed so that the
    largest-magnitude component of the A-side vector is real positive;
    within degenerate blocks the pairs keep the order the SVD produced.
    """
    m = np.asarray(coefficient_matrix, dtype=complex)
    if m.ndim != 2:
        raise InvariantViolation(f"coefficient matrix must be 2-D, got shape {m.shape}")
    norm = float(np.linalg.norm(m))
    if abs(norm - 1.0) > ATOL:
        raise NotNormalized(f"coefficient matrix Frobenius norm = {norm!r}")
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    keep = s > SCHMIDT_CUTOFF
    s = s[keep]
    basis_a = []
    basis_b = []
    for k in range(s.size):
        a, b = _fix_pair_phase(u[:, k], vh[k, :])
        basis_a.append(StateVector(a))
        basis_b.append(StateVector(b))
    # renormalize away the dropped tail so the invariant holds exactly
    return SchmidtForm(s / np.sqrt(np.sum(s**2)), tuple(basis_a), tuple(basis_b))


def partial_trace(state, subsystem: str) -> DensityMatrix:
    """Reduced density matrix of one subsystem of a bipartite pure state.

    ``state`` is either a dA x dB coefficient matrix or a SchmidtForm;
    ``subsystem`` names the side that is kept ("A" or "B").
    """
    if subsystem not in ("A", "B"):
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    if isinstance(state, SchmidtForm):
        basis = state.basis_a if subsystem == "A" else state.basis_b
        dim = basis[0].dim
        rho = np.zeros((dim, dim), dtype=complex)
        for s, v in zip(state.coefficients, basis):
            rho += s**2 * np.outer(v.amplitudes, v.amplitudes.conj())
        return DensityMatrix(rho)
    m = np.asarray(state, dtype=complex)
    if m.ndim != 2:
        raise InvariantViolation(f"coefficient matrix must be 2-D, got shape {m.shape}")
    if abs(float(np.linalg.norm(m)) - 1.0) > ATOL:
        raise NotNormalized("coefficient matrix must have unit Frobenius norm")
    if subsystem == "A":
        return DensityMatrix(m @ m.conj().T)
    return DensityMatrix(m.T @ m.conj())


def _clipped_spectrum(rho: DensityMatrix) -> tuple[np.ndarray, np.ndarray]:
    w, v = np.linalg.eigh(rho.matrix)
    return np.clip(w, 0.0, None), v


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """-Tr(rho ln rho) in nats, with 0 ln 0 == 0."""
    w, _ = _clipped_spectrum(rho)
    w = w[w > EIG_FLOOR]
    return float(-np.sum(w * np.log(w)))


def hermitian_log_weighted(rho: DensityMatrix) -> np.ndarray:
    """rho ln rho via eigendecomposition; eigenvalues below EIG_FLOOR
    contribute zero."""
    w, v = _clipped_spectrum(rho)
    wlnw = np.where(w > EIG_FLOOR, w * np.log(np.where(w > EIG_FLOOR, w, 1.0)), 0.0)
    return (v * wlnw) @ v.conj().T


def hermitian_phase_exponential(observable: HermitianObservable, theta: float) -> np.ndarray:
    """Unitary exp(-i theta A) for Hermitian A, via eigendecomposition."""
    w, v = np.linalg.eigh(observable.matrix)
    return (v * np.exp(-1j * theta * w)) @ v.conj().T


def expectation(observable: HermitianObservable, rho: DensityMatrix) -> float:
    """Tr(A rho); the imaginary residue must be <= ATOL and is discarded."""
    if observable.dim != rho.dim:
        raise DimensionMismatch(f"dims {observable.dim} and {rho.dim}")
    val = complex(np.trace(observable.matrix @ rho.matrix))
    if abs(val.imag) > ATOL:
        raise InvariantViolation(f"expectation has imaginary residue {val.imag:.3e}")
    return float(val.real)


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """(1/2) ||rho - sigma||_1 via the eigenvalues of the difference."""
    if rho.dim != sigma.dim:
        raise DimensionMismatch(f"dims {rho.dim} and {sigma.dim}")
    w = np.linalg.eigvalsh(rho.matrix - sigma.matrix)
    return float(0.5 * np.sum(np.abs(w)))
