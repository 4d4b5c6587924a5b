"""Shared random generators and independent oracles for the test suite.

The full-tensor oracle exponentiates the whole coupling Hamiltonian on the
(probe B x ancilla) space with scipy's Pade expm, so it shares no code path
with the branch-factorized evolution it checks.
"""

import numpy as np
import scipy.linalg

import weakprobe as wp


def random_state_matrix(rng, dim_a, dim_b):
    m = rng.standard_normal((dim_a, dim_b)) + 1j * rng.standard_normal((dim_a, dim_b))
    return m / np.linalg.norm(m)


def random_probe(rng, dim_a, dim_b=None):
    dim_b = dim_a if dim_b is None else dim_b
    return wp.schmidt_decompose(random_state_matrix(rng, dim_a, dim_b))


def random_hermitian(rng, dim, unit_spectral_radius=True):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    h = (g + g.conj().T) / 2
    if unit_spectral_radius:
        h = h / max(1.0, np.linalg.norm(h, 2))
    return wp.HermitianObservable(h)


def random_setup(rng, probe_dim=2, ancilla_dim=2, phi=1e-2):
    probe = random_probe(rng, probe_dim)
    spectrum = tuple(rng.uniform(-1.0, 1.0, probe.rank))
    sel = wp.AncillaSelection(
        wp.haar_state(ancilla_dim, rng),
        wp.haar_state(ancilla_dim, rng),
        random_hermitian(rng, ancilla_dim),
    )
    return wp.WeakMeasurementSetup(probe, spectrum, sel, phi)


def kappa_matrix(setup):
    """The probe observable as a full matrix on the B side, built from the
    spectrum and Schmidt basis (zero outside the Schmidt span)."""
    dim = setup.probe.dim_b
    k = np.zeros((dim, dim), dtype=complex)
    for lam, b in zip(setup.kappa_spectrum, setup.probe.basis_b):
        k += lam * np.outer(b.amplitudes, b.amplitudes.conj())
    return k


def full_tensor_evolve(setup):
    """Oracle for exact_evolve_postselect: apply expm(-i phi K x O) on the
    full B x C space, project the post-selection, and return
    (success_probability, normalized dA x dB coefficient matrix)."""
    m = setup.probe.state_matrix()
    dim_a, dim_b = m.shape
    dim_c = setup.ancilla.dim
    h = np.kron(kappa_matrix(setup), setup.ancilla.observable.matrix)
    u = scipy.linalg.expm(-1j * setup.phi * h)
    joint = np.einsum("ab,c->abc", m, setup.ancilla.pre.amplitudes)
    evolved = joint.reshape(dim_a, dim_b * dim_c) @ u.T
    projected = np.einsum(
        "abc,c->ab",
        evolved.reshape(dim_a, dim_b, dim_c),
        setup.ancilla.post.amplitudes.conj(),
    )
    success = float(np.linalg.norm(projected) ** 2)
    return success, projected / np.linalg.norm(projected)


def scalar_entropy(populations):
    """Plain-python entropy oracle, nats."""
    import math

    return -sum(p * math.log(p) for p in populations if p > 1e-15)
