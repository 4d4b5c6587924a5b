"""Canonical setups used across tests, bundled configs, and scripts."""

from __future__ import annotations

import math

import numpy as np

from .core import HermitianObservable, StateVector, computational_schmidt_form
from .measurement import AncillaSelection, WeakMeasurementSetup
from .search import CandidateSpace

PAULI_X = HermitianObservable(np.array([[0, 1], [1, 0]], dtype=complex))
PAULI_Y = HermitianObservable(np.array([[0, -1j], [1j, 0]], dtype=complex))
PAULI_Z = HermitianObservable(np.array([[1, 0], [0, -1]], dtype=complex))

_SQRT2 = math.sqrt(2.0)


def r1_ancilla() -> AncillaSelection:
    """|i> = (1,1)/sqrt(2), |f> = (1,i)/sqrt(2), O = diag(1,-1); the weak
    value is exactly i."""
    pre = StateVector(np.array([1.0, 1.0]) / _SQRT2)
    post = StateVector(np.array([1.0, 1j]) / _SQRT2)
    return AncillaSelection(pre, post, PAULI_Z)


def scenario_r1(phi: float = 0.1) -> WeakMeasurementSetup:
    """Canonical concentration scenario: probe s = (sqrt 0.9, sqrt 0.1),
    K spectrum (0, 1), the r1 ancilla, coupling phi."""
    probe = computational_schmidt_form([math.sqrt(0.9), math.sqrt(0.1)])
    return WeakMeasurementSetup(probe, (0.0, 1.0), r1_ancilla(), phi)


def scenario_r1_dilute(phi: float = 0.1) -> WeakMeasurementSetup:
    """R1 with the conjugated post-selection (1,-i)/sqrt(2); the weak value
    flips to -i and the protocol dilutes."""
    base = scenario_r1(phi)
    post = StateVector(np.array([1.0, -1j]) / _SQRT2)
    sel = AncillaSelection(base.ancilla.pre, post, base.ancilla.observable)
    return WeakMeasurementSetup(base.probe, base.kappa_spectrum, sel, phi)


def scenario_max_entangled(phi: float = 0.1) -> WeakMeasurementSetup:
    """Maximally entangled probe with the r1 ancilla; the witness gap
    vanishes and no first-order entropy change is possible."""
    probe = computational_schmidt_form([1.0 / _SQRT2, 1.0 / _SQRT2])
    return WeakMeasurementSetup(probe, (0.0, 1.0), r1_ancilla(), phi)


def scenario_rank4(phi: float = 0.1) -> WeakMeasurementSetup:
    """Rank-4 probe s = sqrt(0.4, 0.3, 0.2, 0.1) with spectrum (0, 1, 2, 3)
    and the r1 ancilla."""
    probe = computational_schmidt_form([math.sqrt(x) for x in (0.4, 0.3, 0.2, 0.1)])
    return WeakMeasurementSetup(probe, (0.0, 1.0, 2.0, 3.0), r1_ancilla(), phi)


def r1_search_space(phi: float = 0.1) -> CandidateSpace:
    """Qubit ancilla ingredient space around the R1 probe: Pauli observable
    pool, probe and spectrum fixed at the R1 values."""
    probe = computational_schmidt_form([math.sqrt(0.9), math.sqrt(0.1)])
    return CandidateSpace(
        probe=probe,
        kappa_spectrum=(0.0, 1.0),
        observable_pool=(PAULI_Z, PAULI_X, PAULI_Y),
        ancilla_dim=2,
        phi=phi,
    )
