"""JSON config ingestion and serialization.

Complex numbers travel as [re, im] pairs; a setup config carries the probe
Schmidt coefficients, the K spectrum paired with them, the ancilla pre/post
vectors, the ancilla observable matrix, and phi. Configs serialize at full
precision so parse -> serialize round-trips are lossless.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .core import HermitianObservable, StateVector, computational_schmidt_form
from .errors import ConfigError, WeakProbeError
from .measurement import AncillaSelection, WeakMeasurementSetup
from .search import CandidateSpace


@dataclass(frozen=True)
class SetupConfig:
    schmidt_coefficients: tuple[float, ...]
    kappa_spectrum: tuple[float, ...]
    ancilla_pre: tuple[complex, ...]
    ancilla_post: tuple[complex, ...]
    observable: tuple[tuple[complex, ...], ...]
    phi: float


@dataclass(frozen=True)
class SpaceConfig:
    schmidt_coefficients: tuple[float, ...]
    kappa_spectrum: tuple[float, ...]
    observable_pool: tuple[tuple[tuple[complex, ...], ...], ...]
    ancilla_dim: int
    phi: float


def _real_list(data: Any, field: str) -> tuple[float, ...]:
    if not isinstance(data, (list, tuple)) or not data:
        raise ConfigError(f"{field}: expected a non-empty list of numbers")
    out = []
    for k, x in enumerate(data):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ConfigError(f"{field}[{k}]: expected a number, got {x!r}")
        out.append(float(x))
    return tuple(out)


def _complex_pair(x: Any, field: str) -> complex:
    if (
        not isinstance(x, (list, tuple))
        or len(x) != 2
        or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in x)
    ):
        raise ConfigError(f"{field}: expected an [re, im] pair, got {x!r}")
    return complex(float(x[0]), float(x[1]))


def _complex_vector(data: Any, field: str) -> tuple[complex, ...]:
    if not isinstance(data, (list, tuple)) or not data:
        raise ConfigError(f"{field}: expected a non-empty list of [re, im] pairs")
    return tuple(_complex_pair(x, f"{field}[{k}]") for k, x in enumerate(data))


def _complex_matrix(data: Any, field: str) -> tuple[tuple[complex, ...], ...]:
    if not isinstance(data, (list, tuple)) or not data:
        raise ConfigError(f"{field}: expected a non-empty nested list of [re, im] pairs")
    rows = tuple(_complex_vector(row, f"{field}[{k}]") for k, row in enumerate(data))
    if any(len(row) != len(rows) for row in rows):
        raise ConfigError(f"{field}: matrix must be square")
    return rows


def _phi(data: Any, field: str = "phi") -> float:
    if isinstance(data, bool) or not isinstance(data, (int, float)):
        raise ConfigError(f"{field}: expected a number, got {data!r}")
    if data < 0:
        raise ConfigError(f"{field}: must be >= 0, got {data!r}")
    return float(data)


def _require(data: Mapping, field: str) -> Any:
    if field not in data:
        raise ConfigError(f"{field}: missing required field")
    return data[field]


def parse_setup_config(data: Mapping) -> SetupConfig:
    if not isinstance(data, Mapping):
        raise ConfigError("top level: expected a JSON object")
    return SetupConfig(
        schmidt_coefficients=_real_list(_require(data, "schmidt_coefficients"), "schmidt_coefficients"),
        kappa_spectrum=_real_list(_require(data, "kappa_spectrum"), "kappa_spectrum"),
        ancilla_pre=_complex_vector(_require(data, "ancilla_pre"), "ancilla_pre"),
        ancilla_post=_complex_vector(_require(data, "ancilla_post"), "ancilla_post"),
        observable=_complex_matrix(_require(data, "observable"), "observable"),
        phi=_phi(_require(data, "phi")),
    )


def parse_space_config(data: Mapping) -> SpaceConfig:
    if not isinstance(data, Mapping):
        raise ConfigError("top level: expected a JSON object")
    pool_raw = _require(data, "observable_pool")
    if not isinstance(pool_raw, (list, tuple)) or not pool_raw:
        raise ConfigError("observable_pool: expected a non-empty list of matrices")
    pool = tuple(
        _complex_matrix(m, f"observable_pool[{k}]") for k, m in enumerate(pool_raw)
    )
    dim_raw = _require(data, "ancilla_dim")
    if isinstance(dim_raw, bool) or not isinstance(dim_raw, int) or dim_raw < 2:
        raise ConfigError(f"ancilla_dim: expected an integer >= 2, got {dim_raw!r}")
    return SpaceConfig(
        schmidt_coefficients=_real_list(_require(data, "schmidt_coefficients"), "schmidt_coefficients"),
        kappa_spectrum=_real_list(_require(data, "kappa_spectrum"), "kappa_spectrum"),
        observable_pool=pool,
        ancilla_dim=dim_raw,
        phi=_phi(_require(data, "phi")),
    )


def load_setup_config(path) -> SetupConfig:
    return parse_setup_config(_load_json(path))


def load_space_config(path) -> SpaceConfig:
    return parse_space_config(_load_json(path))


def _load_json(path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc


def _pairs(values) -> list[list[float]]:
    return [[complex(v).real, complex(v).imag] for v in values]


def setup_config_to_dict(cfg: SetupConfig) -> dict:
    return {
        "schmidt_coefficients": list(cfg.schmidt_coefficients),
        "kappa_spectrum": list(cfg.kappa_spectrum),
        "ancilla_pre": _pairs(cfg.ancilla_pre),
        "ancilla_post": _pairs(cfg.ancilla_post),
        "observable": [_pairs(row) for row in cfg.observable],
        "phi": cfg.phi,
    }


def space_config_to_dict(cfg: SpaceConfig) -> dict:
    return {
        "schmidt_coefficients": list(cfg.schmidt_coefficients),
        "kappa_spectrum": list(cfg.kappa_spectrum),
        "observable_pool": [[_pairs(row) for row in m] for m in cfg.observable_pool],
        "ancilla_dim": cfg.ancilla_dim,
        "phi": cfg.phi,
    }


def _probe_from_coefficients(coeffs: tuple[float, ...]):
    s = np.asarray(coeffs)
    if np.any(np.diff(s) > 0):
        raise ConfigError(
            "schmidt_coefficients: must be sorted descending "
            "(reorder kappa_spectrum to match)"
        )
    try:
        return computational_schmidt_form(s)
    except WeakProbeError as exc:
        raise ConfigError(f"schmidt_coefficients: {exc}") from exc


def build_setup(cfg: SetupConfig, phi: float | None = None) -> WeakMeasurementSetup:
    """Validate a SetupConfig into a WeakMeasurementSetup; ``phi`` overrides
    the config value (used by sweeps). The probe bases are computational."""
    probe = _probe_from_coefficients(cfg.schmidt_coefficients)
    if len(cfg.kappa_spectrum) != probe.rank:
        raise ConfigError(
            f"kappa_spectrum: expected {probe.rank} entries, got {len(cfg.kappa_spectrum)}"
        )
    try:
        pre = StateVector(np.array(cfg.ancilla_pre))
    except WeakProbeError as exc:
        raise ConfigError(f"ancilla_pre: {exc}") from exc
    try:
        post = StateVector(np.array(cfg.ancilla_post))
    except WeakProbeError as exc:
        raise ConfigError(f"ancilla_post: {exc}") from exc
    try:
        observable = HermitianObservable(np.array(cfg.observable))
    except WeakProbeError as exc:
        raise ConfigError(f"observable: {exc}") from exc
    try:
        sel = AncillaSelection(pre, post, observable)
        return WeakMeasurementSetup(probe, cfg.kappa_spectrum, sel, cfg.phi if phi is None else phi)
    except ConfigError:
        raise
    except WeakProbeError as exc:
        raise ConfigError(str(exc)) from exc


def build_space(cfg: SpaceConfig) -> CandidateSpace:
    """Validate a SpaceConfig into a CandidateSpace."""
    probe = _probe_from_coefficients(cfg.schmidt_coefficients)
    try:
        pool = tuple(HermitianObservable(np.array(m)) for m in cfg.observable_pool)
    except WeakProbeError as exc:
        raise ConfigError(f"observable_pool: {exc}") from exc
    try:
        return CandidateSpace(
            probe=probe,
            kappa_spectrum=cfg.kappa_spectrum,
            observable_pool=pool,
            ancilla_dim=cfg.ancilla_dim,
            phi=cfg.phi,
        )
    except ConfigError:
        raise
    except WeakProbeError as exc:
        raise ConfigError(str(exc)) from exc
