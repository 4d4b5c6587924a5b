"""Search over ancilla ingredients {|i>, O, |f>} for working concentration
protocols on a fixed (probe, K spectrum, phi).

The gain factorizes as Im(O_w) * Tr(K (omega - sigma_i)) and the gap term
is ancilla-independent, so a run is a pure weak-value optimization.
Candidates are drawn from a per-index substream (seed XOR index), which
makes evaluation order irrelevant and runs reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .concentrate import concentration_report
from .core import HermitianObservable, SchmidtForm, StateVector
from .errors import (
    DimensionMismatch,
    InvariantViolation,
    PostSelectionImpossible,
    PostSelectionOrthogonal,
)
from .measurement import AncillaSelection, WeakMeasurementSetup

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True, eq=False)
class CandidateSpace:
    """Fixed probe/K/phi plus the ancilla ingredient pools to search."""

    probe: SchmidtForm
    kappa_spectrum: tuple[float, ...]
    observable_pool: tuple[HermitianObservable, ...]
    ancilla_dim: int
    phi: float

    def __post_init__(self):
        object.__setattr__(self, "kappa_spectrum", tuple(float(x) for x in self.kappa_spectrum))
        object.__setattr__(self, "observable_pool", tuple(self.observable_pool))
        if not self.observable_pool:
            raise InvariantViolation("observable pool must be non-empty")
        if self.probe.rank < 2:
            raise InvariantViolation("probe rank must be >= 2")
        if len(self.kappa_spectrum) != self.probe.rank:
            raise DimensionMismatch("kappa_spectrum length must equal probe rank")
        for obs in self.observable_pool:
            if obs.dim != self.ancilla_dim:
                raise DimensionMismatch(
                    f"observable dim {obs.dim} vs ancilla dim {self.ancilla_dim}"
                )


@dataclass(frozen=True, eq=False)
class Ingredients:
    pre: StateVector
    post: StateVector
    observable_index: int


@dataclass(frozen=True, eq=False)
class CandidateResult:
    index: int
    ingredients: Ingredients
    feasible: bool
    weak_value: complex | None
    first_order_gain: float | None
    success_probability_exact: float | None


@dataclass(frozen=True)
class SearchConfig:
    seed: int
    samples: int
    min_success: float = 0.01
    strategy: str = "random"
    grid_resolution: int = 8

    def __post_init__(self):
        if not 0 <= self.seed <= _SEED_MASK:
            raise InvariantViolation("seed must fit in an unsigned 64-bit integer")
        if self.samples < 1:
            raise InvariantViolation(f"samples must be >= 1, got {self.samples}")
        if not 0.0 <= self.min_success <= 1.0:
            raise InvariantViolation(f"min_success must be in [0, 1], got {self.min_success}")
        if self.strategy not in ("random", "grid"):
            raise InvariantViolation(f"unknown strategy {self.strategy!r}")
        if self.grid_resolution < 1:
            raise InvariantViolation("grid_resolution must be >= 1")


def bloch_state(theta: float, chi: float) -> StateVector:
    """Qubit state (cos(theta/2), e^{i chi} sin(theta/2)); the global phase
    is quotiented out by this convention."""
    return StateVector(
        np.array([math.cos(theta / 2.0), np.exp(1j * chi) * math.sin(theta / 2.0)])
    )


def haar_state(dim: int, rng: np.random.Generator) -> StateVector:
    """Haar-random pure state: normalized vector of iid standard complex
    Gaussians."""
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector(v / np.linalg.norm(v))


def _random_ancilla_state(dim: int, rng: np.random.Generator) -> StateVector:
    if dim == 2:
        # uniform on the Bloch sphere: cos(theta) ~ U[-1, 1]
        theta = math.acos(1.0 - 2.0 * rng.random())
        chi = 2.0 * math.pi * rng.random()
        return bloch_state(theta, chi)
    return haar_state(dim, rng)


def _setup_for(space: CandidateSpace, ingredients: Ingredients) -> WeakMeasurementSetup:
    sel = AncillaSelection(
        ingredients.pre,
        ingredients.post,
        space.observable_pool[ingredients.observable_index],
    )
    return WeakMeasurementSetup(space.probe, space.kappa_spectrum, sel, space.phi)


def evaluate_candidate(
    space: CandidateSpace, ingredients: Ingredients, index: int = 0
) -> CandidateResult:
    """Score one ingredient choice through the full concentration report.

    Orthogonal or never-succeeding post-selections come back flagged
    infeasible instead of raising, so search loops survive bad corners.
    """
    if not 0 <= ingredients.observable_index < len(space.observable_pool):
        raise InvariantViolation(f"observable index {ingredients.observable_index} out of range")
    try:
        report = concentration_report(_setup_for(space, ingredients))
    except (PostSelectionOrthogonal, PostSelectionImpossible):
        return CandidateResult(index, ingredients, False, None, None, None)
    return CandidateResult(
        index=index,
        ingredients=ingredients,
        feasible=True,
        weak_value=report.weak_value,
        first_order_gain=report.first_order_gain,
        success_probability_exact=report.success_probability_exact,
    )


def _draw_ingredients(space: CandidateSpace, seed: int, index: int) -> Ingredients:
    rng = np.random.default_rng((seed ^ index) & _SEED_MASK)
    obs_index = int(rng.integers(len(space.observable_pool)))
    pre = _random_ancilla_state(space.ancilla_dim, rng)
    post = _random_ancilla_state(space.ancilla_dim, rng)
    return Ingredients(pre, post, obs_index)


def random_search(space: CandidateSpace, config: SearchConfig) -> list[CandidateResult]:
    """Evaluate exactly ``config.samples`` seeded random candidates and keep
    the feasible ones with success >= min_success, in index order."""
    results = []
    for index in range(config.samples):
        ingredients = _draw_ingredients(space, config.seed, index)
        result = evaluate_candidate(space, ingredients, index)
        if result.feasible and result.success_probability_exact >= config.min_success:
            results.append(result)
    return results


def grid_search(space: CandidateSpace, config: SearchConfig) -> list[CandidateResult]:
    """Exhaustive sweep over the Bloch-angle lattice for pre and post states
    crossed with the observable pool, in lexicographic lattice order.
    Qubit ancillas only."""
    if space.ancilla_dim != 2:
        raise InvariantViolation("grid strategy requires a qubit ancilla")
    res = config.grid_resolution
    thetas = np.linspace(0.0, math.pi, res)
    chis = np.linspace(0.0, 2.0 * math.pi, res, endpoint=False)
    results = []
    index = 0
    for t_pre in thetas:
        for c_pre in chis:
            pre = bloch_state(t_pre, c_pre)
            for t_post in thetas:
                for c_post in chis:
                    post = bloch_state(t_post, c_post)
                    for obs_index in range(len(space.observable_pool)):
                        result = evaluate_candidate(
                            space, Ingredients(pre, post, obs_index), index
                        )
                        index += 1
                        if (
                            result.feasible
                            and result.success_probability_exact >= config.min_success
                        ):
                            results.append(result)
    return results


def pareto_filter(results: list[CandidateResult]) -> list[CandidateResult]:
    """Non-dominated set maximizing (first_order_gain, success probability).

    Exact ties on both axes keep the earliest candidate index; the output is
    sorted by descending gain, then descending success, then index.
    """
    feasible = [r for r in results if r.feasible]
    front = []
    for r in feasible:
        dominated = False
        for q in feasible:
            if q is r:
                continue
            ge_gain = q.first_order_gain >= r.first_order_gain
            ge_succ = q.success_probability_exact >= r.success_probability_exact
            gt_any = (
                q.first_order_gain > r.first_order_gain
                or q.success_probability_exact > r.success_probability_exact
            )
            if ge_gain and ge_succ and gt_any:
                dominated = True
                break
            if (
                q.first_order_gain == r.first_order_gain
                and q.success_probability_exact == r.success_probability_exact
                and q.index < r.index
            ):
                dominated = True
                break
        if not dominated:
            front.append(r)
    front.sort(key=lambda r: (-r.first_order_gain, -r.success_probability_exact, r.index))
    return front
