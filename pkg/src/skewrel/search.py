"""Randomized search for extremal witnesses of the falsifiable relations.

A search task evaluates a scalar objective over seeded random triples
(rho, A, B) and keeps the extremes: the most negative gaps for the two
falsifiable relations, or one witness of each sign for the lhs
difference between the schrodinger and schrodinger_wy bounds.  Because
every candidate is a pure function of (task, sample index), the result
is identical however the evaluation is scheduled, and a returned witness
can always be re-scored from its stored matrices alone.

Every dim-2 search starts from the known counterexample triples, so the
reported extremes can never be worse than the built-in cases.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import counterexamples, ensembles, linalg, quantities, relations
from .ensembles import EnsembleSpec
from .errors import BadSpec
from .quantities import DensityMatrix, Observable

OBJECTIVES = (
    "min_gap_false_cov_variant",
    "min_gap_re_ordering",
    "sign_witnesses_lhs_difference",
)

_REFINE_SALT = 0x7F4A7C15F39CC060
_EVAL_TOL = 1e-9


@dataclass(frozen=True)
class SearchTask:
    objective: str
    dim: int
    samples: int
    seed: int = 0
    state_kind: str = "ginibre_mixed"
    purity_blend: float = 0.0
    observable_scale: float = 1.0
    refine: bool = False
    refine_steps: int = 200
    top_k: int = 10

    def validate(self) -> None:
        if self.objective not in OBJECTIVES:
            raise BadSpec(f"objective must be one of {OBJECTIVES}, got {self.objective!r}")
        if self.samples < 1:
            raise BadSpec(f"samples must be >= 1, got {self.samples}")
        if self.top_k < 1:
            raise BadSpec(f"top_k must be >= 1, got {self.top_k}")
        if self.refine_steps < 0:
            raise BadSpec(f"refine_steps must be >= 0, got {self.refine_steps}")
        self.state_spec().validate()

    def state_spec(self) -> EnsembleSpec:
        return EnsembleSpec(
            dim=self.dim,
            kind=self.state_kind,
            purity_blend=self.purity_blend,
            seed=self.seed,
        )


@dataclass(frozen=True)
class Witness:
    """A concrete triple with the objective value it achieved."""

    rho: np.ndarray
    a: np.ndarray
    b: np.ndarray
    objective_value: float
    sample_index: int
    refined: bool = False


def objective_value(objective: str, rho: DensityMatrix, a, b) -> float:
    """Score one triple under a search objective (lower is better)."""
    report = quantities.full_report(rho, a, b)
    if objective == "min_gap_false_cov_variant":
        return relations.verdict_from_report(report, "false_cov_variant").gap
    if objective == "min_gap_re_ordering":
        return relations.verdict_from_report(report, "false_re_ordering").gap
    if objective == "sign_witnesses_lhs_difference":
        return relations.lhs_difference_from_report(report)
    raise BadSpec(f"unknown objective {objective!r}")


def _candidate(task: SearchTask, index: int) -> tuple[DensityMatrix, Observable, Observable]:
    if task.dim == 2 and index < counterexamples.BUILTIN_TRIPLE_COUNT:
        return counterexamples.builtin_triple(index)
    rho = ensembles.random_density(task.state_spec(), sample_index=index)
    a = ensembles.random_observable(
        task.dim, task.observable_scale, task.seed ^ ensembles.SALT_OBSERVABLE_A, index
    )
    b = ensembles.random_observable(
        task.dim, task.observable_scale, task.seed ^ ensembles.SALT_OBSERVABLE_B, index
    )
    return rho, a, b


def _witness_at(task: SearchTask, index: int, value: float) -> Witness:
    rho, a, b = _candidate(task, index)
    return Witness(
        rho=rho.matrix.copy(),
        a=a.matrix.copy(),
        b=b.matrix.copy(),
        objective_value=value,
        sample_index=index,
    )


def _evaluate_range(task: SearchTask, start: int, stop: int) -> np.ndarray:
    out = np.empty(stop - start)
    for i in range(start, stop):
        rho, a, b = _candidate(task, i)
        out[i - start] = objective_value(task.objective, rho, a, b)
    return out


def evaluate_all(task: SearchTask, workers: int = 1) -> np.ndarray:
    """Objective value of every candidate, indexed by sample; schedule-free."""
    n = task.samples
    if workers <= 1 or n < 2 * workers:
        return _evaluate_range(task, 0, n)
    bounds = np.linspace(0, n, workers + 1, dtype=int)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunks = list(
            pool.map(lambda se: _evaluate_range(task, se[0], se[1]), zip(bounds[:-1], bounds[1:]))
        )
    return np.concatenate(chunks)


def run_search(task: SearchTask, workers: int = 1) -> list[Witness]:
    """Evaluate the task and return its extremal witnesses.

    For the min-gap objectives: the top_k most negative gaps, ascending.
    For the sign objective: the most negative candidate followed by the
    most positive one (if a sign is missing these are simply the closest
    candidates to it, for the caller to report).
    """
    task.validate()
    values = evaluate_all(task, workers=workers)

    if task.objective == "sign_witnesses_lhs_difference":
        picks = [int(np.argmin(values)), int(np.argmax(values))]
        witnesses = [_witness_at(task, i, float(values[i])) for i in picks]
    else:
        k = min(task.top_k, task.samples)
        order = np.lexsort((np.arange(task.samples), values))
        witnesses = [_witness_at(task, int(i), float(values[i])) for i in order[:k]]

    if task.refine and task.refine_steps > 0:
        refined = []
        for slot, w in enumerate(witnesses):
            maximize = (
                task.objective == "sign_witnesses_lhs_difference" and slot == 1
            )
            refined.append(
                refine_witness(
                    w,
                    task.objective,
                    task.refine_steps,
                    seed=ensembles.stream_seed(task.seed ^ _REFINE_SALT, w.sample_index),
                    maximize=maximize,
                )
            )
        witnesses = refined
    return witnesses


def reevaluate(objective: str, w: Witness) -> float:
    """Score a witness from its stored matrices only (fresh validation path)."""
    return objective_value(objective, DensityMatrix(w.rho), Observable(w.a), Observable(w.b))


def _project_to_state(m: np.ndarray) -> np.ndarray | None:
    """Nearest-state projection: clamp negative eigenvalues, renormalize trace."""
    spectral = linalg.hermitian_eig((m + m.conj().T) / 2.0)
    lam = np.clip(spectral.eigenvalues, 0.0, None)
    total = lam.sum()
    if total <= 1e-12:
        return None
    lam = lam / total
    return (spectral.eigenvectors * lam) @ spectral.eigenvectors.conj().T


def _perturb_hermitian(m: np.ndarray, param: int, delta: float) -> np.ndarray:
    """Shift one real Hermitian coordinate: diagonal, or re/im of an off pair."""
    n = m.shape[0]
    i, j = divmod(param, n)
    out = m.copy()
    if i == j:
        out[i, i] += delta
    elif i < j:
        out[i, j] += delta
        out[j, i] += delta
    else:
        out[j, i] += 1j * delta
        out[i, j] -= 1j * delta
    return out


def refine_witness(
    w: Witness,
    objective: str,
    steps: int,
    seed: int,
    maximize: bool = False,
    initial_step: float = 0.1,
) -> Witness:
    """Coordinate-wise random descent from a witness; never worsens it.

    Each step perturbs one Hermitian parameter of rho, A, or B (rho is
    projected back to the state set afterwards) and keeps the move only if
    the objective strictly improves.  The step size halves after every
    steps/5 consecutive rejections, with a floor of 1e-6.
    """
    if steps <= 0:
        return w
    sign = -1.0 if maximize else 1.0
    n = w.rho.shape[0]
    coords_per_matrix = n * n

    coord_u = ensembles.uniforms(seed, steps)
    deltas = ensembles.normals(seed ^ _REFINE_SALT, steps)

    mats = [w.rho.copy(), w.a.copy(), w.b.copy()]
    best = sign * reevaluate(objective, w)
    step = initial_step
    patience = max(1, steps // 5)
    stale = 0
    improved = False

    for k in range(steps):
        pick = int(coord_u[k] * 3 * coords_per_matrix) % (3 * coords_per_matrix)
        which, param = divmod(pick, coords_per_matrix)
        trial = [m.copy() for m in mats]
        trial[which] = _perturb_hermitian(trial[which], param, step * deltas[k])
        value = np.inf
        usable = True
        if which == 0:
            projected = _project_to_state(trial[0])
            if projected is None:
                usable = False
            else:
                trial[0] = projected
        if usable:
            value = sign * objective_value(
                objective, DensityMatrix(trial[0]), Observable(trial[1]), Observable(trial[2])
            )
        if value < best:
            mats = trial
            best = value
            improved = True
            stale = 0
        else:
            stale += 1
            if stale >= patience:
                step = max(step / 2.0, 1e-6)
                stale = 0

    if not improved:
        return w
    return Witness(
        rho=mats[0],
        a=mats[1],
        b=mats[2],
        objective_value=sign * best,
        sample_index=w.sample_index,
        refined=True,
    )
