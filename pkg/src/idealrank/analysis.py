"""Explainability and sensitivity analysis on top of the ranking core.

``explain`` renders the intermediate tables of a run at display precision.
``weight_sweep`` and ``leave_one_out`` quantify how the ranking responds to
weight changes; ``monte_carlo_stability`` measures robustness under score
noise with a fully deterministic per-trial random stream.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import (
    DecisionProblem,
    EvalOptions,
    RankingReport,
    _evaluate_validated,
    evaluate,
    round_up,
    validate_problem,
)
from .errors import DegenerateProblemError, InvalidProblemError, Violation


@dataclass(frozen=True, eq=False)
class ExplainReport:
    """The six step tables of a run, values rounded for display (4 dp,
    upward, matching the bundled case study's reference tables)."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    kinds: tuple[str, ...]
    weights: np.ndarray
    decision_matrix: np.ndarray
    normalized: np.ndarray
    weighted: np.ndarray
    pis: np.ndarray
    nis: np.ndarray
    s_plus: np.ndarray
    s_minus: np.ndarray
    closeness: np.ndarray
    ranks: np.ndarray
    options: EvalOptions
    weights_rescaled: bool

    def to_document(self) -> dict:
        return {
            "alternatives": list(self.alternatives),
            "criteria": [
                {"name": n, "kind": k, "weight": w}
                for n, k, w in zip(self.criteria, self.kinds, self.weights.tolist())
            ],
            "decision_matrix": self.decision_matrix.tolist(),
            "normalized": self.normalized.tolist(),
            "weighted": self.weighted.tolist(),
            "pis": self.pis.tolist(),
            "nis": self.nis.tolist(),
            "s_plus": self.s_plus.tolist(),
            "s_minus": self.s_minus.tolist(),
            "closeness": self.closeness.tolist(),
            "ranks": self.ranks.tolist(),
            "options": self.options.to_document(),
            "weights_rescaled": self.weights_rescaled,
        }


def explain(problem: DecisionProblem, options: EvalOptions = EvalOptions()) -> ExplainReport:
    """Evaluate and render every intermediate table at display precision."""
    report = evaluate(problem, options)
    return explain_from_report(report)


def explain_from_report(report: RankingReport) -> ExplainReport:
    problem = report.problem
    return ExplainReport(
        alternatives=problem.alternatives,
        criteria=problem.criterion_names,
        kinds=tuple(k.value for k in problem.kinds),
        weights=problem.weights,
        decision_matrix=np.array(problem.scores),
        normalized=round_up(report.normalized.values),
        weighted=round_up(report.weighted.values),
        pis=round_up(report.ideals.pis),
        nis=round_up(report.ideals.nis),
        s_plus=round_up(report.separations.s_plus),
        s_minus=round_up(report.separations.s_minus),
        closeness=round_up(report.closeness),
        ranks=np.array(report.ranks),
        options=report.options,
        weights_rescaled=report.weights_rescaled,
    )


@dataclass(frozen=True, eq=False)
class SweepPoint:
    """One grid evaluation: the swept weight, the full weight vector, and the
    resulting closeness/ranks (None when the point is degenerate)."""

    weight: float
    weights: np.ndarray
    closeness: np.ndarray | None
    ranks: np.ndarray | None
    degenerate: bool

    @property
    def top(self) -> int | None:
        """Index of the rank-1 alternative, or None when degenerate."""
        if self.ranks is None:
            return None
        return int(np.argmin(self.ranks))

    def to_document(self) -> dict:
        return {
            "weight": self.weight,
            "weights": self.weights.tolist(),
            "closeness": None if self.closeness is None else self.closeness.tolist(),
            "ranks": None if self.ranks is None else self.ranks.tolist(),
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class Crossover:
    """Grid interval over which the top-ranked alternative changed."""

    lower: float
    upper: float
    previous_top: str
    new_top: str

    def to_document(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "previous_top": self.previous_top,
            "new_top": self.new_top,
        }


@dataclass(frozen=True, eq=False)
class SweepResult:
    criterion: str
    alternatives: tuple[str, ...]
    grid: np.ndarray
    points: tuple[SweepPoint, ...]
    crossovers: tuple[Crossover, ...]
    options: EvalOptions

    def to_document(self) -> dict:
        return {
            "criterion": self.criterion,
            "alternatives": list(self.alternatives),
            "grid": self.grid.tolist(),
            "points": [p.to_document() for p in self.points],
            "crossovers": [c.to_document() for c in self.crossovers],
            "options": self.options.to_document(),
        }


def _swept_weights(weights: np.ndarray, index: int, value: float) -> np.ndarray:
    """Set weights[index] to value, rescaling the others proportionally.

    The rest is taken as 1 - weights[index] (weights are validated to sum to
    1) so a grid point equal to the original weight reproduces the original
    vector bit-for-bit.  When the others carry no weight at all, the
    remainder is split equally (proportional rescaling is undefined on an
    all-zero rest)."""
    rest = 1.0 - float(weights[index])
    out = np.array(weights, dtype=float)
    out[index] = value
    others = [j for j in range(len(weights)) if j != index]
    if rest > 0:
        factor = (1.0 - value) / rest
        for j in others:
            out[j] = weights[j] * factor
    else:
        for j in others:
            out[j] = (1.0 - value) / len(others)
    return out


def _with_weights(problem: DecisionProblem, weights: np.ndarray) -> DecisionProblem:
    criteria = tuple(replace(c, weight=float(w)) for c, w in zip(problem.criteria, weights))
    return DecisionProblem(problem.alternatives, criteria, problem.scores)


def weight_sweep(
    problem: DecisionProblem,
    criterion: str,
    steps: int,
    options: EvalOptions = EvalOptions(),
) -> SweepResult:
    """Evaluate the problem across a weight grid for one criterion.

    The grid runs from 0 to 1 inclusive with ``steps`` points; the remaining
    weights are rescaled proportionally at every point so they sum to 1.
    Degenerate grid points are recorded per-point, never fatal.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    problem = validate_problem(problem)
    names = problem.criterion_names
    if criterion not in names:
        raise InvalidProblemError(
            [Violation("UnknownName", "criterion", f"unknown criterion {criterion!r}; have {list(names)}")]
        )
    if len(names) < 2:
        raise InvalidProblemError(
            [Violation("DimensionMismatch", "criteria", "weight sweep requires at least 2 criteria")]
        )
    index = names.index(criterion)
    base_weights = problem.weights
    grid = np.linspace(0.0, 1.0, steps)

    points: list[SweepPoint] = []
    for value in grid:
        weights = _swept_weights(base_weights, index, float(value))
        swept = _with_weights(problem, weights)
        try:
            report = _evaluate_validated(swept, options)
        except DegenerateProblemError:
            points.append(SweepPoint(float(value), weights, None, None, True))
            continue
        points.append(SweepPoint(float(value), weights, report.closeness, report.ranks, False))

    crossovers: list[Crossover] = []
    prev_top: int | None = None
    prev_weight = 0.0
    for point in points:
        if point.degenerate:
            continue
        top = point.top
        if prev_top is not None and top != prev_top:
            crossovers.append(
                Crossover(prev_weight, point.weight, problem.alternatives[prev_top], problem.alternatives[top])
            )
        prev_top = top
        prev_weight = point.weight

    return SweepResult(criterion, problem.alternatives, grid, tuple(points), tuple(crossovers), options)


@dataclass(frozen=True, eq=False)
class LeaveOneOutEntry:
    criterion: str
    report: RankingReport | None
    error: str | None

    def to_document(self) -> dict:
        return {
            "criterion": self.criterion,
            "report": None if self.report is None else self.report.to_document(include_intermediates=False),
            "error": self.error,
        }


def leave_one_out(problem: DecisionProblem, options: EvalOptions = EvalOptions()) -> list[LeaveOneOutEntry]:
    """Re-evaluate with each criterion removed in turn, remaining weights
    renormalized proportionally.  Entries whose reduced problem is degenerate
    carry the error instead of a report."""
    problem = validate_problem(problem)
    if len(problem.criteria) < 2:
        raise InvalidProblemError(
            [Violation("DimensionMismatch", "criteria", "leave-one-out requires at least 2 criteria")]
        )
    entries: list[LeaveOneOutEntry] = []
    for drop in range(len(problem.criteria)):
        kept = [j for j in range(len(problem.criteria)) if j != drop]
        rest = float(sum(problem.criteria[j].weight for j in kept))
        name = problem.criteria[drop].name
        if rest <= 0:
            entries.append(
                LeaveOneOutEntry(name, None, "DegenerateProblem: remaining criteria carry no weight")
            )
            continue
        criteria = tuple(replace(problem.criteria[j], weight=problem.criteria[j].weight / rest) for j in kept)
        reduced = DecisionProblem(problem.alternatives, criteria, problem.scores[:, kept])
        try:
            entries.append(LeaveOneOutEntry(name, _evaluate_validated(reduced, options), None))
        except DegenerateProblemError as exc:
            entries.append(LeaveOneOutEntry(name, None, f"DegenerateProblem: {exc}"))
    return entries


@dataclass(frozen=True)
class NoiseSpec:
    """Uniform integer jitter in [-magnitude, +magnitude], clamped to the
    scoring scale."""

    kind: str = "uniform-integer-jitter"
    magnitude: int = 1
    low: float = 1.0
    high: float = 9.0

    def to_document(self) -> dict:
        return {"kind": self.kind, "magnitude": self.magnitude, "low": self.low, "high": self.high}


@dataclass(frozen=True, eq=False)
class StabilityReport:
    """Rank frequencies over noisy re-evaluations.

    ``frequency[i][r-1]`` counts trials in which alternative i took rank r;
    each row sums to ``trials - degenerate_trials``."""

    trials: int
    seed: int
    noise: NoiseSpec
    alternatives: tuple[str, ...]
    frequency: np.ndarray
    modal_ranking: tuple[int, ...] | None
    modal_count: int
    degenerate_trials: int
    options: EvalOptions

    def to_document(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "noise": self.noise.to_document(),
            "alternatives": list(self.alternatives),
            "frequency": self.frequency.tolist(),
            "modal_ranking": None if self.modal_ranking is None else list(self.modal_ranking),
            "modal_count": self.modal_count,
            "degenerate_trials": self.degenerate_trials,
            "options": self.options.to_document(),
        }


def trial_scores(scores: np.ndarray, noise: NoiseSpec, seed: int, trial: int) -> np.ndarray:
    """Perturbed score matrix for one trial.

    The random stream is derived from (seed, trial) alone, so trials can be
    computed in any order, or concurrently, without changing results.
    """
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))
    deltas = rng.integers(-noise.magnitude, noise.magnitude + 1, size=scores.shape)
    return np.clip(scores + deltas, noise.low, noise.high)


def monte_carlo_stability(
    problem: DecisionProblem,
    noise: NoiseSpec = NoiseSpec(),
    trials: int = 1000,
    seed: int = 0,
    options: EvalOptions = EvalOptions(),
) -> StabilityReport:
    """Rank-frequency matrix over ``trials`` noisy score perturbations.

    Deterministic: the same (problem, noise, trials, seed, options) always
    produces an identical report.  Degenerate trials are counted and
    excluded from the frequency matrix.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    problem = validate_problem(problem)
    n = len(problem.alternatives)
    frequency = np.zeros((n, n), dtype=int)
    ranking_counts: dict[tuple[int, ...], list[int]] = {}
    degenerate = 0

    for trial in range(trials):
        perturbed = _with_scores(problem, trial_scores(problem.scores, noise, seed, trial))
        try:
            report = _evaluate_validated(perturbed, options)
        except DegenerateProblemError:
            degenerate += 1
            continue
        ranking = tuple(int(r) for r in report.ranks)
        for i, r in enumerate(ranking):
            frequency[i, r - 1] += 1
        entry = ranking_counts.setdefault(ranking, [0, trial])
        entry[0] += 1

    modal_ranking = None
    modal_count = 0
    if ranking_counts:
        modal_ranking = max(ranking_counts, key=lambda k: (ranking_counts[k][0], -ranking_counts[k][1]))
        modal_count = ranking_counts[modal_ranking][0]

    return StabilityReport(
        trials=trials,
        seed=seed,
        noise=noise,
        alternatives=problem.alternatives,
        frequency=frequency,
        modal_ranking=modal_ranking,
        modal_count=modal_count,
        degenerate_trials=degenerate,
        options=options,
    )


def _with_scores(problem: DecisionProblem, scores: np.ndarray) -> DecisionProblem:
    return DecisionProblem(problem.alternatives, problem.criteria, scores)
