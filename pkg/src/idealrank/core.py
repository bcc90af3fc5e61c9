"""Deterministic TOPSIS ranking core.

The pipeline runs in seven steps: validate the decision problem, normalize
each criterion column to unit Euclidean norm, scale columns by their weights,
pick positive/negative ideal solutions, measure each alternative's separation
from both ideals, convert separations to a closeness ratio, and rank by
closeness (descending, ties broken by input order).

Every type here is immutable after construction and every operation is a pure
function of its inputs, so concurrent callers always see bit-identical
results.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import DegenerateProblemError, InvalidProblemError, Violation

WEIGHT_SUM_TOLERANCE = 1e-6
DISPLAY_PLACES = 4


class CriterionKind(str, Enum):
    """Whether larger scores are better (benefit) or worse (cost)."""

    BENEFIT = "benefit"
    COST = "cost"


class IdealMode(str, Enum):
    """How ideal solutions treat cost criteria.

    HONOR_KINDS gives cost criteria their declared semantics: the positive
    ideal takes the column minimum.  ALL_BENEFIT takes the column maximum for
    every criterion regardless of kind; it exists to reproduce reference
    tables that were computed that way.
    """

    HONOR_KINDS = "honor-kinds"
    ALL_BENEFIT = "all-benefit"


class Distance(str, Enum):
    """Separation measure: Euclidean, or the plain sum of squared
    differences (a forensic option for comparing against tabulations that
    skipped the square root)."""

    EUCLIDEAN = "euclidean"
    SQUARED = "squared"


@dataclass(frozen=True)
class Criterion:
    """An evaluation dimension: name, benefit/cost kind, and weight in [0, 1]."""

    name: str
    kind: CriterionKind
    weight: float

    def __post_init__(self):
        object.__setattr__(self, "kind", CriterionKind(self.kind))
        object.__setattr__(self, "weight", float(self.weight))


def _frozen_array(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class DecisionProblem:
    """Named alternatives scored against weighted criteria.

    ``scores`` is an (alternatives x criteria) matrix of positive reals.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[Criterion, ...]
    scores: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "scores", _frozen_array(self.scores))

    @property
    def weights(self) -> np.ndarray:
        return np.array([c.weight for c in self.criteria])

    @property
    def kinds(self) -> tuple[CriterionKind, ...]:
        return tuple(c.kind for c in self.criteria)

    @property
    def criterion_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.criteria)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DecisionProblem):
            return NotImplemented
        return (
            self.alternatives == other.alternatives
            and self.criteria == other.criteria
            and self.scores.shape == other.scores.shape
            and bool(np.array_equal(self.scores, other.scores))
        )


# A validated problem is the same immutable object, returned by
# validate_problem once every invariant has been checked.
ValidatedProblem = DecisionProblem


@dataclass(frozen=True, eq=False)
class NormalizedMatrix:
    """Scores divided by their column's Euclidean norm; columns are unit-norm."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values))


@dataclass(frozen=True, eq=False)
class WeightedMatrix:
    """Normalized values scaled by criterion weights; column j has norm w_j."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values))


@dataclass(frozen=True, eq=False)
class IdealSolutions:
    """Per-criterion best (pis) and worst (nis) weighted values."""

    pis: np.ndarray
    nis: np.ndarray
    mode: IdealMode

    def __post_init__(self):
        object.__setattr__(self, "pis", _frozen_array(self.pis))
        object.__setattr__(self, "nis", _frozen_array(self.nis))
        object.__setattr__(self, "mode", IdealMode(self.mode))


@dataclass(frozen=True, eq=False)
class SeparationMeasures:
    """Per-alternative distances to the positive and negative ideals."""

    s_plus: np.ndarray
    s_minus: np.ndarray
    distance: Distance

    def __post_init__(self):
        object.__setattr__(self, "s_plus", _frozen_array(self.s_plus))
        object.__setattr__(self, "s_minus", _frozen_array(self.s_minus))
        object.__setattr__(self, "distance", Distance(self.distance))


@dataclass(frozen=True)
class EvalOptions:
    """Pipeline switches: ideal-solution mode, separation distance, and an
    opt-in rescale of weights whose sum drifts from 1."""

    ideal_mode: IdealMode = IdealMode.HONOR_KINDS
    distance: Distance = Distance.EUCLIDEAN
    normalize_weights: bool = False

    def __post_init__(self):
        object.__setattr__(self, "ideal_mode", IdealMode(self.ideal_mode))
        object.__setattr__(self, "distance", Distance(self.distance))

    def to_document(self) -> dict:
        return {
            "ideal_mode": self.ideal_mode.value,
            "distance": self.distance.value,
            "normalize_weights": self.normalize_weights,
        }


@dataclass(frozen=True, eq=False)
class RankingReport:
    """Closeness ratios, ranks, and every intermediate used to produce them."""

    problem: DecisionProblem
    closeness: np.ndarray
    ranks: np.ndarray
    normalized: NormalizedMatrix
    weighted: WeightedMatrix
    ideals: IdealSolutions
    separations: SeparationMeasures
    options: EvalOptions
    weights_rescaled: bool = False

    def __post_init__(self):
        object.__setattr__(self, "closeness", _frozen_array(self.closeness))
        object.__setattr__(self, "ranks", _frozen_array(self.ranks, dtype=int))

    @property
    def order(self) -> list[int]:
        """Alternative indices from best to worst."""
        return list(np.argsort(self.ranks))

    def to_document(self, include_intermediates: bool = True) -> dict:
        doc = {
            "alternatives": list(self.problem.alternatives),
            "closeness": self.closeness.tolist(),
            "ranks": self.ranks.tolist(),
            "options": self.options.to_document(),
            "weights_rescaled": self.weights_rescaled,
        }
        if include_intermediates:
            doc["intermediates"] = {
                "normalized": self.normalized.values.tolist(),
                "weighted": self.weighted.values.tolist(),
                "pis": self.ideals.pis.tolist(),
                "nis": self.ideals.nis.tolist(),
                "s_plus": self.separations.s_plus.tolist(),
                "s_minus": self.separations.s_minus.tolist(),
            }
        return doc


def round_up(values, places: int = DISPLAY_PLACES):
    """Round toward +inf at the given decimal place.

    Rendered tables use this convention: the reference tables bundled with
    the case-study fixture were tabulated with upward rounding, and display
    output mirrors them.  A small guard keeps values that are already exact
    at ``places`` decimals fixed under re-rounding.
    """
    scale = 10.0**places
    return np.ceil(np.asarray(values, dtype=float) * scale - 1e-9) / scale + 0.0


def collect_violations(problem: DecisionProblem) -> list[Violation]:
    """Every structural invariant violation in the problem, or [] if valid."""
    violations: list[Violation] = []
    n_alt = len(problem.alternatives)
    n_crit = len(problem.criteria)

    if n_alt == 0:
        violations.append(Violation("EmptyProblem", "alternatives", "at least one alternative is required"))
    if n_crit == 0:
        violations.append(Violation("EmptyProblem", "criteria", "at least one criterion is required"))

    seen: dict[str, int] = {}
    for j, crit in enumerate(problem.criteria):
        if crit.name in seen:
            violations.append(
                Violation("DuplicateName", f"criteria[{j}].name", f"criterion name {crit.name!r} already used at index {seen[crit.name]}")
            )
        else:
            seen[crit.name] = j
    seen = {}
    for i, name in enumerate(problem.alternatives):
        if name in seen:
            violations.append(
                Violation("DuplicateName", f"alternatives[{i}]", f"alternative name {name!r} already used at index {seen[name]}")
            )
        else:
            seen[name] = i

    scores = problem.scores
    if scores.ndim != 2 or scores.shape != (n_alt, n_crit):
        violations.append(
            Violation(
                "DimensionMismatch",
                "scores",
                f"scores shape {tuple(scores.shape)} does not match {n_alt} alternatives x {n_crit} criteria",
            )
        )
        return violations

    for i in range(n_alt):
        for j in range(n_crit):
            value = scores[i, j]
            if not np.isfinite(value) or value <= 0:
                violations.append(
                    Violation("NonPositiveScore", f"scores[{i}][{j}]", f"score must be a positive finite number, got {value!r}")
                )
    for j in range(n_crit):
        if n_alt and not np.any(scores[:, j] != 0):
            violations.append(
                Violation("ZeroColumn", f"scores[:][{j}]", "column is all zeros; normalization is undefined")
            )

    for j, crit in enumerate(problem.criteria):
        if not np.isfinite(crit.weight) or crit.weight < 0 or crit.weight > 1:
            violations.append(
                Violation("WeightSumViolation", f"criteria[{j}].weight", f"weight must lie in [0, 1], got {crit.weight!r}")
            )
    if n_crit:
        total = float(sum(c.weight for c in problem.criteria))
        if not np.isfinite(total) or abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            violations.append(
                Violation("WeightSumViolation", "criteria", f"weights sum to {total!r}, expected 1 within {WEIGHT_SUM_TOLERANCE}")
            )
    return violations


def validate_problem(problem: DecisionProblem) -> ValidatedProblem:
    """Return the problem unchanged if valid, else raise with all violations."""
    violations = collect_violations(problem)
    if violations:
        raise InvalidProblemError(violations)
    return problem


def rescale_weights(problem: DecisionProblem) -> DecisionProblem:
    """A copy of the problem with weights scaled to sum exactly to 1."""
    total = float(sum(c.weight for c in problem.criteria))
    if total <= 0 or not np.isfinite(total):
        raise InvalidProblemError(
            [Violation("WeightSumViolation", "criteria", f"weights sum to {total!r} and cannot be rescaled")]
        )
    criteria = tuple(replace(c, weight=c.weight / total) for c in problem.criteria)
    return DecisionProblem(problem.alternatives, criteria, problem.scores)


def normalize(problem: ValidatedProblem) -> NormalizedMatrix:
    """Divide each score by its column's Euclidean norm (column-wise over
    alternatives), leaving every column with unit norm."""
    norms = np.sqrt((problem.scores**2).sum(axis=0))
    return NormalizedMatrix(problem.scores / norms)


def apply_weights(norm: NormalizedMatrix, criteria: Sequence[Criterion]) -> WeightedMatrix:
    """Scale each normalized column by its criterion weight."""
    if norm.values.shape[1] != len(criteria):
        raise InvalidProblemError(
            [
                Violation(
                    "DimensionMismatch",
                    "criteria",
                    f"matrix has {norm.values.shape[1]} columns but {len(criteria)} criteria were given",
                )
            ]
        )
    weights = np.array([c.weight for c in criteria])
    return WeightedMatrix(norm.values * weights)


def ideal_solutions(
    weighted: WeightedMatrix, criteria: Sequence[Criterion], mode: IdealMode = IdealMode.HONOR_KINDS
) -> IdealSolutions:
    """Per-criterion best/worst weighted values.

    honor-kinds: the positive ideal takes the column maximum for benefit
    criteria and the minimum for cost criteria (the negative ideal mirrors
    this).  all-benefit: maximum for the positive ideal on every column.
    """
    if weighted.values.shape[1] != len(criteria):
        raise InvalidProblemError(
            [
                Violation(
                    "DimensionMismatch",
                    "criteria",
                    f"matrix has {weighted.values.shape[1]} columns but {len(criteria)} criteria were given",
                )
            ]
        )
    mode = IdealMode(mode)
    highs = weighted.values.max(axis=0)
    lows = weighted.values.min(axis=0)
    if mode is IdealMode.ALL_BENEFIT:
        return IdealSolutions(highs, lows, mode)
    is_benefit = np.array([c.kind is CriterionKind.BENEFIT for c in criteria])
    return IdealSolutions(np.where(is_benefit, highs, lows), np.where(is_benefit, lows, highs), mode)


def separations(
    weighted: WeightedMatrix, ideals: IdealSolutions, distance: Distance = Distance.EUCLIDEAN
) -> SeparationMeasures:
    """Distance of each weighted row from the positive and negative ideals."""
    if weighted.values.shape[1] != ideals.pis.shape[0]:
        raise InvalidProblemError(
            [Violation("DimensionMismatch", "ideals", "ideal vectors do not match matrix width")]
        )
    distance = Distance(distance)
    sq_plus = ((weighted.values - ideals.pis) ** 2).sum(axis=1)
    sq_minus = ((weighted.values - ideals.nis) ** 2).sum(axis=1)
    if distance is Distance.SQUARED:
        return SeparationMeasures(sq_plus, sq_minus, distance)
    return SeparationMeasures(np.sqrt(sq_plus), np.sqrt(sq_minus), distance)


def closeness(sep: SeparationMeasures) -> np.ndarray:
    """Closeness ratio s_minus / (s_plus + s_minus), one value per alternative.

    Refuses to invent a value when an alternative sits at zero distance from
    both ideals (only possible when all alternatives are identical after
    weighting).
    """
    denom = sep.s_plus + sep.s_minus
    if np.any(denom == 0):
        raise DegenerateProblemError()
    return sep.s_minus / denom


def rank(closeness_values: np.ndarray, alternatives: Sequence[str]) -> np.ndarray:
    """Rank per alternative: 1 for the highest closeness, ties broken by
    input order (stable)."""
    closeness_values = np.asarray(closeness_values, dtype=float)
    if closeness_values.shape[0] != len(alternatives):
        raise InvalidProblemError(
            [Violation("DimensionMismatch", "alternatives", "closeness length does not match alternatives")]
        )
    order = np.argsort(-closeness_values, kind="stable")
    ranks = np.empty(len(alternatives), dtype=int)
    ranks[order] = np.arange(1, len(alternatives) + 1)
    return ranks


def _evaluate_validated(problem: ValidatedProblem, options: EvalOptions, weights_rescaled: bool = False) -> RankingReport:
    norm = normalize(problem)
    weighted = apply_weights(norm, problem.criteria)
    ideals = ideal_solutions(weighted, problem.criteria, options.ideal_mode)
    seps = separations(weighted, ideals, options.distance)
    close = closeness(seps)
    ranks = rank(close, problem.alternatives)
    return RankingReport(
        problem=problem,
        closeness=close,
        ranks=ranks,
        normalized=norm,
        weighted=weighted,
        ideals=ideals,
        separations=seps,
        options=options,
        weights_rescaled=weights_rescaled,
    )


def evaluate(problem: DecisionProblem, options: EvalOptions = EvalOptions()) -> RankingReport:
    """Run the full pipeline and return a report carrying every intermediate."""
    rescaled = False
    if options.normalize_weights:
        total = float(sum(c.weight for c in problem.criteria))
        if problem.criteria and abs(total - 1.0) > 1e-12:
            problem = rescale_weights(problem)
            rescaled = True
    problem = validate_problem(problem)
    return _evaluate_validated(problem, options, weights_rescaled=rescaled)
