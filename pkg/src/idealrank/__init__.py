"""idealrank: a deterministic TOPSIS decision engine.

Rank named alternatives against weighted benefit/cost criteria, inspect
every intermediate step, and probe how stable the ranking is under weight
and score perturbations.
"""

__version__ = "0.1.0"

from .analysis import (
    Crossover,
    ExplainReport,
    LeaveOneOutEntry,
    NoiseSpec,
    StabilityReport,
    SweepPoint,
    SweepResult,
    explain,
    explain_from_report,
    leave_one_out,
    monte_carlo_stability,
    trial_scores,
    weight_sweep,
)
from .core import (
    Criterion,
    CriterionKind,
    DecisionProblem,
    Distance,
    EvalOptions,
    IdealMode,
    IdealSolutions,
    NormalizedMatrix,
    RankingReport,
    SeparationMeasures,
    ValidatedProblem,
    WeightedMatrix,
    apply_weights,
    closeness,
    collect_violations,
    evaluate,
    ideal_solutions,
    normalize,
    rank,
    rescale_weights,
    round_up,
    separations,
    validate_problem,
)
from .errors import (
    DegenerateProblemError,
    IdealrankError,
    InvalidProblemError,
    ParseError,
    Violation,
)
from .fixtures import supply_chain_case
from .ingestion import (
    AggregateMethod,
    Scoresheet,
    aggregate,
    parse_problem,
    parse_scoresheets,
    problem_from_document,
    serialize_problem,
)

__all__ = [
    "__version__",
    "AggregateMethod",
    "Criterion",
    "CriterionKind",
    "Crossover",
    "DecisionProblem",
    "DegenerateProblemError",
    "Distance",
    "EvalOptions",
    "ExplainReport",
    "IdealMode",
    "IdealSolutions",
    "IdealrankError",
    "InvalidProblemError",
    "LeaveOneOutEntry",
    "NoiseSpec",
    "NormalizedMatrix",
    "ParseError",
    "RankingReport",
    "Scoresheet",
    "SeparationMeasures",
    "StabilityReport",
    "SweepPoint",
    "SweepResult",
    "ValidatedProblem",
    "Violation",
    "WeightedMatrix",
    "aggregate",
    "apply_weights",
    "closeness",
    "collect_violations",
    "evaluate",
    "explain",
    "explain_from_report",
    "ideal_solutions",
    "leave_one_out",
    "monte_carlo_stability",
    "normalize",
    "parse_problem",
    "parse_scoresheets",
    "problem_from_document",
    "rank",
    "rescale_weights",
    "round_up",
    "separations",
    "serialize_problem",
    "supply_chain_case",
    "trial_scores",
    "validate_problem",
    "weight_sweep",
]
