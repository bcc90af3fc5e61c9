"""Bundled case study: six supply-chain improvement factors scored 1-9
against four criteria by department heads of a coil-winding machine
manufacturer.  Ships in-repo as ``fixtures/paper-case``."""

from __future__ import annotations

from .core import Criterion, CriterionKind, DecisionProblem

CASE_STUDY_ALTERNATIVES = (
    "On-time information sharing",
    "Supplier relationship",
    "Information technology",
    "Inventory planning",
    "5S in the shop floor",
    "Overall labour effectiveness",
)

CASE_STUDY_CRITERIA = (
    Criterion("On-time delivery", CriterionKind.BENEFIT, 0.5),
    Criterion("Production flexibility", CriterionKind.BENEFIT, 0.1),
    Criterion("Cost effectiveness", CriterionKind.BENEFIT, 0.3),
    Criterion("Additional cost", CriterionKind.COST, 0.1),
)

CASE_STUDY_SCORES = (
    (7, 6, 7, 7),
    (8, 8, 7, 6),
    (7, 6, 6, 6),
    (8, 7, 8, 6),
    (6, 6, 6, 6),
    (7, 8, 6, 6),
)


def supply_chain_case() -> DecisionProblem:
    """The bundled supply-chain factor-ranking problem."""
    return DecisionProblem(CASE_STUDY_ALTERNATIVES, CASE_STUDY_CRITERIA, CASE_STUDY_SCORES)
