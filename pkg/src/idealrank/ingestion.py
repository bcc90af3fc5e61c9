"""Parsing and aggregation of decision problems and survey scoresheets.

Two problem formats are supported:

* structured-object: a UTF-8 JSON object with keys ``criteria`` (array of
  ``{name, kind, weight}``), ``alternatives`` (array of names), and
  ``scores`` (row-major array of arrays).
* delimited-table: comma-separated, one self-contained file: first row
  ``alternative`` plus criterion names, second row ``kind`` plus
  benefit/cost, third row ``weight`` plus weights, then one row per
  alternative (name followed by its scores).

Scoresheets are comma-separated with header
``respondent,alternative,criterion,score`` and integer scores 1..9.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .core import Criterion, CriterionKind, DecisionProblem
from .errors import InvalidProblemError, ParseError, Violation

SCORE_MIN = 1
SCORE_MAX = 9

STRUCTURED_OBJECT = "structured-object"
DELIMITED_TABLE = "delimited-table"


class AggregateMethod(str, Enum):
    MEAN = "arithmetic-mean"
    MEDIAN = "median"


@dataclass(frozen=True)
class Scoresheet:
    """One respondent's scores over (alternative, criterion) pairs."""

    respondent: str
    entries: tuple[tuple[str, str, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(e) for e in self.entries))


def _decode(data: bytes) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError([Violation("SyntaxError", f"byte {exc.start}", "input is not valid UTF-8")]) from exc


def _schema_error(path: str, message: str) -> ParseError:
    return ParseError([Violation("SchemaError", path, message)])


def _parse_structured_object(text: str) -> DecisionProblem:
    if not text.strip():
        raise ParseError([Violation("SyntaxError", "line 1", "document is empty")])
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            [Violation("SyntaxError", f"line {exc.lineno}, column {exc.colno}", exc.msg)]
        ) from exc
    return problem_from_document(doc)


def problem_from_document(doc) -> DecisionProblem:
    """Build a DecisionProblem from an already-decoded structured object."""
    if not isinstance(doc, dict):
        raise _schema_error("$", "top level must be an object")
    for key in ("criteria", "alternatives", "scores"):
        if key not in doc:
            raise _schema_error("$", f"missing required field {key!r}")

    raw_criteria = doc["criteria"]
    if not isinstance(raw_criteria, list):
        raise _schema_error("criteria", "must be an array")
    criteria = []
    for j, entry in enumerate(raw_criteria):
        if not isinstance(entry, dict):
            raise _schema_error(f"criteria[{j}]", "must be an object")
        for key in ("name", "kind", "weight"):
            if key not in entry:
                raise _schema_error(f"criteria[{j}]", f"missing required field {key!r}")
        if not isinstance(entry["name"], str):
            raise _schema_error(f"criteria[{j}].name", "must be a string")
        try:
            kind = CriterionKind(entry["kind"])
        except ValueError:
            raise _schema_error(f"criteria[{j}].kind", f"must be 'benefit' or 'cost', got {entry['kind']!r}") from None
        if not isinstance(entry["weight"], (int, float)) or isinstance(entry["weight"], bool):
            raise _schema_error(f"criteria[{j}].weight", "must be a number")
        criteria.append(Criterion(entry["name"], kind, float(entry["weight"])))

    raw_alternatives = doc["alternatives"]
    if not isinstance(raw_alternatives, list) or not all(isinstance(a, str) for a in raw_alternatives):
        raise _schema_error("alternatives", "must be an array of strings")

    raw_scores = doc["scores"]
    if not isinstance(raw_scores, list):
        raise _schema_error("scores", "must be an array of arrays")
    if len(raw_scores) != len(raw_alternatives):
        raise _schema_error(
            "scores", f"{len(raw_alternatives)} alternatives declared but {len(raw_scores)} score rows given"
        )
    matrix: list[list[float]] = []
    for i, row in enumerate(raw_scores):
        if not isinstance(row, list):
            raise _schema_error(f"scores[{i}]", "must be an array of numbers")
        if len(row) != len(criteria):
            raise _schema_error(
                f"scores[{i}]", f"{len(criteria)} criteria declared but {len(row)} score columns given"
            )
        for j, value in enumerate(row):
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise _schema_error(f"scores[{i}][{j}]", "must be a number")
        matrix.append([float(v) for v in row])

    if not matrix:
        return DecisionProblem(tuple(raw_alternatives), tuple(criteria), np.zeros((0, len(criteria))))
    return DecisionProblem(tuple(raw_alternatives), tuple(criteria), matrix)


def _csv_rows(text: str, path_label: str = "line") -> list[tuple[int, list[str]]]:
    reader = csv.reader(io.StringIO(text))
    try:
        return [(lineno, row) for lineno, row in enumerate(reader, start=1)]
    except csv.Error as exc:
        raise ParseError([Violation("SyntaxError", f"{path_label} {reader.line_num}", str(exc))]) from exc


def _parse_delimited_table(text: str) -> DecisionProblem:
    rows = [r for r in _csv_rows(text) if r[1]]
    if not rows:
        raise ParseError([Violation("SyntaxError", "line 1", "document is empty")])
    if len(rows) < 3:
        raise _schema_error("line 1-3", "expected header, kind, and weight rows before alternatives")

    (_, header), (kind_line, kind_row), (weight_line, weight_row) = rows[0], rows[1], rows[2]
    if not header or header[0] != "alternative":
        raise _schema_error("line 1", "first cell must be 'alternative'")
    names = header[1:]
    if not kind_row or kind_row[0] != "kind":
        raise _schema_error(f"line {kind_line}", "second row must start with 'kind'")
    if not weight_row or weight_row[0] != "weight":
        raise _schema_error(f"line {weight_line}", "third row must start with 'weight'")
    if len(kind_row) != len(header):
        raise _schema_error(f"line {kind_line}", f"expected {len(names)} kinds, got {len(kind_row) - 1}")
    if len(weight_row) != len(header):
        raise _schema_error(f"line {weight_line}", f"expected {len(names)} weights, got {len(weight_row) - 1}")

    criteria = []
    for j, name in enumerate(names):
        try:
            kind = CriterionKind(kind_row[j + 1])
        except ValueError:
            raise _schema_error(
                f"line {kind_line}, column {j + 2}", f"must be 'benefit' or 'cost', got {kind_row[j + 1]!r}"
            ) from None
        try:
            weight = float(weight_row[j + 1])
        except ValueError:
            raise _schema_error(
                f"line {weight_line}, column {j + 2}", f"weight must be a number, got {weight_row[j + 1]!r}"
            ) from None
        criteria.append(Criterion(name, kind, weight))

    alternatives = []
    matrix = []
    for lineno, row in rows[3:]:
        if len(row) != len(header):
            raise _schema_error(
                f"line {lineno}", f"{len(names)} criteria declared but {len(row) - 1} score columns given"
            )
        alternatives.append(row[0])
        try:
            matrix.append([float(v) for v in row[1:]])
        except ValueError as exc:
            raise _schema_error(f"line {lineno}", f"score must be a number: {exc}") from None

    return DecisionProblem(tuple(alternatives), tuple(criteria), matrix)


def parse_problem(data: bytes | str, format: str = STRUCTURED_OBJECT) -> DecisionProblem:
    """Parse a problem document; lossless and order-preserving.

    Semantic checks (weight sums, positivity) are left to validate_problem.
    """
    text = _decode(data)
    if format == STRUCTURED_OBJECT:
        return _parse_structured_object(text)
    if format == DELIMITED_TABLE:
        return _parse_delimited_table(text)
    raise ValueError(f"unknown problem format {format!r}")


def serialize_problem(problem: DecisionProblem, format: str = STRUCTURED_OBJECT) -> bytes:
    """Serialize so that parse_problem(serialize_problem(p)) == p."""
    if format == STRUCTURED_OBJECT:
        doc = {
            "criteria": [
                {"name": c.name, "kind": c.kind.value, "weight": c.weight} for c in problem.criteria
            ],
            "alternatives": list(problem.alternatives),
            "scores": problem.scores.tolist(),
        }
        return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if format == DELIMITED_TABLE:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["alternative", *problem.criterion_names])
        writer.writerow(["kind", *(c.kind.value for c in problem.criteria)])
        writer.writerow(["weight", *(repr(c.weight) for c in problem.criteria)])
        for name, row in zip(problem.alternatives, problem.scores):
            writer.writerow([name, *(repr(float(v)) for v in row)])
        return out.getvalue().encode("utf-8")
    raise ValueError(f"unknown problem format {format!r}")


SCORESHEET_HEADER = ["respondent", "alternative", "criterion", "score"]


def parse_scoresheets(data: bytes | str) -> list[Scoresheet]:
    """Parse delimited survey rows into one Scoresheet per respondent.

    Respondents appear in order of first occurrence; entries keep file order.
    """
    text = _decode(data)
    rows = [r for r in _csv_rows(text) if r[1]]
    if not rows:
        raise ParseError([Violation("SyntaxError", "line 1", "document is empty")])
    header_line, header = rows[0]
    if header != SCORESHEET_HEADER:
        raise ParseError(
            [
                Violation(
                    "SyntaxError",
                    f"line {header_line}",
                    f"expected header {','.join(SCORESHEET_HEADER)!r}, got {','.join(header)!r}",
                )
            ]
        )

    entries: dict[str, list[tuple[str, str, int]]] = {}
    seen: set[tuple[str, str, str]] = set()
    for lineno, row in rows[1:]:
        if len(row) != 4:
            raise ParseError(
                [Violation("SyntaxError", f"line {lineno}", f"expected 4 fields, got {len(row)}")]
            )
        respondent, alternative, criterion, raw_score = row
        key = (respondent, alternative, criterion)
        if key in seen:
            raise ParseError(
                [
                    Violation(
                        "DuplicateEntry",
                        f"line {lineno}",
                        f"({respondent!r}, {alternative!r}, {criterion!r}) already scored",
                    )
                ]
            )
        seen.add(key)
        try:
            score = int(raw_score)
            if str(score) != raw_score.strip():
                raise ValueError
        except ValueError:
            raise ParseError(
                [Violation("ScoreRangeError", f"line {lineno}", f"score must be an integer, got {raw_score!r}")]
            ) from None
        if not SCORE_MIN <= score <= SCORE_MAX:
            raise ParseError(
                [
                    Violation(
                        "ScoreRangeError",
                        f"line {lineno}",
                        f"score must lie in {SCORE_MIN}..{SCORE_MAX}, got {score}",
                    )
                ]
            )
        entries.setdefault(respondent, []).append((alternative, criterion, score))

    return [Scoresheet(respondent, tuple(rows)) for respondent, rows in entries.items()]


def aggregate(
    sheets: Sequence[Scoresheet],
    method: AggregateMethod | str,
    criteria: Sequence[Criterion],
    alternatives: Sequence[str],
) -> DecisionProblem:
    """Combine respondent scoresheets into one decision matrix.

    Each cell is the chosen aggregate (arithmetic mean or median) of all
    respondents' scores for that (alternative, criterion) pair, kept as a
    real with no rounding.  Values are summed in sorted order so the result
    is invariant to respondent order.
    """
    method = AggregateMethod(method)
    if not sheets:
        raise InvalidProblemError([Violation("EmptyProblem", "sheets", "at least one scoresheet is required")])

    alt_index = {name: i for i, name in enumerate(alternatives)}
    crit_index = {c.name: j for j, c in enumerate(criteria)}
    cells: dict[tuple[int, int], list[int]] = {}
    violations: list[Violation] = []

    for sheet in sheets:
        covered: set[tuple[int, int]] = set()
        for alternative, criterion, score in sheet.entries:
            if alternative not in alt_index:
                violations.append(
                    Violation("UnknownName", f"sheet[{sheet.respondent}]", f"unknown alternative {alternative!r}")
                )
                continue
            if criterion not in crit_index:
                violations.append(
                    Violation("UnknownName", f"sheet[{sheet.respondent}]", f"unknown criterion {criterion!r}")
                )
                continue
            cell = (alt_index[alternative], crit_index[criterion])
            covered.add(cell)
            cells.setdefault(cell, []).append(score)
        missing = [
            (a, c) for a in alternatives for c in crit_index if (alt_index[a], crit_index[c]) not in covered
        ]
        for alternative, criterion in missing:
            violations.append(
                Violation(
                    "IncompleteSheet",
                    f"sheet[{sheet.respondent}]",
                    f"missing score for ({alternative!r}, {criterion!r})",
                )
            )
    if violations:
        raise InvalidProblemError(violations)

    matrix = [[0.0] * len(criteria) for _ in alternatives]
    for (i, j), values in cells.items():
        ordered = sorted(values)
        if method is AggregateMethod.MEAN:
            matrix[i][j] = sum(ordered) / len(ordered)
        else:
            mid = len(ordered) // 2
            if len(ordered) % 2:
                matrix[i][j] = float(ordered[mid])
            else:
                matrix[i][j] = (ordered[mid - 1] + ordered[mid]) / 2.0

    return DecisionProblem(tuple(alternatives), tuple(criteria), matrix)
