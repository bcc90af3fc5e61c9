"""Command-line interface: rank, explain, sweep, stability, validate, serve.

Problem files may be structured-object (JSON) or delimited-table (CSV);
the format is sniffed from the first non-blank byte.  Every option can be
overridden by an ``IDEALRANK_``-prefixed environment variable.  Output is
byte-stable: the same invocation on the same files always prints the same
bytes.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import sys
from pathlib import Path

import click

from . import __version__
from .analysis import (
    ExplainReport,
    NoiseSpec,
    explain_from_report,
    monte_carlo_stability,
    weight_sweep,
)
from .core import (
    DecisionProblem,
    Distance,
    EvalOptions,
    IdealMode,
    RankingReport,
    collect_violations,
    evaluate,
    round_up,
)
from .errors import IdealrankError
from .ingestion import (
    DELIMITED_TABLE,
    STRUCTURED_OBJECT,
    AggregateMethod,
    aggregate,
    parse_problem,
    parse_scoresheets,
)


def _fmt4(value: float) -> str:
    return f"{float(round_up(value)):.4f}"


def _fmt_score(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else _fmt4(value)


def _grid(title: str, headers: list[str], rows: list[list[str]], left: tuple[int, ...] = (0,)) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for k, cell in enumerate(row):
            widths[k] = max(widths[k], len(cell))

    def line(cells):
        return "  ".join(
            c.ljust(widths[k]) if k in left else c.rjust(widths[k]) for k, c in enumerate(cells)
        ).rstrip()

    return [title, line(headers), *(line(row) for row in rows)]


def _matrix_rows(names, matrix) -> list[list[str]]:
    return [[name, *(_fmt4(v) for v in row)] for name, row in zip(names, matrix)]


def render_table(report: RankingReport | ExplainReport) -> str:
    """Fixed-width text tables; 4-dp display rounding, columns in input
    criteria order."""
    if isinstance(report, RankingReport):
        return _render_ranking(report)
    return _render_explain(report)


def _render_ranking(report: RankingReport) -> str:
    problem = report.problem
    crits = list(problem.criterion_names)
    lines = [f"options: ideal-mode={report.options.ideal_mode.value} distance={report.options.distance.value}", ""]
    rows = [
        [str(report.ranks[i]), problem.alternatives[i], _fmt4(report.closeness[i])]
        for i in report.order
    ]
    lines += _grid("RANKING", ["rank", "alternative", "closeness"], rows, left=(1,))
    lines.append("")
    lines += _grid(
        "WEIGHTED NORMALIZED MATRIX",
        ["alternative", *crits],
        _matrix_rows(problem.alternatives, report.weighted.values),
    )
    lines.append("")
    lines += _grid(
        "IDEAL SOLUTIONS",
        ["solution", *crits],
        [["PIS", *(_fmt4(v) for v in report.ideals.pis)], ["NIS", *(_fmt4(v) for v in report.ideals.nis)]],
    )
    lines.append("")
    lines += _grid(
        "SEPARATION MEASURES",
        ["alternative", "s_plus", "s_minus"],
        [
            [problem.alternatives[i], _fmt4(report.separations.s_plus[i]), _fmt4(report.separations.s_minus[i])]
            for i in range(len(problem.alternatives))
        ],
    )
    return "\n".join(lines) + "\n"


def _render_explain(report: ExplainReport) -> str:
    crits = list(report.criteria)
    lines = [
        f"options: ideal-mode={report.options.ideal_mode.value} distance={report.options.distance.value}",
        "",
    ]
    decision_rows = [
        [name, *(_fmt_score(v) for v in row)] for name, row in zip(report.alternatives, report.decision_matrix)
    ]
    decision_rows.append(["kind", *report.kinds])
    decision_rows.append(["weight", *(_fmt4(w) for w in report.weights)])
    lines += _grid("DECISION MATRIX", ["alternative", *crits], decision_rows)
    lines.append("")
    lines += _grid("NORMALIZED MATRIX", ["alternative", *crits], _matrix_rows(report.alternatives, report.normalized))
    lines.append("")
    lines += _grid("WEIGHTED NORMALIZED MATRIX", ["alternative", *crits], _matrix_rows(report.alternatives, report.weighted))
    lines.append("")
    lines += _grid(
        "IDEAL SOLUTIONS",
        ["solution", *crits],
        [["PIS", *(_fmt4(v) for v in report.pis)], ["NIS", *(_fmt4(v) for v in report.nis)]],
    )
    lines.append("")
    lines += _grid(
        "SEPARATION MEASURES",
        ["alternative", "s_plus", "s_minus"],
        [
            [name, _fmt4(report.s_plus[i]), _fmt4(report.s_minus[i])]
            for i, name in enumerate(report.alternatives)
        ],
    )
    lines.append("")
    lines += _grid(
        "CLOSENESS & RANKING",
        ["alternative", "closeness", "rank"],
        [
            [name, _fmt4(report.closeness[i]), str(report.ranks[i])]
            for i, name in enumerate(report.alternatives)
        ],
    )
    return "\n".join(lines) + "\n"


def _load_problem(problem_file: str, scoresheets: str | None, aggregate_method: str) -> DecisionProblem:
    data = Path(problem_file).read_bytes()
    stripped = data.lstrip()
    fmt = STRUCTURED_OBJECT if stripped.startswith(b"{") else DELIMITED_TABLE
    problem = parse_problem(data, fmt)
    if scoresheets:
        sheets = parse_scoresheets(Path(scoresheets).read_bytes())
        method = AggregateMethod.MEAN if aggregate_method == "mean" else AggregateMethod.MEDIAN
        problem = aggregate(sheets, method, problem.criteria, problem.alternatives)
    return problem


def _user_errors(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except IdealrankError as exc:
            for violation in exc.violations:
                where = f" at {violation.path}" if violation.path else ""
                click.echo(f"error: {violation.code}{where}: {violation.message}", err=True)
            if not exc.violations:
                click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


_PROBLEM_ARG = click.argument("problem_file", type=click.Path(exists=True, dir_okay=False))


def _eval_flags(f):
    f = click.option(
        "--ideal-mode",
        type=click.Choice([m.value for m in IdealMode]),
        default=IdealMode.HONOR_KINDS.value,
        envvar="IDEALRANK_IDEAL_MODE",
        show_default=True,
        help="How cost criteria shape the ideal solutions.",
    )(f)
    f = click.option(
        "--distance",
        type=click.Choice([d.value for d in Distance]),
        default=Distance.EUCLIDEAN.value,
        envvar="IDEALRANK_DISTANCE",
        show_default=True,
        help="Separation measure.",
    )(f)
    f = click.option(
        "--normalize-weights",
        is_flag=True,
        envvar="IDEALRANK_NORMALIZE_WEIGHTS",
        help="Rescale weights to sum to 1 instead of rejecting the problem.",
    )(f)
    return f


def _io_flags(f):
    f = click.option(
        "--format",
        "output_format",
        type=click.Choice(["table", "object", "delimited"]),
        default="table",
        envvar="IDEALRANK_FORMAT",
        show_default=True,
        help="Output format.",
    )(f)
    f = click.option(
        "--scoresheets",
        type=click.Path(exists=True, dir_okay=False),
        default=None,
        envvar="IDEALRANK_SCORESHEETS",
        help="Aggregate survey scoresheets into the score matrix "
        "(criteria, alternatives, and weights come from the problem file).",
    )(f)
    f = click.option(
        "--aggregate",
        "aggregate_method",
        type=click.Choice(["mean", "median"]),
        default="mean",
        envvar="IDEALRANK_AGGREGATE",
        show_default=True,
        help="Scoresheet aggregation method.",
    )(f)
    return f


def _options_from_flags(ideal_mode: str, distance: str, normalize_weights: bool) -> EvalOptions:
    return EvalOptions(IdealMode(ideal_mode), Distance(distance), normalize_weights)


def _echo_json(doc: dict) -> None:
    click.echo(json.dumps(doc, indent=2, ensure_ascii=False))


def _csv_text(header: list[str], rows: list[list]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__)
def main():
    """Deterministic multi-criteria ranking over benefit/cost criteria."""


@main.command("rank")
@_PROBLEM_ARG
@_eval_flags
@_io_flags
@_user_errors
def rank_command(problem_file, ideal_mode, distance, normalize_weights, output_format, scoresheets, aggregate_method):
    """Rank the alternatives of a problem file."""
    problem = _load_problem(problem_file, scoresheets, aggregate_method)
    report = evaluate(problem, _options_from_flags(ideal_mode, distance, normalize_weights))
    if output_format == "table":
        click.echo(render_table(report), nl=False)
    elif output_format == "object":
        doc = report.to_document()
        doc["version"] = __version__
        _echo_json(doc)
    else:
        rows = [
            [report.problem.alternatives[i], repr(float(report.closeness[i])), int(report.ranks[i])]
            for i in report.order
        ]
        click.echo(_csv_text(["alternative", "closeness", "rank"], rows), nl=False)


@main.command("explain")
@_PROBLEM_ARG
@_eval_flags
@_io_flags
@_user_errors
def explain_command(problem_file, ideal_mode, distance, normalize_weights, output_format, scoresheets, aggregate_method):
    """Show every intermediate table of the ranking pipeline."""
    problem = _load_problem(problem_file, scoresheets, aggregate_method)
    report = evaluate(problem, _options_from_flags(ideal_mode, distance, normalize_weights))
    detail = explain_from_report(report)
    if output_format == "table":
        click.echo(render_table(detail), nl=False)
    elif output_format == "object":
        doc = detail.to_document()
        doc["version"] = __version__
        _echo_json(doc)
    else:
        rows = []
        for i, alt in enumerate(detail.alternatives):
            for j, crit in enumerate(detail.criteria):
                rows.append(["decision_matrix", alt, crit, repr(float(detail.decision_matrix[i][j]))])
        for table, matrix in (("normalized", detail.normalized), ("weighted", detail.weighted)):
            for i, alt in enumerate(detail.alternatives):
                for j, crit in enumerate(detail.criteria):
                    rows.append([table, alt, crit, repr(float(matrix[i][j]))])
        for j, crit in enumerate(detail.criteria):
            rows.append(["ideals", "PIS", crit, repr(float(detail.pis[j]))])
        for j, crit in enumerate(detail.criteria):
            rows.append(["ideals", "NIS", crit, repr(float(detail.nis[j]))])
        for i, alt in enumerate(detail.alternatives):
            rows.append(["separations", alt, "s_plus", repr(float(detail.s_plus[i]))])
            rows.append(["separations", alt, "s_minus", repr(float(detail.s_minus[i]))])
        for i, alt in enumerate(detail.alternatives):
            rows.append(["closeness", alt, "closeness", repr(float(detail.closeness[i]))])
            rows.append(["closeness", alt, "rank", str(int(detail.ranks[i]))])
        click.echo(_csv_text(["table", "row", "column", "value"], rows), nl=False)


@main.command("sweep")
@_PROBLEM_ARG
@click.option("--criterion", required=True, envvar="IDEALRANK_CRITERION", help="Criterion whose weight is swept.")
@click.option(
    "--steps",
    type=click.IntRange(min=2),
    default=11,
    envvar="IDEALRANK_STEPS",
    show_default=True,
    help="Number of grid points over [0, 1].",
)
@_eval_flags
@_io_flags
@_user_errors
def sweep_command(
    problem_file, criterion, steps, ideal_mode, distance, normalize_weights, output_format, scoresheets, aggregate_method
):
    """Sweep one criterion's weight across [0, 1] and track rank changes."""
    problem = _load_problem(problem_file, scoresheets, aggregate_method)
    result = weight_sweep(problem, criterion, steps, _options_from_flags(ideal_mode, distance, normalize_weights))
    if output_format == "object":
        doc = result.to_document()
        doc["version"] = __version__
        _echo_json(doc)
        return
    if output_format == "delimited":
        rows = []
        for point in result.points:
            if point.degenerate:
                rows.append([repr(point.weight), "", "", "degenerate"])
                continue
            for i, alt in enumerate(problem.alternatives):
                rows.append([repr(point.weight), alt, repr(float(point.closeness[i])), int(point.ranks[i])])
        click.echo(_csv_text(["weight", "alternative", "closeness", "rank"], rows), nl=False)
        return
    rows = []
    for point in result.points:
        if point.degenerate:
            rows.append([_fmt4(point.weight), "(degenerate)", ""])
        else:
            top = point.top
            rows.append([_fmt4(point.weight), problem.alternatives[top], _fmt4(point.closeness[top])])
    lines = _grid(f"WEIGHT SWEEP: {result.criterion}", ["weight", "top alternative", "closeness"], rows, left=(1,))
    lines.append("")
    if result.crossovers:
        cross_rows = [
            [_fmt4(c.lower), _fmt4(c.upper), c.previous_top, c.new_top] for c in result.crossovers
        ]
        lines += _grid(
            "TOP-RANK CROSSOVERS", ["from weight", "to weight", "previous top", "new top"], cross_rows, left=(2, 3)
        )
    else:
        lines.append("TOP-RANK CROSSOVERS: none")
    click.echo("\n".join(lines))


@main.command("stability")
@_PROBLEM_ARG
@click.option("--trials", type=click.IntRange(min=1), default=1000, envvar="IDEALRANK_TRIALS", show_default=True)
@click.option("--seed", type=int, default=0, envvar="IDEALRANK_SEED", show_default=True)
@click.option(
    "--magnitude",
    type=click.IntRange(min=0),
    default=1,
    envvar="IDEALRANK_MAGNITUDE",
    show_default=True,
    help="Integer jitter magnitude (scores stay clamped to 1..9).",
)
@_eval_flags
@_io_flags
@_user_errors
def stability_command(
    problem_file,
    trials,
    seed,
    magnitude,
    ideal_mode,
    distance,
    normalize_weights,
    output_format,
    scoresheets,
    aggregate_method,
):
    """Rank-frequency matrix under random score jitter."""
    problem = _load_problem(problem_file, scoresheets, aggregate_method)
    report = monte_carlo_stability(
        problem,
        NoiseSpec(magnitude=magnitude),
        trials=trials,
        seed=seed,
        options=_options_from_flags(ideal_mode, distance, normalize_weights),
    )
    if output_format == "object":
        doc = report.to_document()
        doc["version"] = __version__
        _echo_json(doc)
        return
    if output_format == "delimited":
        rows = [
            [alt, r + 1, int(report.frequency[i, r])]
            for i, alt in enumerate(report.alternatives)
            for r in range(len(report.alternatives))
        ]
        click.echo(_csv_text(["alternative", "rank", "count"], rows), nl=False)
        return
    n = len(report.alternatives)
    rows = [
        [alt, *(str(int(report.frequency[i, r])) for r in range(n))]
        for i, alt in enumerate(report.alternatives)
    ]
    lines = _grid(
        f"RANK FREQUENCIES ({report.trials} trials, seed {report.seed}, jitter ±{report.noise.magnitude})",
        ["alternative", *(f"rank {r + 1}" for r in range(n))],
        rows,
    )
    lines.append("")
    if report.modal_ranking is None:
        lines.append("modal ranking: none (all trials degenerate)")
    else:
        order = sorted(range(n), key=lambda i: report.modal_ranking[i])
        lines.append(
            "modal ranking: "
            + " > ".join(report.alternatives[i] for i in order)
            + f" ({report.modal_count}/{report.trials} trials)"
        )
    lines.append(f"degenerate trials: {report.degenerate_trials}")
    click.echo("\n".join(lines))


@main.command("validate")
@_PROBLEM_ARG
@_io_flags
@_user_errors
def validate_command(problem_file, output_format, scoresheets, aggregate_method):
    """Check a problem file against every structural invariant."""
    problem = _load_problem(problem_file, scoresheets, aggregate_method)
    violations = collect_violations(problem)
    if violations:
        for violation in violations:
            click.echo(f"error: {violation.code} at {violation.path}: {violation.message}", err=True)
        sys.exit(1)
    click.echo("valid")


@main.command("serve")
@click.option("--host", default="127.0.0.1", envvar="IDEALRANK_HOST", show_default=True)
@click.option("--port", type=int, default=8000, envvar="IDEALRANK_PORT", show_default=True)
def serve_command(host, port):
    """Start the HTTP ranking service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
