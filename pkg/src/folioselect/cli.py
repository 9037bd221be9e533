"""Command-line interface for batch use.

Every listing subcommand accepts ``--format table`` (aligned text, the
default) or ``--format records`` (one JSON object per line).  Exit codes are
stable per error class so scripts can branch on them:

    0 success, 2 validation, 3 not found, 4 unparseable document,
    5 enumeration cap, 6 invalid input, 7 I/O failure
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import storage
from .classify import CriteriaPair, classify_portfolio
from .errors import (
    DocumentError,
    EnumerationCapError,
    FolioError,
    InvalidInputError,
    NotFoundError,
    ValidationError,
)
from .evaluate import (
    DEFAULT_ENUMERATION_CAP,
    enumerate_alternatives,
    evaluate_alternative,
    pareto_frontier,
)
from .model import Workspace, validate_workspace

EXIT_CODES = [
    (ValidationError, 2),
    (NotFoundError, 3),
    (DocumentError, 4),
    (EnumerationCapError, 5),
    (InvalidInputError, 6),
]


def _exit_code(error: Exception) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(error, cls):
            return code
    if isinstance(error, OSError):
        return 7
    return 1


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (FolioError, OSError) as error:
            click.echo(f"error: {error}", err=True)
            if isinstance(error, ValidationError):
                for violation in error.violations:
                    click.echo(f"  {violation}", err=True)
            sys.exit(_exit_code(error))

    return wrapper


def _num(x: float) -> str:
    return f"{x:.6g}"


def emit_table(headers: list[str], rows: list[list[str]]):
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    click.echo(fmt.format(*headers))
    click.echo(fmt.format(*("-" * w for w in widths)))
    for row in rows:
        click.echo(fmt.format(*row))


def emit_records(records: list[dict]):
    for record in records:
        click.echo(json.dumps(record, sort_keys=True, allow_nan=False))


format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(["table", "records"]),
    default="table",
    show_default=True,
    help="Human table or one JSON record per line.",
)


@click.group()
@click.version_option(package_name="folioselect")
def cli():
    """Project portfolio selection workbench."""


@cli.command()
@click.argument("workspace_path", metavar="WORKSPACE", type=click.Path())
@click.option(
    "--preferred-pair",
    type=click.Choice([p.value for p in CriteriaPair]),
    default=None,
    help="Promote the matching two-favorable case to the head of the prioritize rubric.",
)
@format_option
@handle_errors
def classify(workspace_path, preferred_pair, output_format):
    """Print the rubric classification of every project."""
    ws = storage.load(workspace_path)
    pair = CriteriaPair(preferred_pair) if preferred_pair else None
    classified = classify_portfolio(ws.projects, ws.thresholds, preferred_pair=pair)
    records = [storage.classified_to_doc(ws.project(c.project_id), c) for c in classified]
    if output_format == "records":
        emit_records(records)
        return
    emit_table(
        ["rubric", "decision", "project", "name", "case", "signs", "margin"],
        [
            [r["rubric"], r["decision"], r["project_id"], r["name"], str(r["case_index"]), r["signs"], _num(r["margin"])]
            for r in records
        ],
    )


@cli.command()
@click.argument("workspace_path", metavar="WORKSPACE", type=click.Path())
@click.option("--alternative", "alternative_id", required=True, help="Id of a stored alternative.")
@format_option
@handle_errors
def evaluate(workspace_path, alternative_id, output_format):
    """Evaluate one stored alternative: strategic value, cost and duration deltas."""
    ws = storage.load(workspace_path)
    alt = ws.alternative(alternative_id)
    result = evaluate_alternative(ws, alt)
    doc = storage.evaluation_to_doc(result)
    if output_format == "records":
        emit_records([{"record": "summary", "alternative_id": alt.id, **{
            k: doc[k] for k in ("strategic_value", "global_cost_delta", "global_duration_delta", "action_order")
        }}] + [{"record": "projection", **row} for row in doc["per_project"]])
        return
    click.echo(f"alternative   {alt.id} ({alt.label})")
    click.echo(f"V_sp          {_num(result.strategic_value)}")
    click.echo(f"C_G           {_num(result.global_cost_delta)}")
    click.echo(f"D_G           {_num(result.global_duration_delta)}")
    click.echo("actions       " + (" -> ".join(f"{k}:{p}" for k, p in result.action_order) or "(none)"))
    if result.per_project:
        click.echo("")
        emit_table(
            ["project", "cost", "cost'", "dC", "k*dC", "dur", "dur'", "dD", "l*dD", "flags"],
            [
                [
                    row.project_id,
                    _num(row.base_cost),
                    _num(row.projected_cost),
                    _num(row.cost_delta),
                    _num(row.weighted_cost_delta),
                    _num(row.base_duration),
                    _num(row.projected_duration),
                    _num(row.duration_delta),
                    _num(row.weighted_duration_delta),
                    ",".join(
                        flag
                        for flag, on in (("absorbed", row.absorbed), ("halted", row.halted))
                        if on
                    ),
                ]
                for row in result.per_project
            ],
        )


@cli.command()
@click.argument("workspace_path", metavar="WORKSPACE", type=click.Path())
@click.option(
    "--candidates",
    required=True,
    help="Comma-separated candidate project ids to enumerate over.",
)
@click.option("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, show_default=True)
@format_option
@handle_errors
def enumerate(workspace_path, candidates, cap, output_format):
    """Evaluate every subset of the given candidates (exhaustive oracle)."""
    ws = storage.load(workspace_path)
    candidate_ids = [c.strip() for c in candidates.split(",") if c.strip()]
    evaluated = enumerate_alternatives(ws, candidate_ids, cap=cap)
    records = [
        {
            "id": alt.id,
            "label": alt.label,
            "added": [pid for _, pid in alt.derived.action_order],
            "strategic_value": alt.derived.strategic_value,
            "global_cost_delta": alt.derived.global_cost_delta,
            "global_duration_delta": alt.derived.global_duration_delta,
        }
        for alt in evaluated
    ]
    if output_format == "records":
        emit_records(records)
        return
    emit_table(
        ["id", "added", "V_sp", "C_G", "D_G"],
        [
            [r["id"], ",".join(r["added"]) or "-", _num(r["strategic_value"]), _num(r["global_cost_delta"]), _num(r["global_duration_delta"])]
            for r in records
        ],
    )


@cli.command()
@click.argument("workspace_path", metavar="WORKSPACE", type=click.Path())
@format_option
@handle_errors
def pareto(workspace_path, output_format):
    """Evaluate all stored alternatives and print the non-dominated ones."""
    ws = storage.load(workspace_path)
    evaluated = [alt.with_result(evaluate_alternative(ws, alt)) for alt in ws.alternatives]
    frontier, relation = pareto_frontier(evaluated)
    on_frontier = {alt.id for alt in frontier}
    records = [
        {
            "id": alt.id,
            "label": alt.label,
            "on_frontier": alt.id in on_frontier,
            "dominated_by": sorted(relation.dominators_of(alt.id)),
            "strategic_value": alt.derived.strategic_value,
            "global_cost_delta": alt.derived.global_cost_delta,
            "global_duration_delta": alt.derived.global_duration_delta,
        }
        for alt in evaluated
    ]
    if output_format == "records":
        emit_records(records)
        return
    emit_table(
        ["id", "frontier", "V_sp", "C_G", "D_G", "dominated by"],
        [
            [
                r["id"],
                "*" if r["on_frontier"] else "",
                _num(r["strategic_value"]),
                _num(r["global_cost_delta"]),
                _num(r["global_duration_delta"]),
                ",".join(r["dominated_by"]),
            ]
            for r in records
        ],
    )


@cli.command(name="import")
@click.argument("csv_path", metavar="CSV", type=click.Path())
@click.option(
    "--into",
    "workspace_path",
    required=True,
    type=click.Path(),
    help="Workspace document to add the projects to (created if missing).",
)
@handle_errors
def import_csv(csv_path, workspace_path):
    """Import projects from a CSV sheet into a workspace document."""
    projects = storage.import_projects_csv(csv_path)
    if Path(workspace_path).exists():
        ws = storage.load(workspace_path)
    else:
        ws = Workspace()
    merged = ws.with_projects(tuple(ws.projects) + tuple(projects))
    storage.save(merged, workspace_path)
    click.echo(f"imported {len(projects)} projects into {workspace_path}")


@cli.command()
@click.argument("workspace_path", metavar="WORKSPACE", type=click.Path())
@format_option
@handle_errors
def validate(workspace_path, output_format):
    """Check every workspace invariant; nonzero exit if any rule is broken."""
    # load() rejects rule-breaking documents outright; parse in two steps so
    # violations get reported as rows rather than as a refusal to load.
    raw = Path(workspace_path).read_bytes()
    try:
        parsed = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    ws = storage.workspace_from_doc(parsed)
    violations = validate_workspace(ws)
    records = [
        {"entity": v.entity, "rule": v.rule, "message": v.message} for v in violations
    ]
    if output_format == "records":
        emit_records(records)
    elif violations:
        emit_table(
            ["entity", "rule", "message"],
            [[r["entity"], r["rule"], r["message"]] for r in records],
        )
    else:
        click.echo("ok: no violations")
    if violations:
        sys.exit(2)


@cli.command()
@click.argument("workspace_path", metavar="WORKSPACE", type=click.Path())
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8750, show_default=True)
@handle_errors
def serve(workspace_path, host, port):
    """Serve the workspace over HTTP for the interactive workbench."""
    from .service import serve as run_service

    run_service(workspace_path, host=host, port=port)


def main():
    cli(prog_name="folioselect")


if __name__ == "__main__":
    main()
