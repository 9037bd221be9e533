"""Workspace persistence and tabular ingestion.

The on-disk form is a single canonical JSON document: keys sorted, two-space
indent, UTF-8, floats at full round-trip precision, trailing newline.  Saving
a freshly loaded workspace reproduces the file byte for byte, which keeps
documents diff-friendly and makes equality checks trivial.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Union

from .errors import DocumentError, InvalidInputError, SchemaVersionError, ValidationError
from .model import (
    SCHEMA_VERSION,
    ActionKind,
    BenefitNetwork,
    BenefitObjectiveEdge,
    CriteriaScores,
    EvaluationResult,
    ImpactCoefficients,
    InteractionProfile,
    Objective,
    PortfolioAlternative,
    Project,
    ProjectBenefitEdge,
    Status,
    Thresholds,
    Workspace,
    validate_workspace,
)

PathLike = Union[str, Path]

CSV_HEADER = ["id", "name", "status", "cost", "duration", "value", "risk", "alignment"]


# --- document building -----------------------------------------------------

def thresholds_to_doc(t: Thresholds) -> dict:
    return {"value_ref": t.value_ref, "risk_ref": t.risk_ref, "alignment_ref": t.alignment_ref}


def project_to_doc(p: Project) -> dict:
    return {
        "id": p.id,
        "name": p.name,
        "status": p.status.value,
        "base_cost": p.base_cost,
        "base_duration": p.base_duration,
        "scores": {
            "value": p.scores.value,
            "risk": p.scores.risk,
            "alignment": p.scores.alignment,
        },
    }


def network_to_doc(n: BenefitNetwork) -> dict:
    return {
        "objectives": [{"id": o.id, "weight": o.weight} for o in n.objectives],
        "benefits": list(n.benefits),
        "project_benefit_edges": [
            {"project_id": e.project_id, "benefit_id": e.benefit_id, "contribution": e.contribution}
            for e in n.project_benefit_edges
        ],
        "benefit_objective_edges": [
            {"benefit_id": e.benefit_id, "objective_id": e.objective_id, "contribution": e.contribution}
            for e in n.benefit_objective_edges
        ],
    }


def profile_to_doc(p: InteractionProfile) -> dict:
    return {
        "action": p.action.value,
        "project_id": p.project_id,
        "impacts": {
            pid: {
                "cost_factor": c.cost_factor,
                "duration_factor": c.duration_factor,
                "cost_sensitivity": c.cost_sensitivity,
                "duration_sensitivity": c.duration_sensitivity,
            }
            for pid, c in sorted(p.impacts.items())
        },
    }


def alternative_to_doc(a: PortfolioAlternative) -> dict:
    return {
        "id": a.id,
        "label": a.label,
        "base_portfolio": sorted(a.base_portfolio),
        "actions": [profile_to_doc(action) for action in a.actions],
    }


def evaluation_to_doc(r: EvaluationResult) -> dict:
    return {
        "strategic_value": r.strategic_value,
        "global_cost_delta": r.global_cost_delta,
        "global_duration_delta": r.global_duration_delta,
        "per_project": [
            {
                "project_id": row.project_id,
                "base_cost": row.base_cost,
                "projected_cost": row.projected_cost,
                "cost_delta": row.cost_delta,
                "weighted_cost_delta": row.weighted_cost_delta,
                "base_duration": row.base_duration,
                "projected_duration": row.projected_duration,
                "duration_delta": row.duration_delta,
                "weighted_duration_delta": row.weighted_duration_delta,
                "absorbed": row.absorbed,
                "halted": row.halted,
            }
            for row in r.per_project
        ],
        "action_order": [list(pair) for pair in r.action_order],
    }


def classified_to_doc(project: Project, item) -> dict:
    """Wire form of one classified project (classification + card data)."""
    return {
        "project_id": item.project_id,
        "name": project.name,
        "status": project.status.value,
        "scores": {
            "value": project.scores.value,
            "risk": project.scores.risk,
            "alignment": project.scores.alignment,
        },
        "case_index": item.case_score.case_index,
        "signs": item.case_score.pattern,
        "plus_count": item.case_score.plus_count,
        "rubric": item.rubric.value,
        "decision": item.rubric.decision,
        "margin": item.margin,
    }


def workspace_to_doc(w: Workspace) -> dict:
    return {
        "schema_version": w.schema_version,
        "thresholds": thresholds_to_doc(w.thresholds),
        "projects": [project_to_doc(p) for p in w.projects],
        "benefit_network": network_to_doc(w.benefit_network),
        "interaction_profiles": [
            profile_to_doc(w.interaction_profiles[pid]) for pid in sorted(w.interaction_profiles)
        ],
        "alternatives": [alternative_to_doc(a) for a in w.alternatives],
    }


def canonical_bytes(doc: dict) -> bytes:
    text = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False)
    return (text + "\n").encode("utf-8")


# --- document reading ------------------------------------------------------

def _req(doc: dict, key: str, where: str):
    if not isinstance(doc, dict):
        raise DocumentError(f"{where} must be an object, got {type(doc).__name__}")
    if key not in doc:
        raise DocumentError(f"{where} is missing field {key!r}")
    return doc[key]


def thresholds_from_doc(doc: dict) -> Thresholds:
    return Thresholds(
        value_ref=_req(doc, "value_ref", "thresholds"),
        risk_ref=_req(doc, "risk_ref", "thresholds"),
        alignment_ref=_req(doc, "alignment_ref", "thresholds"),
    )


def project_from_doc(doc: dict) -> Project:
    scores = _req(doc, "scores", "project")
    return Project(
        id=_req(doc, "id", "project"),
        name=_req(doc, "name", "project"),
        status=Status(_req(doc, "status", "project")),
        base_cost=_req(doc, "base_cost", "project"),
        base_duration=_req(doc, "base_duration", "project"),
        scores=CriteriaScores(
            value=_req(scores, "value", "project scores"),
            risk=_req(scores, "risk", "project scores"),
            alignment=_req(scores, "alignment", "project scores"),
        ),
    )


def network_from_doc(doc: dict) -> BenefitNetwork:
    return BenefitNetwork(
        objectives=tuple(
            Objective(id=_req(o, "id", "objective"), weight=_req(o, "weight", "objective"))
            for o in _req(doc, "objectives", "benefit_network")
        ),
        benefits=tuple(_req(doc, "benefits", "benefit_network")),
        project_benefit_edges=tuple(
            ProjectBenefitEdge(
                project_id=_req(e, "project_id", "edge"),
                benefit_id=_req(e, "benefit_id", "edge"),
                contribution=_req(e, "contribution", "edge"),
            )
            for e in _req(doc, "project_benefit_edges", "benefit_network")
        ),
        benefit_objective_edges=tuple(
            BenefitObjectiveEdge(
                benefit_id=_req(e, "benefit_id", "edge"),
                objective_id=_req(e, "objective_id", "edge"),
                contribution=_req(e, "contribution", "edge"),
            )
            for e in _req(doc, "benefit_objective_edges", "benefit_network")
        ),
    )


def profile_from_doc(doc: dict) -> InteractionProfile:
    impacts_doc = _req(doc, "impacts", "interaction profile")
    if not isinstance(impacts_doc, dict):
        raise DocumentError("interaction profile impacts must be an object keyed by project id")
    return InteractionProfile(
        action=ActionKind(_req(doc, "action", "interaction profile")),
        project_id=_req(doc, "project_id", "interaction profile"),
        impacts={
            pid: ImpactCoefficients(
                cost_factor=_req(c, "cost_factor", f"impact on {pid}"),
                duration_factor=_req(c, "duration_factor", f"impact on {pid}"),
                cost_sensitivity=_req(c, "cost_sensitivity", f"impact on {pid}"),
                duration_sensitivity=_req(c, "duration_sensitivity", f"impact on {pid}"),
            )
            for pid, c in impacts_doc.items()
        },
    )


def alternative_from_doc(doc: dict) -> PortfolioAlternative:
    return PortfolioAlternative(
        id=_req(doc, "id", "alternative"),
        label=doc.get("label", ""),
        base_portfolio=frozenset(_req(doc, "base_portfolio", "alternative")),
        actions=tuple(profile_from_doc(a) for a in doc.get("actions", [])),
    )


def workspace_from_doc(doc: dict) -> Workspace:
    version = _req(doc, "schema_version", "document")
    if version != SCHEMA_VERSION:
        raise SchemaVersionError(version, SCHEMA_VERSION)
    try:
        profiles = [profile_from_doc(p) for p in _req(doc, "interaction_profiles", "document")]
        return Workspace(
            projects=tuple(project_from_doc(p) for p in _req(doc, "projects", "document")),
            thresholds=thresholds_from_doc(_req(doc, "thresholds", "document")),
            benefit_network=network_from_doc(_req(doc, "benefit_network", "document")),
            interaction_profiles={p.project_id: p for p in profiles},
            alternatives=tuple(alternative_from_doc(a) for a in _req(doc, "alternatives", "document")),
            schema_version=version,
        )
    except (TypeError, ValueError, InvalidInputError) as exc:
        raise DocumentError(f"malformed workspace document: {exc}") from exc


# --- save / load -----------------------------------------------------------

def save(workspace: Workspace, destination: PathLike | None = None) -> bytes:
    """Serialize a validated workspace; optionally write it to a file.

    Returns the canonical document bytes either way.
    """
    violations = validate_workspace(workspace)
    if violations:
        raise ValidationError("workspace does not pass validation; not saving", violations)
    data = canonical_bytes(workspace_to_doc(workspace))
    if destination is not None:
        Path(destination).write_bytes(data)
    return data


def load(source: Union[PathLike, bytes]) -> Workspace:
    """Read a workspace document from a path or raw bytes.

    The result is guaranteed to pass :func:`validate_workspace`; a document
    that parses but breaks invariants is rejected with the violation list.
    """
    if isinstance(source, bytes):
        raw = source
    else:
        raw = Path(source).read_bytes()
    try:
        doc = json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise DocumentError(f"document is not valid UTF-8: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    workspace = workspace_from_doc(doc)
    violations = validate_workspace(workspace)
    if violations:
        raise ValidationError("loaded workspace does not pass validation", violations)
    return workspace


# --- CSV ingestion ---------------------------------------------------------

def import_projects_csv(source: Union[PathLike, str, bytes]) -> list[Project]:
    """Parse projects from tabular input.

    Expects the exact header ``id,name,status,cost,duration,value,risk,alignment``.
    All row-level problems are collected and reported together, addressed by
    line number; duplicate ids name both offending rows.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str) and "\n" in source:
        text = source
    else:
        text = Path(source).read_text(encoding="utf-8")

    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows:
        raise DocumentError(f"empty CSV: expected header {','.join(CSV_HEADER)}")
    if rows[0] != CSV_HEADER:
        raise DocumentError(
            f"bad CSV header {','.join(rows[0])!r}: expected {','.join(CSV_HEADER)!r}"
        )

    problems: list[str] = []
    projects: list[Project] = []
    first_row_by_id: dict[str, int] = {}
    for offset, row in enumerate(rows[1:]):
        line = offset + 2
        if len(row) != len(CSV_HEADER):
            problems.append(f"row {line}: expected {len(CSV_HEADER)} columns, got {len(row)}")
            continue
        record = dict(zip(CSV_HEADER, row))
        if record["id"] in first_row_by_id:
            problems.append(
                f"row {line}: duplicate id {record['id']!r} (first seen at row "
                f"{first_row_by_id[record['id']]})"
            )
            continue
        try:
            status = Status(record["status"])
        except ValueError:
            problems.append(f"row {line}: unknown status {record['status']!r}")
            continue
        numeric = {}
        bad_field = False
        for field_name in ("cost", "duration", "value", "risk", "alignment"):
            try:
                numeric[field_name] = float(record[field_name])
            except ValueError:
                problems.append(f"row {line}: non-numeric {field_name} {record[field_name]!r}")
                bad_field = True
        if bad_field:
            continue
        first_row_by_id[record["id"]] = line
        projects.append(
            Project(
                id=record["id"],
                name=record["name"],
                status=status,
                base_cost=numeric["cost"],
                base_duration=numeric["duration"],
                scores=CriteriaScores(
                    value=numeric["value"], risk=numeric["risk"], alignment=numeric["alignment"]
                ),
            )
        )
    if problems:
        raise DocumentError("CSV import failed: " + "; ".join(problems))
    return projects
