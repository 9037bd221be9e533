"""Strategic value over the project -> benefit -> objective network.

A project's contribution to an objective is the sum, over the benefits it
feeds that also feed the objective, of the product of the two edge
contributions.  Strategic value aggregates those contributions over all
objectives, optionally weighted by each objective's importance.
"""

from __future__ import annotations

from typing import Container, Optional

from .errors import NotFoundError
from .model import BenefitNetwork


def contribution_to_objective(
    project_id: str,
    objective_id: str,
    network: BenefitNetwork,
    *,
    known_projects: Optional[Container[str]] = None,
) -> float:
    """Sum of two-edge path products from the project to the objective.

    Benefits connected on only one side contribute nothing.  When
    ``known_projects`` is given, an id outside it is rejected; the network
    itself does not declare projects, so without it any id is accepted and
    an edge-less project simply contributes 0.
    """
    if known_projects is not None and project_id not in known_projects:
        raise NotFoundError(f"unknown project {project_id!r}")
    if not network.has_objective(objective_id):
        raise NotFoundError(f"unknown objective {objective_id!r}")
    to_objective = {
        edge.benefit_id: edge.contribution
        for edge in network.benefit_objective_edges
        if edge.objective_id == objective_id
    }
    total = 0.0
    for edge in network.project_benefit_edges:
        if edge.project_id == project_id and edge.benefit_id in to_objective:
            total += edge.contribution * to_objective[edge.benefit_id]
    return total


def strategic_value(
    project_id: str,
    network: BenefitNetwork,
    *,
    weighted: bool = True,
    known_projects: Optional[Container[str]] = None,
) -> float:
    """Total (optionally importance-weighted) contribution to all objectives.

    With every objective weight equal to 1 the weighted and unweighted
    results coincide exactly.  Objectives the project does not reach
    contribute 0, so summing over all declared objectives is equivalent to
    summing over just the reached ones.
    """
    if known_projects is not None and project_id not in known_projects:
        raise NotFoundError(f"unknown project {project_id!r}")
    total = 0.0
    for objective in network.objectives:
        contribution = contribution_to_objective(project_id, objective.id, network)
        if weighted:
            total += objective.weight * contribution
        else:
            total += contribution
    return total
