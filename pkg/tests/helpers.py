"""Seeded random builders shared by the unit and acceptance tests."""

from __future__ import annotations

import random
import string

from folioselect import (
    ActionKind,
    BenefitNetwork,
    BenefitObjectiveEdge,
    CriteriaScores,
    ImpactCoefficients,
    InteractionProfile,
    Objective,
    PortfolioAlternative,
    Project,
    ProjectBenefitEdge,
    Status,
    Thresholds,
    Workspace,
)


def random_scores(rng: random.Random) -> CriteriaScores:
    return CriteriaScores(
        value=round(rng.uniform(0, 20), 4),
        risk=round(rng.uniform(0, 20), 4),
        alignment=round(rng.uniform(0, 20), 4),
    )


def random_project(rng: random.Random, pid: str, status: Status) -> Project:
    return Project(
        id=pid,
        name=f"Project {pid}",
        status=status,
        base_cost=round(rng.uniform(0, 500), 4),
        base_duration=round(rng.uniform(0, 48), 4),
        scores=random_scores(rng),
    )


def random_network(
    rng: random.Random,
    project_ids: list[str],
    max_benefits: int = 6,
    max_objectives: int = 5,
    max_edges: int = 60,
) -> BenefitNetwork:
    benefits = [f"B{i}" for i in range(rng.randint(0, max_benefits))]
    objectives = [
        Objective(id=f"O{i}", weight=round(rng.uniform(0, 3), 4))
        for i in range(rng.randint(0, max_objectives))
    ]
    pb_pairs = [(p, b) for p in project_ids for b in benefits]
    bo_pairs = [(b, o.id) for b in benefits for o in objectives]
    rng.shuffle(pb_pairs)
    rng.shuffle(bo_pairs)
    budget = rng.randint(0, max_edges)
    pb_edges = [
        ProjectBenefitEdge(p, b, round(rng.uniform(0, 1), 4))
        for p, b in pb_pairs[: rng.randint(0, min(budget, len(pb_pairs)))]
    ]
    bo_edges = [
        BenefitObjectiveEdge(b, o, round(rng.uniform(0, 1), 4))
        for b, o in bo_pairs[: max(0, min(budget - len(pb_edges), len(bo_pairs)))]
    ]
    return BenefitNetwork(
        objectives=tuple(objectives),
        benefits=tuple(benefits),
        project_benefit_edges=tuple(pb_edges),
        benefit_objective_edges=tuple(bo_edges),
    )


def random_impacts(
    rng: random.Random, member_ids: list[str], exclude: str
) -> dict[str, ImpactCoefficients]:
    eligible = [m for m in member_ids if m != exclude]
    picked = rng.sample(eligible, k=rng.randint(0, len(eligible)))
    return {
        pid: ImpactCoefficients(
            cost_factor=round(rng.uniform(0, 2.5), 4),
            duration_factor=round(rng.uniform(0, 2.5), 4),
            cost_sensitivity=round(rng.uniform(0, 3), 4),
            duration_sensitivity=round(rng.uniform(0, 3), 4),
        )
        for pid in picked
    }


def random_workspace(
    rng: random.Random,
    n_ongoing: int | None = None,
    n_candidates: int | None = None,
    with_alternatives: bool = True,
) -> Workspace:
    if n_ongoing is None:
        n_ongoing = rng.randint(0, 5)
    if n_candidates is None:
        n_candidates = rng.randint(0, 4)
    projects = [random_project(rng, f"P{i:02d}", Status.ONGOING) for i in range(n_ongoing)]
    projects += [
        random_project(rng, f"C{i:02d}", Status.CANDIDATE) for i in range(n_candidates)
    ]
    ongoing_ids = [p.id for p in projects if p.status is Status.ONGOING]
    candidate_ids = [p.id for p in projects if p.status is Status.CANDIDATE]

    network = random_network(rng, [p.id for p in projects])

    profiles = {}
    for pid in candidate_ids:
        if rng.random() < 0.7:
            profiles[pid] = InteractionProfile(
                ActionKind.ADD, pid, random_impacts(rng, ongoing_ids, pid)
            )

    alternatives = []
    if with_alternatives:
        base = frozenset(ongoing_ids)
        for i in range(rng.randint(0, 3)):
            adds = rng.sample(candidate_ids, k=rng.randint(0, len(candidate_ids)))
            removables = [m for m in ongoing_ids]
            removes = rng.sample(removables, k=rng.randint(0, min(1, len(removables))))
            removes = [r for r in removes if r not in adds]
            actions = [
                InteractionProfile(ActionKind.ADD, pid, random_impacts(rng, ongoing_ids, pid))
                for pid in adds
            ] + [
                InteractionProfile(ActionKind.REMOVE, pid, random_impacts(rng, ongoing_ids, pid))
                for pid in removes
            ]
            rng.shuffle(actions)
            alternatives.append(
                PortfolioAlternative(
                    id=f"A{i}",
                    label="".join(rng.choices(string.ascii_lowercase, k=6)),
                    base_portfolio=base,
                    actions=tuple(actions),
                )
            )

    return Workspace(
        projects=tuple(projects),
        thresholds=Thresholds(
            value_ref=round(rng.uniform(0.5, 15), 4),
            risk_ref=round(rng.uniform(0.5, 15), 4),
            alignment_ref=round(rng.uniform(0.5, 15), 4),
        ),
        benefit_network=network,
        interaction_profiles=profiles,
        alternatives=tuple(alternatives),
    )
