"""Evaluation and comparison of whole portfolio alternatives.

An alternative is evaluated on three parameters: the strategic value it
gains or forgoes, and the portfolio-wide cost and schedule deltas caused by
cross-project interactions.  Actions apply in their declared order; each
action's factors multiply the projected values left by the previous one,
and each action's sensitivity-weighted deltas are accumulated per project,
so a single action reproduces the plain weighted-delta computation exactly.
The per-project breakdown reports final projected values against the
original base.

Alternatives are compared by dominance: more strategic value is better,
lower cost and duration deltas are better.  The frontier is the set of
alternatives no other one beats on all three parameters at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import EnumerationCapError, InvalidInputError, NotFoundError, ValidationError
from .interactions import projected_cost, projected_duration
from .model import (
    ActionKind,
    EvaluationResult,
    InteractionProfile,
    PortfolioAlternative,
    ProjectProjection,
    Status,
    Workspace,
    validate_alternative,
)
from .strategic import strategic_value

DEFAULT_ENUMERATION_CAP = 16


def evaluate_alternative(
    workspace: Workspace,
    alternative: PortfolioAlternative,
    *,
    vsp_cache: Optional[dict[str, float]] = None,
) -> EvaluationResult:
    """Compute strategic value, global cost delta and global duration delta.

    Strategic value sums the (objective-weighted) value of added projects
    and subtracts the value forgone by removed ones.  ``vsp_cache`` may be
    shared across calls against the same workspace to avoid recomputing
    per-project strategic values.
    """
    violations = validate_alternative(workspace, alternative)
    if violations:
        raise ValidationError(
            f"alternative {alternative.id!r} is not valid against this workspace",
            violations,
        )

    network = workspace.benefit_network
    if vsp_cache is None:
        vsp_cache = {}

    total_value = 0.0
    for action in alternative.actions:
        pid = action.project_id
        if pid not in vsp_cache:
            vsp_cache[pid] = strategic_value(pid, network, weighted=True)
        if action.action is ActionKind.ADD:
            total_value += vsp_cache[pid]
        else:
            total_value -= vsp_cache[pid]

    member_ids = sorted(alternative.base_portfolio)
    costs = {pid: workspace.project(pid).base_cost for pid in member_ids}
    durations = {pid: workspace.project(pid).base_duration for pid in member_ids}
    weighted_cost = {pid: 0.0 for pid in member_ids}
    weighted_duration = {pid: 0.0 for pid in member_ids}
    absorbed: set[str] = set()
    halted: set[str] = set()
    touched: set[str] = set()

    for action in alternative.actions:
        touched.update(action.impacts)
        for pid in member_ids:
            coeffs = action.impact_on(pid)
            new_cost = projected_cost(costs[pid], coeffs.cost_factor)
            weighted_cost[pid] += coeffs.cost_sensitivity * (new_cost - costs[pid])
            costs[pid] = new_cost
            new_duration = projected_duration(durations[pid], coeffs.duration_factor)
            weighted_duration[pid] += coeffs.duration_sensitivity * (new_duration - durations[pid])
            durations[pid] = new_duration
            if coeffs.cost_factor == 0:
                absorbed.add(pid)
            if coeffs.duration_factor == 0:
                halted.add(pid)

    rows = []
    global_cost = 0.0
    global_duration = 0.0
    for pid in member_ids:
        global_cost += weighted_cost[pid]
        global_duration += weighted_duration[pid]
        if pid not in touched:
            continue
        project = workspace.project(pid)
        rows.append(
            ProjectProjection(
                project_id=pid,
                base_cost=project.base_cost,
                projected_cost=costs[pid],
                cost_delta=costs[pid] - project.base_cost,
                weighted_cost_delta=weighted_cost[pid],
                base_duration=project.base_duration,
                projected_duration=durations[pid],
                duration_delta=durations[pid] - project.base_duration,
                weighted_duration_delta=weighted_duration[pid],
                absorbed=pid in absorbed,
                halted=pid in halted,
            )
        )

    return EvaluationResult(
        strategic_value=total_value,
        global_cost_delta=global_cost,
        global_duration_delta=global_duration,
        per_project=tuple(rows),
        action_order=tuple((a.action.value, a.project_id) for a in alternative.actions),
    )


def dominates(first: EvaluationResult, second: EvaluationResult) -> bool:
    """True when ``first`` is at least as good on all three parameters and
    strictly better on at least one."""
    at_least_as_good = (
        first.strategic_value >= second.strategic_value
        and first.global_cost_delta <= second.global_cost_delta
        and first.global_duration_delta <= second.global_duration_delta
    )
    strictly_better = (
        first.strategic_value > second.strategic_value
        or first.global_cost_delta < second.global_cost_delta
        or first.global_duration_delta < second.global_duration_delta
    )
    return at_least_as_good and strictly_better


@dataclass(frozen=True)
class DominanceRelation:
    """All (dominator, dominated) id pairs over one evaluated set."""

    pairs: tuple[tuple[str, str], ...] = ()

    def dominators_of(self, alternative_id: str) -> tuple[str, ...]:
        return tuple(a for a, b in self.pairs if b == alternative_id)


def pareto_frontier(
    alternatives: Sequence[PortfolioAlternative],
) -> tuple[tuple[PortfolioAlternative, ...], DominanceRelation]:
    """Non-dominated subset of evaluated alternatives, plus the full relation.

    Every alternative must carry its evaluation (``derived``).  The frontier
    is returned in ascending id order.
    """
    alts = list(alternatives)
    seen: set[str] = set()
    for alt in alts:
        if alt.derived is None:
            raise InvalidInputError(f"alternative {alt.id!r} has not been evaluated")
        if alt.id in seen:
            raise InvalidInputError(f"duplicate alternative id {alt.id!r}")
        seen.add(alt.id)

    pairs = []
    dominated: set[str] = set()
    for a in alts:
        for b in alts:
            if a.id != b.id and dominates(a.derived, b.derived):
                pairs.append((a.id, b.id))
                dominated.add(b.id)
    frontier = tuple(sorted((a for a in alts if a.id not in dominated), key=lambda a: a.id))
    return frontier, DominanceRelation(pairs=tuple(sorted(pairs)))


def preference_score(
    result: EvaluationResult,
    value_weight: float = 1.0,
    cost_weight: float = 1.0,
    duration_weight: float = 1.0,
) -> float:
    """Single scalar for display ranking only; never used to prune the frontier."""
    return (
        value_weight * result.strategic_value
        - cost_weight * result.global_cost_delta
        - duration_weight * result.global_duration_delta
    )


def enumerate_alternatives(
    workspace: Workspace,
    candidate_ids: Iterable[str],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[PortfolioAlternative]:
    """Evaluate every subset of the given candidates as an add-only alternative.

    The base portfolio is the workspace's ongoing projects; each included
    candidate becomes an add-action drawing its impact coefficients from the
    workspace's stored interaction profiles (neutral when absent), applied
    in ascending project id order.  Produces 2^n alternatives; refuses when
    n exceeds ``cap``.
    """
    candidates = sorted(set(candidate_ids))
    for pid in candidates:
        if not workspace.has_project(pid):
            raise NotFoundError(f"unknown project {pid!r}")
        if workspace.project(pid).status is not Status.CANDIDATE:
            raise InvalidInputError(f"project {pid!r} is not a candidate")
    if len(candidates) > cap:
        raise EnumerationCapError(len(candidates), cap)

    base = frozenset(workspace.ongoing_ids())
    actions_by_id = {}
    for pid in candidates:
        stored = workspace.interaction_profiles.get(pid)
        impacts = stored.impacts if stored is not None else {}
        actions_by_id[pid] = InteractionProfile(ActionKind.ADD, pid, impacts)

    vsp_cache: dict[str, float] = {}
    out = []
    for mask in range(1 << len(candidates)):
        included = [pid for i, pid in enumerate(candidates) if mask >> i & 1]
        membership = "".join("1" if mask >> i & 1 else "0" for i in range(len(candidates)))
        alternative = PortfolioAlternative(
            id=f"enum:{membership}",
            label="add " + ", ".join(included) if included else "no change",
            base_portfolio=base,
            actions=tuple(actions_by_id[pid] for pid in included),
        )
        result = evaluate_alternative(workspace, alternative, vsp_cache=vsp_cache)
        out.append(alternative.with_result(result))
    return out
