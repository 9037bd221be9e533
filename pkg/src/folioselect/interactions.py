"""Cross-project cost and schedule impacts of a portfolio action.

Projected values are multiplicative: an action scales each existing
project's cost and completion time by its per-project factors (1 leaves a
project untouched, 0 absorbs or stops it, above 1 inflates or delays).
Portfolio-level deltas sum the per-project changes, each weighted by that
project's sensitivity; with all sensitivities at 1 the weighting disappears
and the sum is the plain total of the changes.  Deltas may be negative
(savings, acceleration) or positive (overruns, delays).
"""

from __future__ import annotations

import math
from typing import Iterable

from .errors import InvalidInputError
from .model import InteractionProfile, Project


def _require_nonnegative(value: float, what: str) -> float:
    if not math.isfinite(value) or value < 0:
        raise InvalidInputError(f"{what} must be finite and >= 0, got {value!r}")
    return value


def projected_cost(base_cost: float, cost_factor: float) -> float:
    """New estimated cost of a project under the given factor."""
    _require_nonnegative(base_cost, "base_cost")
    _require_nonnegative(cost_factor, "cost_factor")
    return cost_factor * base_cost


def projected_duration(base_duration: float, duration_factor: float) -> float:
    """New estimated completion time of a project under the given factor."""
    _require_nonnegative(base_duration, "base_duration")
    _require_nonnegative(duration_factor, "duration_factor")
    return duration_factor * base_duration


def _check_profile_targets(base_portfolio: Iterable[Project], profile: InteractionProfile):
    member_ids = {p.id for p in base_portfolio}
    unknown = sorted(set(profile.impacts) - member_ids)
    if unknown:
        raise InvalidInputError(
            f"profile for {profile.project_id!r} references non-members: {', '.join(unknown)}"
        )
    if profile.project_id in profile.impacts:
        raise InvalidInputError(
            f"profile for {profile.project_id!r} may not impact its own project"
        )


def global_cost_delta(base_portfolio: Iterable[Project], profile: InteractionProfile) -> float:
    """Sensitivity-weighted sum of cost changes across the base portfolio.

    Projects missing from the profile default to factor 1 and sensitivity 1,
    contributing exactly 0.  Terms are accumulated in ascending project id
    order.
    """
    members = sorted(base_portfolio, key=lambda p: p.id)
    _check_profile_targets(members, profile)
    total = 0.0
    for project in members:
        coeffs = profile.impact_on(project.id)
        new_cost = projected_cost(project.base_cost, coeffs.cost_factor)
        total += _require_nonnegative(coeffs.cost_sensitivity, "cost_sensitivity") * (
            new_cost - project.base_cost
        )
    return total


def global_duration_delta(base_portfolio: Iterable[Project], profile: InteractionProfile) -> float:
    """Sensitivity-weighted sum of completion-time changes, same rules as costs."""
    members = sorted(base_portfolio, key=lambda p: p.id)
    _check_profile_targets(members, profile)
    total = 0.0
    for project in members:
        coeffs = profile.impact_on(project.id)
        new_duration = projected_duration(project.base_duration, coeffs.duration_factor)
        total += _require_nonnegative(coeffs.duration_sensitivity, "duration_sensitivity") * (
            new_duration - project.base_duration
        )
    return total
