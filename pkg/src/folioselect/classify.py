"""Three-criteria classification of projects.

Each criterion is compared against its reference level: value and alignment
are favorable at or above their references, risk is favorable strictly below
its reference (sitting exactly on the risk reference already counts as
high risk).  The resulting sign triple places a project into one of eight
cases, and the number of favorable signs into one of four decision rubrics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .errors import InvalidInputError
from .model import CaseScore, CriteriaScores, Project, Rubric, Sign, Thresholds


class QuadrantVerdict(str, Enum):
    RETAIN = "retain"
    DISCARD = "discard"
    DECIDE = "decide"


class CriteriaPair(str, Enum):
    RISK_VALUE = "risk_value"
    RISK_ALIGNMENT = "risk_alignment"
    VALUE_ALIGNMENT = "value_alignment"


# The two-favorable-signs case that a pair preference promotes to the head
# of the prioritize rubric: preferring value+risk favors the case that is
# favorable on exactly those two axes, and so on.
PROMOTED_CASE_BY_PAIR = {
    CriteriaPair.RISK_VALUE: 2,
    CriteriaPair.RISK_ALIGNMENT: 5,
    CriteriaPair.VALUE_ALIGNMENT: 4,
}

RUBRIC_BY_PLUS_COUNT = {
    3: Rubric.SELECT,
    2: Rubric.PRIORITIZE,
    1: Rubric.LOWER_PRIORITY,
    0: Rubric.ABANDON,
}


@dataclass(frozen=True)
class ClassifiedProject:
    """A project's case, rubric and within-rubric ordering key."""

    project_id: str
    case_score: CaseScore
    rubric: Rubric
    rank_key: tuple

    @property
    def margin(self) -> float:
        """Normalized favorability margin used for within-rubric ordering."""
        return -self.rank_key[1]


def _require_valid(scores: CriteriaScores, thresholds: Thresholds):
    for name, value in (
        ("value", scores.value),
        ("risk", scores.risk),
        ("alignment", scores.alignment),
    ):
        if not math.isfinite(value):
            raise InvalidInputError(f"{name} score must be finite, got {value!r}")
    if not thresholds.is_valid():
        raise InvalidInputError(f"thresholds must be finite and strictly positive: {thresholds}")


def case_of(scores: CriteriaScores, thresholds: Thresholds) -> CaseScore:
    """Score a project against the three reference levels.

    Value and alignment are favorable when >= their references; risk is
    favorable when strictly < its reference.
    """
    _require_valid(scores, thresholds)
    return CaseScore.from_signs(
        value_sign=Sign.PLUS if scores.value >= thresholds.value_ref else Sign.MINUS,
        risk_sign=Sign.PLUS if scores.risk < thresholds.risk_ref else Sign.MINUS,
        alignment_sign=Sign.PLUS if scores.alignment >= thresholds.alignment_ref else Sign.MINUS,
    )


def rubric_of(case: CaseScore) -> Rubric:
    """Map a case to its decision rubric by the count of favorable signs."""
    return RUBRIC_BY_PLUS_COUNT[case.plus_count]


def bivariate_quadrant(
    pair: CriteriaPair, scores: CriteriaScores, thresholds: Thresholds
) -> QuadrantVerdict:
    """Two-criteria verdict: retain when both axes are favorable, discard
    when both are unfavorable, otherwise leave the call to the manager."""
    _require_valid(scores, thresholds)
    pair = CriteriaPair(pair)
    value_ok = scores.value >= thresholds.value_ref
    risk_ok = scores.risk < thresholds.risk_ref
    alignment_ok = scores.alignment >= thresholds.alignment_ref
    if pair is CriteriaPair.RISK_VALUE:
        axes = (risk_ok, value_ok)
    elif pair is CriteriaPair.RISK_ALIGNMENT:
        axes = (risk_ok, alignment_ok)
    else:
        axes = (value_ok, alignment_ok)
    if all(axes):
        return QuadrantVerdict.RETAIN
    if not any(axes):
        return QuadrantVerdict.DISCARD
    return QuadrantVerdict.DECIDE


def _margin(scores: CriteriaScores, thresholds: Thresholds) -> float:
    # Scale-free favorability: each axis is normalized by its reference, so
    # rescaling an axis together with its reference leaves the order intact.
    return (
        scores.value / thresholds.value_ref
        - scores.risk / thresholds.risk_ref
        + scores.alignment / thresholds.alignment_ref
    )


def classify_portfolio(
    projects: Iterable[Project],
    thresholds: Thresholds,
    preferred_pair: Optional[CriteriaPair] = None,
) -> list[ClassifiedProject]:
    """Classify every project and order them for decision making.

    The result is grouped by rubric (select first, abandon last); within a
    rubric, projects are ordered by descending favorability margin, ties
    broken by ascending project id.  ``preferred_pair`` optionally promotes
    the matching two-favorable case to the head of the prioritize rubric.
    """
    promoted_case = PROMOTED_CASE_BY_PAIR[CriteriaPair(preferred_pair)] if preferred_pair else None
    classified = []
    for project in projects:
        case = case_of(project.scores, thresholds)
        promotion = 0 if case.case_index == promoted_case else 1
        rank_key = (promotion, -_margin(project.scores, thresholds), project.id)
        classified.append(
            ClassifiedProject(
                project_id=project.id,
                case_score=case,
                rubric=rubric_of(case),
                rank_key=rank_key,
            )
        )
    classified.sort(key=lambda c: (c.rubric.order, c.rank_key))
    return classified


def group_by_rubric(classified: Iterable[ClassifiedProject]) -> dict[Rubric, list[ClassifiedProject]]:
    """Split an ordered classification into its four rubric groups."""
    groups: dict[Rubric, list[ClassifiedProject]] = {rubric: [] for rubric in Rubric}
    for item in classified:
        groups[item.rubric].append(item)
    return groups
