"""Domain model for portfolio selection workspaces.

Value types are frozen dataclasses: once constructed they never change and
are safe to share across threads.  Collections are normalized (sorted, made
immutable) at construction so that two workspaces holding the same data
compare equal regardless of the order their pieces were supplied in.

Invariant checking is split in two layers:

* construction coerces and type-checks (a cost must be *a number*),
* :func:`validate_workspace` reports value-level rule violations as data
  (a cost must be *nonnegative*), so callers can collect and display them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Mapping, Optional

from .errors import InvalidInputError, NotFoundError

SCHEMA_VERSION = 1


def _as_float(value, what: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{what} must be a number, got {value!r}") from exc


class Status(str, Enum):
    ONGOING = "ongoing"
    CANDIDATE = "candidate"


class Sign(str, Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"


class Rubric(str, Enum):
    """Priority class derived from how many of the three criteria are favorable."""

    SELECT = "select"
    PRIORITIZE = "prioritize"
    LOWER_PRIORITY = "lower_priority"
    ABANDON = "abandon"

    @property
    def decision(self) -> str:
        return _DECISIONS[self]

    @property
    def order(self) -> int:
        return _RUBRIC_ORDER[self]


_DECISIONS = {
    Rubric.SELECT: "to select",
    Rubric.PRIORITIZE: "to prioritize",
    Rubric.LOWER_PRIORITY: "to lower priority",
    Rubric.ABANDON: "to abandon",
}
_RUBRIC_ORDER = {
    Rubric.SELECT: 0,
    Rubric.PRIORITIZE: 1,
    Rubric.LOWER_PRIORITY: 2,
    Rubric.ABANDON: 3,
}

# Sign triple (value, risk, alignment) -> case index.  The numbering walks
# the favorable-value half first, then the unfavorable-value half, matching
# the conventional presentation of the eight cases.
CASE_INDEX_BY_SIGNS: dict[tuple[Sign, Sign, Sign], int] = {
    (Sign.PLUS, Sign.PLUS, Sign.PLUS): 1,
    (Sign.PLUS, Sign.PLUS, Sign.MINUS): 2,
    (Sign.PLUS, Sign.MINUS, Sign.MINUS): 3,
    (Sign.PLUS, Sign.MINUS, Sign.PLUS): 4,
    (Sign.MINUS, Sign.PLUS, Sign.PLUS): 5,
    (Sign.MINUS, Sign.PLUS, Sign.MINUS): 6,
    (Sign.MINUS, Sign.MINUS, Sign.PLUS): 7,
    (Sign.MINUS, Sign.MINUS, Sign.MINUS): 8,
}
SIGNS_BY_CASE_INDEX = {idx: signs for signs, idx in CASE_INDEX_BY_SIGNS.items()}


@dataclass(frozen=True)
class CriteriaScores:
    """A project's expected value, risk level and strategic alignment."""

    value: float
    risk: float
    alignment: float

    def __post_init__(self):
        object.__setattr__(self, "value", _as_float(self.value, "value score"))
        object.__setattr__(self, "risk", _as_float(self.risk, "risk score"))
        object.__setattr__(self, "alignment", _as_float(self.alignment, "alignment score"))


@dataclass(frozen=True)
class Thresholds:
    """Reference levels splitting each criterion axis into favorable/unfavorable."""

    value_ref: float
    risk_ref: float
    alignment_ref: float

    def __post_init__(self):
        object.__setattr__(self, "value_ref", _as_float(self.value_ref, "value_ref"))
        object.__setattr__(self, "risk_ref", _as_float(self.risk_ref, "risk_ref"))
        object.__setattr__(self, "alignment_ref", _as_float(self.alignment_ref, "alignment_ref"))

    def is_valid(self) -> bool:
        return all(
            math.isfinite(v) and v > 0
            for v in (self.value_ref, self.risk_ref, self.alignment_ref)
        )


@dataclass(frozen=True)
class Project:
    """A selectable unit of work: an ongoing portfolio member or a candidate."""

    id: str
    name: str
    status: Status
    base_cost: float
    base_duration: float
    scores: CriteriaScores

    def __post_init__(self):
        object.__setattr__(self, "status", Status(self.status))
        object.__setattr__(self, "base_cost", _as_float(self.base_cost, "base_cost"))
        object.__setattr__(self, "base_duration", _as_float(self.base_duration, "base_duration"))


@dataclass(frozen=True)
class CaseScore:
    """One of the eight sign triples over (value, risk, alignment).

    ``case_index`` and the sign triple are two encodings of the same thing;
    construction rejects inconsistent combinations.
    """

    value_sign: Sign
    risk_sign: Sign
    alignment_sign: Sign
    case_index: int
    plus_count: int

    def __post_init__(self):
        signs = (self.value_sign, self.risk_sign, self.alignment_sign)
        expected_index = CASE_INDEX_BY_SIGNS[signs]
        if self.case_index != expected_index:
            raise InvalidInputError(
                f"case_index {self.case_index} does not match signs {self.pattern}"
            )
        expected_pluses = sum(1 for s in signs if s is Sign.PLUS)
        if self.plus_count != expected_pluses:
            raise InvalidInputError(
                f"plus_count {self.plus_count} does not match signs {self.pattern}"
            )

    @classmethod
    def from_signs(cls, value_sign: Sign, risk_sign: Sign, alignment_sign: Sign) -> "CaseScore":
        signs = (value_sign, risk_sign, alignment_sign)
        return cls(
            value_sign=value_sign,
            risk_sign=risk_sign,
            alignment_sign=alignment_sign,
            case_index=CASE_INDEX_BY_SIGNS[signs],
            plus_count=sum(1 for s in signs if s is Sign.PLUS),
        )

    @property
    def pattern(self) -> str:
        return "".join(s.symbol for s in (self.value_sign, self.risk_sign, self.alignment_sign))


@dataclass(frozen=True)
class Objective:
    id: str
    weight: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "weight", _as_float(self.weight, "objective weight"))


@dataclass(frozen=True)
class ProjectBenefitEdge:
    project_id: str
    benefit_id: str
    contribution: float

    def __post_init__(self):
        object.__setattr__(self, "contribution", _as_float(self.contribution, "contribution"))


@dataclass(frozen=True)
class BenefitObjectiveEdge:
    benefit_id: str
    objective_id: str
    contribution: float

    def __post_init__(self):
        object.__setattr__(self, "contribution", _as_float(self.contribution, "contribution"))


@dataclass(frozen=True)
class BenefitNetwork:
    """Project -> benefit -> objective contribution graph.

    A missing edge means contribution 0; the graph is deliberately sparse.
    Contributions are relative shares, validated to lie in [0, 1].
    """

    objectives: tuple[Objective, ...] = ()
    benefits: tuple[str, ...] = ()
    project_benefit_edges: tuple[ProjectBenefitEdge, ...] = ()
    benefit_objective_edges: tuple[BenefitObjectiveEdge, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "objectives", tuple(sorted(self.objectives, key=lambda o: o.id))
        )
        object.__setattr__(self, "benefits", tuple(sorted(self.benefits)))
        object.__setattr__(
            self,
            "project_benefit_edges",
            tuple(sorted(self.project_benefit_edges, key=lambda e: (e.project_id, e.benefit_id))),
        )
        object.__setattr__(
            self,
            "benefit_objective_edges",
            tuple(sorted(self.benefit_objective_edges, key=lambda e: (e.benefit_id, e.objective_id))),
        )

    def objective(self, objective_id: str) -> Objective:
        for obj in self.objectives:
            if obj.id == objective_id:
                return obj
        raise NotFoundError(f"unknown objective {objective_id!r}")

    def has_objective(self, objective_id: str) -> bool:
        return any(o.id == objective_id for o in self.objectives)


class ActionKind(str, Enum):
    ADD = "add"
    REMOVE = "remove"


@dataclass(frozen=True)
class ImpactCoefficients:
    """How one action changes a single existing project.

    ``cost_factor``/``duration_factor`` multiply the project's projected cost
    and completion time (1 = untouched, 0 = absorbed/stopped).  The
    sensitivities weight that project's deltas in the portfolio aggregates.
    """

    cost_factor: float = 1.0
    duration_factor: float = 1.0
    cost_sensitivity: float = 1.0
    duration_sensitivity: float = 1.0

    def __post_init__(self):
        for name in ("cost_factor", "duration_factor", "cost_sensitivity", "duration_sensitivity"):
            object.__setattr__(self, name, _as_float(getattr(self, name), name))


NEUTRAL_IMPACT = ImpactCoefficients()


@dataclass(frozen=True)
class InteractionProfile:
    """An add/remove action together with its cross-project coefficients.

    ``impacts`` maps existing project ids to their coefficients; projects not
    listed are unaffected (all coefficients default to 1).
    """

    action: ActionKind
    project_id: str
    impacts: Mapping[str, ImpactCoefficients] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "action", ActionKind(self.action))
        object.__setattr__(self, "impacts", dict(self.impacts))

    def impact_on(self, project_id: str) -> ImpactCoefficients:
        return self.impacts.get(project_id, NEUTRAL_IMPACT)


@dataclass(frozen=True)
class ProjectProjection:
    """Per-project line of an evaluation: projected cost/duration and deltas.

    ``weighted_cost_delta`` is the project's contribution to the global cost
    delta (sensitivity-weighted, accumulated over all applied actions);
    likewise for durations.  ``absorbed``/``halted`` flag that some action
    zeroed the project's cost or duration.
    """

    project_id: str
    base_cost: float
    projected_cost: float
    cost_delta: float
    weighted_cost_delta: float
    base_duration: float
    projected_duration: float
    duration_delta: float
    weighted_duration_delta: float
    absorbed: bool = False
    halted: bool = False


@dataclass(frozen=True)
class EvaluationResult:
    """The three decision parameters of an alternative plus their audit trail."""

    strategic_value: float
    global_cost_delta: float
    global_duration_delta: float
    per_project: tuple[ProjectProjection, ...] = ()
    action_order: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class PortfolioAlternative:
    """A base portfolio plus an ordered list of add/remove actions."""

    id: str
    label: str
    base_portfolio: frozenset[str]
    actions: tuple[InteractionProfile, ...] = ()
    derived: Optional[EvaluationResult] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "base_portfolio", frozenset(self.base_portfolio))
        object.__setattr__(self, "actions", tuple(self.actions))

    def with_result(self, result: EvaluationResult) -> "PortfolioAlternative":
        return replace(self, derived=result)


@dataclass(frozen=True)
class Workspace:
    """Everything one decision session works on.

    ``interaction_profiles`` stores, per project, the profile describing the
    impact of introducing (or withdrawing) that project; exhaustive
    enumeration draws add-actions from this store.
    """

    projects: tuple[Project, ...] = ()
    thresholds: Thresholds = Thresholds(1.0, 1.0, 1.0)
    benefit_network: BenefitNetwork = BenefitNetwork()
    interaction_profiles: Mapping[str, InteractionProfile] = field(default_factory=dict)
    alternatives: tuple[PortfolioAlternative, ...] = ()
    schema_version: int = SCHEMA_VERSION
    _project_index: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "projects", tuple(sorted(self.projects, key=lambda p: p.id)))
        object.__setattr__(self, "interaction_profiles", dict(self.interaction_profiles))
        object.__setattr__(
            self, "alternatives", tuple(sorted(self.alternatives, key=lambda a: a.id))
        )
        index = {}
        for project in self.projects:
            index.setdefault(project.id, project)
        object.__setattr__(self, "_project_index", index)

    def project(self, project_id: str) -> Project:
        try:
            return self._project_index[project_id]
        except KeyError:
            raise NotFoundError(f"unknown project {project_id!r}") from None

    def has_project(self, project_id: str) -> bool:
        return project_id in self._project_index

    def ongoing_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.projects if p.status is Status.ONGOING)

    def candidate_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.projects if p.status is Status.CANDIDATE)

    def alternative(self, alternative_id: str) -> PortfolioAlternative:
        for alt in self.alternatives:
            if alt.id == alternative_id:
                return alt
        raise NotFoundError(f"unknown alternative {alternative_id!r}")

    def with_thresholds(self, thresholds: Thresholds) -> "Workspace":
        return replace(self, thresholds=thresholds)

    def with_projects(self, projects: Iterable[Project]) -> "Workspace":
        return replace(self, projects=tuple(projects))

    def upsert_alternative(self, alternative: PortfolioAlternative) -> "Workspace":
        kept = tuple(a for a in self.alternatives if a.id != alternative.id)
        return replace(self, alternatives=kept + (alternative,))


@dataclass(frozen=True)
class Violation:
    """One broken rule, naming the offending entity."""

    entity: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"[{self.entity}] {self.rule}: {self.message}"


def _check_nonnegative(out: list[Violation], entity: str, rule: str, name: str, value: float):
    if not math.isfinite(value):
        out.append(Violation(entity, rule, f"{name} must be finite, got {value!r}"))
    elif value < 0:
        out.append(Violation(entity, rule, f"{name} must be >= 0, got {value!r}"))


def _validate_impacts(
    out: list[Violation],
    entity: str,
    profile: InteractionProfile,
    allowed_targets: frozenset[str],
    target_description: str,
):
    for target_id in sorted(profile.impacts):
        coeffs = profile.impacts[target_id]
        if target_id == profile.project_id:
            out.append(
                Violation(
                    entity,
                    "self-impact",
                    f"the action's own project {target_id!r} may not appear in its impact map",
                )
            )
        elif target_id not in allowed_targets:
            out.append(
                Violation(
                    entity,
                    "unknown-impact-target",
                    f"impact references {target_id!r}, which is not {target_description}",
                )
            )
        for name in ("cost_factor", "duration_factor", "cost_sensitivity", "duration_sensitivity"):
            _check_nonnegative(out, entity, "coefficient-range", f"{name}[{target_id}]", getattr(coeffs, name))


def validate_workspace(workspace: Workspace) -> list[Violation]:
    """Check every model invariant; returns an empty list iff all hold.

    Violations are data, not failures: the function never raises for bad
    values, is side-effect-free, and reports every problem it finds.
    """
    out: list[Violation] = []

    seen_projects: dict[str, int] = {}
    for project in workspace.projects:
        entity = f"project:{project.id}"
        seen_projects[project.id] = seen_projects.get(project.id, 0) + 1
        if not project.id:
            out.append(Violation(entity, "empty-id", "project id must be nonempty"))
        _check_nonnegative(out, entity, "nonnegative-cost", "base_cost", project.base_cost)
        _check_nonnegative(out, entity, "nonnegative-duration", "base_duration", project.base_duration)
        _check_nonnegative(out, entity, "score-range", "value", project.scores.value)
        _check_nonnegative(out, entity, "score-range", "risk", project.scores.risk)
        _check_nonnegative(out, entity, "score-range", "alignment", project.scores.alignment)
    for project_id, count in seen_projects.items():
        if count > 1:
            out.append(
                Violation(f"project:{project_id}", "unique-id", f"id appears {count} times")
            )

    thresholds = workspace.thresholds
    for name in ("value_ref", "risk_ref", "alignment_ref"):
        value = getattr(thresholds, name)
        if not math.isfinite(value) or value <= 0:
            out.append(
                Violation("thresholds", "positive-threshold", f"{name} must be > 0, got {value!r}")
            )

    network = workspace.benefit_network
    objective_ids = [o.id for o in network.objectives]
    benefit_ids = list(network.benefits)
    for objective in network.objectives:
        _check_nonnegative(
            out, f"objective:{objective.id}", "nonnegative-weight", "weight", objective.weight
        )
    for node_kind, ids in (("objective", objective_ids), ("benefit", benefit_ids)):
        for node_id in {i for i in ids if ids.count(i) > 1}:
            out.append(
                Violation(f"{node_kind}:{node_id}", "unique-id", f"{node_kind} id is duplicated")
            )

    objective_set = frozenset(objective_ids)
    benefit_set = frozenset(benefit_ids)
    seen_pb: set[tuple[str, str]] = set()
    for edge in network.project_benefit_edges:
        entity = f"edge:{edge.project_id}->{edge.benefit_id}"
        if not workspace.has_project(edge.project_id):
            out.append(Violation(entity, "unknown-project", f"project {edge.project_id!r} is not declared"))
        if edge.benefit_id not in benefit_set:
            out.append(Violation(entity, "unknown-benefit", f"benefit {edge.benefit_id!r} is not declared"))
        if not math.isfinite(edge.contribution) or not 0.0 <= edge.contribution <= 1.0:
            out.append(
                Violation(entity, "contribution-range", f"contribution must be in [0, 1], got {edge.contribution!r}")
            )
        key = (edge.project_id, edge.benefit_id)
        if key in seen_pb:
            out.append(Violation(entity, "duplicate-edge", "at most one edge per (project, benefit) pair"))
        seen_pb.add(key)
    seen_bo: set[tuple[str, str]] = set()
    for edge in network.benefit_objective_edges:
        entity = f"edge:{edge.benefit_id}->{edge.objective_id}"
        if edge.benefit_id not in benefit_set:
            out.append(Violation(entity, "unknown-benefit", f"benefit {edge.benefit_id!r} is not declared"))
        if edge.objective_id not in objective_set:
            out.append(Violation(entity, "unknown-objective", f"objective {edge.objective_id!r} is not declared"))
        if not math.isfinite(edge.contribution) or not 0.0 <= edge.contribution <= 1.0:
            out.append(
                Violation(entity, "contribution-range", f"contribution must be in [0, 1], got {edge.contribution!r}")
            )
        key = (edge.benefit_id, edge.objective_id)
        if key in seen_bo:
            out.append(Violation(entity, "duplicate-edge", "at most one edge per (benefit, objective) pair"))
        seen_bo.add(key)

    ongoing = frozenset(workspace.ongoing_ids())
    for project_id in sorted(workspace.interaction_profiles):
        profile = workspace.interaction_profiles[project_id]
        entity = f"profile:{project_id}"
        if profile.project_id != project_id:
            out.append(
                Violation(
                    entity,
                    "key-mismatch",
                    f"stored under {project_id!r} but describes {profile.project_id!r}",
                )
            )
        if not workspace.has_project(profile.project_id):
            out.append(Violation(entity, "unknown-project", f"project {profile.project_id!r} is not declared"))
        _validate_impacts(out, entity, profile, ongoing, "an ongoing project")

    seen_alternatives: dict[str, int] = {}
    for alt in workspace.alternatives:
        entity = f"alternative:{alt.id}"
        seen_alternatives[alt.id] = seen_alternatives.get(alt.id, 0) + 1
        out.extend(validate_alternative(workspace, alt))
    for alt_id, count in seen_alternatives.items():
        if count > 1:
            out.append(Violation(f"alternative:{alt_id}", "unique-id", f"id appears {count} times"))

    return out


def validate_alternative(workspace: Workspace, alternative: PortfolioAlternative) -> list[Violation]:
    """Check one alternative against the workspace it will be evaluated in."""
    out: list[Violation] = []
    entity = f"alternative:{alternative.id}"

    for member_id in sorted(alternative.base_portfolio):
        if not workspace.has_project(member_id):
            out.append(Violation(entity, "unknown-member", f"base member {member_id!r} is not declared"))
        elif workspace.project(member_id).status is not Status.ONGOING:
            out.append(
                Violation(entity, "member-not-ongoing", f"base member {member_id!r} is not an ongoing project")
            )

    seen_targets: set[str] = set()
    for action in alternative.actions:
        target = action.project_id
        if target in seen_targets:
            out.append(Violation(entity, "duplicate-action", f"{target!r} is targeted by more than one action"))
        seen_targets.add(target)
        if not workspace.has_project(target):
            out.append(Violation(entity, "unknown-action-target", f"action targets unknown project {target!r}"))
            continue
        status = workspace.project(target).status
        if action.action is ActionKind.ADD and status is not Status.CANDIDATE:
            out.append(Violation(entity, "add-target", f"add must target a candidate, {target!r} is {status.value}"))
        if action.action is ActionKind.REMOVE and target not in alternative.base_portfolio:
            out.append(
                Violation(entity, "remove-target", f"remove must target a base member, {target!r} is not one")
            )
        _validate_impacts(out, entity, action, alternative.base_portfolio, "a base portfolio member")

    return out
