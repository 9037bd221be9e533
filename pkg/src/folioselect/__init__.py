"""Decision engine and workbench for project portfolio selection.

Classifies projects on value, risk and strategic alignment; evaluates
manager-defined portfolio alternatives by strategic value and cross-project
cost/schedule interactions; and surfaces the non-dominated alternatives.
"""

from .classify import (
    ClassifiedProject,
    CriteriaPair,
    QuadrantVerdict,
    bivariate_quadrant,
    case_of,
    classify_portfolio,
    group_by_rubric,
    rubric_of,
)
from .errors import (
    DocumentError,
    EnumerationCapError,
    FolioError,
    InvalidInputError,
    NotFoundError,
    SchemaVersionError,
    StaleRevisionError,
    ValidationError,
)
from .evaluate import (
    DEFAULT_ENUMERATION_CAP,
    DominanceRelation,
    dominates,
    enumerate_alternatives,
    evaluate_alternative,
    pareto_frontier,
    preference_score,
)
from .interactions import (
    global_cost_delta,
    global_duration_delta,
    projected_cost,
    projected_duration,
)
from .model import (
    ActionKind,
    BenefitNetwork,
    BenefitObjectiveEdge,
    CaseScore,
    CriteriaScores,
    EvaluationResult,
    ImpactCoefficients,
    InteractionProfile,
    Objective,
    PortfolioAlternative,
    Project,
    ProjectBenefitEdge,
    ProjectProjection,
    Rubric,
    Sign,
    Status,
    Thresholds,
    Violation,
    Workspace,
    validate_alternative,
    validate_workspace,
)
from .storage import import_projects_csv, load, save
from .strategic import contribution_to_objective, strategic_value

__version__ = "0.1.0"

__all__ = [
    "ActionKind",
    "BenefitNetwork",
    "BenefitObjectiveEdge",
    "CaseScore",
    "ClassifiedProject",
    "CriteriaPair",
    "CriteriaScores",
    "DEFAULT_ENUMERATION_CAP",
    "DocumentError",
    "DominanceRelation",
    "EnumerationCapError",
    "EvaluationResult",
    "FolioError",
    "ImpactCoefficients",
    "InteractionProfile",
    "InvalidInputError",
    "NotFoundError",
    "Objective",
    "PortfolioAlternative",
    "Project",
    "ProjectBenefitEdge",
    "ProjectProjection",
    "QuadrantVerdict",
    "Rubric",
    "SchemaVersionError",
    "Sign",
    "StaleRevisionError",
    "Status",
    "Thresholds",
    "ValidationError",
    "Violation",
    "Workspace",
    "bivariate_quadrant",
    "case_of",
    "classify_portfolio",
    "contribution_to_objective",
    "dominates",
    "enumerate_alternatives",
    "evaluate_alternative",
    "global_cost_delta",
    "global_duration_delta",
    "group_by_rubric",
    "import_projects_csv",
    "load",
    "pareto_frontier",
    "preference_score",
    "projected_cost",
    "projected_duration",
    "rubric_of",
    "save",
    "strategic_value",
    "validate_alternative",
    "validate_workspace",
]
