// Wire types: the service's document dialect, mirrored field for field.

export type ProjectStatus = "ongoing" | "candidate";
export type RubricId = "select" | "prioritize" | "lower_priority" | "abandon";
export type ActionKind = "add" | "remove";
export type CriteriaPairId = "risk_value" | "risk_alignment" | "value_alignment";

export interface ThresholdsDoc {
  value_ref: number;
  risk_ref: number;
  alignment_ref: number;
}

export interface ScoresDoc {
  value: number;
  risk: number;
  alignment: number;
}

export interface ProjectDoc {
  id: string;
  name: string;
  status: ProjectStatus;
  base_cost: number;
  base_duration: number;
  scores: ScoresDoc;
}

export interface ImpactDoc {
  cost_factor: number;
  duration_factor: number;
  cost_sensitivity: number;
  duration_sensitivity: number;
}

export interface ActionDoc {
  action: ActionKind;
  project_id: string;
  impacts: Record<string, ImpactDoc>;
}

export interface AlternativeDoc {
  id: string;
  label: string;
  base_portfolio: string[];
  actions: ActionDoc[];
}

export interface WorkspaceDoc {
  schema_version: number;
  thresholds: ThresholdsDoc;
  projects: ProjectDoc[];
  benefit_network: unknown;
  interaction_profiles: ActionDoc[];
  alternatives: AlternativeDoc[];
}

export interface ClassifiedDoc {
  project_id: string;
  name: string;
  status: ProjectStatus;
  scores: ScoresDoc;
  case_index: number;
  signs: string;
  plus_count: number;
  rubric: RubricId;
  decision: string;
  margin: number;
}

export interface ProjectionDoc {
  project_id: string;
  base_cost: number;
  projected_cost: number;
  cost_delta: number;
  weighted_cost_delta: number;
  base_duration: number;
  projected_duration: number;
  duration_delta: number;
  weighted_duration_delta: number;
  absorbed: boolean;
  halted: boolean;
}

export interface EvaluationDoc {
  strategic_value: number;
  global_cost_delta: number;
  global_duration_delta: number;
  per_project: ProjectionDoc[];
  action_order: [string, string][];
}

export interface WorkspaceResponse {
  revision: number;
  workspace: WorkspaceDoc;
}

export interface ProjectsResponse {
  revision: number;
  projects: ClassifiedDoc[];
}

export interface ThresholdsResponse {
  revision: number;
  thresholds: ThresholdsDoc;
}

export interface AlternativeResponse {
  revision: number;
  alternative: AlternativeDoc;
}

export interface EvaluationResponse {
  revision: number;
  alternative_id?: string;
  evaluation: EvaluationDoc;
}

export interface ParetoResponse {
  revision: number;
  frontier: string[];
  dominance: [string, string][];
  alternatives: { id: string; label: string; evaluation: EvaluationDoc }[];
}

export interface EnumerateResponse {
  revision: number;
  alternatives: { id: string; label: string; added: string[]; evaluation: EvaluationDoc }[];
}

export interface ErrorBody {
  code: string;
  message: string;
  detail: unknown;
}
