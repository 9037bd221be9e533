// Pure view builders: model in, display structure out, no DOM and no
// arithmetic on metrics. Every number in a view is copied verbatim from a
// service response held by the model, and only for the current revision.

import type { WorkbenchModel } from "./state.js";
import type { ProjectionDoc, RubricId } from "./types.js";

export const RUBRIC_ORDER: readonly RubricId[] = [
  "select",
  "prioritize",
  "lower_priority",
  "abandon",
];

export const RUBRIC_LABELS: Record<RubricId, string> = {
  select: "to select",
  prioritize: "to prioritize",
  lower_priority: "to lower priority",
  abandon: "to abandon",
};

export interface BoardCard {
  projectId: string;
  name: string;
  status: string;
  signs: string;
  caseIndex: number;
  margin: number;
}

export interface BoardColumn {
  rubric: RubricId;
  label: string;
  cards: BoardCard[];
}

export type BoardView =
  | { kind: "offline" }
  | { kind: "loading" }
  | { kind: "board"; revision: number; columns: BoardColumn[] };

export function rubricBoard(model: WorkbenchModel): BoardView {
  if (model.offline) return { kind: "offline" };
  if (!model.snapshot) return { kind: "loading" };
  const columns = RUBRIC_ORDER.map((rubric) => ({
    rubric,
    label: RUBRIC_LABELS[rubric],
    // server order is rank order; filtering preserves it
    cards: model.snapshot!.projects
      .filter((p) => p.rubric === rubric)
      .map((p) => ({
        projectId: p.project_id,
        name: p.name,
        status: p.status,
        signs: p.signs,
        caseIndex: p.case_index,
        margin: p.margin,
      })),
  }));
  return { kind: "board", revision: model.snapshot.revision, columns };
}

export interface BuilderMetrics {
  revision: number;
  strategicValue: number;
  globalCostDelta: number;
  globalDurationDelta: number;
  breakdown: ProjectionDoc[];
  actionOrder: [string, string][];
}

export interface BuilderAction {
  index: number;
  kind: string;
  projectId: string;
}

export interface BuilderView {
  kind: "no-draft" | "builder";
  alternativeId?: string;
  label?: string;
  stalePrompt?: boolean;
  pending?: boolean;
  lastError?: string | null;
  actions?: BuilderAction[];
  members?: { projectId: string; name: string; removed: boolean }[];
  candidates?: { projectId: string; name: string; added: boolean }[];
  metrics?: BuilderMetrics | null;
}

export function alternativeBuilder(model: WorkbenchModel): BuilderView {
  if (!model.draft || !model.snapshot) return { kind: "no-draft" };
  const draft = model.draft;
  const byId = new Map(model.snapshot.workspace.projects.map((p) => [p.id, p]));
  const added = new Set(
    draft.actions.filter((a) => a.action === "add").map((a) => a.project_id),
  );
  const removed = new Set(
    draft.actions.filter((a) => a.action === "remove").map((a) => a.project_id),
  );

  // metrics must come from a what-if computed against the revision on screen
  const current =
    model.whatif !== null && model.whatif.revision === model.snapshot.revision
      ? model.whatif
      : null;

  return {
    kind: "builder",
    alternativeId: draft.id,
    label: draft.label,
    stalePrompt: model.stalePrompt,
    pending: model.whatifPending,
    lastError: model.lastError,
    actions: draft.actions.map((a, index) => ({
      index,
      kind: a.action,
      projectId: a.project_id,
    })),
    members: draft.base_portfolio.map((id) => ({
      projectId: id,
      name: byId.get(id)?.name ?? id,
      removed: removed.has(id),
    })),
    candidates: model.candidateIds().map((id) => ({
      projectId: id,
      name: byId.get(id)?.name ?? id,
      added: added.has(id),
    })),
    metrics: current
      ? {
          revision: current.revision,
          strategicValue: current.evaluation.strategic_value,
          globalCostDelta: current.evaluation.global_cost_delta,
          globalDurationDelta: current.evaluation.global_duration_delta,
          breakdown: current.evaluation.per_project,
          actionOrder: current.evaluation.action_order,
        }
      : null,
  };
}

export interface ComparisonPoint {
  id: string;
  label: string;
  strategicValue: number;
  globalCostDelta: number;
  globalDurationDelta: number;
  highlighted: boolean;
}

export type ComparisonView =
  | { kind: "empty" }
  | { kind: "stale" }
  | { kind: "comparison"; revision: number; frontier: string[]; points: ComparisonPoint[] };

export function comparisonView(model: WorkbenchModel): ComparisonView {
  if (!model.pareto) return { kind: "empty" };
  if (model.snapshot && model.pareto.revision !== model.snapshot.revision) {
    return { kind: "stale" };
  }
  if (model.pareto.alternatives.length === 0) return { kind: "empty" };
  const frontier = new Set(model.pareto.frontier);
  return {
    kind: "comparison",
    revision: model.pareto.revision,
    frontier: [...model.pareto.frontier],
    points: model.pareto.alternatives.map((alt) => ({
      id: alt.id,
      label: alt.label,
      strategicValue: alt.evaluation.strategic_value,
      globalCostDelta: alt.evaluation.global_cost_delta,
      globalDurationDelta: alt.evaluation.global_duration_delta,
      highlighted: frontier.has(alt.id),
    })),
  };
}
