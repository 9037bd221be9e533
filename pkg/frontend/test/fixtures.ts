// Shared fixture data and a scriptable fetch for unit tests.

import type { FetchLike } from "../src/api.js";
import type { ClassifiedDoc, ProjectDoc, WorkspaceDoc } from "../src/types.js";

export function project(
  id: string,
  status: "ongoing" | "candidate",
  scores: [number, number, number],
  cost = 100,
  duration = 12,
): ProjectDoc {
  return {
    id,
    name: `Project ${id}`,
    status,
    base_cost: cost,
    base_duration: duration,
    scores: { value: scores[0], risk: scores[1], alignment: scores[2] },
  };
}

export function fixtureWorkspace(): WorkspaceDoc {
  return {
    schema_version: 1,
    thresholds: { value_ref: 5, risk_ref: 5, alignment_ref: 5 },
    projects: [
      project("P1", "ongoing", [7, 2, 9]),
      project("P2", "ongoing", [4, 6, 6], 50, 20),
      project("C1", "candidate", [8, 3, 8], 30, 6),
      project("C2", "candidate", [6, 7, 2], 40, 8),
    ],
    benefit_network: { objectives: [], benefits: [], project_benefit_edges: [], benefit_objective_edges: [] },
    interaction_profiles: [
      {
        action: "add",
        project_id: "C1",
        impacts: {
          P1: { cost_factor: 1.2, duration_factor: 1, cost_sensitivity: 1, duration_sensitivity: 1 },
        },
      },
    ],
    alternatives: [],
  };
}

export function classified(
  projectId: string,
  rubric: ClassifiedDoc["rubric"],
  signs: string,
  caseIndex: number,
  margin: number,
): ClassifiedDoc {
  return {
    project_id: projectId,
    name: `Project ${projectId}`,
    status: projectId.startsWith("C") ? "candidate" : "ongoing",
    scores: { value: 0, risk: 0, alignment: 0 },
    case_index: caseIndex,
    signs,
    plus_count: [...signs].filter((s) => s === "+").length,
    rubric,
    decision: {
      select: "to select",
      prioritize: "to prioritize",
      lower_priority: "to lower priority",
      abandon: "to abandon",
    }[rubric],
    margin,
  };
}

/** One project per case, already in server (rubric, rank) order. */
export function eightCaseClassification(): ClassifiedDoc[] {
  return [
    classified("P1", "select", "+++", 1, 3),
    classified("P2", "prioritize", "++-", 2, 2.1),
    classified("P4", "prioritize", "+-+", 4, 2.0),
    classified("P5", "prioritize", "-++", 5, 1.9),
    classified("P3", "lower_priority", "+--", 3, 1.1),
    classified("P6", "lower_priority", "-+-", 6, 1.0),
    classified("P7", "lower_priority", "--+", 7, 0.9),
    classified("P8", "abandon", "---", 8, -3),
  ];
}

export interface ScriptedResponse {
  status?: number;
  body: unknown;
}

export type Route = (method: string, path: string, body: unknown) => ScriptedResponse;

export function scriptedFetch(route: Route): FetchLike {
  return async (input, init) => {
    const method = init?.method ?? "GET";
    const url = new URL(input, "http://service.test");
    const parsed = init?.body ? JSON.parse(init.body as string) : undefined;
    const out = route(method, url.pathname + url.search, parsed);
    return new Response(JSON.stringify(out.body), {
      status: out.status ?? 200,
      headers: { "content-type": "application/json" },
    });
  };
}
