// Client-side session state. The model mirrors the server workspace at one
// revision, owns the draft alternative being built, and talks to the
// service; it never computes metrics itself. Rapid edits coalesce into one
// what-if call per settled state, and superseded calls are cancelled so a
// late response can never overwrite a newer one.

import { ApiClient, ServiceError } from "./api.js";
import type {
  ActionDoc,
  AlternativeDoc,
  ClassifiedDoc,
  EvaluationDoc,
  ImpactDoc,
  ParetoResponse,
  ThresholdsDoc,
  WorkspaceDoc,
} from "./types.js";

export interface Snapshot {
  revision: number;
  workspace: WorkspaceDoc;
  projects: ClassifiedDoc[];
}

export interface WhatifResult {
  revision: number;
  evaluation: EvaluationDoc;
}

const clone = <T>(value: T): T => JSON.parse(JSON.stringify(value)) as T;

export class WorkbenchModel {
  snapshot: Snapshot | null = null;
  offline = false;
  stalePrompt = false;
  lastError: string | null = null;

  draft: AlternativeDoc | null = null;
  draftPersisted = false;
  whatif: WhatifResult | null = null;
  whatifPending = false;

  pareto: ParetoResponse | null = null;

  private whatifTimer: ReturnType<typeof setTimeout> | null = null;
  private whatifController: AbortController | null = null;
  private whatifToken = 0;

  constructor(
    readonly api: ApiClient,
    readonly debounceMs = 150,
  ) {}

  /** Fetch workspace and classification at one consistent revision. */
  async refresh(): Promise<void> {
    try {
      for (let attempt = 0; attempt < 5; attempt++) {
        const ws = await this.api.getWorkspace();
        const projects = await this.api.getProjects();
        if (ws.revision !== projects.revision) continue; // raced a writer, retry
        this.snapshot = {
          revision: ws.revision,
          workspace: ws.workspace,
          projects: projects.projects,
        };
        this.offline = false;
        return;
      }
      throw new ServiceError(0, "inconsistent", "no consistent snapshot after 5 attempts");
    } catch (err) {
      if (err instanceof ServiceError && err.code === "unreachable") {
        this.offline = true;
        return;
      }
      throw err;
    }
  }

  ongoingIds(): string[] {
    return (this.snapshot?.workspace.projects ?? [])
      .filter((p) => p.status === "ongoing")
      .map((p) => p.id);
  }

  candidateIds(): string[] {
    return (this.snapshot?.workspace.projects ?? [])
      .filter((p) => p.status === "candidate")
      .map((p) => p.id);
  }

  private storedImpacts(projectId: string): Record<string, ImpactDoc> {
    const stored = this.snapshot?.workspace.interaction_profiles.find(
      (p) => p.project_id === projectId,
    );
    return stored ? clone(stored.impacts) : {};
  }

  startDraft(id: string, label = id): void {
    this.draft = { id, label, base_portfolio: this.ongoingIds(), actions: [] };
    this.draftPersisted = false;
    this.whatif = null;
    this.scheduleWhatif();
  }

  selectAlternative(id: string): void {
    const alternative = this.snapshot?.workspace.alternatives.find((a) => a.id === id);
    if (!alternative) throw new Error(`no stored alternative ${id}`);
    this.draft = clone(alternative);
    this.draftPersisted = true;
    this.whatif = null;
    this.scheduleWhatif();
  }

  addCandidate(projectId: string): void {
    if (!this.draft) return;
    this.draft.actions.push({
      action: "add",
      project_id: projectId,
      impacts: this.storedImpacts(projectId),
    });
    this.scheduleWhatif();
  }

  removeMember(projectId: string): void {
    if (!this.draft) return;
    this.draft.actions.push({
      action: "remove",
      project_id: projectId,
      impacts: this.storedImpacts(projectId),
    });
    this.scheduleWhatif();
  }

  deleteAction(index: number): void {
    if (!this.draft) return;
    this.draft.actions.splice(index, 1);
    this.scheduleWhatif();
  }

  moveAction(from: number, to: number): void {
    if (!this.draft) return;
    const actions = this.draft.actions;
    if (from < 0 || from >= actions.length || to < 0 || to >= actions.length) return;
    const [moved] = actions.splice(from, 1);
    actions.splice(to, 0, moved as ActionDoc);
    this.scheduleWhatif();
  }

  /** Debounced: one /whatif per settled state. */
  scheduleWhatif(): void {
    if (!this.draft) return;
    if (this.whatifTimer !== null) clearTimeout(this.whatifTimer);
    this.whatifPending = true;
    this.whatifTimer = setTimeout(() => {
      void this.issueWhatif();
    }, this.debounceMs);
  }

  /** Run any pending what-if immediately (tests, commit paths). */
  async flushWhatif(): Promise<void> {
    if (this.whatifTimer !== null) {
      clearTimeout(this.whatifTimer);
      this.whatifTimer = null;
    }
    if (this.draft && (this.whatifPending || this.whatif === null)) {
      await this.issueWhatif();
    }
  }

  private async issueWhatif(): Promise<void> {
    if (!this.draft) return;
    this.whatifTimer = null;
    const token = ++this.whatifToken;
    this.whatifController?.abort();
    this.whatifController = new AbortController();
    try {
      const res = await this.api.whatif(clone(this.draft), this.whatifController.signal);
      if (token !== this.whatifToken) return; // superseded while in flight
      this.whatif = { revision: res.revision, evaluation: res.evaluation };
      this.whatifPending = false;
      this.lastError = null;
    } catch (err) {
      if (err instanceof Error && err.name === "AbortError") return;
      if (token !== this.whatifToken) return;
      this.whatifPending = false;
      this.lastError = err instanceof Error ? err.message : String(err);
    }
  }

  async setThresholds(thresholds: ThresholdsDoc): Promise<boolean> {
    if (!this.snapshot) return false;
    try {
      await this.api.putThresholds(thresholds, this.snapshot.revision);
    } catch (err) {
      if (err instanceof ServiceError && err.status === 409) {
        this.stalePrompt = true;
        return false;
      }
      throw err;
    }
    await this.refresh();
    if (this.draft) this.scheduleWhatif(); // metrics were computed against the old revision
    return true;
  }

  async commitDraft(): Promise<boolean> {
    if (!this.draft || !this.snapshot) return false;
    try {
      if (this.draftPersisted) {
        await this.api.putAlternative(clone(this.draft), this.snapshot.revision);
      } else {
        await this.api.postAlternative(clone(this.draft), this.snapshot.revision);
      }
    } catch (err) {
      if (err instanceof ServiceError && err.status === 409) {
        this.stalePrompt = true;
        return false;
      }
      throw err;
    }
    this.draftPersisted = true;
    await this.refresh();
    if (this.draft) this.scheduleWhatif();
    return true;
  }

  /** Acknowledge a stale-revision rejection: reload, never overwrite. */
  async reload(): Promise<void> {
    this.stalePrompt = false;
    await this.refresh();
    if (this.draft) this.scheduleWhatif();
  }

  async loadPareto(): Promise<void> {
    this.pareto = await this.api.getPareto();
  }
}
