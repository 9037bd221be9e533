// Thin DOM layer: renders the pure view structures and wires drag & drop.
// All metric readouts print the view's numbers verbatim via String().

import type { BoardView, BuilderView, ComparisonView } from "./views.js";

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

const metric = (value: number | boolean): string => String(value);

export function renderBoard(root: HTMLElement, view: BoardView): void {
  root.replaceChildren();
  if (view.kind === "offline") {
    root.append(el("div", "notice offline", "service unreachable — check that the server is running"));
    return;
  }
  if (view.kind === "loading") {
    root.append(el("div", "notice", "loading…"));
    return;
  }
  const board = el("div", "board");
  for (const column of view.columns) {
    const col = el("section", `column rubric-${column.rubric}`);
    col.append(el("h3", "column-title", column.label));
    const list = el("div", "cards");
    for (const card of column.cards) {
      const node = el("div", "card");
      node.draggable = true;
      node.dataset.projectId = card.projectId;
      node.addEventListener("dragstart", (event) => {
        event.dataTransfer?.setData("text/project-id", card.projectId);
      });
      node.append(el("div", "card-name", card.name));
      node.append(el("div", "card-meta", `${card.projectId} · ${card.signs} · case ${card.caseIndex}`));
      node.append(el("div", "card-meta", `${card.status} · margin ${metric(card.margin)}`));
      list.append(node);
    }
    col.append(list);
    board.append(col);
  }
  root.append(board);
}

export interface BuilderHandlers {
  onAdd: (projectId: string) => void;
  onRemove: (projectId: string) => void;
  onDelete: (index: number) => void;
  onMove: (from: number, to: number) => void;
  onCommit: () => void;
  onReload: () => void;
}

function dropZone(node: HTMLElement, onDrop: (projectId: string) => void): void {
  node.addEventListener("dragover", (event) => event.preventDefault());
  node.addEventListener("drop", (event) => {
    event.preventDefault();
    const projectId = event.dataTransfer?.getData("text/project-id");
    if (projectId) onDrop(projectId);
  });
}

export function renderBuilder(root: HTMLElement, view: BuilderView, handlers: BuilderHandlers): void {
  root.replaceChildren();
  if (view.kind === "no-draft") {
    root.append(el("div", "notice", "start a draft or select an alternative to begin"));
    return;
  }
  if (view.stalePrompt) {
    const prompt = el("div", "notice stale");
    prompt.append(el("span", undefined, "the workspace changed under you — reload to continue "));
    const button = el("button", undefined, "reload") as HTMLButtonElement;
    button.addEventListener("click", handlers.onReload);
    prompt.append(button);
    root.append(prompt);
  }

  const layout = el("div", "builder");

  const candidates = el("section", "panel");
  candidates.append(el("h3", undefined, "candidates — drag in to add"));
  for (const candidate of view.candidates ?? []) {
    const node = el("div", `chip ${candidate.added ? "in-draft" : ""}`);
    node.textContent = `${candidate.name} (${candidate.projectId})`;
    node.draggable = !candidate.added;
    node.addEventListener("dragstart", (event) => {
      event.dataTransfer?.setData("text/candidate-id", candidate.projectId);
    });
    candidates.append(node);
  }
  dropZone(candidates, () => undefined);

  const members = el("section", "panel");
  members.append(el("h3", undefined, "base portfolio — drag out to remove"));
  for (const member of view.members ?? []) {
    const node = el("div", `chip ${member.removed ? "removed" : ""}`);
    node.textContent = `${member.name} (${member.projectId})`;
    node.draggable = !member.removed;
    node.addEventListener("dragstart", (event) => {
      event.dataTransfer?.setData("text/member-id", member.projectId);
    });
    members.append(node);
  }

  const actions = el("section", "panel actions");
  actions.append(el("h3", undefined, `actions of ${view.alternativeId ?? ""}`));
  for (const action of view.actions ?? []) {
    const row = el("div", "action-row");
    row.append(el("span", `tag tag-${action.kind}`, action.kind));
    row.append(el("span", undefined, action.projectId));
    const up = el("button", "small", "↑") as HTMLButtonElement;
    up.addEventListener("click", () => handlers.onMove(action.index, action.index - 1));
    const down = el("button", "small", "↓") as HTMLButtonElement;
    down.addEventListener("click", () => handlers.onMove(action.index, action.index + 1));
    const del = el("button", "small", "✕") as HTMLButtonElement;
    del.addEventListener("click", () => handlers.onDelete(action.index));
    row.append(up, down, del);
    actions.append(row);
  }
  dropZone(actions, () => undefined);
  actions.addEventListener("drop", (event) => {
    const candidate = event.dataTransfer?.getData("text/candidate-id");
    if (candidate) handlers.onAdd(candidate);
  });
  candidates.addEventListener("drop", (event) => {
    const member = event.dataTransfer?.getData("text/member-id");
    if (member) handlers.onRemove(member);
  });

  const metrics = el("section", "panel metrics");
  metrics.append(el("h3", undefined, "live evaluation"));
  if (view.pending) metrics.append(el("div", "notice", "evaluating…"));
  if (view.lastError) metrics.append(el("div", "notice offline", view.lastError));
  if (view.metrics) {
    const table = el("div", "metric-summary");
    table.append(el("div", "metric", `V_sp = ${metric(view.metrics.strategicValue)}`));
    table.append(el("div", "metric", `C_G = ${metric(view.metrics.globalCostDelta)}`));
    table.append(el("div", "metric", `D_G = ${metric(view.metrics.globalDurationDelta)}`));
    metrics.append(table);
    if (view.metrics.breakdown.length) {
      const rows = el("table", "breakdown") as HTMLTableElement;
      const head = rows.insertRow();
      for (const title of ["project", "cost", "cost'", "k·dC", "dur", "dur'", "l·dD", "flags"]) {
        head.append(el("th", undefined, title));
      }
      for (const row of view.metrics.breakdown) {
        const tr = rows.insertRow();
        const flags = [row.absorbed ? "absorbed" : "", row.halted ? "halted" : ""]
          .filter(Boolean)
          .join(",");
        for (const cell of [
          row.project_id,
          metric(row.base_cost),
          metric(row.projected_cost),
          metric(row.weighted_cost_delta),
          metric(row.base_duration),
          metric(row.projected_duration),
          metric(row.weighted_duration_delta),
          flags,
        ]) {
          tr.append(el("td", undefined, cell));
        }
      }
      metrics.append(rows);
    }
  }
  const commit = el("button", undefined, "save alternative") as HTMLButtonElement;
  commit.addEventListener("click", handlers.onCommit);
  metrics.append(commit);

  layout.append(candidates, members, actions, metrics);
  root.append(layout);
}

// Mark position/size scaling is presentation only; the readouts beside each
// mark carry the verbatim numbers.
export function renderComparison(root: HTMLElement, view: ComparisonView): void {
  root.replaceChildren();
  if (view.kind === "empty") {
    root.append(el("div", "notice", "no evaluated alternatives yet"));
    return;
  }
  if (view.kind === "stale") {
    root.append(el("div", "notice stale", "comparison is out of date — refresh"));
    return;
  }
  const width = 640;
  const height = 420;
  const pad = 48;
  const xs = view.points.map((p) => p.globalCostDelta);
  const ys = view.points.map((p) => p.strategicValue);
  const ds = view.points.map((p) => p.globalDurationDelta);
  const span = (values: number[]): [number, number] => {
    const lo = Math.min(...values);
    const hi = Math.max(...values);
    return lo === hi ? [lo - 1, hi + 1] : [lo, hi];
  };
  const [xLo, xHi] = span(xs);
  const [yLo, yHi] = span(ys);
  const [dLo, dHi] = span(ds);
  const sx = (v: number) => pad + ((v - xLo) / (xHi - xLo)) * (width - 2 * pad);
  const sy = (v: number) => height - pad - ((v - yLo) / (yHi - yLo)) * (height - 2 * pad);
  const sr = (v: number) => 5 + ((v - dLo) / (dHi - dLo)) * 14;

  const svgNS = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "scatter");
  for (const point of view.points) {
    const circle = document.createElementNS(svgNS, "circle");
    circle.setAttribute("cx", String(sx(point.globalCostDelta)));
    circle.setAttribute("cy", String(sy(point.strategicValue)));
    circle.setAttribute("r", String(sr(point.globalDurationDelta)));
    circle.setAttribute("class", point.highlighted ? "mark frontier" : "mark");
    const title = document.createElementNS(svgNS, "title");
    title.textContent =
      `${point.id} (${point.label})\n` +
      `V_sp = ${metric(point.strategicValue)}\n` +
      `C_G = ${metric(point.globalCostDelta)}\n` +
      `D_G = ${metric(point.globalDurationDelta)}`;
    circle.append(title);
    svg.append(circle);
    const text = document.createElementNS(svgNS, "text");
    text.setAttribute("x", String(sx(point.globalCostDelta) + 10));
    text.setAttribute("y", String(sy(point.strategicValue) - 10));
    text.setAttribute("class", "mark-label");
    text.textContent = point.id;
    svg.append(text);
  }
  root.append(svg);

  const legend = el("div", "legend");
  legend.append(
    el(
      "div",
      undefined,
      `frontier: ${view.frontier.join(", ") || "(none)"} — x: C_G, y: V_sp, size: D_G`,
    ),
  );
  for (const point of view.points) {
    legend.append(
      el(
        "div",
        point.highlighted ? "legend-row frontier" : "legend-row",
        `${point.id}: V_sp=${metric(point.strategicValue)} C_G=${metric(point.globalCostDelta)} D_G=${metric(point.globalDurationDelta)}`,
      ),
    );
  }
  root.append(legend);
}
