// Bootstrap: wire the model to the page. The API base defaults to the
// local service and can be overridden with ?api=http://host:port.

import { ApiClient } from "./api.js";
import { renderBoard, renderBuilder, renderComparison } from "./dom.js";
import { WorkbenchModel } from "./state.js";
import { alternativeBuilder, comparisonView, rubricBoard } from "./views.js";

const params = new URLSearchParams(window.location.search);
const apiBase = params.get("api") ?? "http://127.0.0.1:8750";

const api = new ApiClient(apiBase);
const model = new WorkbenchModel(api);

const boardRoot = document.getElementById("board")!;
const builderRoot = document.getElementById("builder")!;
const comparisonRoot = document.getElementById("comparison")!;
const thresholdsForm = document.getElementById("thresholds") as HTMLFormElement;
const draftForm = document.getElementById("draft") as HTMLFormElement;

function paint(): void {
  renderBoard(boardRoot, rubricBoard(model));
  renderBuilder(builderRoot, alternativeBuilder(model), {
    onAdd: (id) => {
      model.addCandidate(id);
      schedulePaint();
    },
    onRemove: (id) => {
      model.removeMember(id);
      schedulePaint();
    },
    onDelete: (index) => {
      model.deleteAction(index);
      schedulePaint();
    },
    onMove: (from, to) => {
      model.moveAction(from, to);
      schedulePaint();
    },
    onCommit: () => {
      void model.commitDraft().then(async () => {
        await model.loadPareto().catch(() => undefined);
        paint();
      });
    },
    onReload: () => {
      void model.reload().then(paint);
    },
  });
  renderComparison(comparisonRoot, comparisonView(model));
  if (model.snapshot) {
    const t = model.snapshot.workspace.thresholds;
    (thresholdsForm.elements.namedItem("value_ref") as HTMLInputElement).placeholder = String(t.value_ref);
    (thresholdsForm.elements.namedItem("risk_ref") as HTMLInputElement).placeholder = String(t.risk_ref);
    (thresholdsForm.elements.namedItem("alignment_ref") as HTMLInputElement).placeholder = String(t.alignment_ref);
  }
}

// re-render shortly after model edits so pending/debounced states show up
let paintTimer: number | undefined;
function schedulePaint(): void {
  paint();
  if (paintTimer !== undefined) window.clearTimeout(paintTimer);
  paintTimer = window.setTimeout(() => {
    paint();
    paintTimer = window.setTimeout(paint, model.debounceMs + 300);
  }, model.debounceMs + 50);
}

thresholdsForm.addEventListener("submit", (event) => {
  event.preventDefault();
  const read = (name: string): number => {
    const input = thresholdsForm.elements.namedItem(name) as HTMLInputElement;
    return Number(input.value || input.placeholder);
  };
  void model
    .setThresholds({
      value_ref: read("value_ref"),
      risk_ref: read("risk_ref"),
      alignment_ref: read("alignment_ref"),
    })
    .then(schedulePaint);
});

draftForm.addEventListener("submit", (event) => {
  event.preventDefault();
  const input = draftForm.elements.namedItem("draft_id") as HTMLInputElement;
  const id = input.value.trim();
  if (!id) return;
  const existing = model.snapshot?.workspace.alternatives.some((a) => a.id === id);
  if (existing) {
    model.selectAlternative(id);
  } else {
    model.startDraft(id);
  }
  schedulePaint();
});

void model
  .refresh()
  .then(async () => {
    await model.loadPareto().catch(() => undefined);
    paint();
  })
  .catch(() => paint());
