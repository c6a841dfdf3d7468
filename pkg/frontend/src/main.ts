// Browser bootstrap: wires the controller to the static page.

import { ApiClient } from "./api.js";
import { SessionController } from "./controller.js";
import { renderBanner, renderRows, renderSuggestions } from "./view.js";

const api = new ApiClient("");
const controller = new SessionController(api);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function refresh(): void {
  el("rows").innerHTML = renderRows(controller.rows);
  el("banner").innerHTML = renderBanner(controller.status, controller.banner);
  for (const box of document.querySelectorAll<HTMLInputElement>("input[data-select]")) {
    box.addEventListener("change", () => {
      controller.toggleSelected(Number(box.dataset.select));
    });
  }
}

async function guarded(action: () => Promise<unknown>): Promise<void> {
  try {
    await action();
  } catch {
    // controller.banner already carries the failure
  }
  refresh();
}

function wire(): void {
  const input = el<HTMLInputElement>("axiom-input");

  el("load-button").addEventListener("click", () =>
    guarded(() => controller.load(el<HTMLTextAreaElement>("ontology-input").value)),
  );
  el("add-button").addEventListener("click", () =>
    guarded(async () => {
      await controller.addAxiom(input.value);
      input.value = "";
      el("suggestions").innerHTML = "";
    }),
  );
  el("evaluate-all-button").addEventListener("click", () =>
    guarded(() => controller.evaluateAll()),
  );
  el("evaluate-selected-button").addEventListener("click", () =>
    guarded(() => controller.evaluateSelected()),
  );
  el("commit-button").addEventListener("click", () =>
    guarded(() => controller.commitSelected()),
  );
  el("export-button").addEventListener("click", () =>
    guarded(async () => {
      const text = await controller.exportOntology();
      const blob = new Blob([text], { type: "text/plain" });
      const link = document.createElement("a");
      link.href = URL.createObjectURL(blob);
      link.download = "ontology.ofn";
      link.click();
    }),
  );
  input.addEventListener("input", () => {
    const word = input.value.split(/\s+/).pop() ?? "";
    el("suggestions").innerHTML = renderSuggestions(controller.suggestions(word));
  });
}

wire();
refresh();
