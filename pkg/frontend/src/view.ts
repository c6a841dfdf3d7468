// Pure HTML rendering; the DOM layer only assigns innerHTML.

import { PendingRow, SessionStatus, statusColor, statusLabel } from "./model.js";

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderRow(row: PendingRow): string {
  const color = statusColor(row);
  const cls = color === "" ? "status-blank" : `status-${color}`;
  const label = statusLabel(row);
  const checked = row.selected ? " checked" : "";
  const parseNote = row.parseOk ? "" : ` <span class="parse-error">parse error</span>`;
  return (
    `<tr class="${cls}" data-position="${row.position}">` +
    `<td><input type="checkbox" data-select="${row.position}"${checked}></td>` +
    `<td class="axiom">${escapeHtml(row.text)}${parseNote}</td>` +
    `<td class="status">${escapeHtml(label)}</td>` +
    `</tr>`
  );
}

export function renderRows(rows: PendingRow[]): string {
  return rows.map(renderRow).join("\n");
}

export function renderBanner(status: SessionStatus | null, error: string | null): string {
  if (error !== null) {
    return `<div class="banner error">${escapeHtml(error)}</div>`;
  }
  if (status === null) {
    return `<div class="banner">no ontology loaded</div>`;
  }
  if (!status.consistent) {
    return `<div class="banner error">ontology is inconsistent</div>`;
  }
  if (!status.coherent) {
    const names = status.unsatisfiable.join(", ");
    return `<div class="banner error">ontology is incoherent: ${escapeHtml(names)}</div>`;
  }
  return `<div class="banner ok">ontology is consistent and coherent</div>`;
}

export function renderSuggestions(suggestions: string[]): string {
  return suggestions
    .map((s) => `<li class="suggestion">${escapeHtml(s)}</li>`)
    .join("");
}
