// View-model types mirroring the service JSON, plus the pure rendering rules.

export interface TestResultJson {
  kind: "verdict" | "precondition" | "error";
  value: string;
  missing?: string[];
}

export interface ParseErrorJson {
  line: number;
  column: number;
  message: string;
  kind: string;
}

export interface SessionStatus {
  consistent: boolean;
  coherent: boolean;
  unsatisfiable: string[];
}

export interface SignatureJson {
  classes: string[];
  roles: string[];
  individuals: string[];
}

export interface PendingEntryJson {
  position: number;
  text: string;
  parseError: ParseErrorJson | null;
  result: TestResultJson | null;
}

export interface PendingRow {
  position: number;
  text: string;
  parseOk: boolean;
  status: "unevaluated" | "verdict" | "precondition";
  result: TestResultJson | null;
  selected: boolean;
}

export type StatusColor = "green" | "red" | "";

// Colour is a pure function of the evaluated status: entailed rows are
// green, unevaluated rows blank, every other evaluated status red.
export function statusColor(row: Pick<PendingRow, "status" | "result">): StatusColor {
  if (row.status === "unevaluated" || row.result === null) {
    return "";
  }
  if (row.result.kind === "verdict" && row.result.value === "entailed") {
    return "green";
  }
  return "red";
}

export function statusLabel(row: Pick<PendingRow, "status" | "result">): string {
  if (row.status === "unevaluated" || row.result === null) {
    return "";
  }
  if (row.result.missing && row.result.missing.length > 0) {
    return `${row.result.value} (${row.result.missing.join(", ")})`;
  }
  return row.result.value;
}

export function rowFromEntry(entry: PendingEntryJson, selected = false): PendingRow {
  let status: PendingRow["status"] = "unevaluated";
  if (entry.result !== null) {
    status = entry.result.kind === "verdict" ? "verdict" : "precondition";
  }
  return {
    position: entry.position,
    text: entry.text,
    parseOk: entry.parseError === null,
    status,
    result: entry.result,
    selected,
  };
}

const AUTOCOMPLETE_MIN_CHARS = 2;

// Case-insensitive prefix completion over the ontology vocabulary.
export function suggest(signature: SignatureJson, prefix: string): string[] {
  if (prefix.length < AUTOCOMPLETE_MIN_CHARS) {
    return [];
  }
  const needle = prefix.toLowerCase();
  const pool = [
    ...signature.classes,
    ...signature.roles,
    ...signature.individuals,
  ];
  return pool.filter((name) => name.toLowerCase().startsWith(needle)).sort();
}
