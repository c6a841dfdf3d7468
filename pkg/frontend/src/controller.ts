// Session state machine: rows mirror the last service responses verbatim;
// the controller never computes a verdict itself.

import { ApiClient, ApiError } from "./api.js";
import {
  PendingRow, SessionStatus, SignatureJson, rowFromEntry, suggest,
} from "./model.js";

export class SessionController {
  sessionId: string | null = null;
  status: SessionStatus | null = null;
  rows: PendingRow[] = [];
  signature: SignatureJson = { classes: [], roles: [], individuals: [] };
  banner: string | null = null;
  // bumped on every commit; in-flight evaluations from before are stale
  generation = 0;

  constructor(private api: ApiClient) {}

  private fail(err: unknown): never {
    this.banner = err instanceof Error ? err.message : String(err);
    throw err;
  }

  async load(ontologyText: string): Promise<SessionStatus> {
    try {
      const created = await this.api.createSession(ontologyText);
      this.sessionId = created.id;
      this.status = {
        consistent: created.consistent,
        coherent: created.coherent,
        unsatisfiable: created.unsatisfiable,
      };
      this.rows = [];
      this.generation = 0;
      this.signature = await this.api.signature(created.id);
      this.banner = null;
      return this.status;
    } catch (err) {
      this.fail(err);
    }
  }

  private get id(): string {
    if (this.sessionId === null) {
      throw new Error("no session loaded");
    }
    return this.sessionId;
  }

  async addAxiom(text: string): Promise<PendingRow> {
    const added = await this.api.addPending(this.id, text);
    const row = rowFromEntry({
      position: added.position,
      text,
      parseError: added.parseError ?? null,
      result: null,
    });
    this.rows.push(row);
    return row;
  }

  toggleSelected(position: number): void {
    const row = this.rows[position];
    row.selected = !row.selected;
  }

  selectedPositions(): number[] {
    return this.rows.filter((r) => r.selected).map((r) => r.position);
  }

  async evaluateAll(): Promise<void> {
    return this.evaluate(undefined);
  }

  async evaluateSelected(): Promise<void> {
    return this.evaluate(this.selectedPositions());
  }

  private async evaluate(positions: number[] | undefined): Promise<void> {
    const generation = this.generation;
    let items;
    try {
      items = await this.api.evaluate(this.id, positions);
    } catch (err) {
      this.fail(err);
    }
    if (generation !== this.generation) {
      return; // a commit superseded this evaluation; drop the stale results
    }
    for (const item of items) {
      const row = this.rows[item.position];
      if (row === undefined) {
        continue;
      }
      if (item.result === null) {
        row.status = "unevaluated";
        row.result = null;
      } else {
        row.status = item.result.kind === "verdict" ? "verdict" : "precondition";
        row.result = item.result;
      }
    }
  }

  async commitSelected(): Promise<SessionStatus> {
    const positions = this.selectedPositions();
    let status;
    try {
      status = await this.api.commit(this.id, positions);
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        for (const row of this.rows) {
          if (row.selected && !row.parseOk) {
            row.result = { kind: "error", value: "cannot commit: parse error" };
          }
        }
      }
      this.fail(err);
    }
    this.generation += 1;
    this.status = status;
    const entries = await this.api.pending(this.id);
    this.rows = entries.map((e) => rowFromEntry(e));
    return status;
  }

  async exportOntology(): Promise<string> {
    return this.api.exportOntology(this.id);
  }

  suggestions(prefix: string): string[] {
    return suggest(this.signature, prefix);
  }
}
