/**
 * Draft state for one annotation session. Anchors are always computed
 * against the API-delivered body_text held here, never against rendered or
 * re-wrapped text.
 */

import type { Anchored, Article, RecordPayload, Task } from "./api.js";
import type { SpanAnchor } from "./offsets.js";
import {
  CIRCUMSTANCE_QUESTIONS,
  SHOOTER_ATTRS,
  TIME_PLACE_FIELDS,
  TriState,
  VICTIM_ATTRS,
  WEAPON_FIELDS,
} from "./schema.js";

export type ScalarField =
  | (typeof TIME_PLACE_FIELDS)[number]
  | (typeof WEAPON_FIELDS)[number];

export const SCALAR_FIELDS: ScalarField[] = [...TIME_PLACE_FIELDS, ...WEAPON_FIELDS];

export interface DraftParticipant {
  role: "shooter" | "victim";
  attrs: Map<string, Anchored>;
  tri: Map<string, TriState>;
}

export class SessionState {
  readonly task: Task;
  readonly article: Article;
  fields = new Map<ScalarField, Anchored>();
  participants: DraftParticipant[] = [];
  circumstances = new Map<string, TriState>();
  activeField: ScalarField | null = null;

  constructor(task: Task, article: Article) {
    this.task = task;
    this.article = article;
    for (const q of CIRCUMSTANCE_QUESTIONS) {
      this.circumstances.set(q.field, "undetermined");
    }
    if (task.prefill?.assembled) {
      this.loadPrefill(task.prefill.assembled);
    }
  }

  /** Machine candidates arrive as an assembled record; seed the draft with them. */
  private loadPrefill(record: RecordPayload): void {
    for (const field of SCALAR_FIELDS) {
      const v = record[field];
      if (v) this.fields.set(field, v);
    }
    for (const side of ["shooters", "victims"] as const) {
      for (const p of record[side] ?? []) {
        const draft: DraftParticipant = { role: p.role, attrs: new Map(), tri: new Map() };
        for (const attr of ["name", "gender", "age", "race"] as const) {
          if (p[attr]) draft.attrs.set(attr, p[attr] as Anchored);
        }
        for (const attr of ["injured", "hospitalized", "killed"] as const) {
          if (p[attr]) draft.tri.set(attr, p[attr] as TriState);
        }
        this.participants.push(draft);
      }
    }
    for (const [k, v] of Object.entries(record.circumstances ?? {})) {
      if (v === "yes" || v === "no" || v === "undetermined") this.circumstances.set(k, v);
    }
  }

  setField(field: ScalarField, value: unknown, anchor: SpanAnchor | null): void {
    this.fields.set(field, anchor ? { value, anchor } : { value, unanchored: true });
  }

  clearField(field: ScalarField): void {
    this.fields.delete(field);
  }

  /** Every question answered? (undetermined counts: the default is an answer.) */
  allQuestionsAttempted(): boolean {
    return CIRCUMSTANCE_QUESTIONS.every((q) => this.circumstances.has(q.field));
  }

  toRecord(): RecordPayload {
    const record: RecordPayload = {
      article_id: this.article.id,
      shooters: [],
      victims: [],
      circumstances: {},
    };
    const attempted: string[] = [];
    for (const field of SCALAR_FIELDS) {
      const v = this.fields.get(field);
      if (v) record[field] = v;
      else attempted.push(field);
    }
    record.attempted = attempted;
    for (const p of this.participants) {
      const attrSet = p.role === "victim" ? VICTIM_ATTRS : SHOOTER_ATTRS;
      const payload: Record<string, unknown> = { role: p.role };
      const pAttempted: string[] = [];
      for (const attr of attrSet) {
        if (p.attrs.has(attr)) payload[attr] = p.attrs.get(attr);
        else if (p.tri.has(attr)) payload[attr] = p.tri.get(attr);
        else pAttempted.push(attr);
      }
      payload.attempted = pAttempted;
      (p.role === "victim" ? record.victims : record.shooters).push(
        payload as unknown as import("./api.js").ParticipantPayload,
      );
    }
    for (const [k, v] of this.circumstances) {
      record.circumstances[k] = v;
    }
    return record;
  }
}
