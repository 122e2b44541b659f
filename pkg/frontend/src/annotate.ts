/**
 * Full-annotation screen: the article rendered verbatim in one contiguous
 * <pre> (so selection offsets map exactly), schema fields that attach the
 * current text selection as their anchor, and the 13 three-way circumstance
 * questions in order. Submission posts the draft; server-side violations are
 * shown inline and the lease is kept for fixing.
 */

import { ApiClient, StaleLeaseError, Violation } from "./api.js";
import { selectionToAnchor } from "./offsets.js";
import { CIRCUMSTANCE_QUESTIONS, TriState, cycleTriState } from "./schema.js";
import { SCALAR_FIELDS, ScalarField, SessionState } from "./session.js";

const FIELD_PARSERS: Partial<Record<ScalarField, (s: string) => unknown>> = {
  shots_fired: (s) => parseInt(s, 10),
  state: (s) => s.toUpperCase(),
};

export class AnnotationScreen {
  session: SessionState | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly onStatus: (msg: string) => void = () => {},
  ) {}

  async start(): Promise<void> {
    const lease = await this.api.nextTask("full_annotation");
    if (!lease.task || !lease.article) {
      this.root.innerHTML = `<div class="empty-state" data-testid="no-tasks">
        <h2>No annotation tasks waiting</h2></div>`;
      this.session = null;
      return;
    }
    this.session = new SessionState(lease.task, lease.article);
    this.render();
  }

  /** Attach the browser selection to a field; value derived from the surface
   * unless the field's input box already holds an override. */
  attachSelection(field: ScalarField): void {
    const session = this.session;
    if (!session) return;
    const container = this.root.querySelector<HTMLElement>("[data-testid=article-text]");
    if (!container) return;
    const result = selectionToAnchor(session.article.id, session.article.body_text,
                                     container, window.getSelection());
    if (!result.ok) {
      this.onStatus(`Selection rejected: ${result.reason}`);
      return;
    }
    const override = this.root.querySelector<HTMLInputElement>(`[data-value-for=${field}]`);
    const raw = override && override.value !== "" ? override.value : result.anchor.surface;
    const parser = FIELD_PARSERS[field];
    session.setField(field, parser ? parser(raw) : raw, result.anchor);
    this.onStatus(`${field} ← "${result.anchor.surface}" [${result.anchor.start}, ${result.anchor.end})`);
    this.render();
  }

  cycleQuestion(field: string): void {
    const session = this.session;
    if (!session) return;
    const current = session.circumstances.get(field) ?? "undetermined";
    session.circumstances.set(field, cycleTriState(current));
    this.render();
  }

  setQuestion(field: string, value: TriState): void {
    this.session?.circumstances.set(field, value);
    this.render();
  }

  async submit(): Promise<{ accepted: boolean; violations: Violation[] } | null> {
    const session = this.session;
    if (!session) return null;
    if (!session.allQuestionsAttempted()) {
      this.onStatus("Answer all 13 circumstance questions before submitting.");
      return null;
    }
    try {
      const result = await this.api.submitAnnotation(session.task.id, session.toRecord());
      if (result.accepted) {
        this.onStatus("Annotation stored.");
        await this.start();
      } else {
        this.renderViolations(result.violations);
      }
      return result;
    } catch (err) {
      if (err instanceof StaleLeaseError) {
        this.onStatus("Lease expired; your draft is still on screen. Re-lease to continue.");
        return null;
      }
      throw err;
    }
  }

  private render(): void {
    const session = this.session;
    if (!session) return;
    this.root.innerHTML = "";

    const layout = document.createElement("div");
    layout.className = "annotate-layout";

    const left = document.createElement("div");
    left.className = "article-pane";
    const title = document.createElement("h2");
    title.textContent = session.article.title;
    const text = document.createElement("pre");
    text.className = "article-text selectable";
    text.dataset.testid = "article-text";
    text.textContent = session.article.body_text;
    left.append(title, text);

    const right = document.createElement("div");
    right.className = "field-pane";

    const fieldsHeading = document.createElement("h3");
    fieldsHeading.textContent = "Fields (select text, then attach)";
    right.appendChild(fieldsHeading);
    const fieldList = document.createElement("div");
    fieldList.className = "field-list";
    for (const field of SCALAR_FIELDS) {
      const row = document.createElement("div");
      row.className = "field-row";
      const label = document.createElement("span");
      label.className = "field-name";
      label.textContent = field;
      const current = session.fields.get(field);
      const value = document.createElement("span");
      value.className = "field-value";
      value.dataset.testid = `value-${field}`;
      value.textContent = current ? String(current.value) : "—";
      const override = document.createElement("input");
      override.placeholder = "value override";
      override.dataset.valueFor = field;
      const attach = document.createElement("button");
      attach.textContent = "attach selection";
      attach.dataset.attachFor = field;
      attach.addEventListener("click", () => this.attachSelection(field));
      const clear = document.createElement("button");
      clear.textContent = "clear";
      clear.addEventListener("click", () => {
        session.clearField(field);
        this.render();
      });
      row.append(label, value, override, attach, clear);
      fieldList.appendChild(row);
    }
    right.appendChild(fieldList);

    const qHeading = document.createElement("h3");
    qHeading.textContent = "Circumstances — answer Yes / No / Not able to determine";
    right.appendChild(qHeading);
    const questions = document.createElement("ol");
    questions.className = "questions";
    questions.dataset.testid = "questions";
    for (const q of CIRCUMSTANCE_QUESTIONS) {
      const li = document.createElement("li");
      const prompt = document.createElement("span");
      prompt.textContent = q.prompt;
      const state = session.circumstances.get(q.field) ?? "undetermined";
      const toggle = document.createElement("button");
      toggle.className = `tri tri-${state}`;
      toggle.dataset.question = q.field;
      toggle.textContent = state === "undetermined" ? "not able to determine" : state;
      toggle.addEventListener("click", () => this.cycleQuestion(q.field));
      li.append(prompt, toggle);
      questions.appendChild(li);
    }
    right.appendChild(questions);

    const submit = document.createElement("button");
    submit.className = "submit";
    submit.dataset.testid = "submit";
    submit.textContent = "Submit annotation";
    submit.addEventListener("click", () => void this.submit());
    right.appendChild(submit);

    const violations = document.createElement("div");
    violations.dataset.testid = "violations";
    right.appendChild(violations);

    layout.append(left, right);
    this.root.appendChild(layout);
  }

  private renderViolations(violations: Violation[]): void {
    const target = this.root.querySelector("[data-testid=violations]");
    if (!target) return;
    target.innerHTML = "";
    const list = document.createElement("ul");
    list.className = "violations";
    for (const v of violations) {
      const li = document.createElement("li");
      li.textContent = `${v.code} on ${v.field}: ${v.message}`;
      list.appendChild(li);
    }
    target.appendChild(list);
  }
}
