/**
 * Headline triage: one verdict per keystroke (y/n, s to skip), full text on
 * demand. The next task auto-leases after every verdict so a worker can
 * clear a queue without touching the mouse.
 */

import { ApiClient, LeaseResponse, StaleLeaseError } from "./api.js";

export class TriageScreen {
  private current: LeaseResponse | null = null;
  private textRevealed = false;
  readonly keyHandler = (e: KeyboardEvent) => this.onKey(e);

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly onStatus: (msg: string) => void = () => {},
  ) {}

  async start(): Promise<void> {
    document.addEventListener("keydown", this.keyHandler);
    await this.leaseNext();
  }

  stop(): void {
    document.removeEventListener("keydown", this.keyHandler);
  }

  async leaseNext(): Promise<void> {
    this.textRevealed = false;
    try {
      this.current = await this.api.nextTask("triage");
    } catch (err) {
      this.renderError(`Cannot reach the task queue: ${String(err)}`);
      return;
    }
    this.render();
  }

  private onKey(e: KeyboardEvent): void {
    if (e.target instanceof HTMLInputElement || e.target instanceof HTMLTextAreaElement) return;
    if (e.key === "y") void this.vote("yes");
    else if (e.key === "n") void this.vote("no");
    else if (e.key === "s") void this.leaseNext();
    else if (e.key === "t") this.revealText();
  }

  async vote(verdict: "yes" | "no"): Promise<void> {
    const task = this.current?.task;
    if (!task) return;
    try {
      await this.api.submitTriage(task.id, verdict);
      this.onStatus(`Recorded ${verdict} for ${task.id}`);
    } catch (err) {
      if (err instanceof StaleLeaseError) {
        this.renderStaleLease();
        return;
      }
      this.renderError(String(err));
      return;
    }
    await this.leaseNext();
  }

  revealText(): void {
    this.textRevealed = true;
    this.render();
  }

  private render(): void {
    const task = this.current?.task;
    const article = this.current?.article;
    if (!task || !article) {
      this.root.innerHTML = `<div class="empty-state" data-testid="no-tasks">
        <h2>No triage tasks waiting</h2>
        <p>Check back later, or switch to the map view.</p></div>`;
      return;
    }
    this.root.innerHTML = "";
    const box = document.createElement("div");
    box.className = "triage-card";
    const headline = document.createElement("h2");
    headline.dataset.testid = "headline";
    headline.textContent = article.title;
    const source = document.createElement("p");
    source.className = "byline";
    source.textContent = `${article.source_name} — ${article.url}`;
    const question = document.createElement("p");
    question.className = "prompt";
    question.textContent = "Does this article describe an incident of gun violence?";
    const controls = document.createElement("div");
    controls.className = "triage-controls";
    for (const [label, key, verdict] of [
      ["Yes (y)", "yes-btn", "yes"],
      ["No (n)", "no-btn", "no"],
    ] as const) {
      const btn = document.createElement("button");
      btn.textContent = label;
      btn.dataset.testid = key;
      btn.addEventListener("click", () => void this.vote(verdict));
      controls.appendChild(btn);
    }
    const skip = document.createElement("button");
    skip.textContent = "Skip (s)";
    skip.addEventListener("click", () => void this.leaseNext());
    controls.appendChild(skip);
    const reveal = document.createElement("button");
    reveal.textContent = "Show text (t)";
    reveal.dataset.testid = "reveal";
    reveal.addEventListener("click", () => this.revealText());
    controls.appendChild(reveal);

    box.append(headline, source, question, controls);
    if (this.textRevealed) {
      const body = document.createElement("pre");
      body.className = "article-text";
      body.dataset.testid = "article-text";
      body.textContent = article.body_text;
      box.appendChild(body);
    }
    this.root.appendChild(box);
  }

  private renderStaleLease(): void {
    // Never lose the worker's intent silently: show the prompt, offer re-lease.
    this.root.innerHTML = "";
    const banner = document.createElement("div");
    banner.className = "banner warn";
    banner.dataset.testid = "stale-lease";
    banner.textContent = "Your lease on this task expired before the verdict arrived. " +
      "It was offered to other workers; lease a fresh task to continue.";
    const again = document.createElement("button");
    again.textContent = "Lease next task";
    again.addEventListener("click", () => void this.leaseNext());
    this.root.append(banner, again);
  }

  private renderError(message: string): void {
    this.root.innerHTML = "";
    const banner = document.createElement("div");
    banner.className = "banner error";
    banner.textContent = message;
    this.root.appendChild(banner);
  }
}
