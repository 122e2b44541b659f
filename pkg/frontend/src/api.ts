/** Thin typed client over the documented HTTP API. */

import type { SpanAnchor } from "./offsets.js";
import type { TriState } from "./schema.js";

export interface Article {
  id: string;
  url: string;
  source_name: string;
  title: string;
  body_text: string;
  published_at: string | null;
  fetched_at: string;
  word_count: number;
  relevance_state: string;
}

export interface Anchored {
  value: unknown;
  anchor?: SpanAnchor;
  unanchored?: boolean;
}

export interface ParticipantPayload {
  role: "shooter" | "victim";
  name?: Anchored;
  gender?: Anchored;
  age?: Anchored;
  race?: Anchored;
  injured?: TriState;
  hospitalized?: TriState;
  killed?: TriState;
  attempted?: string[];
}

export interface RecordPayload {
  article_id: string;
  city?: Anchored;
  state?: Anchored;
  locale_detail?: Anchored;
  date?: Anchored;
  clock_time?: Anchored;
  time_of_day?: Anchored;
  weapon_type?: Anchored;
  shots_fired?: Anchored;
  shooters: ParticipantPayload[];
  victims: ParticipantPayload[];
  circumstances: Record<string, TriState>;
  attempted?: string[];
  multi_incident?: boolean;
}

export interface Task {
  id: string;
  kind: "triage" | "full_annotation";
  article_id: string;
  state: string;
  enqueue_seq: number;
  prefill?: { assembled?: RecordPayload; gating?: Record<string, string> } | null;
}

export interface LeaseResponse {
  task: Task | null;
  article?: Article | null;
}

export interface Violation {
  code: string;
  field: string;
  message: string;
}

export interface MapCity {
  city: string;
  state: string;
  lat: number | null;
  lon: number | null;
  incident_count: number;
  article_count: number;
}

export interface MapState {
  state: string;
  incident_count: number;
  article_count: number;
  unknown_city_incidents: number;
  unknown_city_articles: number;
}

export interface MapAggregate {
  cities: MapCity[];
  states: MapState[];
}

export class StaleLeaseError extends Error {}

export class ApiClient {
  constructor(
    private readonly base: string,
    public workerId: string,
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const resp = await fetch(this.base + path, {
      ...init,
      headers: { "Content-Type": "application/json", "X-Worker-Id": this.workerId,
                 ...(init?.headers ?? {}) },
    });
    if (resp.status === 409) {
      const body = await resp.json().catch(() => ({}));
      throw new StaleLeaseError(body.detail ?? "lease is stale");
    }
    return resp;
  }

  async nextTask(kind: "triage" | "full_annotation"): Promise<LeaseResponse> {
    const resp = await this.request(`/api/tasks/next?kind=${kind}&worker=${encodeURIComponent(this.workerId)}`);
    if (!resp.ok) throw new Error(`lease failed: HTTP ${resp.status}`);
    return (await resp.json()) as LeaseResponse;
  }

  async submitTriage(taskId: string, verdict: "yes" | "no"): Promise<void> {
    const resp = await this.request(`/api/tasks/${taskId}/triage`, {
      method: "POST",
      body: JSON.stringify({ worker_id: this.workerId, verdict }),
    });
    if (!resp.ok) throw new Error(`triage submit failed: HTTP ${resp.status}`);
  }

  async submitAnnotation(taskId: string, record: RecordPayload):
      Promise<{ accepted: boolean; violations: Violation[] }> {
    const resp = await this.request(`/api/tasks/${taskId}/annotation`, {
      method: "POST",
      body: JSON.stringify({ worker_id: this.workerId, record }),
    });
    if (resp.status === 422) {
      const body = await resp.json();
      return { accepted: false, violations: body.violations ?? [] };
    }
    if (!resp.ok) throw new Error(`annotation submit failed: HTTP ${resp.status}`);
    return { accepted: true, violations: [] };
  }

  async renewLease(taskId: string): Promise<void> {
    const resp = await this.request(`/api/tasks/${taskId}/renew`, {
      method: "POST",
      body: JSON.stringify({ worker_id: this.workerId }),
    });
    if (!resp.ok) throw new Error(`renew failed: HTTP ${resp.status}`);
  }

  async article(articleId: string): Promise<Article> {
    const resp = await this.request(`/api/articles/${articleId}`);
    if (!resp.ok) throw new Error(`article fetch failed: HTTP ${resp.status}`);
    return (await resp.json()) as Article;
  }

  async mapAggregate(): Promise<MapAggregate> {
    const resp = await this.request("/api/map");
    if (!resp.ok) throw new Error(`map fetch failed: HTTP ${resp.status}`);
    return (await resp.json()) as MapAggregate;
  }

  async incidents(params: Record<string, string>): Promise<{ items: unknown[]; total: number }> {
    const qs = new URLSearchParams(params).toString();
    const resp = await this.request(`/api/incidents?${qs}`);
    if (!resp.ok) throw new Error(`query failed: HTTP ${resp.status}`);
    return (await resp.json()) as { items: unknown[]; total: number };
  }
}
