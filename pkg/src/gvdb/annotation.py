"""Human workflow: triage queues, full-annotation tasks, leasing, adjudication.

The task queue is the contended resource; every mutating operation takes the
queue lock so lease/submit/adjudicate are linearizable per task. Triage needs
`triage_quorum` independent verdicts (majority rules); full annotation needs
`annotation_quorum` accepted submissions, each validated span-by-span before
it reaches the incident store.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from typing import Callable

from .ingest import Article, ArticleStore
from .records import IncidentRecord, Violation, validate_payload as _validate_record

TRIAGE = "triage"
FULL_ANNOTATION = "full_annotation"
TASK_KINDS = (TRIAGE, FULL_ANNOTATION)

DEFAULT_LEASE_SECONDS = 30 * 60
DEFAULT_TRIAGE_QUORUM = 3
DEFAULT_ANNOTATION_QUORUM = 1
MAX_LEASE_RENEWALS = 1


class StaleLeaseError(Exception):
    """Lease expired, not held, or held by a different worker."""


class NotReadyError(Exception):
    """Adjudication requested before the quorum of responses arrived."""


class UnknownWorkerError(Exception):
    pass


@dataclass
class Lease:
    worker_id: str
    expires_at: float


@dataclass
class AnnotationTask:
    id: str
    kind: str
    article_id: str
    state: str = "open"  # open | leased | completed | adjudicated
    lease: Lease | None = None
    enqueue_seq: int = 0
    renewals: int = 0
    prefill: dict | None = None  # machine candidates for review tasks

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "kind": self.kind,
            "article_id": self.article_id,
            "state": self.state,
            "enqueue_seq": self.enqueue_seq,
            "renewals": self.renewals,
        }
        if self.lease:
            out["lease"] = {"worker_id": self.lease.worker_id, "expires_at": self.lease.expires_at}
        if self.prefill is not None:
            out["prefill"] = self.prefill
        return out

    @classmethod
    def from_json(cls, d: dict) -> "AnnotationTask":
        lease = d.get("lease")
        return cls(
            id=d["id"],
            kind=d["kind"],
            article_id=d["article_id"],
            state=d.get("state", "open"),
            lease=Lease(lease["worker_id"], float(lease["expires_at"])) if lease else None,
            enqueue_seq=int(d.get("enqueue_seq", 0)),
            renewals=int(d.get("renewals", 0)),
            prefill=d.get("prefill"),
        )


@dataclass
class AnnotationResponse:
    task_id: str
    worker_id: str
    submitted_at: float
    verdict: str | None = None  # triage: yes | no
    record: IncidentRecord | None = None  # full annotation payload

    def to_json(self) -> dict:
        out = {"task_id": self.task_id, "worker_id": self.worker_id, "submitted_at": self.submitted_at}
        if self.verdict is not None:
            out["verdict"] = self.verdict
        if self.record is not None:
            out["record"] = self.record.to_json()
        return out

    @classmethod
    def from_json(cls, d: dict) -> "AnnotationResponse":
        return cls(
            task_id=d["task_id"],
            worker_id=d["worker_id"],
            submitted_at=float(d["submitted_at"]),
            verdict=d.get("verdict"),
            record=IncidentRecord.from_json(d["record"]) if d.get("record") else None,
        )


def adjudicate_verdicts(verdicts: list[str]) -> str:
    """Majority rule over a multiset of yes/no verdicts (pure function)."""
    yes = sum(1 for v in verdicts if v == "yes")
    return "human_confirmed" if yes * 2 > len(verdicts) else "human_rejected"


def validate_annotation(article: Article, record: IncidentRecord) -> list[Violation]:
    """Validate a payload against its article; violations are data, not errors."""
    out: list[Violation] = []
    if record.article_id != article.id:
        out.append(Violation("WrongArticle", "article_id",
                             f"payload targets {record.article_id!r}, task article is {article.id!r}"))
    out.extend(_validate_record(article.body_text, record))
    return out


class TaskQueue:
    """FIFO task queue with exclusive, expiring leases and quorum adjudication."""

    def __init__(
        self,
        articles: ArticleStore,
        record_sink: Callable[[IncidentRecord], str] | None = None,
        triage_quorum: int = DEFAULT_TRIAGE_QUORUM,
        annotation_quorum: int = DEFAULT_ANNOTATION_QUORUM,
        lease_seconds: float = DEFAULT_LEASE_SECONDS,
        clock: Callable[[], float] = time.time,
    ) -> None:
        if triage_quorum % 2 == 0:
            raise ValueError("triage quorum must be odd so ties are impossible")
        self.articles = articles
        self.record_sink = record_sink or (lambda record: record.article_id)
        self.triage_quorum = triage_quorum
        self.annotation_quorum = annotation_quorum
        self.lease_seconds = lease_seconds
        self.clock = clock
        self._lock = threading.RLock()
        self._tasks: dict[str, AnnotationTask] = {}
        self._responses: dict[str, list[AnnotationResponse]] = {}
        self._workers: set[str] = set()
        self._seq = 0
        self._task_counter = 0

    # -- registration and bookkeeping --

    def register_worker(self, worker_id: str) -> None:
        with self._lock:
            self._workers.add(worker_id)

    def responses_for(self, task_id: str) -> list[AnnotationResponse]:
        return list(self._responses.get(task_id, []))

    def task(self, task_id: str) -> AnnotationTask | None:
        return self._tasks.get(task_id)

    def tasks(self, kind: str | None = None) -> list[AnnotationTask]:
        return [t for t in self._tasks.values() if kind is None or t.kind == kind]

    def state_counts(self, kind: str | None = None) -> dict[str, int]:
        counts = {"open": 0, "leased": 0, "completed": 0, "adjudicated": 0}
        for t in self.tasks(kind):
            counts[t.state] += 1
        return counts

    def _next_seq(self) -> int:
        self._seq += 1
        return self._seq

    def _new_task(self, kind: str, article_id: str, prefill: dict | None = None) -> AnnotationTask:
        self._task_counter += 1
        task = AnnotationTask(
            id=f"task-{self._task_counter:06d}",
            kind=kind,
            article_id=article_id,
            enqueue_seq=self._next_seq(),
            prefill=prefill,
        )
        self._tasks[task.id] = task
        self._responses[task.id] = []
        return task

    # -- enqueueing --

    def enqueue_triage(self, article_ids: list[str]) -> tuple[int, list[tuple[str, str]]]:
        """One open triage task per machine-positive article not already queued."""
        enqueued = 0
        skips: list[tuple[str, str]] = []
        with self._lock:
            existing = {t.article_id for t in self._tasks.values() if t.kind == TRIAGE}
            for article_id in article_ids:
                article = self.articles.get(article_id)
                if article is None:
                    skips.append((article_id, "unknown article"))
                    continue
                if article.relevance_state != "machine_positive":
                    skips.append((article_id, f"relevance_state is {article.relevance_state}"))
                    continue
                if article_id in existing:
                    skips.append((article_id, "already queued or adjudicated"))
                    continue
                self._new_task(TRIAGE, article_id)
                existing.add(article_id)
                enqueued += 1
        return enqueued, skips

    def enqueue_annotation(self, article_id: str, prefill: dict | None = None) -> AnnotationTask | None:
        """Create a full-annotation task for the article, or attach machine
        candidates to one that is already pending; None if nothing changed."""
        with self._lock:
            for t in self._tasks.values():
                if t.kind == FULL_ANNOTATION and t.article_id == article_id and t.state != "completed":
                    if prefill is not None and t.prefill is None:
                        t.prefill = prefill
                        return t
                    return None
            return self._new_task(FULL_ANNOTATION, article_id, prefill=prefill)

    # -- leasing --

    def _expire_lease(self, task: AnnotationTask, now: float) -> None:
        if task.state == "leased" and task.lease and task.lease.expires_at <= now:
            # Abandoned: back to the pool at the tail of the queue.
            task.lease = None
            task.renewals = 0
            task.state = "open" if not self._responses[task.id] else "completed"
            task.enqueue_seq = self._next_seq()

    def _workers_answered(self, task_id: str) -> set[str]:
        return {r.worker_id for r in self._responses[task_id]}

    def _leasable(self, task: AnnotationTask, worker_id: str) -> bool:
        if task.state not in ("open", "completed"):
            return False
        if worker_id in self._workers_answered(task.id):
            return False
        quorum = self.triage_quorum if task.kind == TRIAGE else self.annotation_quorum
        return len(self._responses[task.id]) < quorum

    def lease_task(self, worker_id: str, kind: str) -> AnnotationTask | None:
        """Oldest leasable task of the kind, or None; exclusive for lease_seconds."""
        if kind not in TASK_KINDS:
            raise ValueError(f"unknown task kind {kind!r}")
        with self._lock:
            if worker_id not in self._workers:
                raise UnknownWorkerError(worker_id)
            now = self.clock()
            # Sweep expirations first: an abandoned task re-queues at the tail,
            # so other work is offered before the abandoning worker sees it again.
            for task in self._tasks.values():
                self._expire_lease(task, now)
            for task in sorted(self._tasks.values(), key=lambda t: t.enqueue_seq):
                if task.kind != kind:
                    continue
                if self._leasable(task, worker_id):
                    task.lease = Lease(worker_id, now + self.lease_seconds)
                    task.state = "leased"
                    return task
            return None

    def renew_lease(self, task_id: str, worker_id: str) -> AnnotationTask:
        with self._lock:
            task = self._require_lease(task_id, worker_id)
            if task.renewals >= MAX_LEASE_RENEWALS:
                raise StaleLeaseError(f"lease on {task_id} already renewed {task.renewals} time(s)")
            task.renewals += 1
            task.lease.expires_at = self.clock() + self.lease_seconds
            return task

    def _require_lease(self, task_id: str, worker_id: str) -> AnnotationTask:
        task = self._tasks.get(task_id)
        if task is None:
            raise KeyError(f"no such task {task_id!r}")
        now = self.clock()
        self._expire_lease(task, now)
        if task.state != "leased" or task.lease is None or task.lease.worker_id != worker_id:
            raise StaleLeaseError(f"task {task_id} is not leased to {worker_id!r}")
        return task

    # -- triage submission and adjudication --

    def submit_triage(self, task_id: str, worker_id: str, verdict: str) -> dict:
        if verdict not in ("yes", "no"):
            raise ValueError(f"triage verdict must be yes or no, got {verdict!r}")
        with self._lock:
            task = self._require_lease(task_id, worker_id)
            if task.kind != TRIAGE:
                raise ValueError(f"task {task_id} is not a triage task")
            self._responses[task_id].append(
                AnnotationResponse(task_id, worker_id, self.clock(), verdict=verdict)
            )
            task.lease = None
            task.renewals = 0
            if len(self._responses[task_id]) >= self.triage_quorum:
                outcome = self._adjudicate(task)
                return {"accepted": True, "adjudicated": True, "relevance_state": outcome}
            # Awaiting quorum: still leasable by other workers, keeps its age.
            task.state = "completed"
            return {"accepted": True, "adjudicated": False}

    def _adjudicate(self, task: AnnotationTask) -> str:
        verdicts = [r.verdict for r in self._responses[task.id]]
        outcome = adjudicate_verdicts(verdicts)
        task.state = "adjudicated"
        self.articles.set_relevance(task.article_id, outcome)
        if outcome == "human_confirmed":
            self.enqueue_annotation(task.article_id)
        return outcome

    def adjudicate_triage(self, article_id: str) -> str:
        """Majority vote for the article's triage task; NotReadyError below quorum."""
        with self._lock:
            for task in self._tasks.values():
                if task.kind == TRIAGE and task.article_id == article_id:
                    if task.state == "adjudicated":
                        return self.articles.get(article_id).relevance_state
                    if len(self._responses[task.id]) < self.triage_quorum:
                        raise NotReadyError(
                            f"{len(self._responses[task.id])}/{self.triage_quorum} responses for {article_id}"
                        )
                    return self._adjudicate(task)
            raise KeyError(f"no triage task for article {article_id!r}")

    # -- full annotation --

    def submit_annotation(self, task_id: str, worker_id: str, record: IncidentRecord) -> dict:
        """Validate and store a full annotation; violations reject without losing the lease."""
        with self._lock:
            task = self._require_lease(task_id, worker_id)
            if task.kind != FULL_ANNOTATION:
                raise ValueError(f"task {task_id} is not a full-annotation task")
            article = self.articles.get(task.article_id)
            violations = validate_annotation(article, record)
            if violations:
                return {"accepted": False, "violations": violations}

            record.provenance = "mixed" if task.prefill is not None else "human"
            record.finalize()
            record_id = self.record_sink(record)
            self._responses[task_id].append(
                AnnotationResponse(task_id, worker_id, self.clock(), record=record)
            )
            task.lease = None
            task.renewals = 0
            if len(self._responses[task_id]) >= self.annotation_quorum:
                task.state = "completed"
            else:
                task.state = "open"
                task.enqueue_seq = self._next_seq()
            return {"accepted": True, "violations": [], "record_id": record_id}

    # -- persistence --

    def to_json(self) -> dict:
        return {
            "tasks": [t.to_json() for t in self._tasks.values()],
            "responses": [r.to_json() for rs in self._responses.values() for r in rs],
            "workers": sorted(self._workers),
            "seq": self._seq,
            "task_counter": self._task_counter,
        }

    def load_json(self, data: dict) -> None:
        with self._lock:
            self._tasks = {t["id"]: AnnotationTask.from_json(t) for t in data.get("tasks", [])}
            self._responses = {tid: [] for tid in self._tasks}
            for r in data.get("responses", []):
                resp = AnnotationResponse.from_json(r)
                self._responses.setdefault(resp.task_id, []).append(resp)
            self._workers = set(data.get("workers", []))
            self._seq = int(data.get("seq", 0))
            self._task_counter = int(data.get("task_counter", 0))
