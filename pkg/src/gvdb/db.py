"""Wires the stores, queue, classifier, and extraction resources together.

A Database binds to a data directory: articles and task state as JSON
snapshots, incident records as an append-only log, the classifier model in
its own versioned file. Everything also works fully in memory (data_dir=None)
for tests and simulations.
"""

from __future__ import annotations

import json
import os
import time
from typing import Callable

from .annotation import TaskQueue
from .classifier import ClassifierModel, load_model, save_model
from .config import GvdbConfig
from .extract import Resources, extract_all, gate, load_default_resources
from .ingest import ArticleStore
from .store import IncidentStore, LinkageParams

ARTICLES_FILE = "articles.jsonl"
RECORDS_LOG = "records.log"
TASKS_FILE = "tasks.json"
MODEL_FILE = "model.gvdb-nb1"


class Database:
    def __init__(self, data_dir: str | None = None, config: GvdbConfig | None = None,
                 resources: Resources | None = None,
                 clock: Callable[[], float] = time.time) -> None:
        self.data_dir = data_dir
        self.config = config or GvdbConfig()
        self._resources = resources
        self.articles = ArticleStore()
        log_path = os.path.join(data_dir, RECORDS_LOG) if data_dir else None
        self.incidents = IncidentStore(self.articles, log_path=log_path)
        self.queue = TaskQueue(
            self.articles,
            record_sink=self.incidents.store_record,
            triage_quorum=self.config.triage_quorum,
            annotation_quorum=self.config.annotation_quorum,
            lease_seconds=self.config.lease_seconds,
            clock=clock,
        )
        self.model: ClassifierModel | None = None
        if data_dir:
            os.makedirs(data_dir, exist_ok=True)
            self._load_existing()

    @property
    def resources(self) -> Resources:
        if self._resources is None:
            self._resources = load_default_resources()
        return self._resources

    @property
    def linkage_params(self) -> LinkageParams:
        return LinkageParams(day_window=self.config.day_window, name_sim=self.config.name_sim)

    def _path(self, name: str) -> str:
        return os.path.join(self.data_dir, name)

    def _load_existing(self) -> None:
        if os.path.exists(self._path(ARTICLES_FILE)):
            self.articles.load_jsonl(self._path(ARTICLES_FILE))
        if os.path.exists(self._path(RECORDS_LOG)):
            self.incidents.log_path = None  # do not re-append while replaying
            self.incidents.replay_log(self._path(RECORDS_LOG))
            self.incidents.log_path = self._path(RECORDS_LOG)
        if os.path.exists(self._path(TASKS_FILE)):
            with open(self._path(TASKS_FILE), "r", encoding="utf-8") as f:
                self.queue.load_json(json.load(f))
        if os.path.exists(self._path(MODEL_FILE)):
            self.model = load_model(self._path(MODEL_FILE))

    def save(self) -> None:
        """Snapshot articles and task state; the record log is already durable."""
        if not self.data_dir:
            return
        self.articles.save_jsonl(self._path(ARTICLES_FILE))
        with open(self._path(TASKS_FILE), "w", encoding="utf-8") as f:
            json.dump(self.queue.to_json(), f, ensure_ascii=False)
        if self.model is not None:
            save_model(self.model, self._path(MODEL_FILE))

    def extract_pending(self, auto_threshold: float | None = None,
                        states: tuple[str, ...] = ("human_confirmed",)) -> list[dict]:
        """Extract and gate every relevant article without a stored record."""
        threshold = self.config.auto_threshold if auto_threshold is None else auto_threshold
        outcomes = []
        for article in sorted(self.articles.by_state(*states), key=lambda a: a.id):
            if self.incidents.latest(article.id) is not None:
                continue
            result = extract_all(article, self.resources, auto_threshold=threshold)
            outcome = gate(result, threshold, queue=self.queue,
                           record_sink=self.incidents.store_record)
            outcomes.append({
                "article_id": article.id,
                "routed": outcome.routed,
                "record_id": outcome.record_id,
                "task_id": outcome.task_id,
            })
        return outcomes
