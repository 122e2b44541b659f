import json
import random
import threading

import pytest
from hypothesis import given, settings, strategies as st

from conftest import fixture_path
from gvdb.annotation import (
    FULL_ANNOTATION,
    NotReadyError,
    StaleLeaseError,
    TRIAGE,
    TaskQueue,
    UnknownWorkerError,
    adjudicate_verdicts,
    validate_annotation,
)
from gvdb.ingest import ArticleStore, make_article
from gvdb.records import Anchored, IncidentRecord, SpanAnchor


class FakeClock:
    def __init__(self, t=1000.0):
        self.t = t

    def __call__(self):
        return self.t

    def advance(self, dt):
        self.t += dt


def make_store(n=5, state="machine_positive"):
    store = ArticleStore()
    ids = []
    for i in range(n):
        art = make_article(f"http://t/{i}", f"Title {i}",
                           f"Report number {i}: a man was shot on Elm Street on Monday.", "src")
        art.relevance_state = state
        store.add(art)
        ids.append(art.id)
    return store, ids


def make_queue(store, clock=None, **kw):
    queue = TaskQueue(store, clock=clock or FakeClock(), **kw)
    for w in ("w1", "w2", "w3", "w4"):
        queue.register_worker(w)
    return queue


class TestEnqueue:
    def test_enqueues_machine_positive(self):
        store, ids = make_store(3)
        queue = make_queue(store)
        count, skips = queue.enqueue_triage(ids)
        assert count == 3 and not skips

    def test_rerun_is_idempotent(self):
        store, ids = make_store(3)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        count, skips = queue.enqueue_triage(ids)
        assert count == 0 and len(skips) == 3

    def test_non_positive_articles_skipped_with_reason(self):
        store, ids = make_store(3)
        store.set_relevance(ids[2], "machine_negative")
        queue = make_queue(store)
        count, skips = queue.enqueue_triage(ids)
        assert count == 2
        assert skips == [(ids[2], "relevance_state is machine_negative")]


class TestLease:
    def test_single_task_goes_to_one_worker(self):
        store, ids = make_store(1)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        t1 = queue.lease_task("w1", TRIAGE)
        t2 = queue.lease_task("w2", TRIAGE)
        assert t1 is not None and t2 is None

    def test_empty_queue_returns_none(self):
        store, _ = make_store(0)
        queue = make_queue(store)
        assert queue.lease_task("w1", TRIAGE) is None

    def test_unregistered_worker_rejected(self):
        store, ids = make_store(1)
        queue = make_queue(store)
        with pytest.raises(UnknownWorkerError):
            queue.lease_task("stranger", TRIAGE)

    def test_oldest_first(self):
        store, ids = make_store(3)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        leased = [queue.lease_task("w1", TRIAGE).article_id,
                  queue.lease_task("w2", TRIAGE).article_id,
                  queue.lease_task("w3", TRIAGE).article_id]
        assert leased == ids

    def test_expired_lease_requeues_at_tail(self):
        # w1 abandons task A; after expiry w1 gets B (enqueued later), then w2 gets A.
        store, ids = make_store(2)
        clock = FakeClock()
        queue = make_queue(store, clock=clock, lease_seconds=60)
        queue.enqueue_triage(ids)
        a = queue.lease_task("w1", TRIAGE)
        assert a.article_id == ids[0]
        clock.advance(61)
        b = queue.lease_task("w1", TRIAGE)
        assert b.article_id == ids[1]
        again = queue.lease_task("w2", TRIAGE)
        assert again.article_id == ids[0]

    def test_worker_never_re_leases_answered_task(self):
        store, ids = make_store(1)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        task = queue.lease_task("w1", TRIAGE)
        queue.submit_triage(task.id, "w1", "yes")
        assert queue.lease_task("w1", TRIAGE) is None
        assert queue.lease_task("w2", TRIAGE) is not None

    def test_renewal_allowed_once(self):
        store, ids = make_store(1)
        clock = FakeClock()
        queue = make_queue(store, clock=clock, lease_seconds=60)
        queue.enqueue_triage(ids)
        task = queue.lease_task("w1", TRIAGE)
        queue.renew_lease(task.id, "w1")
        with pytest.raises(StaleLeaseError):
            queue.renew_lease(task.id, "w1")

    def test_concurrent_lease_mutual_exclusion(self):
        store, ids = make_store(1)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        got = []
        barrier = threading.Barrier(8)

        def worker(w):
            queue.register_worker(w)
            barrier.wait()
            task = queue.lease_task(w, TRIAGE)
            if task is not None:
                got.append(w)

        threads = [threading.Thread(target=worker, args=(f"tw{i}",)) for i in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert len(got) == 1


class TestTriageSubmitAndAdjudicate:
    def test_submit_with_valid_lease(self):
        store, ids = make_store(1)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        task = queue.lease_task("w1", TRIAGE)
        result = queue.submit_triage(task.id, "w1", "yes")
        assert result["accepted"] and not result["adjudicated"]

    def test_submit_after_expiry_is_stale(self):
        store, ids = make_store(1)
        clock = FakeClock()
        queue = make_queue(store, clock=clock, lease_seconds=60)
        queue.enqueue_triage(ids)
        task = queue.lease_task("w1", TRIAGE)
        clock.advance(61)
        with pytest.raises(StaleLeaseError):
            queue.submit_triage(task.id, "w1", "yes")

    def test_submit_without_lease_is_stale(self):
        store, ids = make_store(1)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        task = queue.lease_task("w1", TRIAGE)
        with pytest.raises(StaleLeaseError):
            queue.submit_triage(task.id, "w2", "yes")

    def _vote(self, queue, task_article, worker, verdict):
        task = queue.lease_task(worker, TRIAGE)
        assert task.article_id == task_article
        return queue.submit_triage(task.id, worker, verdict)

    def test_third_vote_triggers_adjudication(self):
        store, ids = make_store(1)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        self._vote(queue, ids[0], "w1", "yes")
        self._vote(queue, ids[0], "w2", "yes")
        result = self._vote(queue, ids[0], "w3", "no")
        assert result["adjudicated"] and result["relevance_state"] == "human_confirmed"
        assert store.get(ids[0]).relevance_state == "human_confirmed"
        # confirmation opens a full-annotation task
        assert queue.lease_task("w1", FULL_ANNOTATION).article_id == ids[0]

    def test_majority_no_rejects(self):
        store, ids = make_store(1)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        for w in ("w1", "w2", "w3"):
            self._vote(queue, ids[0], w, "no")
        assert store.get(ids[0]).relevance_state == "human_rejected"
        assert queue.lease_task("w4", FULL_ANNOTATION) is None

    def test_below_quorum_not_ready(self):
        store, ids = make_store(1)
        queue = make_queue(store)
        queue.enqueue_triage(ids)
        self._vote(queue, ids[0], "w1", "yes")
        self._vote(queue, ids[0], "w2", "no")
        with pytest.raises(NotReadyError):
            queue.adjudicate_triage(ids[0])

    def test_even_quorum_rejected_at_construction(self):
        store, _ = make_store(1)
        with pytest.raises(ValueError):
            TaskQueue(store, triage_quorum=2)

    @given(st.lists(st.sampled_from(["yes", "no"]), min_size=3, max_size=9))
    @settings(max_examples=60)
    def test_adjudication_is_pure_function_of_multiset(self, verdicts):
        outcome = adjudicate_verdicts(verdicts)
        for _ in range(3):
            shuffled = list(verdicts)
            random.Random(len(verdicts)).shuffle(shuffled)
            assert adjudicate_verdicts(shuffled) == outcome
        yes = verdicts.count("yes")
        expected = "human_confirmed" if yes * 2 > len(verdicts) else "human_rejected"
        assert outcome == expected


def valid_record_for(article):
    rec = IncidentRecord(article_id=article.id)
    start = article.body_text.index("Elm Street")
    rec.locale_detail = Anchored("street",
                                 SpanAnchor(article.id, start, start + 10, "Elm Street"))
    rec.attempted = {"city", "state", "date", "clock_time", "time_of_day",
                     "weapon_type", "shots_fired"}
    return rec


class TestAnnotationSubmit:
    def _confirmed_queue(self, record_sink=None):
        store, ids = make_store(1, state="human_confirmed")
        queue = make_queue(store, record_sink=record_sink)
        queue.enqueue_annotation(ids[0])
        return store, ids, queue

    def test_accepted_record_reaches_sink_with_human_provenance(self):
        stored = []
        store, ids, queue = self._confirmed_queue(record_sink=lambda r: stored.append(r) or "rid")
        task = queue.lease_task("w1", FULL_ANNOTATION)
        rec = valid_record_for(store.get(ids[0]))
        result = queue.submit_annotation(task.id, "w1", rec)
        assert result["accepted"] and result["record_id"] == "rid"
        assert stored[0].provenance == "human"
        assert stored[0].status == "full"
        assert queue.task(task.id).state == "completed"

    def test_span_mismatch_rejected_lease_kept(self):
        store, ids, queue = self._confirmed_queue()
        task = queue.lease_task("w1", FULL_ANNOTATION)
        rec = valid_record_for(store.get(ids[0]))
        rec.locale_detail = Anchored("street", SpanAnchor(ids[0], 0, 6, "Elm St"))
        result = queue.submit_annotation(task.id, "w1", rec)
        assert not result["accepted"]
        assert any(v.code == "SpanMismatch" for v in result["violations"])
        # lease still held: fixing and resubmitting works without re-lease
        rec2 = valid_record_for(store.get(ids[0]))
        assert queue.submit_annotation(task.id, "w1", rec2)["accepted"]

    def test_wrong_article_payload_rejected(self):
        store, ids, queue = self._confirmed_queue()
        task = queue.lease_task("w1", FULL_ANNOTATION)
        rec = valid_record_for(store.get(ids[0]))
        rec.article_id = "someone-else"
        result = queue.submit_annotation(task.id, "w1", rec)
        assert any(v.code == "WrongArticle" for v in result["violations"])

    def test_prefilled_task_yields_mixed_provenance(self):
        stored = []
        store, ids = make_store(1, state="human_confirmed")
        queue = make_queue(store, record_sink=lambda r: stored.append(r) or "rid")
        queue.enqueue_annotation(ids[0], prefill={"candidates": {}})
        task = queue.lease_task("w1", FULL_ANNOTATION)
        assert task.prefill == {"candidates": {}}
        queue.submit_annotation(task.id, "w1", valid_record_for(store.get(ids[0])))
        assert stored[0].provenance == "mixed"


class TestValidateAnnotationFixture:
    def test_gold_payload_004_is_fully_valid(self, gold_articles):
        with open(fixture_path("gold_payload_004.json"), "r", encoding="utf-8") as f:
            payload = json.load(f)
        art_row = next(a for a in gold_articles if a["id"] == payload["article_id"])
        article = make_article(art_row["url"], art_row["title"], art_row["body_text"],
                               art_row["source_name"], art_row["published_at"])
        record = IncidentRecord.from_json(payload["record"])
        assert validate_annotation(article, record) == []


class TestConservation:
    def test_task_states_partition_the_queue(self):
        store, ids = make_store(4)
        clock = FakeClock()
        queue = make_queue(store, clock=clock)
        queue.enqueue_triage(ids)
        rng = random.Random(7)
        workers = ["w1", "w2", "w3"]
        for _ in range(40):
            w = rng.choice(workers)
            task = queue.lease_task(w, TRIAGE)
            if task is None:
                clock.advance(10)
                continue
            if rng.random() < 0.2:
                clock.advance(queue.lease_seconds + 1)  # abandon
                continue
            queue.submit_triage(task.id, w, rng.choice(["yes", "no"]))
            counts = queue.state_counts(TRIAGE)
            assert sum(counts.values()) == 4
