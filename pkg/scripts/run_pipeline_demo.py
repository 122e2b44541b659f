#!/usr/bin/env python3
"""End-to-end pipeline demo on the synthetic corpus, fully in memory.

Ingest -> train -> calibrate -> classify -> triage (simulated workers) ->
gated extraction -> clustering -> stats -> export. Prints a short summary
at each stage. Run: python scripts/run_pipeline_demo.py
"""

import json
import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

import synth
from gvdb import classifier as clf
from gvdb.aggregate import compute_stats, export_table, map_aggregate
from gvdb.annotation import TRIAGE
from gvdb.config import GvdbConfig
from gvdb.db import Database
from gvdb.ingest import ingest_batch
from gvdb.store import cluster_events

SEED = 316


def main():
    db = Database(config=GvdbConfig())
    rng = random.Random(SEED)

    lines = []
    for i in range(60):
        raw, _ = synth.gen_positive(rng, i)
        lines.append(json.dumps(raw))
    for i in range(60, 120):
        lines.append(json.dumps(synth.gen_negative(rng, i)))
    report = ingest_batch(lines, db.articles)
    print(f"ingest: stored={report.stored} duplicates={report.duplicates} "
          f"rejected={report.rejected}")

    # Seed labels: in production these come from triage verdicts; the demo
    # labels the first 30 of each kind by hand.
    ids = [a.id for a in db.articles]
    docs = [clf.LabeledDoc(aid, "positive") for aid in ids[:30]]
    docs += [clf.LabeledDoc(aid, "negative") for aid in ids[60:90]]
    texts = {a.id: a.body_text for a in db.articles}
    db.model = clf.train(docs, texts, alpha=1.0)
    threshold = clf.calibrate_threshold(db.model, docs, texts, target_recall=0.95)
    print(f"classifier: vocabulary={len(db.model.vocabulary)} threshold={threshold:.4g}")

    flagged = 0
    for article in db.articles.by_state("unclassified"):
        if clf.classify(db.model, article) == "machine_positive":
            flagged += 1
    print(f"classify: machine_positive={flagged}")

    enqueued, _ = db.queue.enqueue_triage(sorted(a.id for a in db.articles.by_state("machine_positive")))
    print(f"triage queue: {enqueued} tasks")

    workers = ["ann", "ben", "cal"]
    for w in workers:
        db.queue.register_worker(w)
    votes = 0
    while True:
        idle = 0
        for w in workers:
            task = db.queue.lease_task(w, TRIAGE)
            if task is None:
                idle += 1
                continue
            article = db.articles.get(task.article_id)
            verdict = "yes" if "was shot" in article.body_text or "shooting" in article.body_text else "no"
            db.queue.submit_triage(task.id, w, verdict)
            votes += 1
        if idle == len(workers):
            break
    confirmed = len(db.articles.by_state("human_confirmed"))
    rejected = len(db.articles.by_state("human_rejected"))
    print(f"triage: {votes} votes -> confirmed={confirmed} rejected={rejected}")

    outcomes = db.extract_pending()
    stored = sum(1 for o in outcomes if o["routed"] == "stored")
    review = sum(1 for o in outcomes if o["routed"] == "review")
    print(f"extraction: {len(outcomes)} articles, auto-stored={stored}, sent to review={review}")

    # Review stage: workers approve the pre-filled machine candidates.
    from gvdb.annotation import FULL_ANNOTATION
    from gvdb.records import IncidentRecord

    approved = 0
    while True:
        task = db.queue.lease_task(workers[approved % 3], FULL_ANNOTATION)
        if task is None:
            break
        record = IncidentRecord.from_json(task.prefill["assembled"]) if task.prefill \
            else IncidentRecord(article_id=task.article_id)
        result = db.queue.submit_annotation(task.id, workers[approved % 3], record)
        assert result["accepted"], result
        approved += 1
    print(f"review: {approved} machine records approved by annotators")

    clusters = cluster_events(db.incidents.latest_records(), db.linkage_params,
                              {a.id: a.fetched_at for a in db.articles})
    print(f"clustering: {len(db.incidents)} records -> {len(clusters)} incidents")

    stats = compute_stats(db.articles, db.incidents)
    print("stats:", json.dumps(stats.to_json()))

    agg = map_aggregate(db.incidents, db.resources.gazetteer, db.linkage_params)
    top = sorted(agg.cities, key=lambda c: -c.article_count)[:5]
    print("map: top cities:", ", ".join(f"{c.city} {c.state}={c.article_count}" for c in top))

    table = export_table(db.incidents)
    print(f"export: table with {len(table.splitlines()) - 1} rows, "
          f"{len(table.splitlines()[0].split(','))} columns")


if __name__ == "__main__":
    main()
