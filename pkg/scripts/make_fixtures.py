#!/usr/bin/env python3
"""Regenerate the committed test fixtures under tests/fixtures/.

Everything is seeded, so reruns are byte-identical. The gold machine
records are the extraction engine's own output over the gold articles,
frozen after hand-checking a sample; the regression test asserts exact
equality, so regenerate them only when an extraction change is intended
and re-verify before committing.
"""

import json
import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

import synth
from gvdb.extract import extract_all, load_default_resources
from gvdb.ingest import make_article
from gvdb.records import CIRCUMSTANCE_FIELDS

FIXTURES = os.path.normpath(os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures"))

CLASSIFIER_SEED = 20160308
GOLD_SEED = 41214
CLUSTER_SEED = 7366
INGEST_SEED = 6804


def write_jsonl(name: str, rows: list[dict]) -> None:
    path = os.path.join(FIXTURES, name)
    with open(path, "w", encoding="utf-8") as f:
        for row in rows:
            f.write(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n")
    print(f"wrote {len(rows):4d} rows to {path}")


def classifier_corpus() -> None:
    rng = random.Random(CLASSIFIER_SEED)
    rows, labels = [], []
    for i in range(100):
        raw, _truth = synth.gen_positive(rng, i)
        rows.append({**raw, "label": "positive", "split": "train" if i < 60 else "test"})
    for i in range(100, 200):
        raw = synth.gen_negative(rng, i)
        rows.append({**raw, "label": "negative", "split": "train" if i < 160 else "test"})
    for row in rows:
        article = make_article(row["url"], row["title"], row["body_text"],
                               row["source_name"], row["published_at"])
        labels.append({"article_id": article.id, "label": row["label"], "split": row["split"]})
    write_jsonl("classifier_corpus.jsonl", rows)
    write_jsonl("classifier_labels.jsonl", labels)


def gold_articles() -> None:
    rng = random.Random(GOLD_SEED)
    resources = load_default_resources()
    articles, machine, payloads = [], [], []
    for i in range(40):
        raw, truth = synth.gen_positive(rng, i)
        article = make_article(**raw)
        assert article.body_text == raw["body_text"]
        articles.append({**raw, "id": article.id})
        result = extract_all(article, resources)
        machine.append({"article_id": article.id, "record": result.assembled.to_json()})
        payloads.append({"article_id": article.id,
                         "record": synth.truth_to_record(article.id, article.body_text, truth).to_json()})
    write_jsonl("gold_articles.jsonl", articles)
    write_jsonl("gold_machine_records.jsonl", machine)
    # gold_004: the canonical fully-valid human payload fixture
    with open(os.path.join(FIXTURES, "gold_payload_004.json"), "w", encoding="utf-8") as f:
        json.dump(payloads[4], f, ensure_ascii=False, indent=2, sort_keys=True)
    print(f"wrote gold_payload_004.json (article {payloads[4]['article_id'][:12]}...)")


def cluster_records() -> None:
    """50 records over ~18 incidents: name variants, date jitter, missing fields."""
    rng = random.Random(CLUSTER_SEED)
    rows = []
    serial = 0
    incidents = []
    while sum(n for _, n in incidents) < 50:
        n_reports = rng.choice([1, 1, 2, 2, 3, 4, 5])
        n_reports = min(n_reports, 50 - sum(n for _, n in incidents))
        incidents.append((len(incidents), n_reports))
    for incident_idx, n_reports in incidents:
        city, state = rng.choice(synth.CITIES)
        base_day = rng.randrange(1, 25)
        first = rng.choice(synth.FIRST_NAMES)
        last = rng.choice(synth.LAST_NAMES)
        middle = rng.choice("ABCDEJKLMR")
        for r in range(n_reports):
            serial += 1
            article_id = f"art{serial:03d}"
            rec = {
                "article_id": article_id,
                "provenance": rng.choice(["human", "machine", "mixed"]),
                "circumstances": {name: "undetermined" for name in CIRCUMSTANCE_FIELDS},
                "shooters": [],
                "victims": [],
            }
            rec["state"] = {"value": state, "unanchored": True}
            if rng.random() < 0.8:
                rec["city"] = {"value": city, "unanchored": True}
            if rng.random() < 0.85:
                day = base_day + rng.choice([0, 0, 0, 1, -1, 2])
                rec["date"] = {"value": f"2016-03-{day:02d}", "unanchored": True}
            if rng.random() < 0.75:
                name = f"{first} {last}" if rng.random() < 0.6 else f"{first} {middle}. {last}"
                rec["victims"] = [{"role": "victim",
                                   "name": {"value": name, "unanchored": True}}]
            fetched_hour = rng.randrange(5, 23)
            rows.append({"record": rec,
                         "fetched_at": f"2016-03-{base_day + 2:02d}T{fetched_hour:02d}:00:00+00:00"})
    write_jsonl("cluster_records_50.jsonl", rows)


def ingest_batch() -> None:
    rng = random.Random(INGEST_SEED)
    lines = []
    for i in range(9):
        raw, _ = synth.gen_positive(rng, 900 + i)
        lines.append(raw)
    for i in range(8):
        lines.append(synth.gen_negative(rng, 950 + i))
    # two exact duplicates of records already in the batch
    lines.append(dict(lines[2]))
    lines.append(dict(lines[11]))
    # one empty-body record
    lines.append({"url": "http://empty.example.test/0", "title": "Empty", "body_text": "   \n  ",
                  "source_name": "Empty Daily"})
    rng.shuffle(lines)
    write_jsonl("ingest_batch_20.jsonl", lines)


def main() -> None:
    os.makedirs(FIXTURES, exist_ok=True)
    classifier_corpus()
    gold_articles()
    cluster_records()
    ingest_batch()


if __name__ == "__main__":
    main()
