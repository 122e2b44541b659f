"""Unified command line: gvdb ingest|crawl|train|calibrate|classify|seed-tasks|extract|cluster|stats|export|serve."""

from __future__ import annotations

import argparse
import json
import sys

from . import classifier as clf
from .aggregate import compute_stats, export_line_records, export_table
from .config import GvdbConfig
from .db import Database
from .ingest import fetch_source, ingest_batch, load_sources, normalize_article
from .store import LinkageParams, cluster_events


def _load_labels(path: str) -> list[clf.LabeledDoc]:
    docs = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            d = json.loads(line)
            docs.append(clf.LabeledDoc(article_id=d["article_id"], label=d["label"],
                                       label_source=d.get("label_source", "seed")))
    return docs


def _texts(db: Database, docs: list[clf.LabeledDoc]) -> dict[str, str]:
    texts = {}
    for doc in docs:
        article = db.articles.get(doc.article_id)
        if article is None:
            raise SystemExit(f"label references unknown article {doc.article_id}")
        texts[doc.article_id] = article.body_text
    return texts


def cmd_ingest(db: Database, args) -> int:
    with open(args.file, "r", encoding="utf-8") as f:
        report = ingest_batch(f, db.articles)
    db.save()
    print(json.dumps(report.to_json()))
    return 0


def cmd_crawl(db: Database, args) -> int:
    total_pages, total_errors, stored = 0, 0, 0
    for source in load_sources(args.sources):
        result = fetch_source(source)
        total_pages += len(result.pages)
        total_errors += len(result.errors)
        for err in result.errors:
            print(f"fetch error: {err.url}: {err.message}", file=sys.stderr)
        for page in result.pages:
            if not 200 <= page.http_status < 300:
                print(f"skipped {page.url}: HTTP {page.http_status}", file=sys.stderr)
                continue
            try:
                article = normalize_article(page, source_name=source.name)
            except ValueError as e:
                print(f"skipped {page.url}: {e}", file=sys.stderr)
                continue
            if db.articles.add(article):
                stored += 1
    db.save()
    print(json.dumps({"fetched": total_pages, "errors": total_errors, "stored": stored}))
    return 0


def cmd_train(db: Database, args) -> int:
    docs = _load_labels(args.labels)
    db.model = clf.train(docs, _texts(db, docs), alpha=args.alpha)
    db.save()
    print(json.dumps({"vocabulary": len(db.model.vocabulary),
                      "docs": sum(db.model.doc_counts.values())}))
    return 0


def cmd_calibrate(db: Database, args) -> int:
    if db.model is None:
        raise SystemExit("no trained model; run `gvdb train` first")
    docs = _load_labels(args.labels)
    threshold = clf.calibrate_threshold(db.model, docs, _texts(db, docs),
                                        target_recall=args.target_recall)
    db.save()
    print(json.dumps({"threshold": threshold, "target_recall": args.target_recall}))
    return 0


def cmd_classify(db: Database, args) -> int:
    if db.model is None:
        raise SystemExit("no trained model; run `gvdb train` first")
    counts = {"machine_positive": 0, "machine_negative": 0}
    for article in db.articles.by_state("unclassified"):
        counts[clf.classify(db.model, article)] += 1
    db.save()
    print(json.dumps(counts))
    return 0


def cmd_seed_tasks(db: Database, args) -> int:
    positive = sorted(a.id for a in db.articles.by_state("machine_positive"))
    enqueued, skips = db.queue.enqueue_triage(positive)
    db.save()
    print(json.dumps({"enqueued": enqueued, "skipped": len(skips)}))
    return 0


def cmd_extract(db: Database, args) -> int:
    outcomes = db.extract_pending(auto_threshold=args.auto_threshold)
    db.save()
    stored = sum(1 for o in outcomes if o["routed"] == "stored")
    review = sum(1 for o in outcomes if o["routed"] == "review")
    print(json.dumps({"extracted": len(outcomes), "stored": stored, "needs_review": review}))
    return 0


def cmd_cluster(db: Database, args) -> int:
    params = LinkageParams(day_window=args.day_window, name_sim=args.name_sim)
    fetched = {a.id: a.fetched_at for a in db.articles}
    clusters = cluster_events(db.incidents.latest_records(), params, fetched)
    print(json.dumps({"records": len(db.incidents), "clusters": len(clusters)}))
    for cluster in clusters:
        print(json.dumps(cluster.to_json(), ensure_ascii=False))
    return 0


def cmd_stats(db: Database, args) -> int:
    report = compute_stats(db.articles, db.incidents)
    print(f"{report.total_articles:>8}  articles in database")
    print(f"{report.fully_annotated:>8}  fully annotated")
    print(f"{report.with_location:>8}    w/ location information")
    print(f"{report.with_shooter_victim:>8}    w/ shooter/victim information")
    print(f"{report.with_temporal:>8}    w/ temporal information")
    print(f"{report.with_weapon:>8}    w/ weapon information")
    return 0


def cmd_export(db: Database, args) -> int:
    if args.format == "table":
        payload = export_table(db.incidents, view=args.view, params=db.linkage_params)
    else:
        payload = export_line_records(db.incidents, view=args.view, params=db.linkage_params)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(payload)
        print(json.dumps({"written": args.out}))
    else:
        sys.stdout.write(payload)
    return 0


def cmd_serve(db: Database, args) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(db, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gvdb", description=__doc__)
    parser.add_argument("--data-dir", default="./gvdb_data", help="state directory")
    parser.add_argument("--config", default=None, help="JSON config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="ingest a line-record batch file")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("crawl", help="fetch configured sources politely")
    p.add_argument("--sources", required=True)
    p.set_defaults(func=cmd_crawl)

    p = sub.add_parser("train", help="train the relevance classifier")
    p.add_argument("--labels", required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("calibrate", help="pick the high-recall threshold")
    p.add_argument("--labels", required=True)
    p.add_argument("--target-recall", type=float, default=0.95)
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("classify", help="score unclassified articles")
    p.add_argument("--all-unclassified", action="store_true", default=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("seed-tasks", help="enqueue triage for machine positives")
    p.set_defaults(func=cmd_seed_tasks)

    p = sub.add_parser("extract", help="run gated extraction over confirmed articles")
    p.add_argument("--all-confirmed", action="store_true", default=True)
    p.add_argument("--auto-threshold", type=float, default=None)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("cluster", help="cluster records into incidents")
    p.add_argument("--day-window", type=int, default=2)
    p.add_argument("--name-sim", type=float, default=0.5)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("stats", help="database contents report")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("export", help="export records or clusters")
    p.add_argument("--format", choices=("table", "line-records"), default="line-records")
    p.add_argument("--view", choices=("articles", "clusters"), default="articles")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="run the HTTP API (and UI when built)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--ui-dir", default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = GvdbConfig.from_file(args.config) if args.config else GvdbConfig()
    db = Database(data_dir=args.data_dir, config=config)
    return args.func(db, args)


if __name__ == "__main__":
    sys.exit(main())
