import json

import pytest

from conftest import fixture_path
from gvdb.cli import main
from gvdb.db import Database


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def data_dir(tmp_path):
    return str(tmp_path / "data")


class TestCliPipeline:
    def test_ingest_train_calibrate_classify_seed(self, data_dir, capsys):
        code, out = run(capsys, "--data-dir", data_dir, "ingest",
                        "--file", fixture_path("classifier_corpus.jsonl"))
        assert code == 0
        report = json.loads(out)
        assert report["stored"] == 200 and report["rejected"] == 0

        # labels fixture: train on the train split only
        labels = [json.loads(l) for l in open(fixture_path("classifier_labels.jsonl"))]
        train_file = data_dir + "/train_labels.jsonl"
        with open(train_file, "w") as f:
            for row in labels:
                if row["split"] == "train":
                    f.write(json.dumps(row) + "\n")

        code, out = run(capsys, "--data-dir", data_dir, "train", "--labels", train_file)
        assert code == 0 and json.loads(out)["docs"] == 120

        code, out = run(capsys, "--data-dir", data_dir, "calibrate", "--labels", train_file,
                        "--target-recall", "0.95")
        assert code == 0
        assert 0 < json.loads(out)["threshold"] <= 1

        code, out = run(capsys, "--data-dir", data_dir, "classify")
        assert code == 0
        counts = json.loads(out)
        assert counts["machine_positive"] + counts["machine_negative"] == 200

        code, out = run(capsys, "--data-dir", data_dir, "seed-tasks")
        assert code == 0
        assert json.loads(out)["enqueued"] == counts["machine_positive"]

        # state survives across invocations
        db = Database(data_dir=data_dir)
        assert len(db.articles) == 200
        assert db.model is not None
        assert len(db.queue.tasks("triage")) == counts["machine_positive"]

    def test_extract_stats_export_cluster(self, data_dir, capsys):
        code, _ = run(capsys, "--data-dir", data_dir, "ingest",
                      "--file", fixture_path("gold_articles.jsonl"))
        assert code == 0
        db = Database(data_dir=data_dir)
        for article in db.articles:
            article.relevance_state = "human_confirmed"
        db.save()

        code, out = run(capsys, "--data-dir", data_dir, "extract", "--auto-threshold", "0.0")
        assert code == 0
        assert json.loads(out)["stored"] == 40

        code, out = run(capsys, "--data-dir", data_dir, "stats")
        assert code == 0
        assert "40  fully annotated" in out

        out_file = data_dir + "/export.csv"
        code, out = run(capsys, "--data-dir", data_dir, "export", "--format", "table",
                        "--out", out_file)
        assert code == 0
        header = open(out_file).readline()
        assert header.startswith("article_id,")

        code, out = run(capsys, "--data-dir", data_dir, "cluster", "--day-window", "2")
        assert code == 0
        summary = json.loads(out.split("\n", 1)[0])
        assert summary["records"] == 40 and summary["clusters"] >= 1

    def test_config_file_round_trip(self, data_dir, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"triage_quorum": 5, "auto_threshold": 0.8}))
        code, _ = run(capsys, "--data-dir", data_dir, "--config", str(config), "ingest",
                      "--file", fixture_path("ingest_batch_20.jsonl"))
        assert code == 0

    def test_unknown_config_key_rejected(self, data_dir, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"not_a_setting": 1}))
        with pytest.raises(ValueError):
            main(["--data-dir", data_dir, "--config", str(config), "stats"])
