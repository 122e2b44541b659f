import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from gvdb.extract import load_default_resources

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def load_jsonl(name: str) -> list[dict]:
    with open(fixture_path(name), "r", encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


@pytest.fixture(scope="session")
def resources():
    return load_default_resources()


@pytest.fixture(scope="session")
def gold_articles():
    return load_jsonl("gold_articles.jsonl")


@pytest.fixture(scope="session")
def gold_machine_records():
    return load_jsonl("gold_machine_records.jsonl")
