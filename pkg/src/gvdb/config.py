"""Runtime configuration: thresholds, quorums, lease and linkage parameters."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields


@dataclass
class GvdbConfig:
    smoothing_alpha: float = 1.0
    target_recall: float = 0.95
    auto_threshold: float = 0.9
    triage_quorum: int = 3
    annotation_quorum: int = 1
    lease_seconds: float = 30 * 60.0
    day_window: int = 2
    name_sim: float = 0.5
    page_size: int = 50

    @classmethod
    def from_file(cls, path: str) -> "GvdbConfig":
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        return cls(**data)

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}
