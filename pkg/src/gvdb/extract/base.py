"""Shared extraction types."""

from __future__ import annotations

from dataclasses import dataclass

from ..records import SpanAnchor


@dataclass(frozen=True)
class ExtractionCandidate:
    """One rule firing: a typed value, its supporting span, and a confidence."""

    field: str
    value: object
    anchor: SpanAnchor
    confidence: float
    rule_id: str

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "value": self.value,
            "anchor": self.anchor.to_json(),
            "confidence": self.confidence,
            "rule_id": self.rule_id,
        }

    @classmethod
    def from_json(cls, d: dict) -> "ExtractionCandidate":
        return cls(
            field=d["field"],
            value=d["value"],
            anchor=SpanAnchor.from_json(d["anchor"]),
            confidence=float(d["confidence"]),
            rule_id=d["rule_id"],
        )


def anchor_for(article_id: str, text: str, start: int, end: int) -> SpanAnchor:
    """Anchor over text[start:end]; fidelity holds by construction."""
    return SpanAnchor(article_id=article_id, start=start, end=end, surface=text[start:end])
