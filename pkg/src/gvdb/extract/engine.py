"""Run all extractors, assemble a machine record, and gate it for review.

Assembly takes the highest-confidence candidate per field; every field the
extractors looked at but could not fill is explicitly marked attempted, so a
machine record is always structurally complete (status=full) even when empty.
Gating routes low-confidence fields to the human annotation queue with the
machine candidates pre-filled.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from datetime import date

from ..records import (
    Anchored,
    Circumstances,
    CIRCUMSTANCE_FIELDS,
    IncidentRecord,
    Participant,
    SHOOTER_ATTRS,
    TIME_PLACE_FIELDS,
    TriState,
    VICTIM_ATTRS,
    WEAPON_FIELDS,
)
from .base import ExtractionCandidate, anchor_for
from .locations import extract_location
from .participants import ParticipantDraft, extract_participants
from .resources import Resources
from .temporal import extract_temporal
from .weapons import extract_weapon

DEFAULT_AUTO_THRESHOLD = 0.9
CONF_CIRCUMSTANCE = 0.75

AUTO_ACCEPT = "auto_accept"
NEEDS_REVIEW = "needs_review"

SCALAR_FIELDS = TIME_PLACE_FIELDS + WEAPON_FIELDS


@dataclass
class ExtractionResult:
    article_id: str
    candidates: dict[str, list[ExtractionCandidate]]
    assembled: IncidentRecord
    gating: dict[str, str] = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "article_id": self.article_id,
            "candidates": {f: [c.to_json() for c in cs] for f, cs in self.candidates.items()},
            "assembled": self.assembled.to_json(),
            "gating": dict(self.gating),
        }


def extract_circumstances(article_id: str, text: str, resources: Resources) -> list[ExtractionCandidate]:
    """Keyword rules over the 13 tri-state questions; first match per field wins."""
    out: list[ExtractionCandidate] = []
    answered: set[str] = set()
    for rule in resources.circumstance_rules:
        if rule.field in answered:
            continue
        m = re.search(r"\b" + re.escape(rule.phrase) + r"\b", text, re.IGNORECASE)
        if m:
            answered.add(rule.field)
            out.append(ExtractionCandidate(f"circumstances.{rule.field}", rule.answer,
                                           anchor_for(article_id, text, m.start(), m.end()),
                                           CONF_CIRCUMSTANCE, rule.rule_id))
    return out


def _group(cands: list[ExtractionCandidate]) -> dict[str, list[ExtractionCandidate]]:
    grouped: dict[str, list[ExtractionCandidate]] = {}
    for c in cands:
        grouped.setdefault(c.field, []).append(c)
    for lst in grouped.values():
        lst.sort(key=lambda c: (-c.confidence, c.anchor.start, c.rule_id))
    return grouped


def _participant_from_draft(d: ParticipantDraft) -> Participant:
    p = Participant(role=d.role)
    for attr in ("name", "age", "gender"):
        cand = getattr(d, attr)
        if cand is not None:
            setattr(p, attr, Anchored(cand.value, cand.anchor))
    if d.role == "victim":
        for attr, v in d.tri.items():
            setattr(p, attr, v)
    attrs = VICTIM_ATTRS if d.role == "victim" else SHOOTER_ATTRS
    p.attempted = {a for a in attrs if getattr(p, a) is None}
    return p


def _assemble(article_id: str, grouped: dict[str, list[ExtractionCandidate]],
              drafts: list[ParticipantDraft]) -> IncidentRecord:
    rec = IncidentRecord(article_id=article_id, provenance="machine")
    for name in SCALAR_FIELDS:
        cands = [c for c in grouped.get(name, []) if c.value is not None]
        if cands:
            top = cands[0]
            setattr(rec, name, Anchored(top.value, top.anchor))
        else:
            rec.attempted.add(name)

    for d in drafts:
        p = _participant_from_draft(d)
        (rec.victims if d.role == "victim" else rec.shooters).append(p)

    circ = Circumstances()
    for name in CIRCUMSTANCE_FIELDS:
        cands = grouped.get(f"circumstances.{name}", [])
        if cands:
            setattr(circ, name, TriState(cands[0].value))
    rec.circumstances = circ
    return rec.finalize()


def extract_all(article, resources: Resources,
                auto_threshold: float = DEFAULT_AUTO_THRESHOLD) -> ExtractionResult:
    """Run every extractor over one article; pure in (text, published_at, resources)."""
    text = article.body_text
    article_id = article.id
    published = date.fromisoformat(article.published_at) if article.published_at else None

    cands: list[ExtractionCandidate] = []
    cands.extend(extract_location(article_id, text, resources.gazetteer))
    cands.extend(extract_temporal(article_id, text, published))
    part_cands, drafts = extract_participants(article_id, text, resources.gazetteer)
    cands.extend(part_cands)
    cands.extend(extract_weapon(article_id, text, resources.weapons))
    cands.extend(extract_circumstances(article_id, text, resources))

    grouped = _group(cands)
    assembled = _assemble(article_id, grouped, drafts)
    result = ExtractionResult(article_id=article_id, candidates=grouped, assembled=assembled)
    result.gating = compute_gating(grouped, auto_threshold)
    return result


def compute_gating(grouped: dict[str, list[ExtractionCandidate]],
                   auto_threshold: float) -> dict[str, str]:
    """Per populated field: auto-accept iff the top confidence clears the gate."""
    gating = {}
    for field_name, cands in sorted(grouped.items()):
        if not cands:
            continue
        top = max(c.confidence for c in cands)
        gating[field_name] = AUTO_ACCEPT if top >= auto_threshold else NEEDS_REVIEW
    return gating


@dataclass
class GateOutcome:
    gating: dict[str, str]
    routed: str  # "stored" | "review"
    record_id: str | None = None
    task_id: str | None = None


def gate(result: ExtractionResult, auto_threshold: float,
         queue=None, record_sink=None) -> GateOutcome:
    """Apply the review gate and route the result.

    All populated fields auto-accepted: the machine record goes straight to
    the incident store. Any needs_review field: a full-annotation task
    pre-filled with the machine candidates is enqueued instead.
    """
    if auto_threshold < 0:
        raise ValueError(f"auto_threshold must be >= 0, got {auto_threshold}")
    result.gating = compute_gating(result.candidates, auto_threshold)

    if any(v == NEEDS_REVIEW for v in result.gating.values()):
        task_id = None
        if queue is not None:
            task = queue.enqueue_annotation(result.article_id, prefill=result.to_json())
            task_id = task.id if task else None
        return GateOutcome(gating=result.gating, routed="review", task_id=task_id)

    record_id = None
    if record_sink is not None:
        record_id = record_sink(result.assembled)
    return GateOutcome(gating=result.gating, routed="stored", record_id=record_id)
