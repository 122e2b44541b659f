"""Rule-based extraction engine with confidence gating."""

from .base import ExtractionCandidate, anchor_for
from .engine import (
    AUTO_ACCEPT,
    DEFAULT_AUTO_THRESHOLD,
    NEEDS_REVIEW,
    ExtractionResult,
    GateOutcome,
    extract_all,
    extract_circumstances,
    gate,
)
from .locations import extract_location
from .participants import extract_participants
from .resources import (
    Gazetteer,
    Resources,
    US_STATES,
    load_circumstance_rules,
    load_default_resources,
    load_gazetteer,
    load_weapon_lexicon,
)
from .sentences import split_sentences
from .temporal import extract_temporal
from .weapons import extract_weapon

__all__ = [
    "AUTO_ACCEPT",
    "DEFAULT_AUTO_THRESHOLD",
    "NEEDS_REVIEW",
    "ExtractionCandidate",
    "ExtractionResult",
    "GateOutcome",
    "Gazetteer",
    "Resources",
    "US_STATES",
    "anchor_for",
    "extract_all",
    "extract_circumstances",
    "extract_location",
    "extract_participants",
    "extract_temporal",
    "extract_weapon",
    "gate",
    "load_circumstance_rules",
    "load_default_resources",
    "load_gazetteer",
    "load_weapon_lexicon",
    "split_sentences",
]
