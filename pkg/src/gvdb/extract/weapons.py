"""Weapon type and shots-fired extraction."""

from __future__ import annotations

import re

from .base import ExtractionCandidate, anchor_for
from .resources import WeaponLexicon

CONF_WEAPON_SPECIFIC = 0.85
CONF_WEAPON_GENERIC = 0.5
CONF_SHOTS = 0.85

GENERIC_TYPES = frozenset({"unknown firearm"})

NUMBER_WORDS = {
    "one": 1, "two": 2, "three": 3, "four": 4, "five": 5, "six": 6,
    "seven": 7, "eight": 8, "nine": 9, "ten": 10, "eleven": 11, "twelve": 12,
    "thirteen": 13, "fourteen": 14, "fifteen": 15, "sixteen": 16,
    "seventeen": 17, "eighteen": 18, "nineteen": 19, "twenty": 20,
}

_SHOT_PATTERNS = (
    re.compile(r"\bfired\s+([\w-]+)\s+(?:shots?|rounds?|times)\b", re.IGNORECASE),
    re.compile(r"\b([\w-]+)\s+shots?\s+(?:were\s+|was\s+)?fired\b", re.IGNORECASE),
    re.compile(r"\b([\w-]+)\s+rounds\b", re.IGNORECASE),
)


def parse_count(word: str) -> int | None:
    if word.isdigit():
        n = int(word)
        return n if n >= 1 else None
    return NUMBER_WORDS.get(word.lower())


def extract_weapon(article_id: str, text: str, lexicon: WeaponLexicon) -> list[ExtractionCandidate]:
    out: list[ExtractionCandidate] = []

    claimed: list[tuple[int, int]] = []
    seen_types: set[str] = set()
    for rule in lexicon.rules:  # longest terms first
        for m in re.finditer(r"\b" + re.escape(rule.term) + r"s?\b", text, re.IGNORECASE):
            if any(m.start() < e and s < m.end() for s, e in claimed):
                continue
            claimed.append((m.start(), m.end()))
            if rule.value in seen_types:
                continue
            seen_types.add(rule.value)
            conf = CONF_WEAPON_GENERIC if rule.value in GENERIC_TYPES else CONF_WEAPON_SPECIFIC
            out.append(ExtractionCandidate("weapon_type", rule.value,
                                           anchor_for(article_id, text, m.start(), m.end()),
                                           conf, rule.rule_id))

    seen_counts: set[int] = set()
    for pattern in _SHOT_PATTERNS:
        for m in pattern.finditer(text):
            n = parse_count(m.group(1))
            if n is None or n in seen_counts:
                continue  # non-numeric quantifiers ("several") are excluded
            seen_counts.add(n)
            out.append(ExtractionCandidate("shots_fired", n,
                                           anchor_for(article_id, text, m.start(), m.end()),
                                           CONF_SHOTS, "weapons/shot-count"))

    return sorted(out, key=lambda c: (c.field, -c.confidence, c.anchor.start))
