"""Location extraction: gazetteer city matches, state names, dateline patterns.

Dateline openings ("PHILADELPHIA, PA — ...") are the strongest signal; bare
gazetteer hits rank by whether the city is unique, and ambiguous names fan
out into one candidate per gazetteer state, ordered by population, all kept
below the auto-accept gate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .base import ExtractionCandidate, anchor_for
from .resources import Gazetteer, LOCALE_KEYWORDS, STATE_CODES, US_STATES

CONF_DATELINE = 0.95
CONF_DATELINE_UNLISTED = 0.85
CONF_CITY_STATE_CUE = 0.9
CONF_CITY_UNIQUE = 0.7
CONF_STATE_FROM_UNIQUE_CITY = 0.65
CONF_STATE_NAME = 0.8
CONF_AMBIGUOUS_TOP = 0.5
CONF_AMBIGUOUS_STEP = 0.05
CONF_LOCALE = 0.6

_WORD_RE = re.compile(r"[A-Za-z][A-Za-z.'\-]*")
_DATELINE_RE = re.compile(r"^([A-Z][A-Za-z.' ]{0,40}?),\s*([A-Z]{2})\s*(?:—|–|--|-)\s")
_STATE_AFTER_RE = re.compile(r",\s*([A-Z]{2})\b")
_LOCALE_RE = re.compile(r"\b(" + "|".join(LOCALE_KEYWORDS) + r")\b", re.IGNORECASE)

_STATE_NAME_WORDS = {name.split()[0] for name in US_STATES}
_MAX_STATE_WORDS = max(len(n.split()) for n in US_STATES)


@dataclass(frozen=True)
class _Word:
    start: int
    end: int
    text: str


def _words(text: str) -> list[_Word]:
    return [_Word(m.start(), m.end(), m.group(0)) for m in _WORD_RE.finditer(text)]


def _capitalized(w: str) -> bool:
    return w[:1].isupper()


def _adjacent(text: str, a: _Word, b: _Word) -> bool:
    return text[a.end:b.start] == " "


def extract_location(article_id: str, text: str, gazetteer: Gazetteer) -> list[ExtractionCandidate]:
    raw: list[ExtractionCandidate] = []
    first_line = text.split("\n", 1)[0]

    m = _DATELINE_RE.match(first_line)
    if m and m.group(2) in STATE_CODES:
        state = m.group(2)
        city_text = m.group(1)
        entry = gazetteer.lookup_in_state(city_text, state)
        conf = CONF_DATELINE if entry else CONF_DATELINE_UNLISTED
        city_value = entry.city if entry else city_text.title()
        raw.append(ExtractionCandidate("city", city_value,
                                       anchor_for(article_id, text, m.start(1), m.end(1)),
                                       conf, "locations/dateline"))
        raw.append(ExtractionCandidate("state", state,
                                       anchor_for(article_id, text, m.start(2), m.end(2)),
                                       CONF_DATELINE, "locations/dateline"))

    words = _words(text)
    i = 0
    while i < len(words):
        matched = state_match = None
        if _capitalized(words[i].text):
            # Longest gazetteer city phrase starting here.
            for length in range(min(gazetteer.max_words, len(words) - i), 0, -1):
                group = words[i:i + length]
                if not all(_capitalized(w.text) for w in group):
                    continue
                if any(not _adjacent(text, group[k], group[k + 1]) for k in range(length - 1)):
                    continue
                phrase = text[group[0].start:group[-1].end]
                entries = gazetteer.lookup(phrase)
                if entries:
                    matched = (group[0].start, group[-1].end, entries)
                    break
            # State names are scanned with the same phrase machinery.
            if matched is None and words[i].text in _STATE_NAME_WORDS:
                for length in range(min(_MAX_STATE_WORDS, len(words) - i), 0, -1):
                    group = words[i:i + length]
                    if any(not _adjacent(text, group[k], group[k + 1]) for k in range(length - 1)):
                        continue
                    phrase = text[group[0].start:group[-1].end]
                    if phrase in US_STATES:
                        state_match = (group[0].start, group[-1].end, US_STATES[phrase])
                        break

        if matched:
            start, end, entries = matched
            anchor = anchor_for(article_id, text, start, end)
            cue_state = _state_cue_after(text, end)
            if cue_state and any(e.state == cue_state for e in entries):
                entry = next(e for e in entries if e.state == cue_state)
                raw.append(ExtractionCandidate("city", entry.city, anchor,
                                               CONF_CITY_STATE_CUE, "locations/city-state-cue"))
                raw.append(ExtractionCandidate("state", cue_state, anchor,
                                               CONF_CITY_STATE_CUE, "locations/city-state-cue"))
            elif len(entries) == 1:
                entry = entries[0]
                raw.append(ExtractionCandidate("city", entry.city, anchor,
                                               CONF_CITY_UNIQUE, "locations/city-unique"))
                raw.append(ExtractionCandidate("state", entry.state, anchor,
                                               CONF_STATE_FROM_UNIQUE_CITY, "locations/city-unique-state"))
            else:
                raw.append(ExtractionCandidate("city", entries[0].city, anchor,
                                               CONF_AMBIGUOUS_TOP, "locations/city-ambiguous"))
                for rank, entry in enumerate(entries):
                    conf = max(CONF_AMBIGUOUS_TOP - CONF_AMBIGUOUS_STEP * rank, 0.05)
                    raw.append(ExtractionCandidate("state", entry.state, anchor, conf,
                                                   "locations/city-ambiguous"))
            i += len(text[start:end].split())
            continue
        if state_match:
            start, end, code = state_match
            raw.append(ExtractionCandidate("state", code, anchor_for(article_id, text, start, end),
                                           CONF_STATE_NAME, "locations/state-name"))
            i += len(text[start:end].split())
            continue
        i += 1

    seen_locale: set[str] = set()
    for m in _LOCALE_RE.finditer(text):
        value = m.group(1).lower()
        if value in seen_locale:
            continue
        seen_locale.add(value)
        raw.append(ExtractionCandidate("locale_detail", value,
                                       anchor_for(article_id, text, m.start(), m.end()),
                                       CONF_LOCALE, "locations/locale-keyword"))

    return _dedupe(raw)


def _state_cue_after(text: str, end: int) -> str | None:
    m = _STATE_AFTER_RE.match(text, end)
    if m and m.group(1) in STATE_CODES:
        return m.group(1)
    m = re.match(r",\s*([A-Z][a-z]+(?: [A-Z][a-z]+)?)", text[end:end + 30])
    if m and m.group(1) in US_STATES:
        return US_STATES[m.group(1)]
    return None


def _dedupe(cands: list[ExtractionCandidate]) -> list[ExtractionCandidate]:
    """Keep the strongest candidate per (field, value); earliest span on ties."""
    best: dict[tuple[str, object], ExtractionCandidate] = {}
    for c in cands:
        key = (c.field, c.value)
        cur = best.get(key)
        if cur is None or (c.confidence, -c.anchor.start) > (cur.confidence, -cur.anchor.start):
            best[key] = c
    return sorted(best.values(), key=lambda c: (c.field, -c.confidence, c.anchor.start))
