"""Temporal extraction: absolute dates, weekday references, clock times, time of day.

Weekday references resolve to the most recent such weekday on or before the
publication date; "last"/"next" modifiers shift one week. A relative
expression with no publication date to resolve against is still emitted,
with confidence 0, so the review queue sees it.
"""

from __future__ import annotations

import re
from datetime import date, timedelta

from .base import ExtractionCandidate, anchor_for

MONTHS = {
    "january": 1, "february": 2, "march": 3, "april": 4, "may": 5, "june": 6,
    "july": 7, "august": 8, "september": 9, "october": 10, "november": 11,
    "december": 12,
}
WEEKDAYS = {
    "monday": 0, "tuesday": 1, "wednesday": 2, "thursday": 3, "friday": 4,
    "saturday": 5, "sunday": 6,
}
TIME_OF_DAY_WORDS = ("morning", "afternoon", "evening", "night")

_MONTH_DAY_RE = re.compile(
    r"\b(January|February|March|April|May|June|July|August|September|October|"
    r"November|December)\s+(\d{1,2})(?:st|nd|rd|th)?(?:,?\s+(\d{4}))?\b"
)
_ISO_DATE_RE = re.compile(r"\b(\d{4})-(\d{2})-(\d{2})\b")
_WEEKDAY_RE = re.compile(
    r"\b(?:(last|next|this)\s+)?(Monday|Tuesday|Wednesday|Thursday|Friday|Saturday|Sunday)\b",
    re.IGNORECASE,
)
_CLOCK_RE = re.compile(r"\b(\d{1,2}):([0-5]\d)\s*([ap])\.?\s?m\.?(?![a-z])", re.IGNORECASE)
_TOD_RE = re.compile(r"\b(morning|afternoon|evening|night)\b", re.IGNORECASE)

CONF_DATE_EXPLICIT = 0.95
CONF_DATE_BORROWED_YEAR = 0.8
CONF_DATE_WEEKDAY = 0.75
CONF_CLOCK = 0.9
CONF_TIME_OF_DAY = 0.7


def resolve_weekday(publication_date: date, weekday: int, modifier: str | None) -> date:
    delta = (publication_date.weekday() - weekday) % 7
    resolved = publication_date - timedelta(days=delta)
    if modifier == "last":
        resolved -= timedelta(days=7)
    elif modifier == "next":
        resolved += timedelta(days=7)
    return resolved


def borrow_year(publication_date: date, month: int, day: int) -> date | None:
    """Month-day with no year: publication year, stepping back one year if
    that lands in the future."""
    try:
        candidate = date(publication_date.year, month, day)
    except ValueError:
        return None
    if candidate > publication_date:
        try:
            candidate = date(publication_date.year - 1, month, day)
        except ValueError:
            return None
    return candidate


def to_24h(hour: int, minute: int, meridiem: str) -> str | None:
    if not (1 <= hour <= 12):
        return None
    if meridiem == "a":
        hour = 0 if hour == 12 else hour
    else:
        hour = 12 if hour == 12 else hour + 12
    return f"{hour:02d}:{minute:02d}"


def extract_temporal(article_id: str, text: str,
                     publication_date: date | None) -> list[ExtractionCandidate]:
    out: list[ExtractionCandidate] = []

    for m in _MONTH_DAY_RE.finditer(text):
        month = MONTHS[m.group(1).lower()]
        day = int(m.group(2))
        anchor = anchor_for(article_id, text, m.start(), m.end())
        if m.group(3):
            try:
                value = date(int(m.group(3)), month, day).isoformat()
            except ValueError:
                continue
            out.append(ExtractionCandidate("date", value, anchor, CONF_DATE_EXPLICIT,
                                           "temporal/month-day-year"))
        elif publication_date is not None:
            resolved = borrow_year(publication_date, month, day)
            if resolved is not None:
                out.append(ExtractionCandidate("date", resolved.isoformat(), anchor,
                                               CONF_DATE_BORROWED_YEAR, "temporal/month-day"))
        else:
            out.append(ExtractionCandidate("date", None, anchor, 0.0,
                                           "temporal/month-day-unresolved"))

    for m in _ISO_DATE_RE.finditer(text):
        try:
            value = date(int(m.group(1)), int(m.group(2)), int(m.group(3))).isoformat()
        except ValueError:
            continue
        out.append(ExtractionCandidate("date", value, anchor_for(article_id, text, m.start(), m.end()),
                                       CONF_DATE_EXPLICIT, "temporal/iso-date"))

    for m in _WEEKDAY_RE.finditer(text):
        modifier = m.group(1).lower() if m.group(1) else None
        weekday = WEEKDAYS[m.group(2).lower()]
        anchor = anchor_for(article_id, text, m.start(), m.end())
        if publication_date is None:
            out.append(ExtractionCandidate("date", None, anchor, 0.0,
                                           "temporal/weekday-unresolved"))
        else:
            value = resolve_weekday(publication_date, weekday, modifier).isoformat()
            out.append(ExtractionCandidate("date", value, anchor, CONF_DATE_WEEKDAY,
                                           "temporal/weekday"))

    for m in _CLOCK_RE.finditer(text):
        value = to_24h(int(m.group(1)), int(m.group(2)), m.group(3).lower())
        if value is None:
            continue
        out.append(ExtractionCandidate("clock_time", value,
                                       anchor_for(article_id, text, m.start(), m.end()),
                                       CONF_CLOCK, "temporal/clock-12h"))

    seen_tod: set[str] = set()
    for m in _TOD_RE.finditer(text):
        value = m.group(1).lower()
        if value in seen_tod:
            continue
        seen_tod.add(value)
        out.append(ExtractionCandidate("time_of_day", value,
                                       anchor_for(article_id, text, m.start(), m.end()),
                                       CONF_TIME_OF_DAY, "temporal/time-of-day"))

    return out
