"""Deterministic sentence segmentation for trigger-verb windows."""

from __future__ import annotations

import re

# Tokens whose trailing period does not end a sentence.
ABBREVIATIONS = frozenset(
    "mr mrs ms dr st lt gov sgt jr sr gen rep sen capt cpl det maj col "
    "ave blvd rd jan feb mar apr jun jul aug sep sept oct nov dec "
    "a.m p.m u.s".split()
)

_BREAK_RE = re.compile(r"[.!?][\"')\]]?\s+(?=[A-Z“\"'])")


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Spans (start, end) of sentences; splits at .!? followed by an uppercase
    start, except after known abbreviations. Newlines always break."""
    spans: list[tuple[int, int]] = []
    for line_start, line in _lines_with_offsets(text):
        start = 0
        for m in _BREAK_RE.finditer(line):
            if line[m.start()] == "." and _is_abbreviation(line, m.start()):
                continue
            end = m.start() + 1
            if line[start:end].strip():
                spans.append((line_start + start, line_start + end))
            start = m.end()
        if line[start:].strip():
            spans.append((line_start + start, line_start + len(line)))
    return spans


def _lines_with_offsets(text: str) -> list[tuple[int, str]]:
    out = []
    pos = 0
    for line in text.split("\n"):
        out.append((pos, line))
        pos += len(line) + 1
    return out


def _is_abbreviation(line: str, dot_index: int) -> bool:
    token_start = dot_index
    while token_start > 0 and not line[token_start - 1].isspace():
        token_start -= 1
    token = line[token_start:dot_index].casefold().lstrip("(\"'")
    return token in ABBREVIATIONS or (len(token) == 1 and token.isalpha())
