"""Participant extraction: names, ages, genders, and shooter/victim roles.

Role assignment is a clause-order heuristic per sentence: entities on the
subject side of an active trigger ("X shot ...", "X fired at ...") are
shooters and those after it victims; the subject of a passive trigger
("... was shot") is a victim, with a trailing "by ..." phrase naming the
shooter. Known-hard constructions (relative clauses, multi-event sentences)
are out of reach by design and routed to human review.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..records import TriState
from .base import ExtractionCandidate, anchor_for
from .resources import Gazetteer
from .sentences import split_sentences

CONF_NAME = 0.8
CONF_AGE = 0.85
CONF_GENDER = 0.7

_PASSIVE_RE = re.compile(
    r"\b(?:was|were|has been|had been|have been|got|being)\s+"
    r"(?:fatally\s+|critically\s+|accidentally\s+)?"
    r"(shot and killed|shot and wounded|gunned down|shot|killed|wounded)\b"
)
_ACTIVE_RE = re.compile(
    r"\b(shot and killed|shot and wounded|gunned down|opened fire on|opened fire|"
    r"fired at|fired|shot)\b"
)
_BY_PHRASE_RE = re.compile(r"^\s*(?:and\s+(?:killed|wounded)\s+)?(?:\w+\s+){0,2}?by\s+")

_NAME_RE = re.compile(r"\b[A-Z][a-z]+(?: [A-Z]\.)?(?: [A-Z][a-z]+)+\b")
_AGE_RE = re.compile(r"\b(\d{1,3})[-\s]year[-\s]old\b|\baged?\s+(\d{1,3})\b")
_GENDER_RE = re.compile(
    r"\b(man|men|woman|women|boy|girl|male|female|he|she|father|mother|"
    r"husband|wife|son|daughter|brother|sister)\b",
    re.IGNORECASE,
)

_MALE_WORDS = frozenset("man men boy male he father husband son brother".split())

# Capitalized sequences containing these are not person names.
NAME_STOPWORDS = frozenset(
    "Police Officer Officers Department County Street Avenue Road Drive "
    "Boulevard Lane Court Hospital Center High School University Park "
    "Monday Tuesday Wednesday Thursday Friday Saturday Sunday January "
    "February March April May June July August September October November "
    "December The A An On In At News Saturday Gun Violence".split()
)


@dataclass
class ParticipantDraft:
    """Attribute candidates for one detected shooter or victim mention."""

    role: str
    order: tuple
    name: ExtractionCandidate | None = None
    age: ExtractionCandidate | None = None
    gender: ExtractionCandidate | None = None
    tri: dict[str, TriState] = field(default_factory=dict)

    def candidates(self) -> list[ExtractionCandidate]:
        return [c for c in (self.name, self.age, self.gender) if c is not None]


def _find_trigger(sentence: str) -> tuple[str, int, int] | None:
    """Leftmost trigger wins; an active verb inside a passive span is passive."""
    passive = _PASSIVE_RE.search(sentence)
    active = _ACTIVE_RE.search(sentence)
    if passive and active:
        if active.start(1) < passive.start():
            return ("active", active.start(1), active.end(1))
        return ("passive", passive.start(), passive.end())
    if active:
        return ("active", active.start(1), active.end(1))
    if passive:
        return ("passive", passive.start(), passive.end())
    return None


def _trim_stopwords(text: str, start: int, end: int) -> tuple[int, int] | None:
    """Longest run of consecutive non-stopword words inside [start, end);
    trims title prefixes like "Officer Daniel Reeves". Needs >= 2 words."""
    words = [(m.start() + start, m.end() + start, m.group(0))
             for m in re.finditer(r"\S+", text[start:end])]
    best: tuple[int, int] | None = None
    run_start = None
    for i, (w_start, w_end, w) in enumerate(words + [(end, end, "Police")]):
        if w.strip(".,") in NAME_STOPWORDS or i == len(words):
            if run_start is not None:
                lo, hi = words[run_start][0], words[i - 1][1]
                if i - run_start >= 2 and (best is None or hi - lo > best[1] - best[0]):
                    best = (lo, hi)
                run_start = None
        elif run_start is None:
            run_start = i
    return best


def _names_in(article_id: str, text: str, start: int, end: int,
              gazetteer: Gazetteer | None) -> list[ExtractionCandidate]:
    out = []
    for m in _NAME_RE.finditer(text, start, end):
        n_start, n_end = m.start(), m.end()
        if any(w in NAME_STOPWORDS for w in m.group(0).split()):
            trimmed = _trim_stopwords(text, n_start, n_end)
            if trimmed is None:
                continue
            n_start, n_end = trimmed
        phrase = text[n_start:n_end]
        if gazetteer is not None and gazetteer.lookup(phrase):
            continue
        out.append(ExtractionCandidate("name", phrase,
                                       anchor_for(article_id, text, n_start, n_end),
                                       CONF_NAME, "participants/name-sequence"))
    return out


def _age_in(article_id: str, text: str, start: int, end: int) -> ExtractionCandidate | None:
    m = _AGE_RE.search(text, start, end)
    if not m:
        return None
    value = int(m.group(1) or m.group(2))
    if not 0 <= value <= 130:
        return None
    return ExtractionCandidate("age", value, anchor_for(article_id, text, m.start(), m.end()),
                               CONF_AGE, "participants/age-pattern")


def _gender_in(article_id: str, text: str, start: int, end: int) -> ExtractionCandidate | None:
    m = _GENDER_RE.search(text, start, end)
    if not m:
        return None
    value = "male" if m.group(1).lower() in _MALE_WORDS else "female"
    return ExtractionCandidate("gender", value, anchor_for(article_id, text, m.start(), m.end()),
                               CONF_GENDER, "participants/gender-lexicon")


def _tri_for_trigger(trigger_text: str) -> dict[str, TriState]:
    tri = {"injured": TriState.UNDETERMINED, "hospitalized": TriState.UNDETERMINED,
           "killed": TriState.UNDETERMINED}
    lowered = trigger_text.lower()
    if "killed" in lowered or "gunned down" in lowered:
        tri["killed"] = TriState.YES
        tri["injured"] = TriState.YES
    elif "shot" in lowered or "wounded" in lowered:
        tri["injured"] = TriState.YES
    return tri


def _side_drafts(article_id: str, text: str, role: str, start: int, end: int,
                 order_key: tuple, gazetteer: Gazetteer | None,
                 trigger_text: str = "") -> list[ParticipantDraft]:
    names = _names_in(article_id, text, start, end, gazetteer)
    age = _age_in(article_id, text, start, end)
    gender = _gender_in(article_id, text, start, end)
    tri = _tri_for_trigger(trigger_text) if role == "victim" else {}

    drafts = []
    if names:
        for k, name in enumerate(names):
            d = ParticipantDraft(role=role, order=order_key + (k,), name=name, tri=dict(tri))
            if len(names) == 1:
                d.age, d.gender = age, gender
            drafts.append(d)
    elif age or gender:
        drafts.append(ParticipantDraft(role=role, order=order_key + (0,), age=age,
                                       gender=gender, tri=dict(tri)))
    return drafts


def extract_participants(article_id: str, text: str,
                         gazetteer: Gazetteer | None = None
                         ) -> tuple[list[ExtractionCandidate], list[ParticipantDraft]]:
    """Role-assigned participant drafts plus their flat attribute candidates."""
    drafts: list[ParticipantDraft] = []
    for s_idx, (s_start, s_end) in enumerate(split_sentences(text)):
        sentence = text[s_start:s_end]
        trigger = _find_trigger(sentence)
        if trigger is None:
            continue
        voice, t_start, t_end = trigger
        trigger_text = sentence[t_start:t_end]
        pre = (s_start, s_start + t_start)
        post = (s_start + t_end, s_end)

        if voice == "active":
            drafts.extend(_side_drafts(article_id, text, "shooter", *pre, (s_idx, 0), gazetteer))
            drafts.extend(_side_drafts(article_id, text, "victim", *post, (s_idx, 1), gazetteer,
                                       trigger_text))
        else:
            drafts.extend(_side_drafts(article_id, text, "victim", *pre, (s_idx, 0), gazetteer,
                                       trigger_text))
            by = _BY_PHRASE_RE.match(text[post[0]:post[1]])
            if by:
                drafts.extend(_side_drafts(article_id, text, "shooter",
                                           post[0] + by.end(), post[1], (s_idx, 1), gazetteer))

    drafts = _merge_drafts(drafts)
    candidates: list[ExtractionCandidate] = []
    for d in drafts:
        for c in d.candidates():
            candidates.append(ExtractionCandidate(f"{d.role}.{c.field}", c.value, c.anchor,
                                                  c.confidence, c.rule_id))
    return candidates, drafts


def _merge_drafts(drafts: list[ParticipantDraft]) -> list[ParticipantDraft]:
    """Merge same-role mentions of one name; first mention keeps its anchors."""
    drafts = sorted(drafts, key=lambda d: d.order)
    merged: list[ParticipantDraft] = []
    by_name: dict[tuple[str, str], ParticipantDraft] = {}
    for d in drafts:
        if d.name is not None:
            key = (d.role, str(d.name.value).casefold())
            kept = by_name.get(key)
            if kept is not None:
                kept.age = kept.age or d.age
                kept.gender = kept.gender or d.gender
                for k, v in d.tri.items():
                    if kept.tri.get(k) in (None, TriState.UNDETERMINED):
                        kept.tri[k] = v
                continue
            by_name[key] = d
        merged.append(d)
    return merged
