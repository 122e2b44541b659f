"""Incident record schema: span anchors, tri-state answers, participants, validation.

Every structured value that was read off article text carries a SpanAnchor
giving its exact character range (Unicode scalar values) in the canonical
body_text, or an explicit unanchored marker when no supporting span exists.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from datetime import date


class TriState(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNDETERMINED = "undetermined"


# Field inventories, in presentation order. The structural tests and the
# annotation UI both enumerate these, so keep them stable.
TIME_PLACE_FIELDS = (
    "city",
    "state",
    "locale_detail",
    "date",
    "clock_time",
    "time_of_day",
)
SHOOTER_ATTRS = ("name", "gender", "age", "race")
VICTIM_ATTRS = ("name", "gender", "age", "race", "injured", "hospitalized", "killed")
WEAPON_FIELDS = ("weapon_type", "shots_fired")
CIRCUMSTANCE_FIELDS = (
    "knew_each_other",
    "domestic_violence",
    "during_other_crime",
    "self_defense",
    "alcohol_involved",
    "drugs_involved",
    "self_directed",
    "suicide_or_attempt",
    "unintentional",
    "by_police",
    "at_police",
    "gun_stolen",
    "gun_owned_by_victim_family",
)

TIME_OF_DAY_VALUES = ("morning", "afternoon", "evening", "night")
GENDER_VALUES = ("male", "female", "unknown")
AGE_MIN, AGE_MAX = 0, 130

US_STATE_CODES = frozenset(
    """AL AK AZ AR CA CO CT DE FL GA HI ID IL IN IA KS KY LA ME MD MA MI MN MS
    MO MT NE NV NH NJ NM NY NC ND OH OK OR PA RI SC SD TN TX UT VT VA WA WV WI
    WY DC""".split()
)

_DATE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")
_CLOCK_RE = re.compile(r"^([01]\d|2[0-3]):([0-5]\d)$")


@dataclass(frozen=True)
class SpanAnchor:
    """Stand-off reference: body_text[start:end] == surface, offsets in scalar values."""

    article_id: str
    start: int
    end: int
    surface: str

    def to_json(self) -> dict:
        return {
            "article_id": self.article_id,
            "start": self.start,
            "end": self.end,
            "surface": self.surface,
        }

    @classmethod
    def from_json(cls, d: dict) -> "SpanAnchor":
        return cls(
            article_id=str(d["article_id"]),
            start=int(d["start"]),
            end=int(d["end"]),
            surface=str(d["surface"]),
        )


@dataclass(frozen=True)
class Anchored:
    """A field value plus the span that supports it (anchor=None means unanchored)."""

    value: object
    anchor: SpanAnchor | None = None

    def to_json(self) -> dict:
        if self.anchor is None:
            return {"value": self.value, "unanchored": True}
        return {"value": self.value, "anchor": self.anchor.to_json()}

    @classmethod
    def from_json(cls, d: dict) -> "Anchored":
        anchor = d.get("anchor")
        return cls(
            value=d.get("value"),
            anchor=SpanAnchor.from_json(anchor) if anchor else None,
        )


def _tristate_from_json(v) -> TriState | None:
    if v is None:
        return None
    return TriState(v)


@dataclass
class Circumstances:
    """The 13 tri-state circumstance answers, in question order.

    None means the question was never answered (incomplete wire payload);
    a freshly constructed instance defaults every answer to undetermined.
    """

    knew_each_other: TriState | None = TriState.UNDETERMINED
    domestic_violence: TriState | None = TriState.UNDETERMINED
    during_other_crime: TriState | None = TriState.UNDETERMINED
    self_defense: TriState | None = TriState.UNDETERMINED
    alcohol_involved: TriState | None = TriState.UNDETERMINED
    drugs_involved: TriState | None = TriState.UNDETERMINED
    self_directed: TriState | None = TriState.UNDETERMINED
    suicide_or_attempt: TriState | None = TriState.UNDETERMINED
    unintentional: TriState | None = TriState.UNDETERMINED
    by_police: TriState | None = TriState.UNDETERMINED
    at_police: TriState | None = TriState.UNDETERMINED
    gun_stolen: TriState | None = TriState.UNDETERMINED
    gun_owned_by_victim_family: TriState | None = TriState.UNDETERMINED

    def to_json(self) -> dict:
        out = {}
        for name in CIRCUMSTANCE_FIELDS:
            v = getattr(self, name)
            if v is not None:
                out[name] = v.value
        return out

    @classmethod
    def from_json(cls, d: dict) -> "Circumstances":
        kwargs = {name: _tristate_from_json(d.get(name)) for name in CIRCUMSTANCE_FIELDS}
        return cls(**kwargs)


@dataclass
class Participant:
    """One shooter or victim with span-anchored attributes.

    injured/hospitalized/killed are victim-only; they must stay None on
    shooters. `attempted` lists attributes the annotator or extractor looked
    for but found no support for in the article.
    """

    role: str  # "shooter" | "victim"
    name: Anchored | None = None
    gender: Anchored | None = None
    age: Anchored | None = None
    race: Anchored | None = None
    injured: TriState | None = None
    hospitalized: TriState | None = None
    killed: TriState | None = None
    attempted: set[str] = field(default_factory=set)

    def attrs_for_role(self) -> tuple[str, ...]:
        return VICTIM_ATTRS if self.role == "victim" else SHOOTER_ATTRS

    def to_json(self) -> dict:
        out: dict = {"role": self.role}
        for name in ("name", "gender", "age", "race"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v.to_json()
        for name in ("injured", "hospitalized", "killed"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v.value
        if self.attempted:
            out["attempted"] = sorted(self.attempted)
        return out

    @classmethod
    def from_json(cls, d: dict) -> "Participant":
        return cls(
            role=str(d.get("role", "")),
            name=Anchored.from_json(d["name"]) if d.get("name") else None,
            gender=Anchored.from_json(d["gender"]) if d.get("gender") else None,
            age=Anchored.from_json(d["age"]) if d.get("age") else None,
            race=Anchored.from_json(d["race"]) if d.get("race") else None,
            injured=_tristate_from_json(d.get("injured")),
            hospitalized=_tristate_from_json(d.get("hospitalized")),
            killed=_tristate_from_json(d.get("killed")),
            attempted=set(d.get("attempted", [])),
        )


@dataclass
class IncidentRecord:
    """One article's structured extraction (article-scoped, Table-1-shaped).

    Scalar fields hold Anchored values or None; a None field counts as
    "attempted but absent" only when its name appears in `attempted`.
    """

    article_id: str
    city: Anchored | None = None
    state: Anchored | None = None
    locale_detail: Anchored | None = None
    date: Anchored | None = None  # value: ISO "YYYY-MM-DD" string
    clock_time: Anchored | None = None  # value: "HH:MM" 24-hour string
    time_of_day: Anchored | None = None
    shooters: list[Participant] = field(default_factory=list)
    victims: list[Participant] = field(default_factory=list)
    weapon_type: Anchored | None = None
    shots_fired: Anchored | None = None  # value: int >= 1
    circumstances: Circumstances = field(default_factory=Circumstances)
    attempted: set[str] = field(default_factory=set)
    multi_incident: bool = False
    provenance: str = "human"  # human | machine | mixed
    status: str = "partial"  # partial | full

    def participants(self) -> list[Participant]:
        return list(self.shooters) + list(self.victims)

    def anchors(self) -> list[SpanAnchor]:
        found: list[SpanAnchor] = []
        for name in TIME_PLACE_FIELDS + WEAPON_FIELDS:
            v = getattr(self, name)
            if v is not None and v.anchor is not None:
                found.append(v.anchor)
        for p in self.participants():
            for attr in ("name", "gender", "age", "race"):
                v = getattr(p, attr)
                if v is not None and v.anchor is not None:
                    found.append(v.anchor)
        return found

    def compute_status(self) -> str:
        for name in TIME_PLACE_FIELDS + WEAPON_FIELDS:
            if getattr(self, name) is None and name not in self.attempted:
                return "partial"
        for p in self.participants():
            for attr in p.attrs_for_role():
                if getattr(p, attr) is None and attr not in p.attempted:
                    return "partial"
        for name in CIRCUMSTANCE_FIELDS:
            if getattr(self.circumstances, name) is None:
                return "partial"
        return "full"

    def finalize(self) -> "IncidentRecord":
        self.status = self.compute_status()
        return self

    def to_json(self) -> dict:
        out: dict = {"article_id": self.article_id}
        for name in TIME_PLACE_FIELDS + WEAPON_FIELDS:
            v = getattr(self, name)
            if v is not None:
                out[name] = v.to_json()
        out["shooters"] = [p.to_json() for p in self.shooters]
        out["victims"] = [p.to_json() for p in self.victims]
        out["circumstances"] = self.circumstances.to_json()
        if self.attempted:
            out["attempted"] = sorted(self.attempted)
        out["multi_incident"] = self.multi_incident
        out["provenance"] = self.provenance
        out["status"] = self.status
        return out

    @classmethod
    def from_json(cls, d: dict) -> "IncidentRecord":
        rec = cls(article_id=str(d.get("article_id", "")))
        for name in TIME_PLACE_FIELDS + WEAPON_FIELDS:
            if d.get(name) is not None:
                setattr(rec, name, Anchored.from_json(d[name]))
        rec.shooters = [Participant.from_json(p) for p in d.get("shooters", [])]
        rec.victims = [Participant.from_json(p) for p in d.get("victims", [])]
        rec.circumstances = Circumstances.from_json(d.get("circumstances", {}))
        rec.attempted = set(d.get("attempted", []))
        rec.multi_incident = bool(d.get("multi_incident", False))
        rec.provenance = str(d.get("provenance", "human"))
        rec.status = str(d.get("status", "partial"))
        return rec


@dataclass(frozen=True)
class Violation:
    code: str
    field: str
    message: str


def _check_anchor(body_text: str, article_id: str, field_name: str, anchor: SpanAnchor) -> list[Violation]:
    out = []
    if anchor.article_id != article_id:
        out.append(
            Violation("AnchorArticleMismatch", field_name,
                      f"anchor references article {anchor.article_id!r}, record is for {article_id!r}")
        )
    if not (0 <= anchor.start < anchor.end <= len(body_text)):
        out.append(
            Violation("SpanOutOfRange", field_name,
                      f"offsets [{anchor.start}, {anchor.end}) outside text of length {len(body_text)}")
        )
        return out
    actual = body_text[anchor.start:anchor.end]
    if actual != anchor.surface:
        out.append(
            Violation("SpanMismatch", field_name,
                      f"text at [{anchor.start}, {anchor.end}) is {actual!r}, anchor says {anchor.surface!r}")
        )
    return out


def _check_int(v, field_name: str, code: str, lo: int, hi: int | None = None) -> list[Violation]:
    if not isinstance(v, int) or isinstance(v, bool):
        return [Violation(code, field_name, f"expected an integer, got {v!r}")]
    if v < lo or (hi is not None and v > hi):
        bound = f">= {lo}" if hi is None else f"in [{lo}, {hi}]"
        return [Violation(code, field_name, f"value {v} not {bound}")]
    return []


def validate_payload(body_text: str, record: IncidentRecord) -> list[Violation]:
    """Check every schema invariant; returns violations as data, never raises.

    Empty result means: all anchors reproduce the article text exactly, the
    date/clock/state/gender/age/shots values are well-formed, shooters carry
    no victim-only fields, and all 13 circumstances are answered.
    """
    out: list[Violation] = []

    for name in TIME_PLACE_FIELDS + WEAPON_FIELDS:
        v = getattr(record, name)
        if v is not None and v.anchor is not None:
            out.extend(_check_anchor(body_text, record.article_id, name, v.anchor))

    if record.date is not None:
        raw = record.date.value
        ok = isinstance(raw, str) and _DATE_RE.match(raw)
        if ok:
            try:
                date.fromisoformat(raw)
            except ValueError:
                ok = False
        if not ok:
            out.append(Violation("BadDate", "date", f"not an ISO calendar date: {raw!r}"))
    if record.clock_time is not None:
        raw = record.clock_time.value
        if not (isinstance(raw, str) and _CLOCK_RE.match(raw)):
            out.append(Violation("BadClockTime", "clock_time", f"not a 24-hour HH:MM time: {raw!r}"))
    if record.state is not None and record.state.value not in US_STATE_CODES:
        out.append(Violation("BadStateCode", "state", f"not a US state code: {record.state.value!r}"))
    if record.time_of_day is not None and record.time_of_day.value not in TIME_OF_DAY_VALUES:
        out.append(Violation("BadTimeOfDay", "time_of_day", f"unknown time of day: {record.time_of_day.value!r}"))
    if record.shots_fired is not None:
        out.extend(_check_int(record.shots_fired.value, "shots_fired", "BadShotsFired", 1))

    for i, p in enumerate(record.participants()):
        label = f"{p.role}[{i}]"
        if p.role not in ("shooter", "victim"):
            out.append(Violation("BadRole", label, f"unknown role {p.role!r}"))
        for attr in ("name", "gender", "age", "race"):
            v = getattr(p, attr)
            if v is not None and v.anchor is not None:
                out.extend(_check_anchor(body_text, record.article_id, f"{label}.{attr}", v.anchor))
        if p.age is not None:
            out.extend(_check_int(p.age.value, f"{label}.age", "AgeOutOfBounds", AGE_MIN, AGE_MAX))
        if p.gender is not None and p.gender.value not in GENDER_VALUES:
            out.append(Violation("BadGender", f"{label}.gender", f"unknown gender {p.gender.value!r}"))
        if p.role == "shooter":
            for attr in ("injured", "hospitalized", "killed"):
                if getattr(p, attr) is not None:
                    out.append(Violation("VictimFieldOnShooter", f"{label}.{attr}",
                                         "victim-only field present on a shooter"))

    for name in CIRCUMSTANCE_FIELDS:
        if getattr(record.circumstances, name) is None:
            out.append(Violation("MissingCircumstance", f"circumstances.{name}", "question not answered"))

    return out


def render_date_ddmmyyyy(iso_date: str) -> str:
    """Render an ISO calendar date in the DD/MM/YYYY presentation form."""
    d = date.fromisoformat(iso_date)
    return f"{d.day:02d}/{d.month:02d}/{d.year:04d}"


def copy_record(record: IncidentRecord) -> IncidentRecord:
    """Deep-enough copy: anchors and Anchored values are immutable."""
    rec = replace(record)
    rec.shooters = [replace(p, attempted=set(p.attempted)) for p in record.shooters]
    rec.victims = [replace(p, attempted=set(p.attempted)) for p in record.victims]
    rec.circumstances = replace(record.circumstances)
    rec.attempted = set(record.attempted)
    return rec
