"""Extraction resources: gazetteer, weapon lexicon, circumstance keyword rules.

All three load from editable delimited text files; rule ids reference
file and line so every machine candidate is auditable. Resources are
immutable after load and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib.resources import files

US_STATES = {
    "Alabama": "AL", "Alaska": "AK", "Arizona": "AZ", "Arkansas": "AR",
    "California": "CA", "Colorado": "CO", "Connecticut": "CT", "Delaware": "DE",
    "Florida": "FL", "Georgia": "GA", "Hawaii": "HI", "Idaho": "ID",
    "Illinois": "IL", "Indiana": "IN", "Iowa": "IA", "Kansas": "KS",
    "Kentucky": "KY", "Louisiana": "LA", "Maine": "ME", "Maryland": "MD",
    "Massachusetts": "MA", "Michigan": "MI", "Minnesota": "MN", "Mississippi": "MS",
    "Missouri": "MO", "Montana": "MT", "Nebraska": "NE", "Nevada": "NV",
    "New Hampshire": "NH", "New Jersey": "NJ", "New Mexico": "NM", "New York": "NY",
    "North Carolina": "NC", "North Dakota": "ND", "Ohio": "OH", "Oklahoma": "OK",
    "Oregon": "OR", "Pennsylvania": "PA", "Rhode Island": "RI", "South Carolina": "SC",
    "South Dakota": "SD", "Tennessee": "TN", "Texas": "TX", "Utah": "UT",
    "Vermont": "VT", "Virginia": "VA", "Washington": "WA", "West Virginia": "WV",
    "Wisconsin": "WI", "Wyoming": "WY", "District of Columbia": "DC",
}
STATE_CODES = frozenset(US_STATES.values())

LOCALE_KEYWORDS = ("home", "school", "bar", "street", "store", "park")


@dataclass(frozen=True)
class GazetteerEntry:
    city: str
    state: str
    lat: float
    lon: float
    population: int


class Gazetteer:
    """City lookup table keyed by casefolded name; entries sorted by population."""

    def __init__(self, entries: list[GazetteerEntry]) -> None:
        self.entries = entries
        self.by_city: dict[str, list[GazetteerEntry]] = {}
        for e in entries:
            self.by_city.setdefault(e.city.casefold(), []).append(e)
        for lst in self.by_city.values():
            lst.sort(key=lambda e: (-e.population, e.state))
        self.max_words = max((len(e.city.split()) for e in entries), default=1)

    def lookup(self, city: str) -> list[GazetteerEntry]:
        return self.by_city.get(city.casefold(), [])

    def lookup_in_state(self, city: str, state: str) -> GazetteerEntry | None:
        for e in self.lookup(city):
            if e.state == state:
                return e
        return None

    def __len__(self) -> int:
        return len(self.entries)


def load_gazetteer(path) -> Gazetteer:
    entries = []
    with open(path, "r", encoding="utf-8") as f:
        header = f.readline()
        if not header.startswith("city|"):
            raise ValueError(f"gazetteer {path} missing city|state|lat|lon|population header")
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            city, state, lat, lon, pop = line.split("|")
            if state not in STATE_CODES:
                raise ValueError(f"gazetteer entry {city!r} has unknown state {state!r}")
            entries.append(GazetteerEntry(city, state, float(lat), float(lon), int(pop)))
    return Gazetteer(entries)


@dataclass(frozen=True)
class LexiconRule:
    term: str
    value: str
    rule_id: str  # file:line


class WeaponLexicon:
    def __init__(self, rules: list[LexiconRule]) -> None:
        # Longest term first so "assault rifle" wins over "rifle".
        self.rules = sorted(rules, key=lambda r: (-len(r.term), r.term))
        self.canonical_types = sorted({r.value for r in rules})

    def __len__(self) -> int:
        return len(self.rules)


def load_weapon_lexicon(path) -> WeaponLexicon:
    rules = []
    name = getattr(path, "name", str(path)).split("/")[-1]
    with open(path, "r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            term, canonical = line.split("|")
            rules.append(LexiconRule(term.strip().casefold(), canonical.strip(), f"{name}:{line_no}"))
    return WeaponLexicon(rules)


@dataclass(frozen=True)
class CircumstanceRule:
    field: str
    answer: str  # yes | no
    phrase: str
    rule_id: str


def load_circumstance_rules(path) -> list[CircumstanceRule]:
    rules = []
    name = getattr(path, "name", str(path)).split("/")[-1]
    with open(path, "r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fld, answer, phrase = line.split("|")
            rules.append(CircumstanceRule(fld.strip(), answer.strip(), phrase.strip().casefold(),
                                          f"{name}:{line_no}"))
    return rules


@dataclass
class Resources:
    gazetteer: Gazetteer
    weapons: WeaponLexicon
    circumstance_rules: list[CircumstanceRule] = field(default_factory=list)


def default_data_path(filename: str):
    return files("gvdb").joinpath("data").joinpath(filename)


def load_default_resources() -> Resources:
    """The resources shipped with the package (sample gazetteer and lexicons)."""
    return Resources(
        gazetteer=load_gazetteer(default_data_path("gazetteer.txt")),
        weapons=load_weapon_lexicon(default_data_path("weapons.txt")),
        circumstance_rules=load_circumstance_rules(default_data_path("circumstance_rules.txt")),
    )
