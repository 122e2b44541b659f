"""Deterministic synthetic news corpus with ground-truth spans.

Articles are assembled piece by piece with a cursor so every field value
knows its exact character range in the final body_text; human-path records
built from these spans are valid by construction. Seeded RNG everywhere:
the same seed always yields byte-identical articles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from datetime import date, timedelta

from gvdb.ingest import make_article
from gvdb.records import (
    Anchored,
    Circumstances,
    IncidentRecord,
    Participant,
    SHOOTER_ATTRS,
    SpanAnchor,
    TriState,
    VICTIM_ATTRS,
)

FIRST_NAMES = [
    "James", "Maria", "Robert", "Keisha", "David", "Angela", "Michael", "Dana",
    "Carlos", "Tanya", "Anthony", "Denise", "Marcus", "Laura", "Derek", "Alicia",
    "Tyrone", "Brenda", "Jamal", "Carmen", "Victor", "Gloria", "Andre", "José",
    "Renée", "Darnell",
]
LAST_NAMES = [
    "Johnson", "Rivera", "Thompson", "Brooks", "Washington", "Delgado", "Harris",
    "Coleman", "Mitchell", "Vargas", "Patterson", "Muñoz", "Greene", "Holloway",
    "Simmons", "Ortega", "Bennett", "Caldwell", "Freeman", "Watkins",
]
STREETS = ["Elm", "Oak", "Maple", "Cedar", "Walnut", "Chestnut", "Willow", "Spruce"]

# (city, state) pairs that exist in the shipped gazetteer, unambiguous names only.
CITIES = [
    ("Philadelphia", "PA"), ("Chicago", "IL"), ("Baltimore", "MD"), ("Memphis", "TN"),
    ("Detroit", "MI"), ("Oakland", "CA"), ("Milwaukee", "WI"), ("Tulsa", "OK"),
    ("Cleveland", "OH"), ("Fresno", "CA"), ("Louisville", "KY"), ("Omaha", "NE"),
    ("Tucson", "AZ"), ("Denver", "CO"), ("Boston", "MA"), ("Savannah", "GA"),
    ("Shreveport", "LA"), ("Wichita", "KS"), ("Spokane", "WA"), ("Knoxville", "TN"),
]
WEAPONS = [("handgun", "handgun"), ("pistol", "handgun"), ("rifle", "rifle"),
           ("shotgun", "shotgun"), ("revolver", "handgun")]
SHOT_WORDS = [("three", 3), ("four", 4), ("five", 5), ("six", 6), ("several", None)]
LOCALES = ["home", "school", "bar", "street", "store", "park"]
WEEKDAY_NAMES = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]

CIRCUMSTANCE_PHRASES = [
    ("suicide_or_attempt", "The death is being investigated as a suicide."),
    ("by_police", "Authorities described it as an officer-involved shooting."),
    ("domestic_violence", "Investigators called it a domestic dispute that turned violent."),
    ("during_other_crime", "The gunfire erupted during a robbery at the counter."),
    ("unintentional", "Relatives said the weapon accidentally discharged."),
    ("self_defense", "His lawyer argued the shooting was self-defense."),
    ("alcohol_involved", "Witnesses told officers both men were intoxicated."),
    ("gun_stolen", "Detectives traced the stolen gun to a pawn shop."),
]

NEGATIVE_TEMPLATES = [
    "{city} city council approved the downtown budget on {weekday}, setting aside funds "
    "for road repairs along {street} Street. Residents praised the plan at a packed meeting.",
    "The {city} Tigers beat the visiting Falcons 78-70 on {weekday} night. {name} hit the "
    "winning shot at the buzzer and finished with 24 points before a sellout crowd.",
    "A cold front will move through {city} on {weekday}, bringing heavy rain in the morning "
    "and gusty winds by evening. Forecasters urged drivers to allow extra time.",
    "{name} opened a new bakery near the park in {city} this week. The store sells bread and "
    "pastries each morning, and the owner said business has been brisk.",
    "Police in {city} directed traffic around a watermain break on {street} Street on "
    "{weekday}. Crews expected repairs to wrap up by evening, a city spokesman said.",
    "The school board in {city} voted on {weekday} to extend the library hours. Parents "
    "said the change would help students who stay late for practice.",
    "Two drivers were injured in a collision on {street} Street in {city} on {weekday} "
    "morning. Both were treated at the scene, and the road reopened by noon.",
    "{city} officials fired the parks manager on {weekday} after an audit found missing "
    "receipts. A council spokesman said a national search for a replacement begins next week.",
]

# Confusable negatives: crime-adjacent vocabulary, but no incident of gun violence.
HARD_NEGATIVE_TEMPLATES = [
    "A new report released {weekday} found that shootings in {city} declined 12 percent "
    "last year. City leaders credited a gun violence prevention program, though police "
    "cautioned that homicides remain above the five-year average.",
    "A man was stabbed during a fight outside a bar on {street} Street in {city} on "
    "{weekday} night, police said. The victim was hospitalized and a suspect was arrested "
    "at the scene. Investigators said no firearm was involved.",
    "{city} police are searching for a suspect who robbed a store on {street} Street on "
    "{weekday}. The clerk told officers the man implied he had a weapon but never showed "
    "one. No one was injured in the robbery.",
    "A shooting range and gun shop opened near {city} this week. The owner, {name}, said "
    "customers fired hundreds of rounds on opening day and praised the range's safety "
    "officers and training classes for new handgun owners.",
    "Lawmakers in {city} debated a gun control bill on {weekday}. Advocates cited recent "
    "shooting deaths statewide, while opponents argued the measure would not stop gun "
    "crime. A committee vote is expected next month.",
]


@dataclass
class Truth:
    """Ground truth for one generated article, with body_text spans per field."""

    city: str | None = None
    state: str | None = None
    locale_detail: str | None = None
    date: str | None = None
    clock_time: str | None = None
    time_of_day: str | None = None
    weapon_type: str | None = None
    shots_fired: int | None = None
    shooter_name: str | None = None
    victim_age: int | None = None
    victim_gender: str | None = None
    victim_killed: bool = False
    circumstances: dict[str, str] = field(default_factory=dict)
    spans: dict[str, tuple[int, int]] = field(default_factory=dict)


class _Builder:
    def __init__(self) -> None:
        self.parts: list[str] = []
        self.pos = 0

    def add(self, text: str) -> tuple[int, int]:
        start = self.pos
        self.parts.append(text)
        self.pos += len(text)
        return (start, self.pos)

    def text(self) -> str:
        return "".join(self.parts)


def _gen_brief(rng: random.Random, idx: int, city: str, state: str,
               published: date) -> tuple[dict, Truth]:
    """Short low-cue brief: harder for the classifier, fewer extractable fields."""
    truth = Truth(city=city, state=state)
    b = _Builder()
    truth.spans["city"] = b.add(city.upper())
    b.add(", ")
    truth.spans["state"] = b.add(state)
    b.add(" — A ")
    gender_word, gender = rng.choice([("man", "male"), ("woman", "female")])
    truth.victim_gender = gender
    truth.spans["victim_gender"] = b.add(gender_word)
    b.add(" was wounded in a shooting near a ")
    locale = rng.choice(LOCALES)
    truth.locale_detail = locale
    truth.spans["locale_detail"] = b.add(locale)
    weekday_idx = rng.randrange(7)
    delta = (published.weekday() - weekday_idx) % 7
    truth.date = (published - timedelta(days=delta)).isoformat()
    b.add(" ")
    span = b.add(WEEKDAY_NAMES[weekday_idx])
    truth.spans["date"] = span
    b.add(". No arrests were made, and detectives asked anyone nearby to come forward.")
    article = {
        "url": f"http://{city.lower().replace(' ', '')}{idx}.example.test/briefs/{idx}",
        "title": f"One wounded in {city} shooting",
        "body_text": b.text(),
        "source_name": f"{city} Daily",
        "published_at": published.isoformat(),
    }
    return article, truth


def gen_positive(rng: random.Random, idx: int, brief_ratio: float = 0.15) -> tuple[dict, Truth]:
    """One gun-violence report with tracked ground-truth spans."""
    truth = Truth()
    b = _Builder()

    city, state = rng.choice(CITIES)
    published = date(2016, 1, 4) + timedelta(days=rng.randrange(300))
    if rng.random() < brief_ratio:
        return _gen_brief(rng, idx, city, state, published)

    truth.city, truth.state = city, state
    truth.spans["city"] = b.add(city.upper())
    b.add(", ")
    truth.spans["state"] = b.add(state)
    b.add(" — ")

    age = rng.randrange(14, 72)
    gender_word, gender = rng.choice([("man", "male"), ("woman", "female"),
                                      ("boy", "male"), ("girl", "female")])
    killed = rng.random() < 0.45
    truth.victim_age, truth.victim_gender, truth.victim_killed = age, gender, killed

    b.add("A ")
    truth.spans["victim_age"] = b.add(f"{age}-year-old")
    b.add(" ")
    truth.spans["victim_gender"] = b.add(gender_word)
    b.add(" was shot and " + ("killed" if killed else "wounded") + " ")

    date_style = rng.randrange(3)
    if date_style == 0:
        weekday_idx = rng.randrange(7)
        delta = (published.weekday() - weekday_idx) % 7
        truth.date = (published - timedelta(days=delta)).isoformat()
        tod = rng.choice(["morning", "afternoon", "evening", "night"])
        truth.time_of_day = tod
        span = b.add(f"{WEEKDAY_NAMES[weekday_idx]} {tod}")
        truth.spans["date"] = (span[0], span[0] + len(WEEKDAY_NAMES[weekday_idx]))
        truth.spans["time_of_day"] = (span[1] - len(tod), span[1])
    elif date_style == 1:
        d = published - timedelta(days=rng.randrange(1, 40))
        truth.date = d.isoformat()
        phrase = f"on {d.strftime('%B')} {d.day}"
        span = b.add(phrase)
        truth.spans["date"] = (span[0] + 3, span[1])
    else:
        d = published - timedelta(days=rng.randrange(1, 200))
        truth.date = d.isoformat()
        phrase = f"on {d.strftime('%B')} {d.day}, {d.year}"
        span = b.add(phrase)
        truth.spans["date"] = (span[0] + 3, span[1])

    locale = rng.choice(LOCALES)
    truth.locale_detail = locale
    b.add(" near a ")
    truth.spans["locale_detail"] = b.add(locale)
    b.add(f" on {rng.choice(STREETS)} Street, police said.")

    shooter = f"{rng.choice(FIRST_NAMES)} {rng.choice(LAST_NAMES)}"
    truth.shooter_name = shooter
    b.add("\n")
    b.add("Police say ")
    truth.spans["shooter_name"] = b.add(shooter)
    verb = rng.choice(["shot", "opened fire on", "gunned down"])
    b.add(f" {verb} the victim")
    if rng.random() < 0.7:
        hour, minute = rng.randrange(1, 13), rng.choice([0, 15, 30, 45])
        mer = rng.choice(["a", "p"])
        if mer == "a":
            truth.clock_time = f"{0 if hour == 12 else hour:02d}:{minute:02d}"
        else:
            truth.clock_time = f"{12 if hour == 12 else hour + 12:02d}:{minute:02d}"
        b.add(" around ")
        truth.spans["clock_time"] = b.add(f"{hour}:{minute:02d} {mer}.m.")
    b.add(" before fleeing the scene.")

    weapon_term, weapon_type = rng.choice(WEAPONS)
    shot_word, shot_n = rng.choice(SHOT_WORDS)
    truth.weapon_type = weapon_type
    truth.shots_fired = shot_n
    b.add("\n")
    b.add("Investigators recovered a ")
    truth.spans["weapon_type"] = b.add(weapon_term)
    b.add(" at the scene and said the gunman fired ")
    shots_span = b.add(f"{shot_word} shots")
    if shot_n is not None:
        truth.spans["shots_fired"] = shots_span
    b.add(".")

    if rng.random() < 0.6:
        circ_field, sentence = rng.choice(CIRCUMSTANCE_PHRASES)
        truth.circumstances[circ_field] = "yes"
        b.add("\n")
        b.add(sentence)

    b.add("\n")
    b.add(f"Anyone with information is asked to call {city} police. "
          f"Neighbors on {rng.choice(STREETS)} Street said the block is usually quiet. \U0001f54a️")

    body = b.text()
    victim_word = "killed" if killed else "wounded"
    article = {
        "url": f"http://{city.lower().replace(' ', '')}{idx}.example.test/news/{idx}",
        "title": f"{gender_word.title()} shot and {victim_word} in {city}",
        "body_text": body,
        "source_name": f"{city} Daily",
        "published_at": published.isoformat(),
    }
    return article, truth


def gen_negative(rng: random.Random, idx: int, hard_ratio: float = 0.25) -> dict:
    city, _state = rng.choice(CITIES)
    pool = HARD_NEGATIVE_TEMPLATES if rng.random() < hard_ratio else NEGATIVE_TEMPLATES
    template = rng.choice(pool)
    body = template.format(
        city=city,
        weekday=rng.choice(WEEKDAY_NAMES),
        street=rng.choice(STREETS),
        name=f"{rng.choice(FIRST_NAMES)} {rng.choice(LAST_NAMES)}",
    )
    published = date(2016, 1, 4) + timedelta(days=rng.randrange(300))
    return {
        "url": f"http://{city.lower().replace(' ', '')}{idx}.example.test/local/{idx}",
        "title": body.split(".", 1)[0][:70],
        "body_text": body,
        "source_name": f"{city} Daily",
        "published_at": published.isoformat(),
    }


def truth_to_record(article_id: str, body_text: str, truth: Truth) -> IncidentRecord:
    """Human-path record: every value anchored at its generator-tracked span."""

    def anchored(key: str, value) -> Anchored:
        start, end = truth.spans[key]
        return Anchored(value, SpanAnchor(article_id, start, end, body_text[start:end]))

    rec = IncidentRecord(article_id=article_id, provenance="human")
    if truth.city:
        rec.city = anchored("city", truth.city)
    if truth.state:
        rec.state = anchored("state", truth.state)
    if truth.locale_detail:
        rec.locale_detail = anchored("locale_detail", truth.locale_detail)
    if truth.date:
        rec.date = anchored("date", truth.date)
    if truth.clock_time:
        rec.clock_time = anchored("clock_time", truth.clock_time)
    if truth.time_of_day:
        rec.time_of_day = anchored("time_of_day", truth.time_of_day)
    if truth.weapon_type:
        rec.weapon_type = anchored("weapon_type", truth.weapon_type)
    if truth.shots_fired is not None:
        rec.shots_fired = anchored("shots_fired", truth.shots_fired)

    shooter = Participant(role="shooter")
    if truth.shooter_name:
        shooter.name = anchored("shooter_name", truth.shooter_name)
    shooter.attempted = {a for a in SHOOTER_ATTRS if getattr(shooter, a) is None}
    rec.shooters = [shooter]

    victim = Participant(role="victim")
    if truth.victim_age is not None:
        victim.age = anchored("victim_age", truth.victim_age)
    if truth.victim_gender:
        victim.gender = anchored("victim_gender", truth.victim_gender)
    victim.injured = TriState.YES
    victim.killed = TriState.YES if truth.victim_killed else TriState.NO
    victim.hospitalized = TriState.UNDETERMINED
    victim.attempted = {a for a in VICTIM_ATTRS if getattr(victim, a) is None}
    rec.victims = [victim]

    circ = Circumstances()
    for name, answer in truth.circumstances.items():
        setattr(circ, name, TriState(answer))
    rec.circumstances = circ
    rec.attempted = {f for f in ("city", "state", "locale_detail", "date", "clock_time",
                                 "time_of_day", "weapon_type", "shots_fired")
                     if getattr(rec, f) is None}
    return rec.finalize()


def gen_positive_article(rng: random.Random, idx: int):
    """Convenience: (stored Article, Truth, human-path IncidentRecord)."""
    raw, truth = gen_positive(rng, idx)
    article = make_article(**raw)
    # Generated text must already be canonical, or the tracked spans shift.
    assert article.body_text == raw["body_text"]
    record = truth_to_record(article.id, article.body_text, truth)
    return article, truth, record
