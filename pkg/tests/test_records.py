import json

import pytest
from hypothesis import given, strategies as st

from gvdb.records import (
    Anchored,
    CIRCUMSTANCE_FIELDS,
    Circumstances,
    IncidentRecord,
    Participant,
    SHOOTER_ATTRS,
    SpanAnchor,
    TIME_PLACE_FIELDS,
    TriState,
    VICTIM_ATTRS,
    WEAPON_FIELDS,
    copy_record,
    render_date_ddmmyyyy,
    validate_payload,
)

TEXT = "SPRINGFIELD, MO — A 14 year old girl was shot on Elm Street around 11:30 p.m. Monday."


def anchored(value, start, end, article_id="a1"):
    return Anchored(value, SpanAnchor(article_id, start, end, TEXT[start:end]))


def make_valid_record():
    rec = IncidentRecord(article_id="a1")
    rec.city = anchored("Springfield", 0, 11)
    rec.state = anchored("MO", 13, 15)
    rec.clock_time = anchored("23:30", 68, 78)
    rec.date = Anchored("2016-03-07")
    victim = Participant(role="victim", age=anchored(14, 20, 31),
                         gender=anchored("female", 32, 36),
                         injured=TriState.YES, hospitalized=TriState.UNDETERMINED,
                         killed=TriState.NO)
    victim.attempted = {"name", "race"}
    rec.victims = [victim]
    return rec


class TestSchemaShape:
    def test_field_inventory_counts(self):
        assert len(TIME_PLACE_FIELDS) == 6
        assert len(SHOOTER_ATTRS) == 4
        assert len(VICTIM_ATTRS) == 7
        assert len(WEAPON_FIELDS) == 2
        assert len(CIRCUMSTANCE_FIELDS) == 13

    def test_tristate_is_exactly_three_values(self):
        assert {t.value for t in TriState} == {"yes", "no", "undetermined"}

    def test_circumstances_cover_all_13(self):
        c = Circumstances()
        for name in CIRCUMSTANCE_FIELDS:
            assert getattr(c, name) == TriState.UNDETERMINED

    def test_victim_only_fields(self):
        assert set(VICTIM_ATTRS) - set(SHOOTER_ATTRS) == {"injured", "hospitalized", "killed"}


class TestValidation:
    def test_valid_record_has_no_violations(self):
        assert validate_payload(TEXT, make_valid_record()) == []

    def test_span_mismatch(self):
        rec = make_valid_record()
        rec.city = Anchored("Springfield", SpanAnchor("a1", 0, 11, "Springfield's"))
        codes = {v.code for v in validate_payload(TEXT, rec)}
        assert "SpanMismatch" in codes

    def test_span_out_of_range(self):
        rec = make_valid_record()
        rec.city = Anchored("x", SpanAnchor("a1", 5, len(TEXT) + 10, "x"))
        codes = {v.code for v in validate_payload(TEXT, rec)}
        assert "SpanOutOfRange" in codes

    def test_bad_clock_time(self):
        rec = make_valid_record()
        rec.clock_time = Anchored("25:10")
        assert any(v.code == "BadClockTime" for v in validate_payload(TEXT, rec))

    @pytest.mark.parametrize("raw", ["2016-13-01", "2016-02-30", "07/03/2016", "yesterday"])
    def test_bad_date(self, raw):
        rec = make_valid_record()
        rec.date = Anchored(raw)
        assert any(v.code == "BadDate" for v in validate_payload(TEXT, rec))

    def test_bad_state_code(self):
        rec = make_valid_record()
        rec.state = Anchored("ZZ")
        assert any(v.code == "BadStateCode" for v in validate_payload(TEXT, rec))

    def test_age_out_of_bounds(self):
        rec = make_valid_record()
        rec.victims[0].age = Anchored(150)
        assert any(v.code == "AgeOutOfBounds" for v in validate_payload(TEXT, rec))

    def test_shots_fired_must_be_positive_int(self):
        rec = make_valid_record()
        rec.shots_fired = Anchored(0)
        assert any(v.code == "BadShotsFired" for v in validate_payload(TEXT, rec))
        rec.shots_fired = Anchored("six")
        assert any(v.code == "BadShotsFired" for v in validate_payload(TEXT, rec))

    def test_victim_fields_forbidden_on_shooter(self):
        rec = make_valid_record()
        rec.shooters = [Participant(role="shooter", killed=TriState.YES)]
        assert any(v.code == "VictimFieldOnShooter" for v in validate_payload(TEXT, rec))

    def test_missing_circumstance_from_partial_payload(self):
        rec = make_valid_record()
        d = rec.to_json()
        del d["circumstances"]["gun_stolen"]
        partial = IncidentRecord.from_json(d)
        violations = validate_payload(TEXT, partial)
        assert any(v.code == "MissingCircumstance" and "gun_stolen" in v.field for v in violations)

    def test_anchor_article_mismatch(self):
        rec = make_valid_record()
        rec.city = anchored("Springfield", 0, 11, article_id="other")
        assert any(v.code == "AnchorArticleMismatch" for v in validate_payload(TEXT, rec))

    def test_bad_gender(self):
        rec = make_valid_record()
        rec.victims[0].gender = Anchored("3")
        assert any(v.code == "BadGender" for v in validate_payload(TEXT, rec))


class TestStatus:
    def test_partial_until_all_sections_attempted(self):
        rec = make_valid_record()
        assert rec.compute_status() == "partial"

    def test_full_when_everything_attempted(self):
        rec = make_valid_record()
        rec.attempted = {"locale_detail", "time_of_day", "weapon_type", "shots_fired"}
        assert rec.compute_status() == "full"

    def test_unanswered_circumstance_blocks_full(self):
        rec = make_valid_record()
        rec.attempted = {"locale_detail", "time_of_day", "weapon_type", "shots_fired"}
        rec.circumstances.by_police = None
        assert rec.compute_status() == "partial"

    def test_participant_attrs_must_be_attempted(self):
        rec = make_valid_record()
        rec.attempted = {"locale_detail", "time_of_day", "weapon_type", "shots_fired"}
        rec.victims[0].attempted = set()
        assert rec.compute_status() == "partial"


class TestSerialization:
    def test_round_trip(self):
        rec = make_valid_record().finalize()
        again = IncidentRecord.from_json(json.loads(json.dumps(rec.to_json())))
        assert again == rec

    def test_copy_is_independent(self):
        rec = make_valid_record()
        dup = copy_record(rec)
        dup.victims[0].attempted.add("gender")
        dup.attempted.add("city")
        assert "gender" not in rec.victims[0].attempted
        assert "city" not in rec.attempted
        assert copy_record(rec) == rec

    def test_render_ddmmyyyy(self):
        assert render_date_ddmmyyyy("2016-03-07") == "07/03/2016"
        assert render_date_ddmmyyyy("2015-12-25") == "25/12/2015"


@st.composite
def record_strategy(draw):
    rec = IncidentRecord(article_id="a1")
    n = len(TEXT)
    for field_name, value_from_span in [
        ("city", lambda s: s), ("locale_detail", lambda s: s),
    ]:
        if draw(st.booleans()):
            start = draw(st.integers(0, n - 2))
            end = draw(st.integers(start + 1, n))
            setattr(rec, field_name,
                    Anchored(value_from_span(TEXT[start:end]), SpanAnchor("a1", start, end, TEXT[start:end])))
    if draw(st.booleans()):
        rec.state = Anchored(draw(st.sampled_from(["MO", "PA", "CA"])))
    if draw(st.booleans()):
        rec.date = Anchored("2016-03-%02d" % draw(st.integers(1, 28)))
    for name in CIRCUMSTANCE_FIELDS:
        setattr(rec.circumstances, name, draw(st.sampled_from(list(TriState))))
    if draw(st.booleans()):
        p = Participant(role="victim", injured=TriState.YES)
        if draw(st.booleans()):
            p.age = Anchored(draw(st.integers(0, 130)))
        rec.victims = [p]
    return rec


class TestProperties:
    @given(record_strategy())
    def test_constructed_records_validate_and_round_trip(self, rec):
        assert validate_payload(TEXT, rec) == []
        assert IncidentRecord.from_json(rec.to_json()) == rec

    @given(st.integers(0, len(TEXT) - 1), st.integers(1, len(TEXT)))
    def test_span_fidelity_is_exact_substring(self, start, end):
        if start >= end:
            start, end = end - 1, start + 1
        anchor = SpanAnchor("a1", start, end, TEXT[start:end])
        rec = IncidentRecord(article_id="a1", city=Anchored("x", anchor))
        assert all(v.code not in ("SpanMismatch", "SpanOutOfRange")
                   for v in validate_payload(TEXT, rec))
