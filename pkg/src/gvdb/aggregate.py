"""Aggregation and export: contents report, map rollups, queries, file formats.

Per-annotation-level counts (location/participants/temporal/weapon) are
taken over fully annotated records, mirroring how the database contents
table nests them under the fully-annotated total.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import date

from .extract.resources import Gazetteer
from .ingest import ArticleStore
from .records import (
    CIRCUMSTANCE_FIELDS,
    IncidentRecord,
    TriState,
    render_date_ddmmyyyy,
)
from .store import IncidentCluster, IncidentStore, LinkageParams, cluster_events

DEFAULT_PAGE_SIZE = 50
MAX_PAGE_SIZE = 500

DB_MEMBER_STATES = ("machine_positive", "human_confirmed")


class BadQueryError(ValueError):
    pass


@dataclass
class ContentsReport:
    total_articles: int = 0
    fully_annotated: int = 0
    with_location: int = 0
    with_shooter_victim: int = 0
    with_temporal: int = 0
    with_weapon: int = 0

    def to_json(self) -> dict:
        return {
            "total_articles": self.total_articles,
            "fully_annotated": self.fully_annotated,
            "with_location": self.with_location,
            "with_shooter_victim": self.with_shooter_victim,
            "with_temporal": self.with_temporal,
            "with_weapon": self.with_weapon,
        }

    def monotone_chain_holds(self) -> bool:
        nested_max = max(self.with_location, self.with_shooter_victim,
                         self.with_temporal, self.with_weapon)
        return self.total_articles >= self.fully_annotated >= nested_max


def record_has_location(rec: IncidentRecord) -> bool:
    return rec.city is not None or rec.state is not None


def record_has_shooter_victim(rec: IncidentRecord) -> bool:
    for p in rec.participants():
        for attr in p.attrs_for_role():
            if getattr(p, attr) is not None:
                return True
    return False


def record_has_temporal(rec: IncidentRecord) -> bool:
    return rec.date is not None or rec.clock_time is not None or rec.time_of_day is not None


def record_has_weapon(rec: IncidentRecord) -> bool:
    return rec.weapon_type is not None or rec.shots_fired is not None


def compute_stats(articles: ArticleStore, incidents: IncidentStore) -> ContentsReport:
    report = ContentsReport()
    report.total_articles = len(articles.by_state(*DB_MEMBER_STATES))
    for rec in incidents.latest_records():
        if rec.status != "full":
            continue
        report.fully_annotated += 1
        if record_has_location(rec):
            report.with_location += 1
        if record_has_shooter_victim(rec):
            report.with_shooter_victim += 1
        if record_has_temporal(rec):
            report.with_temporal += 1
        if record_has_weapon(rec):
            report.with_weapon += 1
    return report


@dataclass
class CityAggregate:
    city: str
    state: str
    lat: float | None
    lon: float | None
    incident_count: int = 0
    article_count: int = 0

    def to_json(self) -> dict:
        return {
            "city": self.city, "state": self.state, "lat": self.lat, "lon": self.lon,
            "incident_count": self.incident_count, "article_count": self.article_count,
        }


@dataclass
class StateRollup:
    state: str
    incident_count: int = 0
    article_count: int = 0
    unknown_city_incidents: int = 0
    unknown_city_articles: int = 0

    def to_json(self) -> dict:
        return {
            "state": self.state,
            "incident_count": self.incident_count,
            "article_count": self.article_count,
            "unknown_city_incidents": self.unknown_city_incidents,
            "unknown_city_articles": self.unknown_city_articles,
        }


@dataclass
class MapAggregate:
    cities: list[CityAggregate] = field(default_factory=list)
    states: list[StateRollup] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "cities": [c.to_json() for c in self.cities],
            "states": [s.to_json() for s in self.states],
        }


def map_aggregate(incidents: IncidentStore, gazetteer: Gazetteer,
                  params: LinkageParams | None = None) -> MapAggregate:
    """Group incidents by (city, state), geocode via the gazetteer.

    Records with a state but no geocodable city land in that state's
    city-unknown bucket; records with no state at all are grouped under the
    pseudo-state "unknown" so totals stay conserved.
    """
    records = incidents.latest_records()
    clusters = cluster_events(records, params)

    cities: dict[tuple[str, str], CityAggregate] = {}
    states: dict[str, StateRollup] = {}

    def bump(rec_state: str | None, rec_city: str | None, incidents_n: int, articles_n: int):
        state = rec_state or "unknown"
        rollup = states.setdefault(state, StateRollup(state=state))
        rollup.incident_count += incidents_n
        rollup.article_count += articles_n
        entry = gazetteer.lookup_in_state(rec_city, state) if rec_city else None
        if rec_city and entry:
            key = (entry.city, state)
            agg = cities.setdefault(key, CityAggregate(entry.city, state, entry.lat, entry.lon))
            agg.incident_count += incidents_n
            agg.article_count += articles_n
        elif rec_city:
            key = (rec_city, state)
            agg = cities.setdefault(key, CityAggregate(rec_city, state, None, None))
            agg.incident_count += incidents_n
            agg.article_count += articles_n
        else:
            rollup.unknown_city_incidents += incidents_n
            rollup.unknown_city_articles += articles_n

    for cluster in clusters:
        canon = cluster.canonical
        state = canon.state.value if canon.state else None
        city = canon.city.value if canon.city else None
        bump(state, city, 1, len(cluster.member_article_ids))

    return MapAggregate(
        cities=sorted(cities.values(), key=lambda c: (c.state, c.city)),
        states=sorted(states.values(), key=lambda s: s.state),
    )


_FILTER_KEYS = ("state", "city", "date_from", "date_to", "provenance", "status",
                "circumstances", "cluster_view")


def _record_matches(rec: IncidentRecord, filters: dict) -> bool:
    if "state" in filters and (rec.state is None or rec.state.value != filters["state"]):
        return False
    if "city" in filters and (rec.city is None or
                              str(rec.city.value).casefold() != str(filters["city"]).casefold()):
        return False
    if "provenance" in filters and rec.provenance != filters["provenance"]:
        return False
    if "status" in filters and rec.status != filters["status"]:
        return False
    if "date_from" in filters or "date_to" in filters:
        if rec.date is None:
            return False
        try:
            d = date.fromisoformat(rec.date.value)
        except (TypeError, ValueError):
            return False
        if "date_from" in filters and d < date.fromisoformat(filters["date_from"]):
            return False
        if "date_to" in filters and d > date.fromisoformat(filters["date_to"]):
            return False
    for name, wanted in filters.get("circumstances", {}).items():
        if name not in CIRCUMSTANCE_FIELDS:
            raise BadQueryError(f"unknown circumstance {name!r}")
        actual = getattr(rec.circumstances, name)
        if actual is None or actual.value != wanted:
            return False
    return True


def _sort_key(rec: IncidentRecord) -> tuple:
    d = rec.date.value if rec.date is not None else "9999-99-99"
    return (str(d), rec.article_id)


@dataclass
class QueryPage:
    items: list
    total: int
    page: int
    page_size: int

    def to_json(self) -> dict:
        return {
            "items": [it.to_json() for it in self.items],
            "total": self.total,
            "page": self.page,
            "page_size": self.page_size,
        }


def query_incidents(incidents: IncidentStore, filters: dict | None = None, page: int = 1,
                    page_size: int = DEFAULT_PAGE_SIZE,
                    params: LinkageParams | None = None) -> QueryPage:
    """Conjunctive filtering with stable (date, article id) ordering, paged."""
    filters = dict(filters or {})
    unknown = [k for k in filters if k not in _FILTER_KEYS]
    if unknown:
        raise BadQueryError(f"unknown filter keys: {', '.join(sorted(unknown))}")
    if page < 1:
        raise BadQueryError(f"page must be >= 1, got {page}")
    page_size = max(1, min(int(page_size), MAX_PAGE_SIZE))

    cluster_view = bool(filters.pop("cluster_view", False))
    records = sorted(incidents.latest_records(), key=_sort_key)
    matching = [r for r in records if _record_matches(r, filters)]

    if cluster_view:
        clusters = cluster_events(matching, params)
        start = (page - 1) * page_size
        return QueryPage(clusters[start:start + page_size], len(clusters), page, page_size)
    start = (page - 1) * page_size
    return QueryPage(matching[start:start + page_size], len(matching), page, page_size)


# --- export / import -------------------------------------------------------

TABLE_COLUMNS = (
    ["article_id", "provenance", "status", "multi_incident",
     "city", "state", "locale_detail", "date", "clock_time", "time_of_day",
     "shooter_count", "shooter1_name", "shooter1_gender", "shooter1_age", "shooter1_race",
     "victim_count", "victim1_name", "victim1_gender", "victim1_age", "victim1_race",
     "victim1_injured", "victim1_hospitalized", "victim1_killed",
     "weapon_type", "shots_fired"]
    + list(CIRCUMSTANCE_FIELDS)
)
CLUSTER_TABLE_COLUMNS = ["cluster_id", "member_count", "member_article_ids"] + TABLE_COLUMNS


def _cell(v) -> str:
    return "" if v is None else str(v)


def _tri_cell(v: TriState | None) -> str:
    return "" if v is None else v.value


def _record_row(rec: IncidentRecord) -> dict:
    row = {
        "article_id": rec.article_id,
        "provenance": rec.provenance,
        "status": rec.status,
        "multi_incident": "yes" if rec.multi_incident else "no",
        "city": _cell(rec.city.value) if rec.city else "",
        "state": _cell(rec.state.value) if rec.state else "",
        "locale_detail": _cell(rec.locale_detail.value) if rec.locale_detail else "",
        "date": render_date_ddmmyyyy(rec.date.value) if rec.date else "",
        "clock_time": _cell(rec.clock_time.value) if rec.clock_time else "",
        "time_of_day": _cell(rec.time_of_day.value) if rec.time_of_day else "",
        "shooter_count": str(len(rec.shooters)),
        "victim_count": str(len(rec.victims)),
        "weapon_type": _cell(rec.weapon_type.value) if rec.weapon_type else "",
        "shots_fired": _cell(rec.shots_fired.value) if rec.shots_fired else "",
    }
    first_shooter = rec.shooters[0] if rec.shooters else None
    first_victim = rec.victims[0] if rec.victims else None
    for prefix, p in (("shooter1", first_shooter), ("victim1", first_victim)):
        for attr in ("name", "gender", "age", "race"):
            v = getattr(p, attr) if p else None
            row[f"{prefix}_{attr}"] = _cell(v.value) if v else ""
    for attr in ("injured", "hospitalized", "killed"):
        row[f"victim1_{attr}"] = _tri_cell(getattr(first_victim, attr)) if first_victim else ""
    for name in CIRCUMSTANCE_FIELDS:
        row[name] = _tri_cell(getattr(rec.circumstances, name))
    return row


def export_table(incidents: IncidentStore, view: str = "articles",
                 params: LinkageParams | None = None) -> str:
    """Delimited-table export; one row per record or cluster, dates DD/MM/YYYY."""
    buf = io.StringIO()
    if view == "clusters":
        writer = csv.DictWriter(buf, fieldnames=CLUSTER_TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for cluster in cluster_events(incidents.latest_records(), params):
            row = _record_row(cluster.canonical)
            row["cluster_id"] = cluster.cluster_id
            row["member_count"] = str(len(cluster.member_article_ids))
            row["member_article_ids"] = ";".join(cluster.member_article_ids)
            writer.writerow(row)
    elif view == "articles":
        writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for rec in sorted(incidents.latest_records(), key=_sort_key):
            writer.writerow(_record_row(rec))
    else:
        raise BadQueryError(f"unknown export view {view!r}")
    return buf.getvalue()


def export_line_records(incidents: IncidentStore, view: str = "articles",
                        params: LinkageParams | None = None) -> str:
    """Line-record export with full fidelity (anchors, versions); round-trips."""
    lines = []
    if view == "articles":
        for article_id in incidents.article_ids():
            for entry in incidents.history(article_id):
                lines.append(json.dumps({
                    "article_id": article_id,
                    "version": entry.version,
                    "stored_at": entry.stored_at,
                    "record": entry.record.to_json(),
                }, ensure_ascii=False, sort_keys=True))
    elif view == "clusters":
        for cluster in cluster_events(incidents.latest_records(), params):
            lines.append(json.dumps(cluster.to_json(), ensure_ascii=False, sort_keys=True))
    else:
        raise BadQueryError(f"unknown export view {view!r}")
    return "\n".join(lines) + ("\n" if lines else "")


def import_line_records(text: str, incidents: IncidentStore) -> int:
    """Replay an articles-view line-record export into a store."""
    n = 0
    entries = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        d = json.loads(line)
        entries.append((d["article_id"], int(d["version"]), d.get("stored_at", ""), d["record"]))
    for article_id, _version, stored_at, record in sorted(entries, key=lambda e: (e[0], e[1])):
        incidents.store_record(IncidentRecord.from_json(record), stored_at=stored_at)
        n += 1
    return n
