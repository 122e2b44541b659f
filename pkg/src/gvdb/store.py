"""Incident persistence, event-coreference clustering, participant linking.

Records are article-scoped; clustering resolves articles reporting the same
real-world incident into one canonical entry. The store is append-only: a
re-store adds a new version and every prior version stays readable.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from datetime import date

from .ingest import ArticleStore
from .records import (
    CIRCUMSTANCE_FIELDS,
    Circumstances,
    IncidentRecord,
    TIME_PLACE_FIELDS,
    TriState,
    Violation,
    WEAPON_FIELDS,
    copy_record,
    validate_payload,
)


class ValidationRejected(ValueError):
    def __init__(self, violations: list[Violation]):
        super().__init__("; ".join(f"{v.code}({v.field})" for v in violations))
        self.violations = violations


@dataclass
class LinkageParams:
    day_window: int = 2
    name_sim: float = 0.5


@dataclass
class IncidentCluster:
    cluster_id: str
    member_article_ids: list[str]  # sorted; the set invariant holds by construction
    canonical: IncidentRecord
    merge_log: list[tuple[str, str, str]] = field(default_factory=list)  # (field, source, reason)

    def to_json(self) -> dict:
        return {
            "cluster_id": self.cluster_id,
            "member_article_ids": list(self.member_article_ids),
            "canonical": self.canonical.to_json(),
            "merge_log": [{"field": f, "source_article": s, "reason": r} for f, s, r in self.merge_log],
        }

    @classmethod
    def from_json(cls, d: dict) -> "IncidentCluster":
        return cls(
            cluster_id=d["cluster_id"],
            member_article_ids=list(d["member_article_ids"]),
            canonical=IncidentRecord.from_json(d["canonical"]),
            merge_log=[(e["field"], e["source_article"], e["reason"]) for e in d.get("merge_log", [])],
        )


@dataclass
class ParticipantLink:
    link_id: str
    members: list[tuple[str, int]]  # (article_id, participant index within role list)
    role: str
    matched_name: str

    def to_json(self) -> dict:
        return {
            "link_id": self.link_id,
            "members": [{"article_id": a, "index": i} for a, i in self.members],
            "role": self.role,
            "matched_name": self.matched_name,
        }


def name_tokens(name: str) -> frozenset[str]:
    return frozenset(t.strip(".,'\"-").casefold() for t in name.split() if t.strip(".,'\"-"))


def token_jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    if not a and not b:
        return 0.0
    return len(a & b) / len(a | b)


def _record_name_tokens(rec: IncidentRecord) -> frozenset[str]:
    tokens: set[str] = set()
    for p in rec.participants():
        if p.name is not None:
            tokens |= name_tokens(str(p.name.value))
    return frozenset(tokens)


def _value(rec: IncidentRecord, name: str):
    v = getattr(rec, name)
    return v.value if v is not None else None


def link_predicate(a: IncidentRecord, b: IncidentRecord, params: LinkageParams) -> bool:
    """Symmetric same-incident test on (state, city, date window, participant names)."""
    if _value(a, "state") is None or _value(a, "state") != _value(b, "state"):
        return False
    city_a, city_b = _value(a, "city"), _value(b, "city")
    if city_a is not None and city_b is not None and city_a.casefold() != city_b.casefold():
        return False

    date_a, date_b = _value(a, "date"), _value(b, "date")
    if date_a is None and date_b is None:
        return False
    if date_a is not None and date_b is not None:
        try:
            gap = abs((date.fromisoformat(date_a) - date.fromisoformat(date_b)).days)
        except ValueError:
            return False
        if gap > params.day_window:
            return False

    names_a, names_b = _record_name_tokens(a), _record_name_tokens(b)
    if not names_a and not names_b:
        return True
    return token_jaccard(names_a, names_b) >= params.name_sim


def _provenance_rank(p: str) -> int:
    return {"machine": 0, "mixed": 1, "human": 2}.get(p, 0)


def _specificity(rec: IncidentRecord, field_name: str) -> int:
    """Per-field value specificity used by merge: more precise beats vaguer."""
    if field_name in ("clock_time", "time_of_day"):
        if _value(rec, "clock_time") is not None:
            return 2
        return 1 if _value(rec, "time_of_day") is not None else 0
    if field_name.startswith("circumstances."):
        v = getattr(rec.circumstances, field_name.split(".", 1)[1])
        return 1 if v in (TriState.YES, TriState.NO) else 0
    if field_name in ("shooters", "victims"):
        return len(getattr(rec, field_name))
    return 1 if getattr(rec, field_name) is not None else 0


def merge_cluster(members: list[IncidentRecord],
                  fetched_at: dict[str, str] | None = None) -> tuple[IncidentRecord, list[tuple[str, str, str]]]:
    """Resolve member records into one canonical record, logging every choice.

    Per field, the source is chosen by specificity, then provenance (human
    beats mixed beats machine), then recency (latest fetched_at), with the
    article id as the final deterministic tie-break.
    """
    if not members:
        raise ValueError("cannot merge an empty cluster")
    fetched_at = fetched_at or {}
    members = sorted(members, key=lambda r: r.article_id)

    def rank_key(rec: IncidentRecord, field_name: str):
        return (
            _specificity(rec, field_name),
            _provenance_rank(rec.provenance),
            fetched_at.get(rec.article_id, ""),
            rec.article_id,
        )

    def choose(field_name: str, eligible: list[IncidentRecord]) -> tuple[IncidentRecord, str]:
        ranked = sorted(eligible, key=lambda r: rank_key(r, field_name), reverse=True)
        winner = ranked[0]
        reason = "single_source"
        others = [m for m in members if m.article_id != winner.article_id]
        if others:
            w_key = rank_key(winner, field_name)
            o_key = max(rank_key(m, field_name) for m in others)
            for level, name in enumerate(("specificity", "provenance", "recency")):
                if w_key[level] != o_key[level]:
                    reason = name
                    break
            else:
                reason = "article_order"
        return winner, reason

    canonical = IncidentRecord(article_id=members[0].article_id, provenance=members[0].provenance)
    log: list[tuple[str, str, str]] = []

    if len(members) == 1:
        only = copy_record(members[0])
        return only, []

    for name in TIME_PLACE_FIELDS + WEAPON_FIELDS:
        eligible = [m for m in members if getattr(m, name) is not None]
        if not eligible:
            if any(name in m.attempted for m in members):
                canonical.attempted.add(name)
            continue
        winner, reason = choose(name, eligible)
        setattr(canonical, name, getattr(winner, name))
        log.append((name, winner.article_id, reason))

    for role_field in ("shooters", "victims"):
        eligible = [m for m in members if getattr(m, role_field)]
        if eligible:
            winner, reason = choose(role_field, eligible)
            setattr(canonical, role_field, getattr(copy_record(winner), role_field))
            log.append((role_field, winner.article_id, reason))

    circ = Circumstances()
    for name in CIRCUMSTANCE_FIELDS:
        eligible = [m for m in members if getattr(m.circumstances, name) is not None]
        if not eligible:
            setattr(circ, name, None)
            continue
        winner, reason = choose(f"circumstances.{name}", eligible)
        setattr(circ, name, getattr(winner.circumstances, name))
        log.append((f"circumstances.{name}", winner.article_id, reason))
    canonical.circumstances = circ

    provenances = {m.provenance for m in members}
    canonical.provenance = provenances.pop() if len(provenances) == 1 else "mixed"
    canonical.multi_incident = any(m.multi_incident for m in members)
    canonical.finalize()
    return canonical, log


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def cluster_events(records: list[IncidentRecord], params: LinkageParams | None = None,
                   fetched_at: dict[str, str] | None = None) -> list[IncidentCluster]:
    """Connected components of the link_predicate graph, in deterministic order."""
    params = params or LinkageParams()
    records = sorted(records, key=lambda r: r.article_id)
    ids = [r.article_id for r in records]
    uf = _UnionFind(ids)
    for i in range(len(records)):
        for j in range(i + 1, len(records)):
            if link_predicate(records[i], records[j], params):
                uf.union(ids[i], ids[j])

    groups: dict[str, list[IncidentRecord]] = {}
    for rec in records:
        groups.setdefault(uf.find(rec.article_id), []).append(rec)

    clusters = []
    for root in sorted(groups):
        members = groups[root]
        canonical, log = merge_cluster(members, fetched_at)
        clusters.append(IncidentCluster(
            cluster_id=f"cluster:{root}",
            member_article_ids=sorted(m.article_id for m in members),
            canonical=canonical,
            merge_log=log,
        ))
    return clusters


def link_participants(records: list[IncidentRecord], name_sim: float = 0.5) -> list[ParticipantLink]:
    """Transitive closure of same-role name similarity; unnamed never linked."""
    mentions = []  # (article_id, index, role, tokens, name)
    for rec in sorted(records, key=lambda r: r.article_id):
        for role_field in ("shooters", "victims"):
            role = role_field[:-1]
            for idx, p in enumerate(getattr(rec, role_field)):
                if p.name is not None and str(p.name.value).strip():
                    mentions.append((rec.article_id, idx, role,
                                     name_tokens(str(p.name.value)), str(p.name.value)))

    uf = _UnionFind(range(len(mentions)))
    for i in range(len(mentions)):
        for j in range(i + 1, len(mentions)):
            if mentions[i][2] != mentions[j][2]:
                continue
            if token_jaccard(mentions[i][3], mentions[j][3]) >= name_sim:
                uf.union(i, j)

    groups: dict[int, list[int]] = {}
    for i in range(len(mentions)):
        groups.setdefault(uf.find(i), []).append(i)

    links = []
    for n, root in enumerate(sorted(groups), start=1):
        idxs = groups[root]
        names = [mentions[i][4] for i in idxs]
        matched = max(sorted(set(names)), key=names.count)
        links.append(ParticipantLink(
            link_id=f"plink:{n:04d}",
            members=[(mentions[i][0], mentions[i][1]) for i in idxs],
            role=mentions[idxs[0]][2],
            matched_name=matched,
        ))
    return links


@dataclass
class RecordVersion:
    version: int
    stored_at: str
    record: IncidentRecord


class IncidentStore:
    """One live record per article with full version history; never deletes."""

    def __init__(self, articles: ArticleStore, log_path: str | None = None) -> None:
        self.articles = articles
        self.log_path = log_path
        self._history: dict[str, list[RecordVersion]] = {}
        self._lock = threading.RLock()

    def __len__(self) -> int:
        return len(self._history)

    def store_record(self, record: IncidentRecord, stored_at: str = "") -> str:
        """Validate and persist; re-store adds a version, history is kept."""
        article = self.articles.get(record.article_id)
        if article is None:
            raise ValidationRejected([Violation("UnknownArticle", "article_id",
                                                f"no article {record.article_id!r}")])
        violations = validate_payload(article.body_text, record)
        if violations:
            raise ValidationRejected(violations)
        record = copy_record(record).finalize()
        with self._lock:
            versions = self._history.setdefault(record.article_id, [])
            entry = RecordVersion(version=len(versions) + 1, stored_at=stored_at, record=record)
            versions.append(entry)
            if self.log_path:
                self._append_log(entry)
        return f"{record.article_id}#v{entry.version}"

    def article_ids(self) -> list[str]:
        return sorted(self._history)

    def latest(self, article_id: str) -> IncidentRecord | None:
        versions = self._history.get(article_id)
        return versions[-1].record if versions else None

    def latest_records(self) -> list[IncidentRecord]:
        return [vs[-1].record for _, vs in sorted(self._history.items())]

    def history(self, article_id: str) -> list[RecordVersion]:
        return list(self._history.get(article_id, []))

    def _append_log(self, entry: RecordVersion) -> None:
        with open(self.log_path, "a", encoding="utf-8") as f:
            f.write(json.dumps({
                "article_id": entry.record.article_id,
                "version": entry.version,
                "stored_at": entry.stored_at,
                "record": entry.record.to_json(),
            }, ensure_ascii=False) + "\n")

    def replay_log(self, path: str | None = None) -> int:
        """Rebuild in-memory history from the append-only log."""
        path = path or self.log_path
        n = 0
        with open(path, "r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                d = json.loads(line)
                rec = IncidentRecord.from_json(d["record"])
                versions = self._history.setdefault(rec.article_id, [])
                versions.append(RecordVersion(len(versions) + 1, d.get("stored_at", ""), rec))
                n += 1
        return n

    def compact_snapshot(self, path: str) -> int:
        """Write the latest version of every record to a snapshot file."""
        records = self.latest_records()
        with open(path, "w", encoding="utf-8") as f:
            for rec in records:
                f.write(json.dumps({"record": rec.to_json()}, ensure_ascii=False) + "\n")
        return len(records)
