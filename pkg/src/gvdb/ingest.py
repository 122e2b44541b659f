"""Article acquisition: live fetch or batch file, normalization, dedup, storage.

Canonical body_text is the single text every downstream span anchor refers
to, so normalization must be deterministic: newline-normalized, whitespace
runs collapsed, markup stripped by a text-density main-content heuristic.
Offsets and counts everywhere are in Unicode scalar values.
"""

from __future__ import annotations

import hashlib
import json
import re
import threading
import time
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from html.parser import HTMLParser
from typing import Iterable, Iterator
from urllib.parse import urlsplit

from .classifier import word_tokens

RELEVANCE_STATES = (
    "unclassified",
    "machine_positive",
    "machine_negative",
    "human_confirmed",
    "human_rejected",
)


class DecodeError(ValueError):
    pass


class EmptyContentError(ValueError):
    pass


@dataclass
class SourceConfig:
    name: str
    feed_urls: list[str]
    fetch_interval: float = 86400.0
    per_host_delay: float = 1.0

    def validate(self) -> None:
        if not self.feed_urls:
            raise ValueError(f"source {self.name!r} has no feed URLs")
        if self.per_host_delay <= 0:
            raise ValueError(f"source {self.name!r}: per_host_delay must be > 0")


@dataclass
class RawPage:
    url: str
    fetched_at: datetime
    http_status: int
    body: bytes  # verbatim as fetched
    content_type: str


@dataclass
class Article:
    id: str  # 64-hex digest of (url, body_text)
    url: str
    source_name: str
    title: str
    body_text: str
    published_at: str | None  # ISO calendar date
    fetched_at: str  # ISO UTC timestamp
    word_count: int
    relevance_state: str = "unclassified"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "url": self.url,
            "source_name": self.source_name,
            "title": self.title,
            "body_text": self.body_text,
            "published_at": self.published_at,
            "fetched_at": self.fetched_at,
            "word_count": self.word_count,
            "relevance_state": self.relevance_state,
        }

    @classmethod
    def from_json(cls, d: dict) -> "Article":
        return cls(
            id=d["id"],
            url=d["url"],
            source_name=d.get("source_name", ""),
            title=d.get("title", ""),
            body_text=d["body_text"],
            published_at=d.get("published_at"),
            fetched_at=d.get("fetched_at", ""),
            word_count=int(d.get("word_count", 0)),
            relevance_state=d.get("relevance_state", "unclassified"),
        )


def canonicalize_text(text: str) -> str:
    """Newline-normalize and collapse whitespace; drops blank lines."""
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    lines = []
    for line in text.split("\n"):
        line = re.sub(r"[^\S\n]+", " ", line).strip()
        if line:
            lines.append(line)
    return "\n".join(lines)


def compute_article_id(url: str, body_text: str) -> str:
    """Content digest: a pure function of (url, body_text)."""
    h = hashlib.sha256()
    h.update(url.encode("utf-8"))
    h.update(b"\x00")
    h.update(body_text.encode("utf-8"))
    return h.hexdigest()


def make_article(url: str, title: str, body_text: str, source_name: str,
                 published_at: str | None = None, fetched_at: str | None = None) -> Article:
    body_text = canonicalize_text(body_text)
    if not body_text:
        raise EmptyContentError(f"empty body text for {url!r}")
    title = canonicalize_text(title).split("\n", 1)[0] if title else body_text.split("\n", 1)[0]
    return Article(
        id=compute_article_id(url, body_text),
        url=url,
        source_name=source_name,
        title=title,
        body_text=body_text,
        published_at=published_at,
        fetched_at=fetched_at or datetime.now(timezone.utc).isoformat(),
        word_count=len(word_tokens(body_text)),
    )


# --- HTML stripping -------------------------------------------------------

_DROP_TAGS = frozenset(
    "script style noscript nav header footer aside form iframe svg canvas "
    "select option button template head figure".split()
)
_BLOCK_TAGS = frozenset(
    "p div article section main h1 h2 h3 h4 h5 h6 li ul ol br tr td th "
    "blockquote pre table figcaption dd dt".split()
)
_VOID_TAGS = frozenset("br hr img meta link input".split())


class _TextExtractor(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.blocks: list[str] = []
        self._buf: list[str] = []
        self._skip_depth = 0
        self._in_title = False
        self._title_parts: list[str] = []
        self._in_h1 = False
        self._h1_parts: list[str] = []
        self._seen_h1 = False
        self.published_at: str | None = None

    def _flush(self) -> None:
        text = "".join(self._buf)
        self._buf = []
        if text.strip():
            self.blocks.append(text)

    def handle_starttag(self, tag, attrs):
        if tag == "title":
            self._in_title = True
            return
        if tag == "h1" and not self._seen_h1:
            self._in_h1 = True
        if tag == "meta":
            self._check_meta(dict(attrs))
        if tag == "time":
            dt = dict(attrs).get("datetime")
            if dt and self.published_at is None:
                self.published_at = _parse_meta_date(dt)
        if tag in _BLOCK_TAGS:
            self._flush()
        if tag in _DROP_TAGS and tag not in _VOID_TAGS:
            self._skip_depth += 1

    def handle_endtag(self, tag):
        if tag == "title":
            self._in_title = False
            return
        if tag == "h1" and self._in_h1:
            self._in_h1 = False
            self._seen_h1 = True
        if tag in _BLOCK_TAGS:
            self._flush()
        if tag in _DROP_TAGS and tag not in _VOID_TAGS and self._skip_depth > 0:
            self._skip_depth -= 1

    def handle_startendtag(self, tag, attrs):
        if tag == "meta":
            self._check_meta(dict(attrs))
        if tag in _BLOCK_TAGS:
            self._flush()

    def handle_data(self, data):
        if self._in_title:
            self._title_parts.append(data)
            return
        if self._skip_depth == 0:
            if self._in_h1:
                self._h1_parts.append(data)
            self._buf.append(data)

    def _check_meta(self, attrs: dict) -> None:
        key = (attrs.get("property") or attrs.get("name") or "").lower()
        if key in ("article:published_time", "date", "pubdate", "og:published_time",
                   "article:published", "publish-date") and attrs.get("content"):
            if self.published_at is None:
                self.published_at = _parse_meta_date(attrs["content"])

    def close(self):
        super().close()
        self._flush()

    @property
    def title(self) -> str:
        h1 = re.sub(r"\s+", " ", "".join(self._h1_parts)).strip()
        if h1:
            return h1
        return re.sub(r"\s+", " ", "".join(self._title_parts)).strip()


def _parse_meta_date(raw: str) -> str | None:
    m = re.match(r"\s*(\d{4})-(\d{2})-(\d{2})", raw)
    if not m:
        return None
    try:
        return date(int(m.group(1)), int(m.group(2)), int(m.group(3))).isoformat()
    except ValueError:
        return None


def _is_sentencey(block: str) -> bool:
    return len(block.split()) >= 5 and re.search(r"[.!?]", block) is not None


def extract_main_content(html: str) -> tuple[str, str, str | None]:
    """Strip markup and keep the densest contiguous run of sentence-like blocks.

    Returns (body_text, title, published_at). Boilerplate (nav, scripts,
    headers) is dropped structurally; remaining short link-farm blocks are
    excluded by the contiguous-run selection.
    """
    parser = _TextExtractor()
    parser.feed(html)
    parser.close()

    # Newlines inside one markup block are soft wraps, not paragraph breaks.
    blocks = [re.sub(r"\s+", " ", b).strip() for b in parser.blocks]
    blocks = [b for b in blocks if b]

    best: list[str] = []
    best_words = 0
    run: list[str] = []
    run_words = 0
    for b in blocks:
        if _is_sentencey(b):
            run.append(b)
            run_words += len(b.split())
            if run_words > best_words:
                best, best_words = list(run), run_words
        else:
            run, run_words = [], 0

    main = best if best else blocks
    body_text = canonicalize_text("\n".join(main))
    return body_text, parser.title, parser.published_at


def _charset_of(content_type: str) -> str | None:
    m = re.search(r"charset=([\w\-]+)", content_type, re.IGNORECASE)
    return m.group(1) if m else None


def normalize_article(raw: RawPage, source_name: str = "") -> Article:
    """Turn a fetched page into a stored Article with canonical body_text."""
    charset = _charset_of(raw.content_type) or "utf-8"
    try:
        text = raw.body.decode(charset)
    except (UnicodeDecodeError, LookupError) as e:
        raise DecodeError(f"cannot decode {raw.url!r} as {charset}: {e}") from None

    mime = raw.content_type.split(";", 1)[0].strip().lower()
    if mime in ("text/html", "application/xhtml+xml") or "<html" in text[:1024].lower():
        body_text, title, published = extract_main_content(text)
    else:
        body_text = canonicalize_text(text)
        title = body_text.split("\n", 1)[0] if body_text else ""
        published = None

    if not body_text:
        raise EmptyContentError(f"no main content in {raw.url!r}")

    return make_article(
        url=raw.url,
        title=title,
        body_text=body_text,
        source_name=source_name,
        published_at=published,
        fetched_at=raw.fetched_at.isoformat(),
    )


# --- live fetching --------------------------------------------------------

@dataclass
class FetchError:
    url: str
    message: str


@dataclass
class FetchResult:
    pages: list[RawPage] = field(default_factory=list)
    errors: list[FetchError] = field(default_factory=list)


def _fetch_host(urls: list[str], delay: float, timeout: float, result: FetchResult,
                lock: threading.Lock) -> None:
    last_start: float | None = None
    for url in urls:
        if last_start is not None:
            wait = delay - (time.monotonic() - last_start)
            if wait > 0:
                time.sleep(wait)
        last_start = time.monotonic()
        try:
            req = urllib.request.Request(url, headers={"User-Agent": "gvdb-crawler/0.1"})
            with urllib.request.urlopen(req, timeout=timeout) as resp:
                page = RawPage(
                    url=url,
                    fetched_at=datetime.now(timezone.utc),
                    http_status=resp.status,
                    body=resp.read(),
                    content_type=resp.headers.get("Content-Type", "text/html"),
                )
        except urllib.error.HTTPError as e:
            # The server answered: keep the page with its status.
            page = RawPage(
                url=url,
                fetched_at=datetime.now(timezone.utc),
                http_status=e.code,
                body=e.read() if hasattr(e, "read") else b"",
                content_type=e.headers.get("Content-Type", "") if e.headers else "",
            )
        except Exception as e:
            with lock:
                result.errors.append(FetchError(url=url, message=str(e)))
            continue
        with lock:
            result.pages.append(page)


def fetch_source(source: SourceConfig, timeout: float = 10.0) -> FetchResult:
    """Fetch every feed URL; failures isolated per URL, never fatal.

    Requests to one host are spaced >= per_host_delay apart regardless of
    parallelism; distinct hosts are fetched concurrently.
    """
    source.validate()
    by_host: dict[str, list[str]] = {}
    for url in source.feed_urls:
        by_host.setdefault(urlsplit(url).netloc, []).append(url)

    result = FetchResult()
    lock = threading.Lock()
    if len(by_host) == 1:
        (urls,) = by_host.values()
        _fetch_host(urls, source.per_host_delay, timeout, result, lock)
    else:
        with ThreadPoolExecutor(max_workers=len(by_host)) as pool:
            futures = [
                pool.submit(_fetch_host, urls, source.per_host_delay, timeout, result, lock)
                for urls in by_host.values()
            ]
            for f in futures:
                f.result()
    return result


# --- article store and batch ingest ---------------------------------------

class ArticleStore:
    """Content-addressed article store; writes of identical content are idempotent."""

    def __init__(self) -> None:
        self._articles: dict[str, Article] = {}
        self._lock = threading.RLock()

    def __len__(self) -> int:
        return len(self._articles)

    def __contains__(self, article_id: str) -> bool:
        return article_id in self._articles

    def __iter__(self) -> Iterator[Article]:
        return iter(list(self._articles.values()))

    def get(self, article_id: str) -> Article | None:
        return self._articles.get(article_id)

    def add(self, article: Article) -> bool:
        """Store an article; returns False when the id already exists."""
        with self._lock:
            if article.id in self._articles:
                return False
            self._articles[article.id] = article
            return True

    def by_state(self, *states: str) -> list[Article]:
        return [a for a in self._articles.values() if a.relevance_state in states]

    def set_relevance(self, article_id: str, state: str) -> None:
        if state not in RELEVANCE_STATES:
            raise ValueError(f"unknown relevance state {state!r}")
        with self._lock:
            self._articles[article_id].relevance_state = state

    def save_jsonl(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as f:
            for a in self._articles.values():
                f.write(json.dumps(a.to_json(), ensure_ascii=False) + "\n")

    def load_jsonl(self, path: str) -> int:
        n = 0
        with open(path, "r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                self._articles[json.loads(line)["id"]] = Article.from_json(json.loads(line))
                n += 1
        return n


@dataclass
class IngestReport:
    stored: int = 0
    duplicates: int = 0
    rejected: int = 0
    detail: list[tuple[int, str]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "stored": self.stored,
            "duplicates": self.duplicates,
            "rejected": self.rejected,
            "detail": [{"line": n, "reason": r} for n, r in self.detail],
        }


_REQUIRED_KEYS = ("url", "title", "body_text", "source_name")


def ingest_batch(lines: Iterable[str], store: ArticleStore) -> IngestReport:
    """Ingest line-records (one JSON map per line); totals sum to input count."""
    report = IngestReport()
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            if not isinstance(rec, dict):
                raise ValueError("record is not a map")
        except ValueError as e:
            report.rejected += 1
            report.detail.append((line_no, f"malformed line: {e}"))
            continue

        missing = [k for k in _REQUIRED_KEYS if k not in rec]
        if missing:
            report.rejected += 1
            report.detail.append((line_no, f"missing keys: {', '.join(missing)}"))
            continue
        published = rec.get("published_at")
        if published is not None:
            try:
                date.fromisoformat(str(published))
            except ValueError:
                report.rejected += 1
                report.detail.append((line_no, f"bad published_at: {published!r}"))
                continue
        try:
            article = make_article(
                url=str(rec["url"]),
                title=str(rec["title"]),
                body_text=str(rec["body_text"]),
                source_name=str(rec["source_name"]),
                published_at=str(published) if published is not None else None,
            )
        except EmptyContentError:
            report.rejected += 1
            report.detail.append((line_no, "empty body_text"))
            continue

        if store.add(article):
            report.stored += 1
        else:
            report.duplicates += 1
    return report


def load_sources(path: str) -> list[SourceConfig]:
    """Read the source config file: {"sources": [{name, feed_urls, ...}, ...]}."""
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    sources = []
    for entry in data.get("sources", []):
        src = SourceConfig(
            name=entry["name"],
            feed_urls=list(entry["feed_urls"]),
            fetch_interval=float(entry.get("fetch_interval", 86400.0)),
            per_host_delay=float(entry.get("per_host_delay", 1.0)),
        )
        src.validate()
        sources.append(src)
    return sources
