"""gvdb: a structured incident database built from local news reports.

Pipeline: crawl/ingest articles, flag candidates with a high-recall
classifier, vet and annotate them with span-anchored human tasks, extract
fields automatically with gated rules, cluster articles into incidents, and
serve aggregates, queries, and exports.
"""

__version__ = "0.1.0"

from .config import GvdbConfig
from .db import Database
from .records import (
    Anchored,
    Circumstances,
    IncidentRecord,
    Participant,
    SpanAnchor,
    TriState,
    validate_payload,
)

__all__ = [
    "Anchored",
    "Circumstances",
    "Database",
    "GvdbConfig",
    "IncidentRecord",
    "Participant",
    "SpanAnchor",
    "TriState",
    "validate_payload",
    "__version__",
]
