"""Loaded-dataset registry backing the server and the CLI.

A dataset becomes visible only once the whole load pipeline (ingest ->
schema -> facets -> statistics -> metadata) has finished; entries are
immutable snapshots keyed by a content hash, so reloading the same bytes is
idempotent.
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional

from .errors import EmptyPointSetError, UnknownDatasetError
from .facets import FacetCatalog, build_facets
from .metadata import DatasetMetadata, extract_metadata
from .schema import SchemaSummary, infer_schema
from .stats import DatasetStats, compute_dataset_stats
from .store import NTRIPLES, TripleStore, ingest, normalize_format

DEFAULT_TOP_N = 10


class EmptyDatasetError(EmptyPointSetError):
    """Zero valid triples: loadable at the parser level, not registrable."""


@dataclass(frozen=True)
class DatasetEntry:
    id: str
    name: str
    format: str
    loaded_at: str
    source_path: Optional[str]
    store: TripleStore
    summary: SchemaSummary
    facets: FacetCatalog
    stats: DatasetStats
    metadata: DatasetMetadata

    def listing_json(self):
        return {
            "id": self.id,
            "name": self.name,
            "tripleCount": self.store.triple_count,
            "loadedAt": self.loaded_at,
        }


def load_pipeline(
    data: bytes,
    format: Optional[str] = None,
    name: str = "dataset",
    source_path: Optional[str] = None,
    max_triples: Optional[int] = None,
    allow_empty: bool = False,
) -> DatasetEntry:
    fmt = normalize_format(format, source_path)
    store = ingest(data, fmt, max_triples=max_triples)
    if store.triple_count == 0 and not allow_empty:
        raise EmptyDatasetError("no valid triples in input")
    summary = infer_schema(store)
    entry = DatasetEntry(
        id=hashlib.sha256(data).hexdigest()[:12],
        name=name,
        format=fmt,
        loaded_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        source_path=source_path,
        store=store,
        summary=summary,
        facets=build_facets(store, summary),
        stats=compute_dataset_stats(store, summary, DEFAULT_TOP_N),
        metadata=extract_metadata(store),
    )
    return entry


class DatasetRegistry:
    """id -> loaded dataset; optionally persisted under a data directory."""

    def __init__(self, data_dir: Optional[Path] = None, max_triples: Optional[int] = None):
        self._entries: Dict[str, DatasetEntry] = {}
        self._lock = threading.Lock()
        self.max_triples = max_triples
        self.data_dir = Path(data_dir) if data_dir else None
        if self.data_dir:
            self.data_dir.mkdir(parents=True, exist_ok=True)
            (self.data_dir / "sources").mkdir(exist_ok=True)
            self._load_registered()

    # --- persistence -----------------------------------------------------

    @property
    def _registry_file(self) -> Path:
        return self.data_dir / "registry.json"

    def _load_registered(self):
        if not self._registry_file.exists():
            return
        catalog = json.loads(self._registry_file.read_text("utf-8"))
        for row in catalog:
            path = self.data_dir / "sources" / row["file"]
            if not path.exists():
                continue
            entry = load_pipeline(
                path.read_bytes(),
                row.get("format"),
                row.get("name", path.stem),
                source_path=str(path),
                max_triples=self.max_triples,
            )
            self._entries[entry.id] = entry

    def _persist(self, entry: DatasetEntry, data: bytes):
        if not self.data_dir:
            return
        suffix = ".ttl" if entry.format != NTRIPLES else ".nt"
        filename = f"{entry.id}{suffix}"
        (self.data_dir / "sources" / filename).write_bytes(data)
        catalog = []
        for existing in self._entries.values():
            catalog.append(
                {
                    "id": existing.id,
                    "name": existing.name,
                    "format": existing.format,
                    "file": f"{existing.id}{'.ttl' if existing.format != NTRIPLES else '.nt'}",
                }
            )
        self._registry_file.write_text(json.dumps(catalog, indent=2) + "\n", "utf-8")

    # --- access ------------------------------------------------------------

    def ids(self) -> List[str]:
        return list(self._entries)

    def entries(self) -> List[DatasetEntry]:
        return list(self._entries.values())

    def get(self, dataset_id: str) -> DatasetEntry:
        try:
            return self._entries[dataset_id]
        except KeyError:
            raise UnknownDatasetError(dataset_id) from None

    def load_bytes(
        self,
        data: bytes,
        format: Optional[str] = None,
        name: str = "dataset",
        source_path: Optional[str] = None,
    ) -> DatasetEntry:
        entry = load_pipeline(
            data, format, name, source_path=source_path, max_triples=self.max_triples
        )
        with self._lock:
            self._entries[entry.id] = entry
            self._persist(entry, data)
        return entry

    def load_file(
        self, path: Path, format: Optional[str] = None, name: Optional[str] = None
    ) -> DatasetEntry:
        path = Path(path)
        return self.load_bytes(
            path.read_bytes(),
            normalize_format(format, path),
            name or path.stem,
            source_path=str(path),
        )
