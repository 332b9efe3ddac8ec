"""Dataset-description metadata mining.

Surfaces raw evidence for quality assessment (license, provenance, access
points, ...) from a fixed predicate->category table shipped as a data file;
no scoring happens here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Optional

from .store import K_BLANK, TripleStore
from .terms import DCAT_DATASET, RDF_TYPE, VOID_DATASET, Term

CATEGORIES = ("Licensing", "Provenance", "Linking", "Availability", "Description", "Other")
_CATEGORY_RANK = {name: rank for rank, name in enumerate(CATEGORIES)}


def load_predicate_table() -> Dict[str, str]:
    """The predicate->category table; extensible without code changes."""
    text = resources.files("synopsviz").joinpath("data/metadata_predicates.json").read_text("utf-8")
    table = json.loads(text)
    return {iri: (cat if cat in _CATEGORY_RANK else "Other") for iri, cat in table.items()}


@dataclass(frozen=True)
class MetadataEntry:
    category: str
    predicate: str
    subject: str
    value: Term
    value_text: str

    def to_json(self):
        return {
            "category": self.category,
            "predicate": self.predicate,
            "subject": self.subject,
            "value": self.value.to_json(),
            "valueText": self.value_text,
        }


@dataclass
class DatasetMetadata:
    entries: List[MetadataEntry] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.entries)

    def to_json(self):
        return {
            "found": self.found,
            "entries": [entry.to_json() for entry in self.entries],
        }


def _render(store: TripleStore, tid: int) -> str:
    if store.term_kind(tid) == K_BLANK:
        return "_:" + store.lexical(tid)
    return store.lexical(tid)


def extract_metadata(
    store: TripleStore, table: Optional[Dict[str, str]] = None
) -> DatasetMetadata:
    """Collect description triples, preferring void/dcat Dataset subjects.

    When at least one subject typed void:Dataset or dcat:Dataset carries a
    table predicate, only those subjects contribute; otherwise any subject
    does. Entries come back ordered by (category, predicate, subject).
    """
    if table is None:
        table = load_predicate_table()

    dataset_subjects = set()
    type_id = store.iri_id(RDF_TYPE)
    if type_id is not None:
        for i in store.by_predicate(type_id):
            s, _, o = store.spo(i)
            if store.lexical(o) in (VOID_DATASET, DCAT_DATASET):
                dataset_subjects.add(s)

    rows = []
    for predicate, category in table.items():
        pid = store.iri_id(predicate)
        if pid is None:
            continue
        for i in store.by_predicate(pid):
            s, _, o = store.spo(i)
            rows.append((category, predicate, s, o))

    if dataset_subjects and any(s in dataset_subjects for _, _, s, _ in rows):
        rows = [row for row in rows if row[2] in dataset_subjects]

    entries = []
    for category, predicate, s, o in rows:
        term = store.term(o)
        entries.append(
            MetadataEntry(
                category=category,
                predicate=predicate,
                subject=_render(store, s),
                value=term,
                value_text="_:" + term.lexical if term.kind == "blank" else term.lexical,
            )
        )
    entries.sort(
        key=lambda e: (
            _CATEGORY_RANK.get(e.category, len(CATEGORIES)),
            e.predicate,
            e.subject,
            e.value.sort_key(),
        )
    )
    return DatasetMetadata(entries=entries)
