"""An immutable, indexed snapshot of parsed RDF triples.

Terms are interned to integer ids so the statistics and hierarchy passes can
compare terms in O(1); all downstream modules work against one finished
snapshot, which is never mutated after ingestion.
"""

from __future__ import annotations

import io
import os
from array import array
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

from . import ntriples
from .errors import DatasetTooLargeError, UnreadableSourceError
from .terms import LITERAL, Term, Triple, TypedValue, parse_literal_value
from .turtle import parse_turtle

NTRIPLES = "ntriples"
TURTLE = "turtle"

_FORMAT_ALIASES = {
    "ntriples": NTRIPLES,
    "nt": NTRIPLES,
    "n-triples": NTRIPLES,
    "turtle": TURTLE,
    "ttl": TURTLE,
}

K_IRI = 0
K_BLANK = 1
K_LITERAL = 2

_KIND_NAMES = ("iri", "blank", "literal")
_MAX_ERROR_SAMPLES = 20


def normalize_format(value: Optional[str], path: Optional[str] = None) -> str:
    if value:
        try:
            return _FORMAT_ALIASES[value.lower()]
        except KeyError:
            raise ValueError(f"unsupported RDF format: {value!r}") from None
    if path and str(path).lower().endswith((".ttl", ".turtle")):
        return TURTLE
    return NTRIPLES


@dataclass
class IngestReport:
    format: str = NTRIPLES
    parsed: int = 0
    duplicates: int = 0
    skipped: int = 0
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def statements(self) -> int:
        return self.parsed + self.duplicates + self.skipped

    def to_json(self):
        return {
            "format": self.format,
            "parsed": self.parsed,
            "duplicates": self.duplicates,
            "skipped": self.skipped,
            "statements": self.statements,
            "errors": list(self.errors),
            "warnings": list(self.warnings),
        }


class TripleStore:
    """Deduplicated triples plus by-subject/predicate/object access paths."""

    def __init__(self):
        self._kind = array("b")
        self._lex: List[str] = []
        self._datatype: List[Optional[str]] = []
        self._lang: List[Optional[str]] = []
        self._key_to_id: dict = {}
        self._s = array("q")
        self._p = array("q")
        self._o = array("q")
        self._by_s: dict = {}
        self._by_p: dict = {}
        self._by_o: dict = {}
        self._sorted_p_cache: dict = {}
        self._typed_value_cache: dict = {}
        self.report = IngestReport()
        self._finalized = False

    # --- construction (single writer) ----------------------------------

    def _intern(self, kind: int, lexical: str, datatype=None, language=None) -> int:
        key = (kind, lexical, datatype, language)
        tid = self._key_to_id.get(key)
        if tid is None:
            tid = len(self._lex)
            self._key_to_id[key] = tid
            self._kind.append(kind)
            self._lex.append(lexical)
            self._datatype.append(datatype)
            self._lang.append(language)
        return tid

    def _intern_term(self, term: Term, bnode_map: dict) -> int:
        if term.kind == "iri":
            return self._intern(K_IRI, term.lexical)
        if term.kind == "blank":
            label = bnode_map.get(term.lexical)
            if label is None:
                # Blank nodes are scoped per ingest: fresh, stable labels.
                label = f"b{len(bnode_map)}"
                bnode_map[term.lexical] = label
            return self._intern(K_BLANK, label)
        return self._intern(K_LITERAL, term.lexical, term.datatype, term.language)

    def _finalize(self):
        for i in range(len(self._s)):
            self._by_s.setdefault(self._s[i], array("q")).append(i)
            self._by_p.setdefault(self._p[i], array("q")).append(i)
            self._by_o.setdefault(self._o[i], array("q")).append(i)
        if self.report.parsed == 0:
            self.report.warnings.append("EmptyDataset: no valid triples were ingested")
        self._finalized = True

    # --- term/triple access ---------------------------------------------

    def __len__(self) -> int:
        return len(self._s)

    @property
    def triple_count(self) -> int:
        return len(self._s)

    @property
    def term_count(self) -> int:
        return len(self._lex)

    def term(self, tid: int) -> Term:
        kind = self._kind[tid]
        if kind == K_LITERAL:
            return Term(LITERAL, self._lex[tid], self._datatype[tid], self._lang[tid])
        return Term(_KIND_NAMES[kind], self._lex[tid])

    def term_kind(self, tid: int) -> int:
        return self._kind[tid]

    def lexical(self, tid: int) -> str:
        return self._lex[tid]

    def datatype(self, tid: int) -> Optional[str]:
        return self._datatype[tid]

    def language(self, tid: int) -> Optional[str]:
        return self._lang[tid]

    def term_id(self, term: Term) -> Optional[int]:
        kind = _KIND_NAMES.index(term.kind)
        return self._key_to_id.get((kind, term.lexical, term.datatype, term.language))

    def iri_id(self, iri_str: str) -> Optional[int]:
        return self._key_to_id.get((K_IRI, iri_str, None, None))

    def sort_key(self, tid: int):
        return (self._lex[tid], self._kind[tid], self._datatype[tid] or "", self._lang[tid] or "")

    def typed_value(self, tid: int) -> Optional[TypedValue]:
        """Memoized axis interpretation of a literal term."""
        cached = self._typed_value_cache.get(tid)
        if cached is None:
            cached = parse_literal_value(self.term(tid))
            self._typed_value_cache[tid] = cached
        return cached

    def spo(self, i: int) -> Tuple[int, int, int]:
        return self._s[i], self._p[i], self._o[i]

    def triple(self, i: int) -> Triple:
        return Triple(self.term(self._s[i]), self.term(self._p[i]), self.term(self._o[i]))

    def triple_line(self, i: int) -> str:
        return ntriples.format_triple(
            self.term(self._s[i]), self.term(self._p[i]), self.term(self._o[i])
        )

    def iter_spo(self) -> Iterator[Tuple[int, int, int]]:
        s, p, o = self._s, self._p, self._o
        for i in range(len(s)):
            yield s[i], p[i], o[i]

    def triples(self) -> Iterator[Triple]:
        for i in range(len(self._s)):
            yield self.triple(i)

    # --- indexes -----------------------------------------------------------

    def subject_ids(self):
        return self._by_s.keys()

    def predicate_ids(self):
        return self._by_p.keys()

    def object_ids(self):
        return self._by_o.keys()

    def by_subject(self, tid: int):
        return self._by_s.get(tid, ())

    def by_predicate(self, tid: int):
        return self._by_p.get(tid, ())

    def by_object(self, tid: int):
        return self._by_o.get(tid, ())

    def sorted_by_predicate(self, tid: int):
        """Triple indices for a predicate ordered by subject then object
        lexical form. Memoized; safe to race under the GIL (idempotent)."""
        cached = self._sorted_p_cache.get(tid)
        if cached is None:
            rows = list(self._by_p.get(tid, ()))
            rows.sort(key=lambda i: (self.sort_key(self._s[i]), self.sort_key(self._o[i])))
            self._sorted_p_cache[tid] = cached = rows
        return cached

    def triples_with_predicate(self, predicate: Union[str, Term]) -> List[Triple]:
        iri_str = predicate if isinstance(predicate, str) else predicate.lexical
        pid = self.iri_id(iri_str)
        if pid is None:
            return []
        return [self.triple(i) for i in self.sorted_by_predicate(pid)]

    # --- serialization -------------------------------------------------------

    def serialize_ntriples(self) -> str:
        """Canonical N-Triples: store (first-seen) order, one line each."""
        return "".join(self.triple_line(i) + "\n" for i in range(len(self._s)))


def _read_source(source) -> bytes:
    if isinstance(source, bytes):
        return source
    if isinstance(source, (str, Path)):
        try:
            with open(source, "rb") as handle:
                return handle.read()
        except OSError as exc:
            raise UnreadableSourceError(f"cannot read {source}: {exc}") from exc
    if hasattr(source, "read"):
        data = source.read()
        if isinstance(data, str):
            return data.encode("utf-8")
        return data
    raise UnreadableSourceError(f"unsupported source object: {source!r}")


def ingest(
    source: Union[str, Path, bytes, io.IOBase],
    format: Optional[str] = None,
    max_triples: Optional[int] = None,
) -> TripleStore:
    """Parse an N-Triples or Turtle source into an immutable TripleStore.

    N-Triples: malformed lines are skipped and counted, never fatal.
    Turtle: the first syntax error aborts with a position-bearing error.
    """
    fmt = normalize_format(format, source if isinstance(source, (str, Path)) else None)
    if max_triples is None:
        env_cap = os.environ.get("SYNOPSVIZ_MAX_TRIPLES")
        max_triples = int(env_cap) if env_cap else None
    data = _read_source(source)
    store = TripleStore()
    store.report.format = fmt
    bnode_map: dict = {}
    seen: set = set()

    def add(subject: Term, predicate: Term, obj: Term):
        s = store._intern_term(subject, bnode_map)
        p = store._intern_term(predicate, bnode_map)
        o = store._intern_term(obj, bnode_map)
        key = (s, p, o)
        if key in seen:
            store.report.duplicates += 1
            return
        if max_triples is not None and len(seen) >= max_triples:
            raise DatasetTooLargeError(
                f"input exceeds the configured cap of {max_triples} triples"
            )
        seen.add(key)
        store._s.append(s)
        store._p.append(p)
        store._o.append(o)
        store.report.parsed += 1

    if fmt == TURTLE:
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise UnreadableSourceError(f"source is not valid UTF-8: {exc}") from exc
        parse_turtle(text.lstrip("﻿"), add)
    else:
        _ingest_ntriples(data, add, store.report)

    store._finalize()
    return store


def _ingest_ntriples(data: bytes, add, report: IngestReport):
    for lineno, raw in enumerate(data.split(b"\n"), 1):
        if raw.endswith(b"\r"):
            raw = raw[:-1]
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError:
            report.skipped += 1
            if len(report.errors) < _MAX_ERROR_SAMPLES:
                report.errors.append(f"line {lineno}: invalid UTF-8")
            continue
        if lineno == 1:
            line = line.lstrip("﻿")
        try:
            parsed = ntriples.parse_line(line)
        except ntriples.MalformedLine as exc:
            report.skipped += 1
            if len(report.errors) < _MAX_ERROR_SAMPLES:
                report.errors.append(f"line {lineno}: {exc}")
            continue
        if parsed is not None:
            add(*parsed)
