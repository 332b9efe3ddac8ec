"""RDF terms, common vocabularies and literal value interpretation.

Terms are immutable value objects: two terms are equal iff all their fields
are equal, which is what the store's interning relies on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from typing import Optional

IRI = "iri"
BLANK = "blank"
LITERAL = "literal"

# Well-known vocabulary IRIs.
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

RDF_TYPE = RDF_NS + "type"
RDF_FIRST = RDF_NS + "first"
RDF_REST = RDF_NS + "rest"
RDF_NIL = RDF_NS + "nil"
RDF_LANGSTRING = RDF_NS + "langString"
RDFS_SUBCLASSOF = RDFS_NS + "subClassOf"
RDFS_CLASS = RDFS_NS + "Class"
OWL_CLASS = OWL_NS + "Class"
OWL_SAMEAS = OWL_NS + "sameAs"
XSD_STRING = XSD_NS + "string"
XSD_BOOLEAN = XSD_NS + "boolean"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_DOUBLE = XSD_NS + "double"

VOID_DATASET = "http://rdfs.org/ns/void#Dataset"
DCAT_DATASET = "http://www.w3.org/ns/dcat#Dataset"

# rdf:type objects that declare schema elements rather than type instances.
SCHEMA_META_CLASSES = frozenset({OWL_CLASS, RDFS_CLASS})


@dataclass(frozen=True, slots=True)
class Term:
    kind: str
    lexical: str
    datatype: Optional[str] = None
    language: Optional[str] = None

    def __post_init__(self):
        if self.kind == IRI and not self.lexical:
            raise ValueError("IRI term with empty lexical form")
        if self.kind != LITERAL and (self.datatype or self.language):
            raise ValueError("only literals carry datatype/language")
        if self.datatype and self.language:
            raise ValueError("literal with both datatype and language tag")

    @property
    def is_literal(self):
        return self.kind == LITERAL

    def sort_key(self):
        return (self.lexical, self.kind, self.datatype or "", self.language or "")

    def to_json(self):
        return {
            "kind": self.kind,
            "lexical": self.lexical,
            "datatype": self.datatype,
            "language": self.language,
        }


def iri(value: str) -> Term:
    return Term(IRI, value)


def blank(label: str) -> Term:
    return Term(BLANK, label)


def literal(lexical: str, datatype: Optional[str] = None, language: Optional[str] = None) -> Term:
    # RDF 1.1: "x"^^xsd:string is the same term as the plain literal "x".
    if datatype == XSD_STRING:
        datatype = None
    return Term(LITERAL, lexical, datatype, language)


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term


NUMERIC = "numeric"
TEMPORAL = "temporal"
OTHER = "other"


@dataclass(frozen=True, slots=True)
class TypedValue:
    """A literal interpreted on a chartable axis.

    ``value`` is a float64: plain magnitude for numeric literals, epoch
    milliseconds (UTC) for temporal ones, None for everything else.
    """

    kind: str
    value: Optional[float] = None


OTHER_VALUE = TypedValue(OTHER)

_NUMERIC_XSD = {
    XSD_NS + name
    for name in (
        "integer",
        "decimal",
        "double",
        "float",
        "long",
        "int",
        "short",
        "byte",
        "nonNegativeInteger",
        "positiveInteger",
        "negativeInteger",
        "nonPositiveInteger",
        "unsignedLong",
        "unsignedInt",
        "unsignedShort",
        "unsignedByte",
    )
}

_INTEGER_XSD = _NUMERIC_XSD - {XSD_NS + "decimal", XSD_NS + "double", XSD_NS + "float"}

_TEMPORAL_XSD = {XSD_NS + name for name in ("date", "dateTime", "gYear", "gYearMonth")}

_INTEGER_RE = re.compile(r"[+-]?\d+\Z")
_DECIMAL_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)\Z")
_FLOATING_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?\Z")

_TZ_RE = r"(?P<tz>Z|[+-]\d{2}:\d{2})?"
_DATETIME_RE = re.compile(
    r"(?P<y>-?\d{4,})-(?P<mo>\d{2})-(?P<d>\d{2})T(?P<h>\d{2}):(?P<mi>\d{2}):(?P<s>\d{2})(?:\.(?P<f>\d+))?" + _TZ_RE + r"\Z"
)
_DATE_RE = re.compile(r"(?P<y>-?\d{4,})-(?P<mo>\d{2})-(?P<d>\d{2})" + _TZ_RE + r"\Z")
_GYEARMONTH_RE = re.compile(r"(?P<y>-?\d{4,})-(?P<mo>\d{2})" + _TZ_RE + r"\Z")
_GYEAR_RE = re.compile(r"(?P<y>-?\d{4,})" + _TZ_RE + r"\Z")

_EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)


def _tzinfo(tz: Optional[str]):
    # Missing timezone is interpreted as UTC.
    if tz is None or tz == "Z":
        return timezone.utc
    sign = 1 if tz[0] == "+" else -1
    hours, minutes = int(tz[1:3]), int(tz[4:6])
    return timezone(sign * timedelta(hours=hours, minutes=minutes))


def _epoch_millis(match, hour=0, minute=0, second=0, fraction=None) -> Optional[float]:
    g = match.groupdict()
    try:
        dt = datetime(
            int(g["y"]),
            int(g.get("mo") or 1),
            int(g.get("d") or 1),
            hour,
            minute,
            second,
            tzinfo=_tzinfo(g.get("tz")),
        )
    except ValueError:
        # Out-of-range parts, incl. years outside 1..9999 (datetime's domain).
        return None
    delta = dt - _EPOCH
    millis = delta.days * 86400000 + delta.seconds * 1000 + delta.microseconds // 1000
    if fraction:
        millis += int(round(int(fraction[:6].ljust(6, "0")) / 1000.0))
    return float(millis)


def _parse_temporal(lexical: str) -> Optional[float]:
    m = _DATETIME_RE.match(lexical)
    if m:
        g = m.groupdict()
        sec = int(g["s"])
        if sec > 59:  # leap seconds are not representable; treat as unparseable
            return None
        return _epoch_millis(m, int(g["h"]), int(g["mi"]), sec, g.get("f"))
    for rx in (_DATE_RE, _GYEARMONTH_RE, _GYEAR_RE):
        m = rx.match(lexical)
        if m:
            return _epoch_millis(m)
    return None


def parse_literal_value(term: Term) -> Optional[TypedValue]:
    """Interpret a literal as a numeric or temporal axis value.

    Returns None for non-literals. Literals that do not fit either axis
    (including INF/NaN and malformed lexicals under a numeric/temporal
    datatype) come back as TypedValue(kind="other").
    """
    if term.kind != LITERAL:
        return None
    lex = term.lexical.strip()
    dt = term.datatype
    if dt is None and term.language is None:
        # Lexical sniffing: plain literals that look numeric chart as numbers.
        if _FLOATING_RE.match(lex):
            return TypedValue(NUMERIC, float(lex))
        return OTHER_VALUE
    if dt in _NUMERIC_XSD:
        if dt in _INTEGER_XSD:
            ok = _INTEGER_RE.match(lex)
        elif dt == XSD_DECIMAL:
            ok = _DECIMAL_RE.match(lex)
        else:
            ok = _FLOATING_RE.match(lex)
        if not ok:
            return OTHER_VALUE
        return TypedValue(NUMERIC, float(lex))
    if dt in _TEMPORAL_XSD:
        millis = _parse_temporal(lex)
        if millis is None:
            return OTHER_VALUE
        return TypedValue(TEMPORAL, millis)
    return OTHER_VALUE


def iso_utc(millis: float) -> str:
    """Render epoch milliseconds as an ISO-8601 UTC timestamp.

    Formatted by hand: strftime does not zero-pad years below 1000.
    """
    ms = int(millis)
    dt = _EPOCH + timedelta(milliseconds=ms)
    base = (
        f"{dt.year:04d}-{dt.month:02d}-{dt.day:02d}"
        f"T{dt.hour:02d}:{dt.minute:02d}:{dt.second:02d}"
    )
    if ms % 1000 == 0:
        return base + "Z"
    return f"{base}.{ms % 1000:03d}Z"


def local_name(iri_str: str) -> str:
    """Short display label for an IRI (fragment or last path segment)."""
    for sep in ("#", "/", ":"):
        idx = iri_str.rstrip("/").rfind(sep)
        if idx >= 0 and idx + 1 < len(iri_str):
            candidate = iri_str[idx + 1 :].rstrip("/")
            if candidate:
                return candidate
    return iri_str
