"""Class and property facets, and resolution of a facet selection into the
point multiset the hierarchy engine consumes."""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .errors import UnknownClassError, UnknownPropertyError
from .schema import SchemaSummary
from .store import K_BLANK, K_LITERAL, TripleStore
from .terms import NUMERIC, TEMPORAL, iso_utc


@dataclass(frozen=True)
class PropertyFacet:
    iri: str
    literal_kind: str
    triple_count: int
    distinct_subject_count: int
    min: float
    max: float
    skipped_literals: int

    def to_json(self):
        doc = {
            "iri": self.iri,
            "literalKind": self.literal_kind,
            "tripleCount": self.triple_count,
            "distinctSubjectCount": self.distinct_subject_count,
            "min": _axis_number(self.min, self.literal_kind),
            "max": _axis_number(self.max, self.literal_kind),
            "skippedLiterals": self.skipped_literals,
        }
        if self.literal_kind == TEMPORAL:
            doc["minIso"] = iso_utc(self.min)
            doc["maxIso"] = iso_utc(self.max)
        return doc


@dataclass(frozen=True)
class ClassFacet:
    iri: str
    transitive_instance_count: int
    children: Tuple["ClassFacet", ...] = ()

    def to_json(self):
        return {
            "iri": self.iri,
            "transitiveInstanceCount": self.transitive_instance_count,
            "children": [child.to_json() for child in self.children],
        }


@dataclass(frozen=True)
class FacetCatalog:
    class_facets: Tuple[ClassFacet, ...]
    property_facets: Tuple[PropertyFacet, ...]

    def property_facet(self, iri: str) -> Optional[PropertyFacet]:
        for facet in self.property_facets:
            if facet.iri == iri:
                return facet
        return None

    def to_json(self):
        return {
            "classFacets": [facet.to_json() for facet in self.class_facets],
            "propertyFacets": [facet.to_json() for facet in self.property_facets],
        }


@dataclass(frozen=True)
class FacetSelection:
    property_iri: str
    class_iris: Tuple[str, ...] = ()

    def __post_init__(self):
        # Canonical order makes selections directly usable as cache keys.
        object.__setattr__(self, "class_iris", tuple(sorted(set(self.class_iris))))


class PointSet:
    """Points (subject, value, source triple) in one canonical order.

    The order is (value, subject lexical, source order); both hierarchy
    strategies slice this order, so it is computed once here.
    """

    __slots__ = ("value_kind", "values", "subjects", "sources", "skipped", "store")

    def __init__(
        self,
        value_kind: str,
        points: Iterable[Tuple[str, float, Optional[int]]],
        skipped: int = 0,
        store: Optional[TripleStore] = None,
    ):
        rows = list(points)
        rows.sort(key=lambda row: (row[1], row[0], row[2] if row[2] is not None else 0))
        self.value_kind = value_kind
        self.values = array("d", (row[1] for row in rows))
        self.subjects: List[str] = [row[0] for row in rows]
        self.sources: List[Optional[int]] = [row[2] for row in rows]
        self.skipped = skipped
        self.store = store

    def __len__(self) -> int:
        return len(self.values)


def _axis_number(value: float, kind: str):
    if kind == TEMPORAL and float(value).is_integer():
        return int(value)
    return value


def _class_facet(summary: SchemaSummary, class_key: str) -> ClassFacet:
    children = sorted(
        summary.children_of(class_key),
        key=lambda c: (-summary.classes[c].transitive_instance_count, c),
    )
    return ClassFacet(
        iri=class_key,
        transitive_instance_count=summary.classes[class_key].transitive_instance_count,
        children=tuple(_class_facet(summary, child) for child in children),
    )


def build_facets(store: TripleStore, summary: SchemaSummary) -> FacetCatalog:
    roots = sorted(
        summary.roots(),
        key=lambda c: (-summary.classes[c].transitive_instance_count, c),
    )
    class_facets = tuple(_class_facet(summary, root) for root in roots)

    property_facets = []
    for info in summary.properties.values():
        if info.literal_kind not in (NUMERIC, TEMPORAL) or info.triple_count < 1:
            continue
        property_facets.append(
            PropertyFacet(
                iri=info.iri,
                literal_kind=info.literal_kind,
                triple_count=info.triple_count,
                distinct_subject_count=info.distinct_subject_count,
                min=info.value_min.value,
                max=info.value_max.value,
                skipped_literals=info.triple_count - info.axis_value_count,
            )
        )
    property_facets.sort(key=lambda f: (-f.triple_count, f.iri))
    return FacetCatalog(class_facets=class_facets, property_facets=tuple(property_facets))


def resolve_selection(
    store: TripleStore, summary: SchemaSummary, selection: FacetSelection
) -> PointSet:
    """All parseable values of the selected property, restricted to subjects
    typed with any selected class or its subclasses (union semantics)."""
    info = summary.properties.get(selection.property_iri)
    if info is None or info.literal_kind not in (NUMERIC, TEMPORAL):
        raise UnknownPropertyError(selection.property_iri)

    allowed = None
    if selection.class_iris:
        allowed = set()
        for class_iri in selection.class_iris:
            if class_iri not in summary.classes:
                raise UnknownClassError(class_iri)
            allowed |= summary.transitive_instance_ids(class_iri)

    pid = store.iri_id(selection.property_iri)
    kind = info.literal_kind
    points = []
    skipped = 0
    for i in store.by_predicate(pid):
        s, _, o = store.spo(i)
        if store.term_kind(o) != K_LITERAL:
            skipped += 1
            continue
        typed = store.typed_value(o)
        if typed.kind != kind:
            skipped += 1
            continue
        if allowed is not None and s not in allowed:
            continue
        subject = ("_:" + store.lexical(s)) if store.term_kind(s) == K_BLANK else store.lexical(s)
        points.append((subject, typed.value, i))
    return PointSet(kind, points, skipped=skipped, store=store)
