"""Dataset-level statistics catalogue and the enriched class treemap."""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import kernels
from .errors import UnknownClassError
from .schema import DATATYPE, OBJECT, SchemaSummary
from .store import K_BLANK, K_IRI, K_LITERAL, TripleStore
from .terms import NUMERIC, OWL_SAMEAS, RDF_TYPE, TEMPORAL, iso_utc, local_name

PROPERTY_DETAILS_INLINE_LIMIT = 50


@dataclass
class DatasetStats:
    triple_count: int = 0
    distinct_subjects: int = 0
    distinct_predicates: int = 0
    distinct_objects: int = 0
    literal_count: int = 0
    blank_node_count: int = 0
    iri_entity_count: int = 0
    same_as_triple_count: int = 0
    typed_entity_count: int = 0
    untyped_entity_count: int = 0
    class_count: int = 0
    property_count: int = 0
    datatype_property_count: int = 0
    object_property_count: int = 0
    mixed_property_count: int = 0
    top_classes: List[Tuple[str, int]] = field(default_factory=list)
    top_properties: List[Tuple[str, int]] = field(default_factory=list)
    avg_in_degree: float = 0.0
    avg_in_degree_defined: bool = False
    avg_out_degree: float = 0.0
    avg_out_degree_defined: bool = False
    top_in_degree_entities: List[Tuple[str, int]] = field(default_factory=list)
    top_out_degree_entities: List[Tuple[str, int]] = field(default_factory=list)

    def to_json(self):
        return {
            "dataLevel": {
                "tripleCount": self.triple_count,
                "distinctSubjects": self.distinct_subjects,
                "distinctPredicates": self.distinct_predicates,
                "distinctObjects": self.distinct_objects,
                "literalCount": self.literal_count,
                "blankNodeCount": self.blank_node_count,
                "iriEntityCount": self.iri_entity_count,
                "sameAsTripleCount": self.same_as_triple_count,
                "typedEntityCount": self.typed_entity_count,
                "untypedEntityCount": self.untyped_entity_count,
            },
            "schemaLevel": {
                "classCount": self.class_count,
                "propertyCount": self.property_count,
                "datatypePropertyCount": self.datatype_property_count,
                "objectPropertyCount": self.object_property_count,
                "mixedPropertyCount": self.mixed_property_count,
                "topClasses": [
                    {"iri": iri, "instanceCount": count} for iri, count in self.top_classes
                ],
                "topProperties": [
                    {"iri": iri, "tripleCount": count} for iri, count in self.top_properties
                ],
            },
            "structureLevel": {
                "avgInDegree": self.avg_in_degree,
                "avgInDegreeDefined": self.avg_in_degree_defined,
                "avgOutDegree": self.avg_out_degree,
                "avgOutDegreeDefined": self.avg_out_degree_defined,
                "topInDegreeEntities": [
                    {"iri": iri, "inDegree": count}
                    for iri, count in self.top_in_degree_entities
                ],
                "topOutDegreeEntities": [
                    {"iri": iri, "outDegree": count}
                    for iri, count in self.top_out_degree_entities
                ],
            },
        }


def compute_dataset_stats(
    store: TripleStore, summary: SchemaSummary, top_n: int = 10
) -> DatasetStats:
    """Data-, schema- and structure-level statistics for one snapshot.

    Conventions pinned here (the test oracle mirrors them):
    - entity = IRI appearing in subject or object position;
    - typed entity = entity that is the subject of at least one rdf:type
      triple; blank nodes are tallied separately;
    - literalCount counts triples with a literal object;
    - the degree graph uses IRI->IRI edges only;
    - topClasses ranks by direct instance count.
    """
    if top_n < 1:
        raise ValueError("topN must be >= 1")
    stats = DatasetStats()
    stats.triple_count = store.triple_count
    stats.distinct_subjects = len(store.subject_ids())
    stats.distinct_predicates = len(store.predicate_ids())
    stats.distinct_objects = len(store.object_ids())

    blank_ids = set()
    entity_ids = set()
    for tid in store.subject_ids():
        if store.term_kind(tid) == K_IRI:
            entity_ids.add(tid)
        else:
            blank_ids.add(tid)
    literal_triples = 0
    for tid in store.object_ids():
        kind = store.term_kind(tid)
        if kind == K_IRI:
            entity_ids.add(tid)
        elif kind == K_BLANK:
            blank_ids.add(tid)
        else:
            literal_triples += len(store.by_object(tid))
    stats.literal_count = literal_triples
    stats.blank_node_count = len(blank_ids)
    stats.iri_entity_count = len(entity_ids)

    type_id = store.iri_id(RDF_TYPE)
    typed = 0
    if type_id is not None:
        typed_subjects = {store.spo(i)[0] for i in store.by_predicate(type_id)}
        typed = len(typed_subjects & entity_ids)
    stats.typed_entity_count = typed
    stats.untyped_entity_count = stats.iri_entity_count - typed

    same_as_id = store.iri_id(OWL_SAMEAS)
    stats.same_as_triple_count = len(store.by_predicate(same_as_id)) if same_as_id is not None else 0

    stats.class_count = len(summary.classes)
    stats.property_count = len(summary.properties)
    for info in summary.properties.values():
        if info.kind == DATATYPE:
            stats.datatype_property_count += 1
        elif info.kind == OBJECT:
            stats.object_property_count += 1
        else:
            stats.mixed_property_count += 1

    ranked_classes = sorted(
        summary.classes.values(), key=lambda c: (-c.direct_instance_count, c.iri)
    )
    stats.top_classes = [(c.iri, c.direct_instance_count) for c in ranked_classes[:top_n]]
    ranked_properties = sorted(
        summary.properties.values(), key=lambda p: (-p.triple_count, p.iri)
    )
    stats.top_properties = [(p.iri, p.triple_count) for p in ranked_properties[:top_n]]

    out_counts = array("q", bytes(8 * store.term_count)) if store.term_count else array("q")
    in_counts = array("q", bytes(8 * store.term_count)) if store.term_count else array("q")
    edges = kernels.degree_counts(store._s, store._o, store._kind, out_counts, in_counts)
    out_entities = [
        (store.lexical(tid), out_counts[tid]) for tid in store.subject_ids() if out_counts[tid]
    ]
    in_entities = [
        (store.lexical(tid), in_counts[tid]) for tid in store.object_ids() if in_counts[tid]
    ]
    if out_entities:
        stats.avg_out_degree = edges / len(out_entities)
        stats.avg_out_degree_defined = True
    if in_entities:
        stats.avg_in_degree = edges / len(in_entities)
        stats.avg_in_degree_defined = True
    out_entities.sort(key=lambda row: (-row[1], row[0]))
    in_entities.sort(key=lambda row: (-row[1], row[0]))
    stats.top_out_degree_entities = out_entities[:top_n]
    stats.top_in_degree_entities = in_entities[:top_n]
    return stats


@dataclass
class PropertyDetail:
    iri: str
    cardinality: int
    literal_kind: Optional[str]
    value_min: Optional[float] = None
    value_max: Optional[float] = None

    def to_json(self):
        doc = {
            "iri": self.iri,
            "cardinality": self.cardinality,
            "valueMin": self.value_min,
            "valueMax": self.value_max,
        }
        if self.literal_kind == TEMPORAL and self.value_min is not None:
            doc["valueMin"] = int(self.value_min) if self.value_min.is_integer() else self.value_min
            doc["valueMax"] = int(self.value_max) if self.value_max.is_integer() else self.value_max
            doc["valueMinIso"] = iso_utc(self.value_min)
            doc["valueMaxIso"] = iso_utc(self.value_max)
        return doc


@dataclass
class TreemapNode:
    class_iri: Optional[str]
    label: str
    direct_instance_count: int
    transitive_instance_count: int
    subclass_count: int
    datatype_property_count: int
    object_property_count: int
    property_details: Optional[List[PropertyDetail]]
    property_details_deferred: bool
    children: List["TreemapNode"]
    truncated: bool

    def to_json(self):
        return {
            "classIri": self.class_iri,
            "label": self.label,
            "directInstanceCount": self.direct_instance_count,
            "transitiveInstanceCount": self.transitive_instance_count,
            "subclassCount": self.subclass_count,
            "datatypePropertyCount": self.datatype_property_count,
            "objectPropertyCount": self.object_property_count,
            "propertyDetails": (
                None
                if self.property_details is None
                else [detail.to_json() for detail in self.property_details]
            ),
            "propertyDetailsDeferred": self.property_details_deferred,
            "truncated": self.truncated,
            "children": [child.to_json() for child in self.children],
        }


def class_property_details(
    store: TripleStore, summary: SchemaSummary, class_key: str
) -> List[PropertyDetail]:
    """Per-property usage over the class's transitive instances.

    Cardinality counts triples whose subject is an instance of the class
    (subtree semantics, matching the treemap weight); value bounds cover
    exactly those triples.
    """
    if class_key not in summary.classes:
        raise UnknownClassError(class_key)
    instances = summary.transitive_instance_ids(class_key)
    cardinality: Dict[int, int] = {}
    bounds: Dict[int, Tuple[float, float]] = {}
    for subject_id in instances:
        for i in store.by_subject(subject_id):
            _, p, o = store.spo(i)
            cardinality[p] = cardinality.get(p, 0) + 1
            if store.term_kind(o) != K_LITERAL:
                continue
            expected = summary.properties[store.lexical(p)].literal_kind
            if expected not in (NUMERIC, TEMPORAL):
                continue
            typed = store.typed_value(o)
            if typed.kind != expected:
                continue
            current = bounds.get(p)
            if current is None:
                bounds[p] = (typed.value, typed.value)
            else:
                bounds[p] = (min(current[0], typed.value), max(current[1], typed.value))

    details = []
    for pid, count in cardinality.items():
        iri = store.lexical(pid)
        info = summary.properties[iri]
        low, high = bounds.get(pid, (None, None))
        details.append(
            PropertyDetail(
                iri=iri,
                cardinality=count,
                literal_kind=info.literal_kind,
                value_min=low,
                value_max=high,
            )
        )
    details.sort(key=lambda d: (-d.cardinality, d.iri))
    return details


def _class_node(
    store: TripleStore,
    summary: SchemaSummary,
    class_key: str,
    depth: int,
    max_depth: Optional[int],
    detail_cache: Dict[str, List[PropertyDetail]],
) -> TreemapNode:
    info = summary.classes[class_key]
    if class_key not in detail_cache:
        detail_cache[class_key] = class_property_details(store, summary, class_key)
    details = detail_cache[class_key]
    datatype_props = 0
    object_props = 0
    for detail in details:
        kind = summary.properties[detail.iri].kind
        if kind == DATATYPE:
            datatype_props += 1
        elif kind == OBJECT:
            object_props += 1
    deferred = len(details) > PROPERTY_DETAILS_INLINE_LIMIT

    child_keys = sorted(
        summary.children_of(class_key),
        key=lambda c: (-summary.classes[c].transitive_instance_count, c),
    )
    truncated = max_depth is not None and depth >= max_depth and bool(child_keys)
    children = (
        []
        if truncated
        else [
            _class_node(store, summary, child, depth + 1, max_depth, detail_cache)
            for child in child_keys
        ]
    )
    return TreemapNode(
        class_iri=class_key,
        label=local_name(class_key),
        direct_instance_count=info.direct_instance_count,
        transitive_instance_count=info.transitive_instance_count,
        subclass_count=len(child_keys),
        datatype_property_count=datatype_props,
        object_property_count=object_props,
        property_details=None if deferred else details,
        property_details_deferred=deferred,
        children=children,
        truncated=truncated,
    )


def build_treemap(
    store: TripleStore,
    summary: SchemaSummary,
    root_class: Optional[str] = None,
    max_depth: Optional[int] = None,
) -> TreemapNode:
    """Class-hierarchy treemap weighted by transitive instance counts.

    Multiple-inheritance classes appear under each parent with identical
    enrichment (the DAG is unfolded into a tree). Without a root class a
    synthetic root spans all parentless classes.
    """
    detail_cache: Dict[str, List[PropertyDetail]] = {}
    if root_class is not None:
        if root_class not in summary.classes:
            raise UnknownClassError(root_class)
        return _class_node(store, summary, root_class, 0, max_depth, detail_cache)

    roots = sorted(
        summary.roots(),
        key=lambda c: (-summary.classes[c].transitive_instance_count, c),
    )
    truncated = max_depth is not None and max_depth <= 0 and bool(roots)
    children = (
        []
        if truncated
        else [
            _class_node(store, summary, root, 1, max_depth, detail_cache) for root in roots
        ]
    )
    all_typed = set()
    for ids in summary.direct_instances.values():
        all_typed |= ids
    datatype_total = sum(1 for p in summary.properties.values() if p.kind == DATATYPE)
    object_total = sum(1 for p in summary.properties.values() if p.kind == OBJECT)
    return TreemapNode(
        class_iri=None,
        label="All classes",
        direct_instance_count=0,
        transitive_instance_count=len(all_typed),
        subclass_count=len(roots),
        datatype_property_count=datatype_total,
        object_property_count=object_total,
        property_details=[],
        property_details_deferred=False,
        children=children,
        truncated=truncated,
    )
