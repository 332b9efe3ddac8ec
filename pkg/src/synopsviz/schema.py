"""Schema inference over a triple snapshot.

Classes, the subclass hierarchy (made acyclic deterministically), property
kinds and observed domains/ranges are all derived from the data; no OWL
reasoning is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .errors import UnknownClassError
from .store import K_BLANK, K_LITERAL, TripleStore
from .terms import (
    NUMERIC,
    OTHER,
    RDF_LANGSTRING,
    RDF_TYPE,
    RDFS_SUBCLASSOF,
    SCHEMA_META_CLASSES,
    TEMPORAL,
    XSD_STRING,
    TypedValue,
)

RDFS_RANGE = "http://www.w3.org/2000/01/rdf-schema#range"

DATATYPE = "datatype"
OBJECT = "object"
MIXED = "mixed"


@dataclass
class ClassInfo:
    iri: str
    direct_instance_count: int = 0
    transitive_instance_count: int = 0
    superclasses: Tuple[str, ...] = ()

    def to_json(self):
        return {
            "iri": self.iri,
            "directInstanceCount": self.direct_instance_count,
            "transitiveInstanceCount": self.transitive_instance_count,
            "superclasses": list(self.superclasses),
        }


@dataclass
class PropertyInfo:
    iri: str
    kind: str
    literal_kind: Optional[str]
    triple_count: int
    distinct_subject_count: int
    domains: Tuple[str, ...]
    ranges: Tuple[str, ...]
    value_min: Optional[TypedValue] = None
    value_max: Optional[TypedValue] = None
    # Derived convenience: how many triples parse onto the literal_kind axis.
    axis_value_count: int = 0

    def to_json(self):
        return {
            "iri": self.iri,
            "kind": self.kind,
            "literalKind": self.literal_kind,
            "tripleCount": self.triple_count,
            "distinctSubjectCount": self.distinct_subject_count,
            "domains": list(self.domains),
            "ranges": list(self.ranges),
            "valueMin": self.value_min.value if self.value_min else None,
            "valueMax": self.value_max.value if self.value_max else None,
        }


@dataclass
class SchemaSummary:
    classes: Dict[str, ClassInfo] = field(default_factory=dict)
    hierarchy: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    properties: Dict[str, PropertyInfo] = field(default_factory=dict)
    broken_edges: List[Tuple[str, str]] = field(default_factory=list)
    # Internal id-level views used by the facet/statistics engines.
    direct_instances: Dict[str, FrozenSet[int]] = field(default_factory=dict)
    typed_subject_ids: FrozenSet[int] = frozenset()
    subject_classes: Dict[int, Tuple[str, ...]] = field(default_factory=dict)
    _subtree_cache: Dict[str, FrozenSet[str]] = field(default_factory=dict)

    def children_of(self, class_key: str) -> Tuple[str, ...]:
        return self.hierarchy.get(class_key, ())

    def roots(self) -> List[str]:
        return [key for key, info in self.classes.items() if not info.superclasses]

    def subtree_of(self, class_key: str) -> FrozenSet[str]:
        """The class plus all transitive subclasses."""
        if class_key not in self.classes:
            raise UnknownClassError(class_key)
        cached = self._subtree_cache.get(class_key)
        if cached is not None:
            return cached
        seen: Set[str] = set()
        stack = [class_key]
        while stack:
            current = stack.pop()
            if current in seen:
                continue
            seen.add(current)
            stack.extend(self.hierarchy.get(current, ()))
        result = frozenset(seen)
        self._subtree_cache[class_key] = result
        return result

    def transitive_instance_ids(self, class_key: str) -> FrozenSet[int]:
        members: Set[int] = set()
        for cls in self.subtree_of(class_key):
            members |= self.direct_instances.get(cls, frozenset())
        return frozenset(members)

    def to_json(self):
        return {
            "classes": [self.classes[k].to_json() for k in sorted(self.classes)],
            "hierarchy": {
                parent: list(children)
                for parent, children in sorted(self.hierarchy.items())
                if children
            },
            "properties": [self.properties[k].to_json() for k in sorted(self.properties)],
            "brokenSubclassEdges": [list(edge) for edge in self.broken_edges],
        }


def _render(store: TripleStore, tid: int) -> str:
    if store.term_kind(tid) == K_BLANK:
        return "_:" + store.lexical(tid)
    return store.lexical(tid)


def _strongly_connected(nodes: List[str], edges: Set[Tuple[str, str]]) -> List[List[str]]:
    """Iterative Tarjan; returns components with more than one node."""
    children: Dict[str, List[str]] = {}
    for parent, child in edges:
        children.setdefault(parent, []).append(child)
    index: Dict[str, int] = {}
    lowlink: Dict[str, int] = {}
    on_stack: Set[str] = set()
    stack: List[str] = []
    components: List[List[str]] = []
    counter = [0]

    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(children.get(root, ())))]
        index[root] = lowlink[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for child in it:
                if child not in index:
                    index[child] = lowlink[child] = counter[0]
                    counter[0] += 1
                    stack.append(child)
                    on_stack.add(child)
                    work.append((child, iter(children.get(child, ()))))
                    advanced = True
                    break
                if child in on_stack:
                    lowlink[node] = min(lowlink[node], index[child])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                if len(component) > 1:
                    components.append(sorted(component))
    return components


def _break_cycles(class_keys: List[str], edges: Set[Tuple[str, str]]) -> List[Tuple[str, str]]:
    """Remove edges until the parent->child graph is acyclic.

    Self-loops go first; then, per strongly connected component, the
    lexicographically largest (parent, child) edge inside the component is
    dropped, repeating until no component remains. Deterministic.
    """
    removed = [edge for edge in sorted(edges) if edge[0] == edge[1]]
    for edge in removed:
        edges.discard(edge)
    while True:
        components = _strongly_connected(class_keys, edges)
        if not components:
            return removed
        for component in components:
            members = set(component)
            internal = [
                (parent, child)
                for parent, child in edges
                if parent in members and child in members
            ]
            victim = max(internal)
            edges.discard(victim)
            removed.append(victim)


def infer_schema(store: TripleStore) -> SchemaSummary:
    """Infer classes, hierarchy and property descriptions from the snapshot."""
    summary = SchemaSummary()
    type_id = store.iri_id(RDF_TYPE)
    subclass_id = store.iri_id(RDFS_SUBCLASSOF)
    range_id = store.iri_id(RDFS_RANGE)

    class_keys: Set[str] = set()
    direct: Dict[str, Set[int]] = {}
    subject_classes: Dict[int, List[str]] = {}
    typed_subjects: Set[int] = set()

    if type_id is not None:
        for i in store.by_predicate(type_id):
            s, _, o = store.spo(i)
            typed_subjects.add(s)
            if store.term_kind(o) == K_LITERAL:
                continue  # malformed typing; the triple still counts as data
            o_key = _render(store, o)
            if o_key in SCHEMA_META_CLASSES:
                # Declarations (x rdf:type owl:Class) introduce x as a class
                # but never count anything as an instance.
                class_keys.add(_render(store, s))
                continue
            class_keys.add(o_key)
            direct.setdefault(o_key, set()).add(s)
            subject_classes.setdefault(s, []).append(o_key)

    edges: Set[Tuple[str, str]] = set()
    if subclass_id is not None:
        for i in store.by_predicate(subclass_id):
            s, _, o = store.spo(i)
            if store.term_kind(s) == K_LITERAL or store.term_kind(o) == K_LITERAL:
                continue
            child = _render(store, s)
            parent = _render(store, o)
            class_keys.add(child)
            class_keys.add(parent)
            edges.add((parent, child))

    ordered_keys = sorted(class_keys)
    summary.broken_edges = _break_cycles(ordered_keys, edges)

    children_map: Dict[str, List[str]] = {}
    parents_map: Dict[str, List[str]] = {}
    for parent, child in sorted(edges):
        children_map.setdefault(parent, []).append(child)
        parents_map.setdefault(child, []).append(parent)

    for key in ordered_keys:
        summary.classes[key] = ClassInfo(
            iri=key,
            direct_instance_count=len(direct.get(key, ())),
            superclasses=tuple(parents_map.get(key, ())),
        )
        summary.hierarchy[key] = tuple(children_map.get(key, ()))
    summary.direct_instances = {k: frozenset(v) for k, v in direct.items()}
    summary.typed_subject_ids = frozenset(typed_subjects)
    summary.subject_classes = {s: tuple(sorted(set(v))) for s, v in subject_classes.items()}

    for key in ordered_keys:
        summary.classes[key].transitive_instance_count = len(
            summary.transitive_instance_ids(key)
        )

    declared_ranges: Dict[int, List[str]] = {}
    if range_id is not None:
        for i in store.by_predicate(range_id):
            s, _, o = store.spo(i)
            if store.term_kind(o) == K_LITERAL:
                continue
            declared_ranges.setdefault(s, []).append(_render(store, o))

    for pid in store.predicate_ids():
        summary.properties[store.lexical(pid)] = _describe_property(
            store, summary, pid, declared_ranges.get(pid, ())
        )
    return summary


def _describe_property(store, summary, pid, declared_ranges) -> PropertyInfo:
    rows = store.by_predicate(pid)
    subjects: Set[int] = set()
    domains: Set[str] = set()
    ranges: Set[str] = set(declared_ranges)
    literal_count = 0
    numeric_count = 0
    temporal_count = 0
    num_min = num_max = None
    tmp_min = tmp_max = None

    for i in rows:
        s, _, o = store.spo(i)
        subjects.add(s)
        for cls in summary.subject_classes.get(s, ()):
            domains.add(cls)
        kind = store.term_kind(o)
        if kind == K_LITERAL:
            literal_count += 1
            dt = store.datatype(o)
            if dt is None:
                ranges.add(RDF_LANGSTRING if store.language(o) else XSD_STRING)
            else:
                ranges.add(dt)
            typed = store.typed_value(o)
            if typed.kind == NUMERIC:
                numeric_count += 1
                v = typed.value
                num_min = v if num_min is None or v < num_min else num_min
                num_max = v if num_max is None or v > num_max else num_max
            elif typed.kind == TEMPORAL:
                temporal_count += 1
                v = typed.value
                tmp_min = v if tmp_min is None or v < tmp_min else tmp_min
                tmp_max = v if tmp_max is None or v > tmp_max else tmp_max
        else:
            for cls in summary.subject_classes.get(o, ()):
                ranges.add(cls)

    triple_count = len(rows)
    if literal_count == triple_count:
        kind_name = DATATYPE
    elif literal_count == 0:
        kind_name = OBJECT
    else:
        kind_name = MIXED

    literal_kind = None
    value_min = value_max = None
    axis_count = 0
    if literal_count:
        if numeric_count and not temporal_count:
            literal_kind = NUMERIC
            value_min = TypedValue(NUMERIC, num_min)
            value_max = TypedValue(NUMERIC, num_max)
            axis_count = numeric_count
        elif temporal_count and not numeric_count:
            literal_kind = TEMPORAL
            value_min = TypedValue(TEMPORAL, tmp_min)
            value_max = TypedValue(TEMPORAL, tmp_max)
            axis_count = temporal_count
        else:
            literal_kind = OTHER

    return PropertyInfo(
        iri=store.lexical(pid),
        kind=kind_name,
        literal_kind=literal_kind,
        triple_count=triple_count,
        distinct_subject_count=len(subjects),
        domains=tuple(sorted(domains)),
        ranges=tuple(sorted(ranges)),
        value_min=value_min,
        value_max=value_max,
        axis_value_count=axis_count,
    )


def subtree_of(summary: SchemaSummary, class_key: str) -> FrozenSet[str]:
    return summary.subtree_of(class_key)
