"""Independent brute-force oracles.

Everything here recomputes expected results by naive scanning, straight from
first principles, sharing no code path with the package beyond the literal
contracts (bin edge formula, slice arithmetic) it checks. Keep it dumb.
"""

from __future__ import annotations

import math
from collections import Counter

RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"
RDFS_SUBCLASSOF = "http://www.w3.org/2000/01/rdf-schema#subClassOf"
OWL_SAMEAS = "http://www.w3.org/2002/07/owl#sameAs"
META_CLASSES = {
    "http://www.w3.org/2002/07/owl#Class",
    "http://www.w3.org/2000/01/rdf-schema#Class",
}

# Logical triples are plain tuples:
#   subject: ("iri", s) | ("blank", label)
#   predicate: plain IRI string
#   object: ("iri", s) | ("blank", label) | ("literal", lex, dt, lang)


def render(node) -> str:
    if node[0] == "blank":
        return "_:" + node[1]
    return node[1]


def naive_dataset_stats(triples, top_n=10):
    """Every DatasetStats field by naive scans over deduplicated triples."""
    triples = sorted(set(triples), key=lambda t: repr(t))
    subjects = {t[0] for t in triples}
    predicates = {t[1] for t in triples}
    objects = {t[2] for t in triples}

    blank_nodes = {n for n in subjects | objects if n[0] == "blank"}
    entities = {n[1] for n in subjects if n[0] == "iri"} | {
        n[1] for n in objects if n[0] == "iri"
    }
    literal_count = sum(1 for t in triples if t[2][0] == "literal")
    typed_entities = {
        t[0][1] for t in triples if t[1] == RDF_TYPE and t[0][0] == "iri"
    } & entities

    # Classes: rdf:type objects (meta declarations aside), declared subjects,
    # and subClassOf endpoints.
    classes = set()
    direct_instances = {}
    for s, p, o in triples:
        if p == RDF_TYPE and o[0] != "literal":
            if render(o) in META_CLASSES:
                classes.add(render(s))
            else:
                classes.add(render(o))
                direct_instances.setdefault(render(o), set()).add(render(s))
        elif p == RDFS_SUBCLASSOF and o[0] != "literal":
            classes.add(render(s))
            classes.add(render(o))

    prop_kind = {}
    prop_counts = Counter()
    for s, p, o in triples:
        prop_counts[p] += 1
        seen_literal, seen_resource = prop_kind.get(p, (False, False))
        if o[0] == "literal":
            seen_literal = True
        else:
            seen_resource = True
        prop_kind[p] = (seen_literal, seen_resource)

    datatype_props = sum(1 for lit, res in prop_kind.values() if lit and not res)
    object_props = sum(1 for lit, res in prop_kind.values() if res and not lit)
    mixed_props = sum(1 for lit, res in prop_kind.values() if lit and res)

    top_classes = sorted(
        ((c, len(direct_instances.get(c, ()))) for c in classes),
        key=lambda row: (-row[1], row[0]),
    )[:top_n]
    top_properties = sorted(prop_counts.items(), key=lambda row: (-row[1], row[0]))[:top_n]

    out_deg = Counter()
    in_deg = Counter()
    edges = 0
    for s, p, o in triples:
        if s[0] == "iri" and o[0] == "iri":
            out_deg[s[1]] += 1
            in_deg[o[1]] += 1
            edges += 1

    return {
        "dataLevel": {
            "tripleCount": len(triples),
            "distinctSubjects": len(subjects),
            "distinctPredicates": len(predicates),
            "distinctObjects": len(objects),
            "literalCount": literal_count,
            "blankNodeCount": len(blank_nodes),
            "iriEntityCount": len(entities),
            "sameAsTripleCount": sum(1 for t in triples if t[1] == OWL_SAMEAS),
            "typedEntityCount": len(typed_entities),
            "untypedEntityCount": len(entities) - len(typed_entities),
        },
        "schemaLevel": {
            "classCount": len(classes),
            "propertyCount": len(predicates),
            "datatypePropertyCount": datatype_props,
            "objectPropertyCount": object_props,
            "mixedPropertyCount": mixed_props,
            "topClasses": [{"iri": c, "instanceCount": n} for c, n in top_classes],
            "topProperties": [{"iri": p, "tripleCount": n} for p, n in top_properties],
        },
        "structureLevel": {
            "avgInDegree": edges / len(in_deg) if in_deg else 0.0,
            "avgInDegreeDefined": bool(in_deg),
            "avgOutDegree": edges / len(out_deg) if out_deg else 0.0,
            "avgOutDegreeDefined": bool(out_deg),
            "topInDegreeEntities": [
                {"iri": e, "inDegree": d}
                for e, d in sorted(in_deg.items(), key=lambda r: (-r[1], r[0]))[:top_n]
            ],
            "topOutDegreeEntities": [
                {"iri": e, "outDegree": d}
                for e, d in sorted(out_deg.items(), key=lambda r: (-r[1], r[0]))[:top_n]
            ],
        },
    }


def naive_subtree(edges, root):
    """Transitive subtree by plain DFS over (parent, child) edges."""
    children = {}
    for parent, child in edges:
        children.setdefault(parent, set()).add(child)
    seen = set()
    stack = [root]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(children.get(node, ()))
    return seen


def naive_transitive_count(type_pairs, subtree):
    """Distinct subjects typed with any class of the subtree.

    type_pairs: iterable of (subject, class) from rdf:type triples.
    """
    return len({s for s, c in type_pairs if c in subtree})


def isclose(a, b, rel=1e-9, absolute=1e-9):
    return abs(a - b) <= max(absolute, rel * max(abs(a), abs(b)))


def compare_tree(tree, oracle_root, check_points=True):
    """Walk an engine tree and the oracle tree in lockstep, asserting the
    leaf partition, ranges, counts, statistics and samples agree."""

    def visit(node_id, expected):
        node = tree.node(node_id)
        assert node.stats.count == expected["count"], node_id
        assert node.lo == expected["lo"], node_id
        assert node.hi == expected["hi"], node_id
        assert node.closure == expected["closure"], node_id
        assert node.stats.min == expected["min"], node_id
        assert node.stats.max == expected["max"], node_id
        assert isclose(node.stats.mean, expected["mean"]), node_id
        assert isclose(node.stats.variance, expected["variance"]), node_id
        assert list(node.stats.samples) == expected["samples"], node_id
        assert node.is_leaf == expected["leaf"], node_id
        assert node.pruned_child_count == expected["pruned"], node_id
        assert node.child_count == len(expected["children"]), node_id
        if expected["leaf"]:
            if check_points:
                assert tree.points_of(node_id) == expected["points"], node_id
        else:
            for i, child in enumerate(expected["children"]):
                visit(node.child_id(i), child)

    visit("", oracle_root)


def brute_force_tree(points, strategy, levels, fanout, sample_size=5):
    """Reference hierarchy: per-point bin scanning, math.fsum statistics.

    points: list of (subject, value) (source order = list order). Returns a
    nested dict per node with exact counts/ranges and stable mean/variance.
    """
    order = sorted(range(len(points)), key=lambda i: (points[i][1], points[i][0], i))
    rows = [(points[i][0], points[i][1], i) for i in order]

    def node_of(rows_, depth, lo, hi, closure):
        values = [r[1] for r in rows_]
        n = len(values)
        mean = math.fsum(values) / n
        variance = math.fsum((v - mean) ** 2 for v in values) / n
        node = {
            "lo": lo,
            "hi": hi,
            "closure": closure,
            "count": n,
            "min": values[0],
            "max": values[-1],
            "mean": mean,
            "variance": variance,
            "samples": [(r[0], r[1]) for r in rows_[:sample_size]],
            "children": [],
            "pruned": 0,
        }
        if depth >= levels or lo == hi:
            node["leaf"] = True
            node["points"] = list(rows_)
            return node
        node["leaf"] = False
        k = fanout
        if strategy == "equal-width":
            width = (hi - lo) / k
            edges = [lo + i * width for i in range(k + 1)]
            edges[0] = lo
            edges[k] = hi
            bins = [[] for _ in range(k)]
            for row in rows_:
                v = row[1]
                target = k - 1
                for i in range(k - 1):
                    if edges[i] <= v < edges[i + 1]:
                        target = i
                        break
                bins[target].append(row)
            for i in range(k):
                if bins[i]:
                    node["children"].append(
                        node_of(
                            bins[i],
                            depth + 1,
                            edges[i],
                            edges[i + 1],
                            "closed" if i == k - 1 else "half-open",
                        )
                    )
                else:
                    node["pruned"] += 1
        else:
            for i in range(k):
                start = (i * n) // k
                stop = ((i + 1) * n) // k
                if start >= stop:
                    node["pruned"] += 1
                    continue
                chunk = rows_[start:stop]
                node["children"].append(
                    node_of(
                        chunk,
                        depth + 1,
                        chunk[0][1],
                        chunk[-1][1],
                        "closed" if stop == n else "half-open",
                    )
                )
        return node

    return node_of(rows, 0, rows[0][1], rows[-1][1], "closed")
