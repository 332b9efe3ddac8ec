"""Acceptance suite: every criterion at its stated tolerance, one printed
PASS/FAIL line per criterion (run with -s to watch them live)."""

import json
import random
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from synopsviz import (
    DatasetRegistry,
    HierarchyConfig,
    build_hierarchy,
    compute_dataset_stats,
    infer_schema,
    ingest,
    load_pipeline,
)
from synopsviz import kernels

from conftest import FIXTURES, make_point_set, random_values
from generators import random_class_forest, random_triples
from goldens_spec import GOLDEN_DIR, collect_golden_bytes
from oracles import (
    brute_force_tree,
    compare_tree,
    isclose,
    naive_dataset_stats,
    naive_subtree,
    naive_transitive_count,
)


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL")
        raise
    print(f"ACCEPTANCE {name}: PASS")


_tree_pool = []  # (tree, point_set) pairs shared between criteria 2 and 3


def test_oracle_equivalence_statistics():
    with criterion("oracle-equivalence-statistics"):
        rng = random.Random(90210)
        started = time.perf_counter()
        for trial in range(200):
            n = rng.randrange(5, 900) if trial % 10 else rng.randrange(2000, 10001)
            triples, text = random_triples(rng, n)
            store = ingest(text.encode("utf-8"))
            got = compute_dataset_stats(store, infer_schema(store), 10).to_json()
            expected = naive_dataset_stats(triples, top_n=10)
            assert got == expected, f"stats mismatch on trial {trial}"
        elapsed = time.perf_counter() - started
        assert elapsed < 60.0, f"statistics oracle suite took {elapsed:.1f}s"


def _random_point_sets(seed, count):
    rng = random.Random(seed)
    for trial in range(count):
        n = rng.randrange(1, 600) if trial % 25 else rng.randrange(3000, 5001)
        values = random_values(rng, n)
        strategy = "equal-width" if trial % 2 == 0 else "equal-frequency"
        levels = rng.randrange(1, 5)
        fanout = rng.randrange(2, 17)
        yield values, strategy, levels, fanout


def test_oracle_equivalence_hierarchy():
    with criterion("oracle-equivalence-hierarchy"):
        started = time.perf_counter()
        for values, strategy, levels, fanout in _random_point_sets(1337, 500):
            ps = make_point_set(values)
            tree = build_hierarchy(ps, HierarchyConfig(strategy, levels, fanout))
            oracle = brute_force_tree(
                [(f"http://ex/s{i}", float(v)) for i, v in enumerate(values)],
                strategy,
                levels,
                fanout,
            )
            compare_tree(tree, oracle)
            tree.point_reads = 0  # drilling-down checks reuse these trees
            _tree_pool.append(tree)
        elapsed = time.perf_counter() - started
        assert elapsed < 60.0, f"hierarchy oracle suite took {elapsed:.1f}s"


def test_aggregation_over_levels():
    with criterion("aggregation-over-levels"):
        trees = _tree_pool or [
            build_hierarchy(make_point_set(values), HierarchyConfig(strategy, levels, fanout))
            for values, strategy, levels, fanout in _random_point_sets(1337, 100)
        ]
        for tree in trees:
            for node in tree.nodes.values():
                if node.is_leaf:
                    continue
                children = tree.children_of(node.node_id)
                merged = children[0].stats
                for child in children[1:]:
                    merged = merged.merge(child.stats, tree.config.sample_size)
                stored = node.stats
                assert merged.count == stored.count
                assert merged.min == stored.min
                assert merged.max == stored.max
                assert merged.sum == stored.sum
                assert merged.sum_squares == stored.sum_squares
                assert isclose(merged.mean, stored.mean)
                assert isclose(merged.variance, stored.variance)
        # Drill-down must not touch raw points: zero leaf-point reads.
        for tree in trees:
            tree.point_reads = 0
            for node_id in tree.nodes:
                tree.children_of(node_id)
            assert tree.point_reads == 0


def test_determinism_byte_identical_rebuilds():
    with criterion("determinism"):
        population = "http://example.org/schema/population"
        docs = []
        for _ in range(2):
            entry = load_pipeline(
                (FIXTURES / "countries.nt").read_bytes(), "ntriples", "countries"
            )
            from synopsviz import FacetSelection, resolve_selection

            points = resolve_selection(
                entry.store, entry.summary, FacetSelection(population)
            )
            tree = build_hierarchy(points, HierarchyConfig("equal-frequency", 3, 4))
            docs.append(json.dumps(tree.to_json(), sort_keys=False).encode("utf-8"))
        assert docs[0] == docs[1]
        # rebuild() on the same handle is byte-identical too
        from synopsviz import rebuild

        entry = load_pipeline((FIXTURES / "zoo.ttl").read_bytes(), "turtle", "zoo")
        from synopsviz import FacetSelection, resolve_selection

        points = resolve_selection(
            entry.store, entry.summary, FacetSelection("http://example.org/zoo/weightKg")
        )
        first = build_hierarchy(points, HierarchyConfig())
        second = rebuild(first, HierarchyConfig())
        assert json.dumps(first.to_json()).encode() == json.dumps(second.to_json()).encode()


def test_fixture_goldens_match_byte_for_byte():
    with criterion("fixture-goldens"):
        for name, payload in collect_golden_bytes(FIXTURES):
            golden = (GOLDEN_DIR / f"{name}.json").read_bytes()
            assert payload == golden, f"golden drift: {name}"


def _synthetic_ntriples(path: Path, n: int):
    with open(path, "w", encoding="utf-8") as out:
        chunk = []
        for i in range(n):
            chunk.append(
                f'<http://ex/e{i}> <http://ex/p{i % 20}> '
                f'"{i % 100000}"^^<http://www.w3.org/2001/XMLSchema#integer> .\n'
            )
            if len(chunk) == 50000:
                out.write("".join(chunk))
                chunk.clear()
        out.write("".join(chunk))


@pytest.mark.slow
def test_desk_scale_performance(tmp_path):
    with criterion("desk-scale-performance"):
        big = tmp_path / "big.nt"
        _synthetic_ntriples(big, 1_000_000)
        started = time.perf_counter()
        store = ingest(big)
        ingest_seconds = time.perf_counter() - started
        assert store.triple_count == 1_000_000
        assert ingest_seconds < 30.0, f"1M-triple ingest took {ingest_seconds:.1f}s"

        rng = random.Random(8)
        values = [rng.uniform(0.0, 1e6) for _ in range(1_000_000)]
        ps = make_point_set(values)
        for strategy in ("equal-width", "equal-frequency"):
            started = time.perf_counter()
            tree = build_hierarchy(ps, HierarchyConfig(strategy, 3, 10))
            build_seconds = time.perf_counter() - started
            assert build_seconds < 2.0, (
                f"{strategy} build over 1M points took {build_seconds:.2f}s "
                f"({kernels.IMPLEMENTATION} kernels)"
            )
            internal = [n for n in tree.nodes.values() if not n.is_leaf]
            started = time.perf_counter()
            calls = 0
            for node in internal:
                tree.children_of(node.node_id)
                calls += 1
            per_call = (time.perf_counter() - started) / max(calls, 1)
            assert per_call < 0.010, f"childrenOf averaged {per_call * 1000:.2f}ms"
        print(
            f"  (ingest {ingest_seconds:.1f}s, kernels={kernels.IMPLEMENTATION})",
            end=" ",
        )


def test_schema_inference_transitive_counts():
    with criterion("schema-inference"):
        rng = random.Random(4242)
        for trial in range(100):
            n_classes = rng.randrange(3, 30)
            cycles = rng.randrange(0, 4) if trial % 2 else 0
            text, type_pairs, raw_edges = random_class_forest(
                rng, n_classes, rng.randrange(5, 120), cycles
            )
            store = ingest(text.encode("utf-8"))
            summary = infer_schema(store)

            # acyclic every time: DFS from every class terminates without
            # revisiting along the path
            for start in summary.classes:
                stack = [(start, frozenset())]
                while stack:
                    node, seen = stack.pop()
                    assert node not in seen, "cycle survived breaking"
                    for child in summary.hierarchy.get(node, ()):
                        stack.append((child, seen | {node}))

            kept_edges = [
                (parent, child)
                for parent, children in summary.hierarchy.items()
                for child in children
            ]
            assert len(kept_edges) + len(summary.broken_edges) == len(raw_edges)

            for class_key, info in summary.classes.items():
                subtree = naive_subtree(kept_edges, class_key)
                expected = naive_transitive_count(type_pairs, subtree)
                assert info.transitive_instance_count == expected

            if cycles == 0:
                assert not summary.broken_edges
                for class_key in summary.classes:
                    assert naive_subtree(sorted(raw_edges), class_key) == set(
                        summary.subtree_of(class_key)
                    )
