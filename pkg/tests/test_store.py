import random

import pytest

from synopsviz import DatasetTooLargeError, ingest
from synopsviz.ntriples import MalformedLine, parse_line
from synopsviz.terms import blank, iri, literal

XSD_INT = "http://www.w3.org/2001/XMLSchema#integer"
EX = "http://ex/"


def nt(*lines) -> bytes:
    return ("\n".join(lines) + "\n").encode("utf-8")


def test_single_typed_literal_statement():
    store = ingest(nt(f'<{EX}a> <{EX}p> "5"^^<{XSD_INT}> .'))
    assert store.triple_count == 1
    triple = store.triple(0)
    assert triple.subject == iri(EX + "a")
    assert triple.predicate == iri(EX + "p")
    assert triple.object == literal("5", XSD_INT)


def test_duplicate_statement_collapses():
    line = f"<{EX}a> <{EX}p> <{EX}b> ."
    store = ingest(nt(line, line))
    assert store.triple_count == 1
    assert store.report.duplicates == 1
    assert store.report.parsed == 1


def test_small_fixture_counts(small_store):
    assert small_store.triple_count == 50
    assert small_store.report.skipped == 3
    assert small_store.report.parsed == 50
    assert small_store.report.duplicates == 0


def test_report_arithmetic_matches_statement_count(fixtures_dir):
    raw = (fixtures_dir / "small.nt").read_text("utf-8")
    statements = 0
    for line in raw.split("\n"):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            statements += 1
    report = ingest(fixtures_dir / "small.nt").report
    assert report.parsed + report.skipped + report.duplicates == statements


def test_malformed_line_kinds_are_skipped_not_fatal():
    store = ingest(
        nt(
            f"<{EX}a> <{EX}p> <{EX}b> .",
            f"<{EX}a> <{EX}p> <{EX}b>",  # missing dot
            f'<{EX}a> <{EX}p> "bad escape \\q" .',
            f"<{EX}a> <{EX}p> <junk space> .",
            "<> <http://p> <http://o> .",  # empty IRI
        )
    )
    assert store.triple_count == 1
    assert store.report.skipped == 4
    assert len(store.report.errors) == 4


def test_empty_dataset_is_a_warning():
    store = ingest(b"# nothing here\n")
    assert store.triple_count == 0
    assert any("EmptyDataset" in w for w in store.report.warnings)


def test_escape_handling_round_trip():
    store = ingest(nt(f'<{EX}a> <{EX}p> "line\\nbreak\\t\\"quoted\\" \\u00e9" .'))
    assert store.triple(0).object.lexical == 'line\nbreak\t"quoted" é'
    again = ingest(store.serialize_ntriples().encode("utf-8"))
    assert again.triple(0) == store.triple(0)


def test_language_tagged_literal():
    store = ingest(nt(f'<{EX}a> <{EX}p> "bonjour"@fr-CA .'))
    obj = store.triple(0).object
    assert obj.language == "fr-CA"
    assert obj.datatype is None


def test_blank_nodes_are_scoped_and_renamed():
    store = ingest(nt(f"_:left <{EX}p> _:right .", f"_:right <{EX}p> _:left ."))
    labels = {store.triple(i).subject.lexical for i in range(2)}
    assert labels == {"b0", "b1"}


def test_triples_with_predicate_returns_sorted_matches(small_store):
    population = EX.replace("http://ex/", "http://example.org/schema/") + "population"
    rows = small_store.triples_with_predicate(population)
    assert len(rows) == 12
    keys = [(t.subject.lexical, t.object.lexical) for t in rows]
    assert keys == sorted(keys)
    assert small_store.triples_with_predicate("http://nowhere/p") == []


def test_index_lookups_equal_linear_scan(small_store):
    rng = random.Random(7)
    everything = list(small_store.iter_spo())
    ids = list(range(small_store.term_count))
    for tid in rng.sample(ids, 12):
        by_s = sorted(small_store.by_subject(tid))
        assert by_s == [i for i, (s, _, _) in enumerate(everything) if s == tid]
        by_p = sorted(small_store.by_predicate(tid))
        assert by_p == [i for i, (_, p, _) in enumerate(everything) if p == tid]
        by_o = sorted(small_store.by_object(tid))
        assert by_o == [i for i, (_, _, o) in enumerate(everything) if o == tid]


def test_sorted_predicate_index_is_a_permutation_of_the_scan(small_store):
    for pid in small_store.predicate_ids():
        assert sorted(small_store.sorted_by_predicate(pid)) == sorted(
            small_store.by_predicate(pid)
        )


def test_round_trip_canonical_serialization(small_store, fixtures_dir):
    text = small_store.serialize_ntriples()
    again = ingest(text.encode("utf-8"))
    assert again.triple_count == small_store.triple_count
    original = {small_store.triple(i) for i in range(small_store.triple_count)}
    reloaded = {again.triple(i) for i in range(again.triple_count)}
    assert original == reloaded
    # and the round trip is a fixed point
    assert again.serialize_ntriples() == text


def test_max_triples_cap():
    lines = [f"<{EX}s{i}> <{EX}p> <{EX}o{i}> ." for i in range(10)]
    with pytest.raises(DatasetTooLargeError):
        ingest(nt(*lines), max_triples=5)


def test_parse_line_blank_and_comment_lines():
    assert parse_line("") is None
    assert parse_line("   # comment") is None
    with pytest.raises(MalformedLine):
        parse_line("<http://a> <http://b> .")


def test_trailing_comment_after_statement():
    store = ingest(nt(f"<{EX}a> <{EX}p> <{EX}b> . # note"))
    assert store.triple_count == 1


def test_object_blank_node_label_with_dots():
    store = ingest(nt(f"<{EX}a> <{EX}p> _:x.y ."))
    assert store.triple_count == 1
    assert store.triple(0).object == blank("b0")
