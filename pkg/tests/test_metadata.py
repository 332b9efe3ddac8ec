from synopsviz import extract_metadata, ingest
from synopsviz.metadata import CATEGORIES, load_predicate_table

EX = "http://ex/"
DCT = "http://purl.org/dc/terms/"
VOID = "http://rdfs.org/ns/void#"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"


def nt(*lines) -> bytes:
    return ("\n".join(lines) + "\n").encode("utf-8")


def test_single_license_entry():
    doc = extract_metadata(ingest(nt(f"<{EX}ds> <{DCT}license> <http://l> ."))).to_json()
    assert doc["found"] is True
    assert len(doc["entries"]) == 1
    entry = doc["entries"][0]
    assert entry["category"] == "Licensing"
    assert entry["predicate"] == DCT + "license"
    assert entry["valueText"] == "http://l"


def test_no_table_predicates_sets_flag():
    doc = extract_metadata(ingest(nt(f"<{EX}a> <{EX}p> <{EX}b> ."))).to_json()
    assert doc["found"] is False
    assert doc["entries"] == []


def test_void_sample_yields_eight_categorized_entries(void_entry):
    doc = void_entry.metadata.to_json()
    assert doc["found"] is True
    assert len(doc["entries"]) == 8
    by_category = {}
    for entry in doc["entries"]:
        by_category.setdefault(entry["category"], []).append(entry["predicate"])
    assert by_category == {
        "Licensing": [DCT + "license"],
        "Provenance": [DCT + "creator", DCT + "source"],
        "Availability": [VOID + "dataDump", VOID + "sparqlEndpoint"],
        "Description": [DCT + "issued", DCT + "modified", DCT + "title"],
    }


def test_entries_are_ordered_by_category_then_predicate(void_entry):
    entries = void_entry.metadata.entries
    ranks = [
        (CATEGORIES.index(e.category), e.predicate, e.subject) for e in entries
    ]
    assert ranks == sorted(ranks)


def test_every_entry_exists_in_store(void_entry):
    store = void_entry.store
    triples = set()
    for i in range(store.triple_count):
        t = store.triple(i)
        triples.add((t.subject.lexical, t.predicate.lexical, t.object))
    for entry in void_entry.metadata.entries:
        assert (entry.subject, entry.predicate, entry.value) in triples


def test_dataset_typed_subjects_take_precedence():
    store = ingest(
        nt(
            f"<{EX}ds> <{RDF_TYPE}> <{VOID}Dataset> .",
            f"<{EX}ds> <{DCT}title> \"official\" .",
            f"<{EX}other> <{DCT}title> \"stray\" .",
        )
    )
    entries = extract_metadata(store).entries
    assert [e.value_text for e in entries] == ["official"]


def test_fallback_to_any_subject_without_dataset_typing():
    store = ingest(nt(f"<{EX}other> <{DCT}title> \"stray\" ."))
    entries = extract_metadata(store).entries
    assert [e.value_text for e in entries] == ["stray"]


def test_category_is_a_pure_function_of_the_predicate():
    table = load_predicate_table()
    assert set(table.values()) <= set(CATEGORIES)
    doc = extract_metadata(
        ingest(nt(f"<{EX}a> <{DCT}license> <http://l1> .", f"<{EX}b> <{DCT}license> <http://l2> ."))
    )
    assert {e.category for e in doc.entries} == {"Licensing"}


def test_literal_values_render_their_lexical_form(void_entry):
    titles = [e for e in void_entry.metadata.entries if e.predicate == DCT + "title"]
    assert titles[0].value_text == "Example statistical dataset"
    assert titles[0].value.kind == "literal"
