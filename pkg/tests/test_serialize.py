"""Bundle documents: loading, dumping and malformed input."""

import json
from pathlib import Path

import pytest

from gradcat.corpus import CORPUS
from gradcat.errors import MalformedInput
from gradcat.serialize import canonical, digest, dump_doc, dump_text, load_doc, load_text

CORPUS_DIR = Path(__file__).resolve().parents[1] / "corpus"


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_shipped_corpus_matches_builders(name):
    assert (CORPUS_DIR / f"{name}.json").read_text() == dump_text(CORPUS[name]())


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_round_trip_is_byte_identical(name):
    text = dump_text(CORPUS[name]())
    assert dump_text(load_text(text)) == text


def test_canonical_is_key_order_independent():
    a = {"b": 1, "a": [1, {"d": 2, "c": 3}]}
    b = {"a": [1, {"c": 3, "d": 2}], "b": 1}
    assert canonical(a) == canonical(b)
    assert digest(a) == digest(b)


@pytest.mark.parametrize("text", ["", "{", "[]", '{"schema": "bundle/v0", "resources": {}}',
                                  '{"schema": "bundle/v1"}'])
def test_malformed_documents(text):
    with pytest.raises(MalformedInput):
        load_text(text)


def test_dangling_reference():
    doc = dump_doc(CORPUS["truncation"]())
    doc["resources"]["truncation"]["base"] = "nowhere"
    with pytest.raises(MalformedInput):
        load_doc(doc)


def test_unknown_schema():
    doc = dump_doc(CORPUS["identity"]())
    doc["resources"]["C"]["schema"] = "fincat/v9"
    with pytest.raises(MalformedInput):
        load_doc(doc)


def test_semilattice_input_schema():
    doc = {"schema": "bundle/v1", "resources": {
        "Z": {"schema": "semilattice/v1", "elements": ["0", "1"], "leq": [["0", "1"]]}}}
    bundle = load_doc(doc)
    m = bundle.resources["Z"]
    assert m.unit == "1" and m.ten("0", "1") == "0"


def test_links_survive():
    bundle = load_text(dump_text(CORPUS["pairing"]()))
    assert bundle.links["swap"]["src"] is bundle.resources["twisted-pairing"]
    assert json.loads(dump_text(bundle))["resources"]["swap"]["src"] == "twisted-pairing"
