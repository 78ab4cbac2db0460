"""Exit-code contract of the command line."""

import json
from dataclasses import replace
from pathlib import Path

import pytest

from gradcat.cli import main
from gradcat.core import constant_functor
from gradcat.corpus import CORPUS
from gradcat.mutation import Mutation, apply
from gradcat.serialize import Bundle, dump_doc, dump_text
from gradcat import stock

CORPUS_DIR = Path(__file__).resolve().parents[1] / "corpus"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_check_corpus_exit_zero(capsys, name):
    code, out, _ = run(capsys, "check", CORPUS_DIR / f"{name}.json", "--canonical")
    assert code == 0
    assert json.loads(out)["verdict"] == "pass"


def test_check_text_format(capsys):
    code, out, _ = run(capsys, "check", CORPUS_DIR / "reader.json", "--format", "text")
    assert code == 0 and out.startswith("suite all: PASS")


def test_comp_flip_exits_one_and_explains(capsys, tmp_path):
    doc = dump_doc(CORPUS["reader"]())
    comp = doc["resources"]["C"]["comp"]
    i = next(i for i, row in enumerate(comp) if row[2] == "0<=1")
    bad = apply(doc, Mutation("C", ("comp", i, 2), "0<=1", "1<=1"))
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "check", path, "--canonical")
    assert code == 1
    report = json.loads(out)
    failing = [(s, law) for s in report["subjects"] for law in s["laws"] if law["status"] == "fail"]
    assert failing
    rpath = tmp_path / "report.json"
    rpath.write_text(out)
    wid = failing[0][1]["witnesses"][0]["id"]
    code, out, _ = run(capsys, "explain", wid, "--report", rpath, "--bundle", path)
    assert code == 0 and "replay: still fails" in out


def test_truncated_file_exits_two(capsys, tmp_path):
    text = (CORPUS_DIR / "reader.json").read_text()
    path = tmp_path / "cut.json"
    path.write_text(text[: len(text) // 2])
    code, _, err = run(capsys, "check", path)
    assert code == 2 and "MalformedInput" in err


def test_missing_file_exits_two(capsys, tmp_path):
    assert run(capsys, "check", tmp_path / "absent.json")[0] == 2


def test_suite_selection(capsys):
    code, out, _ = run(capsys, "check", CORPUS_DIR / "pairing.json", "--suite", "localisable", "--canonical")
    assert code == 0
    assert {s["check"] for s in json.loads(out)["subjects"]} == {"localisable"}


def test_construct_kleisli(capsys, tmp_path):
    out = tmp_path / "kl.json"
    assert run(capsys, "construct", CORPUS_DIR / "truncation.json", "kleisli", "--out", out)[0] == 0
    assert run(capsys, "check", out, "--suite", "category")[0] == 0


@pytest.mark.parametrize("what", ["em-enumerate", "em-tensor", "unit-algebra"])
def test_construct_algebras(capsys, tmp_path, what):
    out = tmp_path / "alg.json"
    assert run(capsys, "construct", CORPUS_DIR / "reader.json", what, "--out", out)[0] == 0
    code, report, _ = run(capsys, "check", out, "--suite", "algebra", "--canonical")
    assert code == 0 and json.loads(report)["subjects"]


def test_em_tensor_on_lax_exits_one(capsys, tmp_path):
    t = stock.identity_commutative_1graded()
    path = tmp_path / "lax.json"
    path.write_text(dump_text(Bundle().add("Id1", replace(t, variant="lax"))))
    code, _, err = run(capsys, "construct", path, "em-tensor")
    assert code == 1 and "VariantMismatch" in err


def test_construct_on_failing_monad_exits_one(capsys, tmp_path):
    t = stock.twisted_bz2_monad()
    path = tmp_path / "bad.json"
    path.write_text(dump_text(Bundle().add("bad", replace(t, delta={"*": "e"}))))
    assert run(capsys, "construct", path, "kleisli")[0] == 1


def test_translate_round_trip(capsys, tmp_path):
    src = CORPUS_DIR / "pairing.json"
    mid, back = tmp_path / "mid.json", tmp_path / "back.json"
    assert run(capsys, "translate", src, "to-graded", "--resource", "swap", "--out", mid)[0] == 0
    assert run(capsys, "check", mid, "--suite", "morphism")[0] == 0
    assert run(capsys, "translate", mid, "to-presheaf", "--resource", "swap", "--out", back)[0] == 0
    assert back.read_text() == src.read_text()


def test_translate_mismatched_pairing_exits_one(capsys, tmp_path):
    tw, pl = stock.twisted_pairings()
    A = tw.formal.base.at["1"]
    T = {**tw.formal.T, "1": constant_functor(A, A, A.objects[0], "K")}
    bad = replace(tw, formal=replace(tw.formal, T=T))
    fam = replace(stock.twisted_family(), src=bad.formal)
    path = tmp_path / "mismatch.json"
    path.write_text(dump_text(Bundle().add("swap", fam, src=bad, dst=pl)))
    code, _, err = run(capsys, "translate", path, "to-graded")
    assert code == 1 and "PairingMismatch" in err


def test_translate_non_identity_carrier_exits_one(capsys, tmp_path):
    from gradcat.localisable import theta_to_graded
    tw, pl = stock.twisted_pairings()
    h = theta_to_graded(stock.twisted_family(), tw, pl)
    C = h.Omega.src
    h = replace(h, Omega=constant_functor(C, C, C.objects[0], "K"))
    path = tmp_path / "carrier.json"
    path.write_text(dump_text(Bundle().add("h", h, src=tw, dst=pl)))
    code, _, err = run(capsys, "translate", path, "to-presheaf")
    assert code == 1 and "NotIdentityCarrier" in err


def test_parallel_runs_match(capsys, monkeypatch):
    path = CORPUS_DIR / "pairing.json"
    first = run(capsys, "check", path, "--canonical")[1]
    monkeypatch.setenv("GRADCAT_JOBS", "3")
    assert run(capsys, "check", path, "--canonical")[1] == first
