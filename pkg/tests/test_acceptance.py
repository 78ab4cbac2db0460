"""Acceptance criteria, one test each.

Every test records a one-line PASS/FAIL summary; ``conftest.py`` prints the
collected lines at the end of the session, and running this file directly
prints them as it goes.
"""

from __future__ import annotations

import contextlib
import io
import random
import time
from dataclasses import replace
from pathlib import Path

import pytest

from gradcat.cli import main as cli_main
from gradcat.constructions import (
    build_kleisli,
    enumerate_graded_algebras,
    graded_algebra_laws,
    tensor_algebras,
    trace_kleisli,
    unit_algebra,
    xi_equivalence,
)
from gradcat.core import check_category
from gradcat.corpus import CORPUS
from gradcat.errors import PairingMismatch, ShapeMismatch, WorkbenchError
from gradcat.graded import CommutativeGradedMonad, GradedMonad, check_graded_monad, check_graded_morphism, from_plain_monad
from gradcat.laws import run
from gradcat.localisable import (
    MonadMorphismFamily,
    check_monad_morphism_family,
    theta_from_graded,
    theta_to_graded,
)
from gradcat.mutation import apply, mutations, sweep
from gradcat.serialize import dump_doc, load_doc
from gradcat import stock
from oracles import random_plain, random_readers

ROOT = Path(__file__).resolve().parents[1]
STOCK = ("identity", "truncation", "reader", "pairing")
RESULTS: list[str] = []


def record(cid: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {cid}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _cli(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = cli_main(list(argv))
    return code, out.getvalue()


def _bundle_doc(name: str) -> dict:
    return dump_doc(CORPUS[name]())


# -- 1 -------------------------------------------------------------------------------


def test_c1_stock_corpus_passes_quickly():
    start = time.perf_counter()
    codes = {name: _cli("check", str(ROOT / "corpus" / f"{name}.json"), "--suite", "all")[0] for name in STOCK}
    secs = time.perf_counter() - start
    ok = all(c == 0 for c in codes.values()) and secs < 5.0
    record("C1 stock corpus", ok, f"exit codes {codes}, {secs:.3f}s total (limit 5s)")


# -- 2 -------------------------------------------------------------------------------


def test_c2_mutation_soundness():
    parts, ok = [], True
    for name in STOCK:
        out = sweep(_bundle_doc(name), limit=200, seed=1)
        counts = {s: sum(o.status == s for o in out) for s in ("rejected", "detected", "silent", "unreplayable")}
        ok &= len(out) >= 50 and counts["silent"] == 0 and counts["unreplayable"] == 0
        parts.append(f"{name} n={len(out)} rej={counts['rejected']} det={counts['detected']} "
                     f"silent={counts['silent']} unreplayable={counts['unreplayable']}")
    record("C2 mutation soundness", ok, "; ".join(parts))


# -- 3 -------------------------------------------------------------------------------


def test_c3_plain_monads_match_oracle():
    rng = random.Random(3)
    n, agree, valid = 200, 0, 0
    for _ in range(n):
        cand = random_plain(rng)
        expected = cand.oracle()
        got = check_graded_monad(from_plain_monad(cand.base, cand.T, cand.mu, cand.eta)).ok
        agree += expected == got
        valid += expected
    record("C3 plain-monad oracle", agree == n and 0 < valid < n,
           f"{agree}/{n} agree ({valid} lawful, {n - valid} not)")


# -- 4 -------------------------------------------------------------------------------


def _corpus_graded() -> list[GradedMonad]:
    out = []
    for name in CORPUS:
        for obj in CORPUS[name]().resources.values():
            g = obj.underlying if isinstance(obj, CommutativeGradedMonad) else obj
            if isinstance(g, GradedMonad):
                out.append(g)
    tw, pl = stock.twisted_pairings()
    return out + [tw.graded, pl.graded]


def test_c4_kleisli_closure():
    rng = random.Random(4)
    valid = [g for g in _corpus_graded() if check_graded_monad(g).ok]
    n_corpus = len(valid)
    randoms, invalid = random_readers(), []
    while len(randoms) < 24 or len(invalid) < 30:
        c = random_plain(rng)
        g = from_plain_monad(c.base, c.T, c.mu, c.eta)
        if c.oracle():
            randoms.append(g) if len(randoms) < 24 else None
        elif len(invalid) < 30:
            invalid.append(g)
    lawful = sum(check_category(build_kleisli(g).category).ok for g in valid + randoms)
    traced = kleisli_lawful = 0
    for g in invalid:
        tr = trace_kleisli(g)
        if tr["category"] is not None and tr["category"].ok:
            kleisli_lawful += 1
        elif tr["traced"] and all(tr["traced"].values()):
            traced += 1
    ok = lawful == len(valid) + len(randoms) and len(randoms) >= 20 and traced >= 10
    record("C4 Kleisli closure", ok,
           f"{lawful}/{len(valid) + len(randoms)} lawful monads give categories ({n_corpus} corpus, "
           f"{len(randoms)} random); invalid: {traced}/{len(invalid)} fail with a traced law, "
           f"{kleisli_lawful} have a lawful Kleisli table anyway")


# -- 5 -------------------------------------------------------------------------------


def _closed(t, a, b) -> bool:
    try:
        return run(graded_algebra_laws(tensor_algebras(t, a, b), t.underlying)).ok
    except ShapeMismatch:
        return False


def test_c5_em_lifting_thin_reader():
    start = time.perf_counter()
    t = stock.thin_reader()
    algs = enumerate_graded_algebras(t.underlying)
    pairs = [(a, b) for a in algs for b in algs]
    closed = sum(_closed(t, a, b) for a, b in pairs)
    unit_ok = run(graded_algebra_laws(unit_algebra(t), t.underlying)).ok
    C = t.underlying.base
    corruptions = breaking = 0
    for x, row in t.phi.items():
        for key, m in row.items():
            for other in C.morphisms:
                if other == m:
                    continue
                corruptions += 1
                bad = replace(t, phi={**t.phi, x: {**row, key: other}})
                breaking += any(not _closed(bad, a, b) for a, b in pairs)
    secs = time.perf_counter() - start
    ok = closed == len(pairs) and unit_ok and breaking >= 1 and secs < 30
    record("C5 EM lifting", ok,
           f"{closed}/{len(pairs)} tensor pairs closed, unit {'ok' if unit_ok else 'broken'}; "
           f"{breaking}/{corruptions} Phi corruptions break some pair; {secs:.2f}s")


# -- 6 -------------------------------------------------------------------------------


def test_c6_xi_equivalence():
    checked = rejected = verdict_only = 0
    bad: list[str] = []
    for name in ("identity", "reader", "bz2"):
        doc = _bundle_doc(name)
        variants = [("stock", doc)] + [(m.label(), apply(doc, m)) for m in mutations(doc)]
        for label, d in variants:
            try:
                bundle = load_doc(d)
            except WorkbenchError:
                rejected += 1
                continue
            for res, obj in bundle.resources.items():
                if isinstance(obj, CommutativeGradedMonad):
                    eq = xi_equivalence(obj)
                    checked += 1
                    verdict_only += bool(eq.ingredients)
                    if not eq.equivalent or eq.unmatched():
                        bad.append(f"{label} [{res}] {eq.unmatched()}")
    record("C6 xi equivalence", not bad and checked > 0,
           f"{checked} instances compared ({verdict_only} with an unlawful base category, verdict only), "
           f"{len(bad)} mismatches, {rejected} malformed mutations"
           + (f"; first: {bad[0]}" if bad else ""))


# -- 7 -------------------------------------------------------------------------------


def _same_family(a: MonadMorphismFamily, b: MonadMorphismFamily) -> bool:
    return {u: dict(v) for u, v in a.phibar.items()} == {u: dict(v) for u, v in b.phibar.items()}


def test_c7_theta_round_trip():
    doc = _bundle_doc("pairing")
    fam_n = graded_n = outside = rejected = 0
    bad: list[str] = []
    variants = [("stock", doc)] + [(m.label(), apply(doc, m)) for m in mutations(doc)
                                   if m.resource in ("swap", "reader-identity", "swap-graded")]
    for label, d in variants:
        try:
            bundle = load_doc(d)
        except WorkbenchError:
            rejected += 1
            continue
        for res, obj in bundle.resources.items():
            links = bundle.links.get(res, {})
            if "src" not in links:
                continue
            src, dst = links["src"], links["dst"]
            if isinstance(obj, MonadMorphismFamily):
                try:
                    h = theta_to_graded(obj, src, dst)
                except WorkbenchError:
                    rejected += 1
                    continue
                fam_n += 1
                if check_monad_morphism_family(obj).ok != check_graded_morphism(h).ok:
                    bad.append(f"{label}: verdicts differ on {res}")
                if not _same_family(theta_from_graded(h, src, dst), obj):
                    bad.append(f"{label}: family round trip changed {res}")
            elif label != "stock" or res == "swap-graded":
                try:
                    h_ok = check_graded_morphism(obj).ok
                    fam = theta_from_graded(obj, src, dst)
                except PairingMismatch:
                    # off the image of Theta; such a table can only be unlawful
                    outside += 1
                    if h_ok:
                        bad.append(f"{label}: lawful {res} is not in the image of Theta")
                    continue
                except WorkbenchError:
                    rejected += 1
                    continue
                graded_n += 1
                back = theta_to_graded(fam, src, dst)
                if {u: dict(v) for u, v in back.omega.items()} != {u: dict(v) for u, v in obj.omega.items()}:
                    bad.append(f"{label}: graded round trip changed {res}")
                if h_ok != check_monad_morphism_family(fam).ok:
                    bad.append(f"{label}: verdicts differ on {res}")
    record("C7 Theta round trip", not bad and fam_n > 0 and graded_n > 0,
           f"{fam_n} families and {graded_n} graded morphisms compared ({outside} refused as outside the image, all "
           f"unlawful), {rejected} rejected, {len(bad)} mismatches" + (f"; first: {bad[0]}" if bad else ""))


# -- 8 -------------------------------------------------------------------------------


def test_c8_determinism(monkeypatch):
    diffs = []
    for name in CORPUS:
        path = str(ROOT / "corpus" / f"{name}.json")
        monkeypatch.setenv("GRADCAT_JOBS", "1")
        a = _cli("check", path, "--suite", "all", "--canonical")[1]
        b = _cli("check", path, "--suite", "all", "--canonical")[1]
        monkeypatch.setenv("GRADCAT_JOBS", "4")
        c = _cli("check", path, "--suite", "all", "--canonical")[1]
        if not (a == b == c):
            diffs.append(name)
    record("C8 determinism", not diffs, f"{len(CORPUS)} bundles, sequential x2 and 4 threads byte-identical"
           if not diffs else f"differs on {diffs}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
