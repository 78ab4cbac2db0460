"""Kleisli categories, graded algebras and the regrouping of commutative structure."""

from dataclasses import replace

import pytest

from gradcat.constructions import (
    XI_DICTIONARY,
    AlgebraMorphism,
    build_kleisli,
    check_algebra_morphism,
    check_graded_algebra,
    check_regrouped,
    enumerate_graded_algebras,
    free_algebra,
    kleisli_id,
    split_kleisli_id,
    tensor_algebras,
    trace_kleisli,
    unit_algebra,
    xi_counterparts,
    xi_equivalence,
    xi_reassociate,
)
from gradcat.core import check_category
from gradcat.errors import NonStrictGrading, SearchBound, VariantMismatch
from gradcat.monoidal import LAX
from gradcat import stock


@pytest.mark.parametrize("make,size", [
    (stock.identity_monad_1graded, 1),
    (stock.truncation, 5),
    (stock.twisted_bz2_monad, 2),
    (lambda: stock.twisted_localised("s", "tw"), 10),
])
def test_kleisli_of_stock(make, size):
    kl = build_kleisli(make()).category
    assert len(kl.morphisms) == size
    assert check_category(kl).ok


def test_kleisli_ids_round_trip():
    assert split_kleisli_id(kleisli_id("0", "a<=b", "b")) == ("0", "a<=b", "b")


def test_kleisli_identity_is_unit():
    t = stock.truncation()
    kl = build_kleisli(t).category
    assert kl.identity["a"] == kleisli_id("1", "a<=a", "a")


def test_non_strict_grading_refused():
    t = stock.truncation()
    g = t.grading
    lunit = dict(g.lunit)
    lunit["0"] = "0<=1"  # no longer the identity, so the grading is not strict
    with pytest.raises(NonStrictGrading):
        build_kleisli(replace(t, grading=replace(g, lunit=lunit)))


def test_broken_unit_is_traced():
    t = stock.twisted_bz2_monad()
    bad = replace(t, delta={"*": "e"})  # mu = s with eta = e breaks both unit laws
    tr = trace_kleisli(bad)
    assert tr["category"] is not None and not tr["category"].ok
    assert tr["traced"]["identity-law"]


@pytest.mark.parametrize("make,count", [
    (stock.identity_monad_1graded, 1),
    (stock.truncation, 3),
    (stock.twisted_bz2_monad, 1),
    (lambda: stock.twisted_localised("s", "tw"), 6),
    (lambda: stock.thin_reader().underlying, 3),
])
def test_algebra_enumeration(make, count):
    t = make()
    algs = enumerate_graded_algebras(t)
    assert len(algs) == count
    for a in algs:
        assert check_graded_algebra(a, t).ok


def test_enumeration_bound():
    with pytest.raises(SearchBound):
        enumerate_graded_algebras(stock.truncation(), bound=1)


def test_free_algebras():
    t = stock.truncation()
    for b0 in t.base.objects:
        assert check_graded_algebra(free_algebra(t, b0), t).ok


def test_identity_algebra_morphism():
    t = stock.truncation()
    a = free_algebra(t, "b")
    ident = {n: t.base.identity[a.carrier.obj(n)] for n in t.grading.base.objects}
    assert check_algebra_morphism(AlgebraMorphism(a, a, ident), t).ok


def test_tensor_and_unit_on_reader():
    t = stock.thin_reader()
    algs = enumerate_graded_algebras(t.underlying)
    for a in algs:
        for b in algs:
            assert check_graded_algebra(tensor_algebras(t, a, b), t.underlying).ok
    assert check_graded_algebra(unit_algebra(t), t.underlying).ok


def test_tensor_needs_oplax():
    t = replace(stock.bz2_commutative(), variant=LAX)
    with pytest.raises(VariantMismatch):
        unit_algebra(t)


@pytest.mark.parametrize("make", [stock.thin_reader, stock.identity_commutative_1graded, stock.bz2_commutative])
def test_regrouped_stock_passes(make):
    t = make()
    assert check_regrouped(xi_reassociate(t)).ok
    eq = xi_equivalence(t)
    assert eq.equivalent and not eq.unmatched()


def test_regrouped_detects_phi_corruption():
    t = stock.bz2_commutative()
    bad = replace(t, phi={x: {k: "e" for k in row} for x, row in t.phi.items()})
    eq = xi_equivalence(bad)
    assert not eq.commutative.ok and not eq.regrouped.ok
    assert not eq.unmatched()


def test_dictionary_covers_patterns():
    assert xi_counterparts("monad/associativity") == ("graded/associativity",)
    assert "per-grade/phi-typing" in xi_counterparts("tensor/omega-typing")
    with pytest.raises(KeyError):
        xi_counterparts("nonsense")
    assert all(isinstance(v, tuple) for _, v in XI_DICTIONARY)
