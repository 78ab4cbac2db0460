"""Graded monads, their commutative refinement, and morphisms between them."""

from dataclasses import replace

import pytest

from gradcat.core import constant_functor, identity_functor
from gradcat.errors import VariantMismatch
from gradcat.graded import (
    GradedMorphism,
    check_commutative,
    check_graded_monad,
    check_graded_morphism,
    compose_graded_morphisms,
    identity_graded_morphism,
    pair_graded_morphism,
    product_graded_monad,
    product_graded_morphism,
    strict_graded_morphism,
    terminal_graded_monad,
)
from gradcat.monoidal import LAX, OPLAX
from gradcat import stock


@pytest.mark.parametrize("make", [stock.identity_monad_1graded, stock.truncation, stock.twisted_bz2_monad,
                                  lambda: stock.thin_reader().underlying,
                                  lambda: stock.twisted_localised("s", "tw")])
def test_stock_graded_monads(make):
    rep = check_graded_monad(make())
    assert rep.ok, rep


@pytest.mark.parametrize("make", [stock.thin_reader, stock.identity_commutative_1graded, stock.bz2_commutative])
def test_stock_commutative(make):
    assert check_commutative(make()).ok


def test_bz2_commutative_brute_force():
    # exactly the all-e and all-s choices of (mu, eta, phi, phibar) are lawful
    lawful = set()
    for mu in "es":
        for eta in "es":
            for phi in "es":
                for phibar in "es":
                    if check_commutative(stock.bz2_commutative(mu, eta, phi, phibar)).ok:
                        lawful.add(mu + eta + phi + phibar)
    assert lawful == {"eeee", "ssss"}


def test_reader_declared_lax_is_a_variant_mismatch():
    t = stock.thin_reader()
    with pytest.raises(VariantMismatch):
        check_commutative(replace(t, variant=LAX))


def test_truncation_gamma_mutation():
    t = stock.truncation()
    gamma = {k: dict(v) for k, v in t.gamma.items()}
    gamma[("1", "1")]["a"] = "a<=b"  # F_1 F_1 a = a, F_1 a = a: should be a<=a
    rep = check_graded_monad(replace(t, gamma=gamma))
    assert "gamma-typing" in rep.failed
    assert all(w.binding for w in rep.laws["gamma-typing"])


def test_truncation_reading():
    t = stock.truncation()
    assert t.F("0").obj("b") == "a"
    assert t.F("1").obj("b") == "b"
    assert t.gamma[("0", "1")]["b"] == "a<=a"


def test_identity_and_composite_morphisms():
    t = stock.truncation()
    for variant in (LAX, OPLAX):
        h = identity_graded_morphism(t, variant)
        assert check_graded_morphism(h).ok
        assert check_graded_morphism(compose_graded_morphisms(h, h)).ok


def test_mixed_variants_do_not_compose():
    t = stock.truncation()
    with pytest.raises(VariantMismatch):
        compose_graded_morphisms(identity_graded_morphism(t, LAX), identity_graded_morphism(t, OPLAX))


def test_products_and_pairing():
    t = stock.truncation()
    p = product_graded_monad(t, t)
    assert check_graded_monad(p).ok
    h = identity_graded_morphism(t)
    assert check_graded_morphism(product_graded_morphism(h, h, p, p)).ok
    assert check_graded_morphism(pair_graded_morphism(h, h, p)).ok


def test_unique_morphism_to_terminal():
    t = stock.truncation()
    one = terminal_graded_monad(t.grading)
    assert check_graded_monad(one).ok
    bang = strict_graded_morphism(t, one, constant_functor(t.base, one.base, "*"), LAX, "!")
    assert check_graded_morphism(bang).ok


def test_wrong_omega_component_fails():
    t = stock.twisted_bz2_monad()
    h = identity_graded_morphism(t, LAX)
    bad = GradedMorphism(LAX, t, t, identity_functor(t.base), {x: {"*": "s"} for x in h.omega}, "bad")
    rep = check_graded_morphism(bad)
    assert not rep.ok
