"""Monoidal structures, monoidal functors and the builders."""

from dataclasses import replace

import pytest

from gradcat.core import constant_functor, identity_functor
from gradcat.errors import NotASemilattice
from gradcat.monoidal import (
    LAX,
    OPLAX,
    MonoidalFunctor,
    check_monoidal,
    check_monoidal_functor,
    endo_monoidal,
    identity_monoidal_functor,
    orientation_conflict,
    thin_from_semilattice,
)
from gradcat.stock import bz2, chain2, chain3_bz2, diamond, walking_arrow, z2_discrete_bz2


@pytest.mark.parametrize("make", [chain2, diamond, bz2, chain3_bz2, z2_discrete_bz2])
def test_stock_structures_are_monoidal(make):
    m = make()
    assert check_monoidal(m).ok, check_monoidal(m)


def test_meet_and_top():
    d = diamond()
    assert d.unit == "top"
    assert d.ten("a", "b") == "bot"
    assert d.ten("a", "top") == "a"


def test_not_a_semilattice():
    with pytest.raises(NotASemilattice):
        thin_from_semilattice(["x", "y"], [], name="anti")  # no top, no meet


def test_bz2_associator_corruption_breaks_coherence():
    m = bz2()
    assoc = dict(m.assoc)
    assoc[("*", "*", "*")] = "s"
    rep = check_monoidal(replace(m, assoc=assoc, assoc_inv=assoc))
    assert {"pentagon", "triangle"} & set(rep.failed)


def test_identity_monoidal_functor_both_variants():
    for variant in (LAX, OPLAX):
        assert check_monoidal_functor(identity_monoidal_functor(chain2(), variant)).ok


def test_orientation_conflict_detected():
    # the constant-at-0 functor on the 2-chain is oplax (0 -> 0 meet 0, 0 -> 1) but not lax
    z = chain2()
    K = constant_functor(z.base, z.base, "0", "K0")
    phi = {(a, b): "0<=0" for a in z.base.objects for b in z.base.objects}
    oplax = MonoidalFunctor(OPLAX, z, z, K, phi, "0<=1", "K0")
    assert check_monoidal_functor(oplax).ok
    lax = replace(oplax, variant=LAX)
    assert not check_monoidal_functor(lax).ok
    assert orientation_conflict(lax)


def test_endo_monoidal_on_arrow():
    A = walking_arrow()
    m, fmap = endo_monoidal(A, [constant_functor(A, A, "b", "K"), identity_functor(A)])
    assert check_monoidal(m).ok
    assert m.is_strict()
    assert len(fmap) == 2
