"""Presheaves of categories, formal monads, pairings and the translation of morphism families."""

from dataclasses import replace

import pytest

from gradcat.core import constant_functor, terminal_category
from gradcat.errors import NotIdentityCarrier, PairingMismatch, ShapeMismatch
from gradcat.graded import check_graded_morphism
from gradcat.localisable import (
    check_family_transformation,
    check_formal_monad,
    check_monad_morphism_family,
    check_presheaf,
    find_central_idempotents,
    identity_family,
    theta_from_graded,
    theta_to_graded,
    verdict_equivalence,
)
from gradcat.monoidal import LAX, MonoidalStructure
from gradcat.stock import (
    arrow_presheaf,
    chain2,
    closure_formal_monad,
    constant_terminal_presheaf,
    thin_pairing,
    twisted_family,
    twisted_pairings,
    z2_discrete_bz2,
)


@pytest.mark.parametrize("make", [constant_terminal_presheaf, arrow_presheaf])
def test_presheaves(make):
    assert check_presheaf(make()).ok


def test_restriction_must_compose():
    p = arrow_presheaf()
    A = p.at["1"]
    bad = replace(p, restrict={**p.restrict, "1<=1": constant_functor(A, A, "a", "K")})
    assert "presheaf-identity" in check_presheaf(bad).failed


def test_formal_monads():
    assert check_formal_monad(closure_formal_monad()).ok
    tw, pl = twisted_pairings()
    assert check_formal_monad(tw.formal).ok
    assert check_formal_monad(pl.formal).ok


def test_formal_monad_unit_mutation():
    m = closure_formal_monad()
    eta = {u: dict(v) for u, v in m.eta.items()}
    eta["1"]["b"] = "a<=b"
    rep = check_formal_monad(replace(m, eta=eta))
    assert not rep.ok
    assert all("u" in w.binding for w in rep.witnesses if w.law_id != "restrict-eta")


def test_pairings_validate():
    thin_pairing().validate()
    for p in twisted_pairings():
        p.validate()


def test_pairing_mismatch():
    tw, _ = twisted_pairings()
    A = tw.formal.base.at["1"]
    T = {**tw.formal.T, "1": constant_functor(A, A, A.objects[0], "K")}
    with pytest.raises(PairingMismatch, match="F_1"):
        replace(tw, formal=replace(tw.formal, T=T)).validate()


def test_swap_family_and_translation():
    tw, pl = twisted_pairings()
    fam = twisted_family()
    assert check_monad_morphism_family(fam).ok
    h = theta_to_graded(fam, tw, pl)
    assert check_graded_morphism(h).ok
    back = theta_from_graded(h, tw, pl)
    assert {u: dict(c) for u, c in back.phibar.items()} == {u: dict(c) for u, c in fam.phibar.items()}
    assert verdict_equivalence(fam, tw, pl) == (True, True)


def test_identity_family_on_thin_pairing():
    p = thin_pairing()
    fam = identity_family(p.formal)
    assert verdict_equivalence(fam, p, p) == (True, True)


def test_wrong_family_fails_on_both_sides():
    tw, pl = twisted_pairings()
    fam = twisted_family()
    comps = {u: {a: m.replace("(s,", "(e,") for a, m in row.items()} for u, row in fam.phibar.items()}
    assert verdict_equivalence(replace(fam, phibar=comps), tw, pl) == (False, False)


def test_non_identity_carrier_refused():
    tw, pl = twisted_pairings()
    h = theta_to_graded(twisted_family(), tw, pl)
    C = h.Omega.src
    K = constant_functor(C, C, C.objects[0], "K")
    with pytest.raises(NotIdentityCarrier):
        theta_from_graded(replace(h, Omega=K), tw, pl)


def test_lax_morphism_refused():
    tw, pl = twisted_pairings()
    h = theta_to_graded(twisted_family(), tw, pl)
    with pytest.raises(ShapeMismatch):
        theta_from_graded(replace(h, variant=LAX), tw, pl)


def test_family_transformation():
    tw, pl = twisted_pairings()
    fam = twisted_family()
    C = tw.graded.base
    ident = {a: C.identity[a] for a in C.objects}
    assert check_family_transformation(fam, fam, ident, pl).ok


def test_central_idempotents():
    z = chain2()
    assert {c.obj for c in find_central_idempotents(z)} == {"0", "1"}
    found = find_central_idempotents(z2_discrete_bz2())
    assert {c.obj for c in found} == {"(e,*)"}
    one = terminal_category("1")
    ident = MonoidalStructure.build(one, lambda a, b: "*", lambda f, g: "id_*", "*", name="1")
    assert [c.obj for c in find_central_idempotents(ident)] == ["*"]


def test_off_image_table_refused():
    tw, pl = twisted_pairings()
    h = theta_to_graded(twisted_family(), tw, pl)
    C = h.src.base
    u, row = next((u, row) for u, row in h.omega.items()
                  if any(x not in {tw.embed[u].obj(b) for b in tw.formal.base.at[u].objects} for x in row))
    x = next(x for x in row if x not in {tw.embed[u].obj(b) for b in tw.formal.base.at[u].objects})
    other = next(m for m in C.hom(x, x) if m != row[x]) if len(C.hom(x, x)) > 1 else None
    if other is None:
        pytest.skip("no alternative component at a non-embedded object")
    omega = {v: dict(r) for v, r in h.omega.items()}
    omega[u][x] = other
    bad = replace(h, omega=omega)
    assert not check_graded_morphism(bad).ok
    with pytest.raises(PairingMismatch, match="factor"):
        theta_from_graded(bad, tw, pl)
