"""Property tests over generated instances."""

import random
from dataclasses import replace

from hypothesis import HealthCheck, given, settings, strategies as st

from gradcat.constructions import build_kleisli, xi_equivalence
from gradcat.core import check_category, product_category
from gradcat.corpus import CORPUS
from gradcat.graded import check_graded_monad, from_plain_monad
from gradcat.localisable import MonadMorphismFamily, theta_from_graded, theta_to_graded
from gradcat.monoidal import check_monoidal, thin_category, thin_from_semilattice
from gradcat.mutation import assess, mutations
from gradcat.runner import run_suite
from gradcat.serialize import Bundle, dump_doc, dump_text, load_text
from gradcat import stock
from oracles import plain_monad_ok, random_plain, small_categories

seeds = st.integers(min_value=0, max_value=2**32 - 1)
fast = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@fast
@given(seeds)
def test_graded_check_agrees_with_oracle(seed):
    c = random_plain(random.Random(seed))
    assert check_graded_monad(from_plain_monad(c.base, c.T, c.mu, c.eta)).ok == c.oracle()


@fast
@given(seeds)
def test_lawful_monads_have_kleisli_categories(seed):
    c = random_plain(random.Random(seed))
    if c.oracle():
        assert check_category(build_kleisli(from_plain_monad(c.base, c.T, c.mu, c.eta)).category).ok


@fast
@given(seeds)
def test_plain_monad_bundles_round_trip(seed):
    c = random_plain(random.Random(seed))
    text = dump_text(Bundle().add("T", from_plain_monad(c.base, c.T, c.mu, c.eta)))
    assert dump_text(load_text(text)) == text


@fast
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_preorders_are_categories(arg):
    n, rel = arg
    names = [f"p{i}" for i in range(n)]
    C = thin_category("P", names, [(names[a], names[b]) for a, b in rel])
    assert C.is_thin and check_category(C).ok


@fast
@given(st.integers(1, 3))
def test_boolean_lattices_are_monoidal(k):
    # subsets of a k-set under inclusion; meet is intersection, top the full set
    elems = [frozenset(i for i in range(k) if m >> i & 1) for m in range(2 ** k)]
    name = {e: "s" + "".join(map(str, sorted(e))) for e in elems}
    leq = [(name[a], name[b]) for a in elems for b in elems if a <= b]
    m = thin_from_semilattice([name[e] for e in elems], leq, name="B")
    assert check_monoidal(m).ok


@fast
@given(st.sampled_from(small_categories()), st.sampled_from(small_categories()))
def test_products_are_categories(a, b):
    if len(a.objects) * len(b.objects) <= 9:
        assert check_category(product_category(a, b)).ok


_DOCS = {name: dump_doc(CORPUS[name]()) for name in ("truncation", "reader", "bz2")}
_MUTS = {name: mutations(doc) for name, doc in _DOCS.items()}


@fast
@given(st.sampled_from(sorted(_DOCS)), st.data())
def test_no_silent_mutation(name, data):
    m = data.draw(st.sampled_from(_MUTS[name]))
    assert assess(_DOCS[name], m).status in ("rejected", "detected")


@fast
@given(st.data())
def test_xi_verdicts_agree_under_phi_corruption(data):
    t = stock.bz2_commutative()
    phi = {x: {k: data.draw(st.sampled_from("es")) for k in row} for x, row in t.phi.items()}
    phibar = {x: data.draw(st.sampled_from("es")) for x in t.phibar}
    eq = xi_equivalence(replace(t, phi=phi, phibar=phibar))
    assert eq.equivalent and not eq.unmatched()


@fast
@given(st.data())
def test_theta_family_round_trip(data):
    tw, pl = stock.twisted_pairings()
    fam = stock.twisted_family()
    P = fam.src.base
    comps = {u: {a: data.draw(st.sampled_from(P.at[u].hom(a, a))) for a in P.at[u].objects} for u in P.at}
    fam = MonadMorphismFamily(fam.src, fam.dst, comps, "f")
    back = theta_from_graded(theta_to_graded(fam, tw, pl), tw, pl)
    assert {u: dict(c) for u, c in back.phibar.items()} == comps


@settings(max_examples=5, deadline=None)
@given(st.sampled_from(sorted(CORPUS)))
def test_reports_are_deterministic(name):
    text = dump_text(CORPUS[name]())
    assert run_suite(load_text(text), "all") == run_suite(load_text(text), "all")


def test_oracle_spots_known_monads():
    A = stock.walking_arrow()
    Tobj, Tmor = {"a": "b", "b": "b"}, {f: "b<=b" for f in A.morphisms}
    assert plain_monad_ok(A, Tobj, Tmor, {"a": "b<=b", "b": "b<=b"}, {"a": "a<=b", "b": "b<=b"})
    assert not plain_monad_ok(A, Tobj, Tmor, {"a": "b<=b", "b": "b<=b"}, {"a": "a<=a", "b": "b<=b"})
