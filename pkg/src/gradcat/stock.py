"""Small named instances used by the tests, the acceptance suite and the CLI corpus.

Thin instances have every component forced by its boundary; the Z/2
instances are the non-thin ones, where a component can be swapped for a
parallel but different morphism.
"""

from __future__ import annotations

from itertools import product

from .core import FinCategory, Functor, constant_functor, identity_functor, terminal_category
from .graded import CommutativeGradedMonad, GradedMonad, GradedMorphism, from_plain_monad
from .monoidal import (
    LAX,
    OPLAX,
    MonoidalStructure,
    commutative_monoid_monoidal,
    discrete_monoidal,
    product_monoidal,
    thin_category,
    thin_from_semilattice,
)


def z2_mult(a: str, b: str) -> str:
    return "e" if a == b else "s"


def walking_arrow() -> FinCategory:
    return thin_category("A", ["a", "b"], [("a", "b")])


def chain2(name: str = "Z") -> MonoidalStructure:
    return thin_from_semilattice(["0", "1"], [("0", "1")], name=name)


def chain3(name: str = "C3") -> MonoidalStructure:
    return thin_from_semilattice(["0", "1", "2"], [("0", "1"), ("1", "2")], name=name)


def diamond(name: str = "D") -> MonoidalStructure:
    return thin_from_semilattice(["bot", "a", "b", "top"],
                                 [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")], name=name)


def bz2() -> MonoidalStructure:
    """One object, morphisms the group Z/2 = {e, s}; tensor multiplies."""
    return commutative_monoid_monoidal("BZ2", ["e", "s"], z2_mult, "e")


def chain3_bz2() -> MonoidalStructure:
    """A 3-object non-thin monoidal category: the 3-chain times BZ2."""
    return product_monoidal(chain3(), bz2(), "C3xBZ2")


def z2_discrete_bz2() -> MonoidalStructure:
    """Objects e, s (discrete Z/2) with a BZ2 of automorphisms on each; s has no map to the unit."""
    return product_monoidal(discrete_monoidal("dZ2", ["e", "s"], z2_mult, "e"), bz2(), "dZ2xBZ2")


def unique(C: FinCategory, a: str, b: str) -> str:
    hom = C.hom(a, b)
    if len(hom) != 1:
        raise ValueError(f"expected a unique morphism {a} -> {b} in {C.name}, found {hom}")
    return hom[0]


def labelled(C: FinCategory, a: str, b: str, label: str) -> str:
    """The morphism ``(label, unique)`` in a product with BZ2 on the left."""
    hom = [m for m in C.hom(a, b) if m.startswith(f"({label},")]
    if len(hom) != 1:
        raise ValueError(f"no morphism labelled {label} from {a} to {b}")
    return hom[0]


def forced_graded_monad(grading: MonoidalStructure, base: FinCategory, F_obj: dict,
                        name: str, pick=unique) -> GradedMonad:
    """Fill every component of a graded monad by ``pick(base, dom, cod)``."""
    M, C = grading.base, base
    F = F_obj
    F_mor = {f: {a: pick(C, F[x].obj(a), F[y].obj(a)) for a in C.objects}
             for f, (x, y) in M.morphisms.items()}
    gamma = {(x, y): {a: pick(C, F[x].obj(F[y].obj(a)), F[grading.ten(x, y)].obj(a)) for a in C.objects}
             for x, y in product(M.objects, repeat=2)}
    delta = {a: pick(C, a, F[grading.unit].obj(a)) for a in C.objects}
    return GradedMonad(grading, C, F, F_mor, gamma, delta, name)


def meet_functor(m: MonoidalStructure, u: str, name: str | None = None) -> Functor:
    """``u (x) -`` on a monoidal category (``u`` meet ``-`` when thin)."""
    C = m.base
    iu = C.identity[u]
    return Functor(C, C, {a: m.ten(u, a) for a in C.objects}, {f: m.tenm(iu, f) for f in C.morphisms},
                   name or f"{u}(x)-")


# -- graded monads --------------------------------------------------------------


def identity_monad_1graded() -> GradedMonad:
    """Identity monad on the terminal category, graded by the terminal monoidal category."""
    one = terminal_category("C")
    ident = {"*": "id_*"}
    return from_plain_monad(one, identity_functor(one), ident, ident, "Id1")


def truncation() -> GradedMonad:
    """2-chain-graded monad on the walking arrow a -> b: T_1 = Id, T_0 = const_a."""
    C = walking_arrow()
    F = {"1": identity_functor(C), "0": constant_functor(C, C, "a", "T0")}
    return forced_graded_monad(chain2(), C, F, "truncation")


def reader_base() -> MonoidalStructure:
    return thin_from_semilattice(["0", "1"], [("0", "1")], name="C")


def thin_reader() -> CommutativeGradedMonad:
    """Oplax commutative 2-chain-graded reader ``T_u = u meet -`` on the 2-chain."""
    base = reader_base()
    C = base.base
    Z = chain2()
    F = {u: meet_functor(base, u, f"T{u}") for u in Z.base.objects}
    g = forced_graded_monad(Z, C, F, "reader")
    phi = {u: {(a, b): unique(C, F[u].obj(base.ten(a, b)), base.ten(F[u].obj(a), F[u].obj(b)))
               for a, b in product(C.objects, repeat=2)} for u in F}
    phibar = {u: unique(C, F[u].obj(base.unit), base.unit) for u in F}
    return CommutativeGradedMonad(g, OPLAX, base, phi, phibar)


def identity_commutative_1graded() -> CommutativeGradedMonad:
    """1-graded identity monad on the terminal category with trivial oplax structure."""
    g = identity_monad_1graded()
    C = g.base
    base = MonoidalStructure.build(C, lambda a, b: "*", lambda f, h: "id_*", "*", name="C")
    return CommutativeGradedMonad(g, OPLAX, base, {"*": {("*", "*"): "id_*"}}, {"*": "id_*"})


def twisted_bz2_monad() -> GradedMonad:
    """Non-thin 1-graded monad on BZ2: T = Id, mu = eta = s."""
    C = bz2().base
    return from_plain_monad(C, identity_functor(C), {"*": "s"}, {"*": "s"}, "twisted")


def bz2_commutative(mu: str = "s", eta: str = "s", phi: str = "s", phibar: str = "s") -> CommutativeGradedMonad:
    """Non-thin oplax commutative 1-graded monad on BZ2 (defaults pass the checker)."""
    base = bz2()
    C = base.base
    g = from_plain_monad(C, identity_functor(C), {"*": mu}, {"*": eta}, "bz2comm")
    return CommutativeGradedMonad(g, OPLAX, base, {"*": {("*", "*"): phi}}, {"*": phibar})


def pair_base() -> MonoidalStructure:
    """BZ2 x 2-chain: the non-thin base for the localisable pairing."""
    return product_monoidal(bz2(), reader_base(), "BZ2xC")


def twisted_localised(label_mult: str, name: str) -> GradedMonad:
    """2-chain-graded monad ``T_u = (*,u) (x) -`` on BZ2 x 2-chain with mu, eta labelled by ``label_mult``."""
    base = pair_base()
    C = base.base
    Z = chain2()
    F = {u: meet_functor(base, f"(*,{u})", f"{name}{u}") for u in Z.base.objects}
    g = forced_graded_monad(Z, C, F, name, pick=lambda C_, a, b: labelled(C_, a, b, "e"))
    gamma = {k: {a: labelled(C, C.dom(m), C.cod(m), label_mult) for a, m in row.items()}
             for k, row in g.gamma.items()}
    delta = {a: labelled(C, C.dom(m), C.cod(m), label_mult) for a, m in g.delta.items()}
    return GradedMonad(Z, C, F, g.F_mor, gamma, delta, name)


def truncation_identity_morphism(variant: str = LAX) -> GradedMorphism:
    from .graded import identity_graded_morphism
    return identity_graded_morphism(truncation(), variant)


# -- presheaves, formal monads and pairings ------------------------------------------------


def constant_terminal_presheaf():
    from .localisable import PresheafOfCategories
    Z = chain2()
    one = terminal_category("1")
    return PresheafOfCategories(Z, {u: one for u in Z.base.objects},
                                {r: identity_functor(one) for r in Z.base.morphisms}, "const1")


def arrow_presheaf():
    """at(1) = walking arrow, at(0) = terminal, restriction the unique functor."""
    from .localisable import PresheafOfCategories
    Z = chain2()
    A, one = walking_arrow(), terminal_category("1")
    return PresheafOfCategories(Z, {"1": A, "0": one},
                                {"1<=1": identity_functor(A), "0<=0": identity_functor(one),
                                 "0<=1": constant_functor(A, one, "*", "!")}, "arrow")


def closure_formal_monad():
    """The closure monad ``const_b`` on the walking arrow at 1, identity at 0."""
    from .localisable import FormalMonad
    p = arrow_presheaf()
    A, one = p.at["1"], p.at["0"]
    T = {"1": constant_functor(A, A, "b", "K"), "0": identity_functor(one)}
    mu = {"1": {"a": "b<=b", "b": "b<=b"}, "0": {"*": "id_*"}}
    eta = {"1": {"a": "a<=b", "b": "b<=b"}, "0": {"*": "id_*"}}
    return FormalMonad(p, T, mu, eta, "closure")


def _localising(base: MonoidalStructure, bottom_obj: str, name: str):
    """Presheaf ``at(1) = C``, ``at(0) =`` full subcategory on ``bottom_obj``, restricting by ``bottom_obj (x) -``."""
    from .core import full_subcategory, inclusion_functor
    from .localisable import PresheafOfCategories
    Z = chain2()
    C = base.base
    sub = full_subcategory(C, [bottom_obj], f"{C.name}|0")
    squash = meet_functor(base, bottom_obj)
    R = Functor(C, sub, dict(squash.obj_map), dict(squash.mor_map), "R")
    p = PresheafOfCategories(Z, {"1": C, "0": sub},
                             {"1<=1": identity_functor(C), "0<=0": identity_functor(sub), "0<=1": R}, name)
    localise = {"1": identity_functor(C), "0": R}
    embed = {"1": identity_functor(C), "0": inclusion_functor(sub, C, "incl")}
    return p, localise, embed


def thin_pairing():
    """Componentwise identity formal monads paired with the thin reader."""
    from .localisable import Pairing, identity_formal_monad
    base = reader_base()
    p, loc, emb = _localising(base, "0", "reader-presheaf")
    return Pairing(identity_formal_monad(p, "Id"), thin_reader().underlying, loc, emb, "reader-pairing")


def twisted_pairings():
    """Non-thin pairings on BZ2 x 2-chain: ``(twisted, plain)``.

    Both formal monads are the identity functor at every element; the twisted
    one has ``mu = eta = (s, id)``.
    """
    from .localisable import FormalMonad, Pairing, identity_formal_monad
    base = pair_base()
    p, loc, emb = _localising(base, "(*,0)", "twist-presheaf")
    plain = identity_formal_monad(p, "plain")
    twist = {u: {a: labelled(p.at[u], a, a, "s") for a in p.at[u].objects} for u in p.at}
    twisted = FormalMonad(p, plain.T, twist, twist, "twisted")
    return (Pairing(twisted, twisted_localised("s", "tw"), loc, emb, "twisted-pairing"),
            Pairing(plain, twisted_localised("e", "pl"), loc, emb, "plain-pairing"))


def twisted_family():
    """``phibar_u = (s, id)`` from the twisted formal monad to the plain one."""
    from .localisable import MonadMorphismFamily
    tw, pl = twisted_pairings()
    P = tw.formal.base
    comps = {u: {a: labelled(P.at[u], a, a, "s") for a in P.at[u].objects} for u in P.at}
    return MonadMorphismFamily(tw.formal, pl.formal, comps, "swap")
