"""Graded monads over Cat, commutative graded monads, and their morphisms and transformations.

All natural transformations are stored as plain component tables keyed by
base objects; the law sets below evaluate every coherence diagram
pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .core import (
    FinCategory,
    Functor,
    compose_functors,
    component_laws,
    functor_laws,
    identity_functor,
    pairing_functor,
    product_category,
    product_functor,
    terminal_category,
)
from .errors import IllTyped, MalformedInput, ShapeMismatch, VariantMismatch
from .laws import Law, Leg, Report, family, prefixed, run, typing_leg
from .monoidal import (
    LAX,
    OPLAX,
    MonoidalFunctor,
    MonoidalStructure,
    MonoidalTransformation,
    identity_monoidal_functor,
    monoidal_functor_laws,
    monoidal_laws,
    monoidal_transformation_laws,
    orientation_conflict,
)

Components = Mapping[str, str]


def terminal_monoidal() -> MonoidalStructure:
    one = terminal_category("1")
    return MonoidalStructure.build(one, lambda a, b: "*", lambda f, g: "id_*", "*", name="1")


@dataclass(frozen=True, eq=False)
class GradedMonad:
    grading: MonoidalStructure
    base: FinCategory
    F_obj: Mapping[str, Functor]
    F_mor: Mapping[str, Components]
    gamma: Mapping[tuple[str, str], Components]
    delta: Components
    name: str = "T"

    def F(self, x: str) -> Functor:
        return self.F_obj[x]

    def validate(self) -> None:
        self.grading.validate()
        self.base.validate()
        M, C = self.grading.base, self.base
        objs = set(C.objects)
        if set(self.F_obj) != set(M.objects):
            raise ShapeMismatch(f"{self.name}: F_obj must cover exactly the grading objects")
        for x, f in self.F_obj.items():
            if f.src != C or f.dst != C:
                raise ShapeMismatch(f"{self.name}: F_{x} is not an endofunctor of {C.name}")
            f.validate()

        def comps(table, label):
            if set(table) != objs:
                raise MalformedInput(f"{self.name}: {label} must have one component per base object")
            for a, m in table.items():
                if m not in C.morphisms:
                    raise MalformedInput(f"{self.name}: {label} component at {a} is dangling")

        if set(self.F_mor) != set(M.morphisms):
            raise MalformedInput(f"{self.name}: F_mor must cover exactly the grading morphisms")
        for f, t in self.F_mor.items():
            comps(t, f"F({f})")
        if set(self.gamma) != set(product(M.objects, repeat=2)):
            raise ShapeMismatch(f"{self.name}: gamma must have an entry for every grade pair")
        for xy, t in self.gamma.items():
            comps(t, f"gamma{xy}")
        comps(self.delta, "delta")


def graded_monad_laws(t: GradedMonad) -> list[Law]:
    M, C, m = t.grading.base, t.base, t.grading
    F = t.F_obj
    Fm = t.F_mor
    gamma, delta = t.gamma, t.delta
    Mobj, Cobj = M.objects, C.objects
    ten = m.ten

    laws = family("X", Mobj, lambda x: prefixed("endofunctor", functor_laws(F[x])))

    def fmor_laws(f: str) -> list[Law]:
        x, y = M.morphisms[f]
        return component_laws(C, Cobj, Fm[f].__getitem__, F[x].obj, F[y].obj, F[x].mor, F[y].mor,
                              C.morphisms, C.dom, C.cod, f"F({f})", "F-mor")

    laws += family("m", list(M.morphisms), fmor_laws)

    def f_identity(b):
        x, a = b["X"], b["A"]
        return Leg((f"F(id_{x})_{a}",), Fm[M.identity[x]][a]), Leg(("id",), C.identity[F[x].obj(a)])

    def f_composition(b):
        g, f, a = b["g"], b["f"], b["A"]
        return (Leg((f"F(g.f)_{a}",), Fm[M.compose(g, f)][a]),
                C.chain((f"F(f)_{a}", Fm[f][a]), (f"F(g)_{a}", Fm[g][a])))

    def gamma_typing(b):
        x, y, a = b["X"], b["Y"], b["A"]
        return typing_leg(C, gamma[(x, y)][a], F[x].obj(F[y].obj(a)), F[ten(x, y)].obj(a))

    def gamma_natural(b):
        x, y, h = b["X"], b["Y"], b["h"]
        g = gamma[(x, y)]
        return (C.chain(("gamma", g[C.dom(h)]), ("F_XY(h)", F[ten(x, y)].mor(h))),
                C.chain(("F_X F_Y(h)", F[x].mor(F[y].mor(h))), ("gamma", g[C.cod(h)])))

    def gamma_grade(b):
        f, g, a = b["f"], b["g"], b["A"]
        x, x2 = M.morphisms[f]
        y, y2 = M.morphisms[g]
        lhs = C.chain(("F_X(Fg_A)", F[x].mor(Fm[g][a])), ("Ff_{F_Y' A}", Fm[f][F[y2].obj(a)]),
                      ("gamma_{X',Y'}", gamma[(x2, y2)][a]))
        rhs = C.chain(("gamma_{X,Y}", gamma[(x, y)][a]), ("F(f(x)g)", Fm[m.tenm(f, g)][a]))
        return lhs, rhs

    def associativity(b):
        x, y, z, a = b["X"], b["Y"], b["Z"], b["A"]
        xy, yz = ten(x, y), ten(y, z)
        lhs = C.chain(("gamma_{X,Y} F_Z", gamma[(x, y)][F[z].obj(a)]),
                      ("gamma_{X(x)Y,Z}", gamma[(xy, z)][a]))
        rhs = C.chain(("F_X gamma_{Y,Z}", F[x].mor(gamma[(y, z)][a])),
                      ("gamma_{X,Y(x)Z}", gamma[(x, yz)][a]),
                      ("F(alpha)", Fm[m.assoc[(x, y, z)]][a]))
        return lhs, rhs

    I = m.unit

    def unit_right(b):
        x, a = b["X"], b["A"]
        lhs = C.chain(("F_X delta", F[x].mor(delta[a])), ("gamma_{X,I}", gamma[(x, I)][a]),
                      ("F(rho)", Fm[m.runit[x]][a]))
        return lhs, Leg(("id",), C.identity[F[x].obj(a)])

    def unit_left(b):
        x, a = b["X"], b["A"]
        lhs = C.chain(("delta F_X", delta[F[x].obj(a)]), ("gamma_{I,X}", gamma[(I, x)][a]),
                      ("F(lambda)", Fm[m.lunit[x]][a]))
        return lhs, Leg(("id",), C.identity[F[x].obj(a)])

    laws += [
        Law("F-identity", lambda: ({"X": x, "A": a} for x in Mobj for a in Cobj), f_identity),
        Law("F-composition", lambda: ({"g": g, "f": f, "A": a} for g, f in M.composable_pairs() for a in Cobj),
            f_composition),
        Law("gamma-typing", lambda: ({"X": x, "Y": y, "A": a} for x, y in product(Mobj, repeat=2) for a in Cobj),
            gamma_typing),
        Law("gamma-natural", lambda: ({"X": x, "Y": y, "h": h} for x, y in product(Mobj, repeat=2)
                                      for h in C.morphisms), gamma_natural),
        Law("gamma-natural-grade", lambda: ({"f": f, "g": g, "A": a}
                                            for f, g in product(M.morphisms, repeat=2) for a in Cobj), gamma_grade),
    ]
    I_F = F[I]
    laws += component_laws(C, Cobj, delta.__getitem__, lambda a: a, I_F.obj, lambda h: h, I_F.mor,
                           C.morphisms, C.dom, C.cod, "delta", "delta")
    laws += [
        Law("associativity", lambda: ({"X": x, "Y": y, "Z": z, "A": a}
                                      for x, y, z in product(Mobj, repeat=3) for a in Cobj), associativity),
        Law("unit-right", lambda: ({"X": x, "A": a} for x in Mobj for a in Cobj), unit_right),
        Law("unit-left", lambda: ({"X": x, "A": a} for x in Mobj for a in Cobj), unit_left),
    ]
    return laws


def check_graded_monad(t: GradedMonad) -> Report:
    t.validate()
    return run(graded_monad_laws(t), t.name)


def from_plain_monad(base: FinCategory, T: Functor, mu: Components, eta: Components,
                     name: str = "T") -> GradedMonad:
    """The monad ``(T, mu, eta)`` as a graded monad over the terminal grading."""
    one = terminal_monoidal()
    return GradedMonad(one, base, {"*": T}, {"id_*": {a: base.identity[T.obj(a)] for a in base.objects}},
                       {("*", "*"): dict(mu)}, dict(eta), name)


# -- commutative graded monads ------------------------------------------------


@dataclass(frozen=True, eq=False)
class CommutativeGradedMonad:
    underlying: GradedMonad
    variant: str
    base_monoidal: MonoidalStructure
    phi: Mapping[str, Mapping[tuple[str, str], str]]
    phibar: Mapping[str, str]

    @property
    def name(self) -> str:
        return self.underlying.name

    def per_grade(self, x: str) -> MonoidalFunctor:
        bm = self.base_monoidal
        return MonoidalFunctor(self.variant, bm, bm, self.underlying.F(x), self.phi[x], self.phibar[x], f"F_{x}")

    def validate(self) -> None:
        if self.variant not in (LAX, OPLAX):
            raise MalformedInput(f"unknown variant {self.variant!r}")
        self.underlying.validate()
        self.base_monoidal.validate()
        if self.base_monoidal.base != self.underlying.base:
            raise ShapeMismatch("base monoidal structure is not on the graded monad's base")
        grades = self.underlying.grading.base.objects
        if set(self.phi) != set(grades) or set(self.phibar) != set(grades):
            raise MalformedInput("phi/phibar must have one entry per grade")
        for x in grades:
            mf = self.per_grade(x)
            mf.validate()
            if orientation_conflict(mf):
                raise VariantMismatch(
                    f"grade {x}: structure maps are oriented opposite to the declared {self.variant} variant")


def composite_structure(t: CommutativeGradedMonad, x: str, y: str) -> MonoidalFunctor:
    """Monoidal structure on ``F_X F_Y`` obtained by pasting the per-grade structures."""
    bm = t.base_monoidal
    C = bm.base
    fx, fy = t.per_grade(x), t.per_grade(y)
    FX, FY = fx.F, fy.F
    phi = {}
    for a, b in product(C.objects, repeat=2):
        outer = fx.phi[(FY.obj(a), FY.obj(b))]
        inner = FX.mor(fy.phi[(a, b)])
        phi[(a, b)] = C.compose(inner, outer) if t.variant == LAX else C.compose(outer, inner)
    if t.variant == LAX:
        phibar = C.compose(FX.mor(fy.phibar), fx.phibar)
    else:
        phibar = C.compose(fx.phibar, FX.mor(fy.phibar))
    return MonoidalFunctor(t.variant, bm, bm, compose_functors(FX, FY), phi, phibar, f"F_{x}F_{y}")


def commutative_laws(t: CommutativeGradedMonad) -> list[Law]:
    g = t.underlying
    M = g.grading.base
    laws = prefixed("graded", graded_monad_laws(g))
    laws += prefixed("base", monoidal_laws(t.base_monoidal))
    laws += family("X", M.objects, lambda x: prefixed("per-grade", monoidal_functor_laws(t.per_grade(x))))

    def grade_mor(f):
        x, y = M.morphisms[f]
        tr = MonoidalTransformation(t.per_grade(x), t.per_grade(y), g.F_mor[f], f"F({f})")
        return prefixed("grade-morphism", monoidal_transformation_laws(tr))

    laws += family("m", list(M.morphisms), grade_mor)

    def mult(x, y):
        try:
            src = composite_structure(t, x, y)
        except IllTyped:  # pasting itself is ill-typed; surface it as a failing law
            return [Law("multiplication/composite-structure", lambda: iter([{}]),
                        lambda b: (Leg(("<composite>",), "<ill-typed>"), Leg(("<composite>",), "<defined>")))]
        tr = MonoidalTransformation(src, t.per_grade(g.grading.ten(x, y)), g.gamma[(x, y)], f"gamma_{x},{y}")
        return prefixed("multiplication", monoidal_transformation_laws(tr))

    laws += family("X", M.objects, lambda x: family("Y", M.objects, lambda y: mult(x, y)))
    unit = MonoidalTransformation(identity_monoidal_functor(t.base_monoidal, t.variant),
                                  t.per_grade(g.grading.unit), g.delta, "delta")
    laws += prefixed("unit", monoidal_transformation_laws(unit))
    return laws


def check_commutative(t: CommutativeGradedMonad) -> Report:
    t.validate()
    return run(commutative_laws(t), t.name)


def forget_commutative(t: CommutativeGradedMonad) -> GradedMonad:
    return t.underlying


# -- morphisms and transformations --------------------------------------------


@dataclass(frozen=True, eq=False)
class GradedMorphism:
    """``(Omega, omega)``: lax has ``omega_X: Omega F_X -> G_X Omega``; oplax reverses it."""

    variant: str
    src: GradedMonad
    dst: GradedMonad
    Omega: Functor
    omega: Mapping[str, Components]
    name: str = "h"

    def validate(self) -> None:
        if self.variant not in (LAX, OPLAX):
            raise MalformedInput(f"unknown variant {self.variant!r}")
        if self.src.grading is not self.dst.grading and self.src.grading.base != self.dst.grading.base:
            raise ShapeMismatch(f"{self.name}: endpoints are graded by different categories")
        if self.Omega.src != self.src.base or self.Omega.dst != self.dst.base:
            raise ShapeMismatch(f"{self.name}: Omega does not go between the endpoint bases")
        self.Omega.validate()
        if set(self.omega) != set(self.src.grading.base.objects):
            raise ShapeMismatch(f"{self.name}: omega needs one family member per grade")
        for x, comps in self.omega.items():
            if set(comps) != set(self.src.base.objects):
                raise MalformedInput(f"{self.name}: omega_{x} must have one component per object")
            for a, mor in comps.items():
                if mor not in self.dst.base.morphisms:
                    raise MalformedInput(f"{self.name}: omega_{x} component at {a} is dangling")

    def boundary(self, x: str, a: str) -> tuple[str, str]:
        lax = (self.Omega.obj(self.src.F(x).obj(a)), self.dst.F(x).obj(self.Omega.obj(a)))
        return lax if self.variant == LAX else (lax[1], lax[0])


def graded_morphism_laws(h: GradedMorphism) -> list[Law]:
    S, T, Om, om = h.src, h.dst, h.Omega, h.omega
    M, m = S.grading.base, S.grading
    C, D = S.base, T.base
    F, G = S.F_obj, T.F_obj
    lax = h.variant == LAX
    laws = prefixed("Omega", functor_laws(Om))

    def typing(b):
        x, a = b["X"], b["A"]
        return typing_leg(D, om[x][a], *h.boundary(x, a))

    def natural(b):
        x, f = b["X"], b["f"]
        a, a2 = C.dom(f), C.cod(f)
        OFf = Om.mor(F[x].mor(f))
        GOf = G[x].mor(Om.mor(f))
        if lax:
            return D.chain(("omega", om[x][a]), ("G_X Omega f", GOf)), D.chain(("Omega F_X f", OFf), ("omega", om[x][a2]))
        return D.chain(("omega", om[x][a]), ("Omega F_X f", OFf)), D.chain(("G_X Omega f", GOf), ("omega", om[x][a2]))

    def natural_grade(b):
        f, a = b["f"], b["A"]
        x, y = M.morphisms[f]
        OFf = Om.mor(S.F_mor[f][a])
        GfO = T.F_mor[f][Om.obj(a)]
        if lax:
            return D.chain(("omega_X", om[x][a]), ("Gf Omega", GfO)), D.chain(("Omega Ff", OFf), ("omega_Y", om[y][a]))
        return D.chain(("omega_X", om[x][a]), ("Omega Ff", OFf)), D.chain(("Gf Omega", GfO), ("omega_Y", om[y][a]))

    def mult(b):
        x, y, a = b["X"], b["Y"], b["A"]
        xy = m.ten(x, y)
        Oa = Om.obj(a)
        if lax:
            lhs = D.chain(("omega_X F_Y", om[x][F[y].obj(a)]), ("G_X omega_Y", G[x].mor(om[y][a])),
                          ("mu Omega", T.gamma[(x, y)][Oa]))
            rhs = D.chain(("Omega gamma", Om.mor(S.gamma[(x, y)][a])), ("omega_{X(x)Y}", om[xy][a]))
        else:
            lhs = D.chain(("G_X omega_Y", G[x].mor(om[y][a])), ("omega_X F_Y", om[x][F[y].obj(a)]),
                          ("Omega gamma", Om.mor(S.gamma[(x, y)][a])))
            rhs = D.chain(("mu Omega", T.gamma[(x, y)][Oa]), ("omega_{X(x)Y}", om[xy][a]))
        return lhs, rhs

    def unit(b):
        a = b["A"]
        I = m.unit
        if lax:
            return (D.chain(("Omega delta", Om.mor(S.delta[a])), ("omega_I", om[I][a])),
                    Leg(("eta Omega",), T.delta[Om.obj(a)]))
        return (D.chain(("eta Omega", T.delta[Om.obj(a)]), ("omega_I", om[I][a])),
                Leg(("Omega delta",), Om.mor(S.delta[a])))

    laws += [
        Law("omega-typing", lambda: ({"X": x, "A": a} for x in M.objects for a in C.objects), typing),
        Law("omega-natural", lambda: ({"X": x, "f": f} for x in M.objects for f in C.morphisms), natural),
        Law("omega-natural-grade", lambda: ({"f": f, "A": a} for f in M.morphisms for a in C.objects),
            natural_grade),
        Law("morphism-multiplication", lambda: ({"X": x, "Y": y, "A": a}
                                                for x, y in product(M.objects, repeat=2) for a in C.objects), mult),
        Law("morphism-unit", lambda: ({"A": a} for a in C.objects), unit),
    ]
    return laws


def check_graded_morphism(h: GradedMorphism) -> Report:
    h.validate()
    return run(graded_morphism_laws(h), h.name)


@dataclass(frozen=True, eq=False)
class GradedTransformation:
    src: GradedMorphism
    dst: GradedMorphism
    beta: Components
    name: str = "beta"

    def validate(self) -> None:
        if self.src.variant != self.dst.variant:
            raise VariantMismatch(f"{self.name}: endpoints are {self.src.variant} and {self.dst.variant}")
        if self.src.Omega.src != self.dst.Omega.src or self.src.Omega.dst != self.dst.Omega.dst:
            raise ShapeMismatch(f"{self.name}: endpoint morphisms are not parallel")
        D = self.src.Omega.dst
        for a in self.src.Omega.src.objects:
            if self.beta.get(a) not in D.morphisms:
                raise MalformedInput(f"{self.name}: beta component at {a} missing or dangling")


def graded_transformation_laws(t: GradedTransformation) -> list[Law]:
    h, k = t.src, t.dst
    S, T = h.src, h.dst
    M = S.grading.base
    C, D = S.base, T.base
    Om, Xi = h.Omega, k.Omega
    beta = t.beta
    lax = h.variant == LAX
    laws = component_laws(D, C.objects, beta.__getitem__, Om.obj, Xi.obj, Om.mor, Xi.mor,
                          C.morphisms, C.dom, C.cod, "beta", "beta")

    def square(b):
        f, a = b["f"], b["A"]
        x, y = M.morphisms[f]
        # beta * Ff : Omega F_X -> Xi F_Y ; Gf * beta : G_X Omega -> G_Y Xi
        beta_Ff = D.compose(Xi.mor(S.F_mor[f][a]), beta[S.F(x).obj(a)])
        Gf_beta = D.compose(T.F_mor[f][Xi.obj(a)], T.F(x).mor(beta[a]))
        if lax:
            return (D.chain(("omega_X", h.omega[x][a]), ("Gf beta", Gf_beta)),
                    D.chain(("beta Ff", beta_Ff), ("xi_Y", k.omega[y][a])))
        return (D.chain(("omega_X", h.omega[x][a]), ("beta Ff", beta_Ff)),
                D.chain(("Gf beta", Gf_beta), ("xi_Y", k.omega[y][a])))

    laws.append(Law("transformation-square", lambda: ({"f": f, "A": a} for f in M.morphisms
                                                       for a in C.objects), square))
    return laws


def check_graded_transformation(t: GradedTransformation) -> Report:
    t.validate()
    return run(graded_transformation_laws(t), t.name)


# -- constructors on Sigma_M Mnd --------------------------------------------------


def identity_graded_morphism(t: GradedMonad, variant: str = LAX) -> GradedMorphism:
    C = t.base
    om = {x: {a: C.identity[t.F(x).obj(a)] for a in C.objects} for x in t.grading.base.objects}
    return GradedMorphism(variant, t, t, identity_functor(C), om, f"1_{t.name}")


def compose_graded_morphisms(k: GradedMorphism, h: GradedMorphism) -> GradedMorphism:
    """``k . h`` for ``h: T -> S`` and ``k: S -> R`` of the same variant."""
    if h.variant != k.variant:
        raise VariantMismatch("cannot compose lax with oplax morphisms")
    E = k.dst.base
    om = {}
    for x in h.src.grading.base.objects:
        row = {}
        for a in h.src.base.objects:
            first = k.Omega.mor(h.omega[x][a])
            second = k.omega[x][h.Omega.obj(a)]
            row[a] = E.compose(second, first) if h.variant == LAX else E.compose(first, second)
        om[x] = row
    return GradedMorphism(h.variant, h.src, k.dst, compose_functors(k.Omega, h.Omega), om, f"{k.name}.{h.name}")


def product_graded_monad(s: GradedMonad, t: GradedMonad, name: str | None = None) -> GradedMonad:
    if s.grading is not t.grading and s.grading.base != t.grading.base:
        raise ShapeMismatch("product of graded monads needs a shared grading")
    P = product_category(s.base, t.base)
    pm = P.pair_mor

    def pair_comps(c1, c2):
        return {o: pm[(c1[a], c2[b])] for o, (a, b) in P.split_obj.items()}

    M = s.grading.base
    return GradedMonad(
        s.grading,
        P,
        {x: product_functor(s.F(x), t.F(x), P, P) for x in M.objects},
        {f: pair_comps(s.F_mor[f], t.F_mor[f]) for f in M.morphisms},
        {xy: pair_comps(s.gamma[xy], t.gamma[xy]) for xy in s.gamma},
        pair_comps(s.delta, t.delta),
        name or f"{s.name}x{t.name}",
    )


def product_graded_morphism(h: GradedMorphism, k: GradedMorphism, src: GradedMonad | None = None,
                            dst: GradedMonad | None = None) -> GradedMorphism:
    if h.variant != k.variant:
        raise VariantMismatch("product of lax with oplax morphism")
    src = src or product_graded_monad(h.src, k.src)
    dst = dst or product_graded_monad(h.dst, k.dst)
    P, Q = src.base, dst.base
    om = {x: {o: Q.pair_mor[(h.omega[x][a], k.omega[x][b])] for o, (a, b) in P.split_obj.items()}
          for x in src.grading.base.objects}
    return GradedMorphism(h.variant, src, dst, product_functor(h.Omega, k.Omega, P, Q), om,
                          f"{h.name}x{k.name}")


def pair_graded_morphism(h: GradedMorphism, k: GradedMorphism, dst: GradedMonad | None = None) -> GradedMorphism:
    """``<h, k>: T -> S1 x S2``."""
    if h.variant != k.variant:
        raise VariantMismatch("pairing of lax with oplax morphism")
    dst = dst or product_graded_monad(h.dst, k.dst)
    Q = dst.base
    om = {x: {a: Q.pair_mor[(h.omega[x][a], k.omega[x][a])] for a in h.src.base.objects}
          for x in h.src.grading.base.objects}
    return GradedMorphism(h.variant, h.src, dst, pairing_functor(h.Omega, k.Omega, Q), om,
                          f"<{h.name},{k.name}>")


def terminal_graded_monad(grading: MonoidalStructure) -> GradedMonad:
    one = terminal_category("1")
    ident = {"*": "id_*"}
    M = grading.base
    return GradedMonad(grading, one, {x: identity_functor(one) for x in M.objects},
                       {f: ident for f in M.morphisms}, {xy: ident for xy in product(M.objects, repeat=2)},
                       ident, "1")


def strict_graded_morphism(src: GradedMonad, dst: GradedMonad, Omega: Functor, variant: str,
                           name: str = "h") -> GradedMorphism:
    """Morphism with identity ``omega``; valid when ``Omega F_X = G_X Omega`` on the nose."""
    D = dst.base
    om = {x: {a: D.identity[Omega.obj(src.F(x).obj(a))] for a in src.base.objects}
          for x in src.grading.base.objects}
    return GradedMorphism(variant, src, dst, Omega, om, name)
