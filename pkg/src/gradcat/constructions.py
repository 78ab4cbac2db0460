"""Concrete Kleisli and Eilenberg-Moore presentations of graded monads.

Kleisli morphisms ``A -> B`` are pairs ``(X, f: A -> F_X B)`` with id
``[X|f|B]``.  Graded algebras are functors ``A: M -> C`` with actions
``a_{X,N}: F_X A(N) -> A(X (x) N)``.  Both need a strict grading so that
``(X (x) Y) (x) N`` and ``X (x) (Y (x) N)`` are the same object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from .core import (
    FinCategory,
    Functor,
    check_category,
    constant_functor,
    functor_laws,
)
from .errors import IllTyped, MalformedInput, NonStrictGrading, SearchBound, ShapeMismatch, VariantMismatch, WorkbenchError
from .graded import (
    CommutativeGradedMonad,
    GradedMonad,
    GradedMorphism,
    GradedTransformation,
    check_commutative,
    check_graded_monad,
    check_graded_morphism,
    check_graded_transformation,
    compose_graded_morphisms,
    identity_graded_morphism,
    pair_graded_morphism,
    product_graded_monad,
    product_graded_morphism,
    strict_graded_morphism,
    terminal_graded_monad,
)
from .laws import Law, Leg, Report, prefixed, run, typing_leg
from .monoidal import OPLAX, MonoidalStructure, check_monoidal

# -- Kleisli ---------------------------------------------------------------------


def kleisli_id(x: str, f: str, b: str) -> str:
    return f"[{x}|{f}|{b}]"


def split_kleisli_id(mid: str) -> tuple[str, str, str]:
    x, f, b = mid[1:-1].split("|")
    return x, f, b


def _require_strict(t: GradedMonad) -> None:
    if not t.grading.is_strict():
        raise NonStrictGrading(
            f"{t.name}: grading {t.grading.name} is not strict; supply a strict grading "
            "(identity associator and unitors)")


@dataclass(frozen=True, eq=False)
class KleisliCategory:
    source: GradedMonad
    category: FinCategory


def kleisli_composite(t: GradedMonad, g: str, f: str) -> str:
    """``(Y,g) . (X,f) = (X(x)Y, gamma_{X,Y,C} . F_X(g) . f)``."""
    C, m = t.base, t.grading
    x, f0, _ = split_kleisli_id(f)
    y, g0, c = split_kleisli_id(g)
    h = C.compose(t.gamma[(x, y)][c], C.compose(t.F(x).mor(g0), f0))
    return kleisli_id(m.ten(x, y), h, c)


def build_kleisli(t: GradedMonad, name: str | None = None) -> KleisliCategory:
    """Grade-tagged Kleisli category of ``t``.

    A composite that is ill-typed (possible only when a component of ``t`` has
    the wrong boundary) raises :class:`ShapeMismatch`; a well-typed composite
    always lands in the table because every ``(X, f)`` pair is enumerated.
    """
    t.validate()
    _require_strict(t)
    C, M = t.base, t.grading.base
    mors = [(kleisli_id(x, f, b), a, b)
            for x in M.objects for a in C.objects for b in C.objects
            for f in C.hom(a, t.F(x).obj(b))]
    I = t.grading.unit
    identity = {a: kleisli_id(I, t.delta[a], a) for a in C.objects}

    def compose(g: str, f: str) -> str:
        try:
            return kleisli_composite(t, g, f)
        except IllTyped as exc:
            raise ShapeMismatch(f"Kleisli composite {g} . {f} is ill-typed: {exc}") from exc

    return KleisliCategory(t, FinCategory.generate(name or f"Kl({t.name})", C.objects, mors, identity, compose))


# Kleisli composition only touches F_X on base morphisms, gamma and delta; a
# monad failing only grade-naturality laws can still have a lawful Kleisli
# category.  These are the monad laws a Kleisli law failure can trace back to.
# "construction" covers a table that cannot be built or is not a category at
# all (an ill-typed composite or identity).
KLEISLI_TRACE = {
    "associativity": ("associativity", "gamma-natural", "endofunctor/functor-composition"),
    "identity-law": ("unit-left", "unit-right", "delta-natural", "gamma-natural", "endofunctor/functor-identity"),
    "comp-typing": ("gamma-typing", "delta-typing", "endofunctor/functor-typing"),
    "construction": ("gamma-typing", "delta-typing", "endofunctor/functor-typing"),
}
KLEISLI_IRRELEVANT = ("F-mor-typing", "F-mor-natural", "F-identity", "F-composition", "gamma-natural-grade")


def trace_kleisli(t: GradedMonad) -> dict:
    """Run both checks and relate failures.

    Returns ``{'category': Report | None, 'monad': Report, 'traced': {kleisli law: [monad laws]},
    'error': str | None}``; ``category`` is None when the table could not be built or validated,
    and the failure is then traced under ``"construction"``.
    """
    monad = check_graded_monad(t)
    try:
        cat = check_category(build_kleisli(t).category)
    except (ShapeMismatch, MalformedInput) as exc:
        traced = {"construction": [m for m in KLEISLI_TRACE["construction"] if m in monad.failed]}
        return {"category": None, "monad": monad, "traced": traced, "error": f"{type(exc).__name__}: {exc}"}
    traced = {lid: [m for m in KLEISLI_TRACE.get(lid, ()) if m in monad.failed] for lid in cat.failed}
    return {"category": cat, "monad": monad, "traced": traced, "error": None}


# -- graded algebras ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    carrier: Functor  # M -> C
    act: Mapping[tuple[str, str], str]
    name: str = "A"

    def validate(self, t: GradedMonad) -> None:
        M, C = t.grading.base, t.base
        if self.carrier.src != M or self.carrier.dst != C:
            raise ShapeMismatch(f"{self.name}: carrier must be a functor {M.name} -> {C.name}")
        self.carrier.validate()
        if set(self.act) != set(product(M.objects, repeat=2)):
            raise ShapeMismatch(f"{self.name}: act needs an entry for every (X, N)")
        for k, mor in self.act.items():
            if mor not in C.morphisms:
                raise ShapeMismatch(f"{self.name}: act{k} is not a morphism of {C.name}")


def graded_algebra_laws(alg: GradedAlgebra, t: GradedMonad) -> list[Law]:
    m, M, C = t.grading, t.grading.base, t.base
    A, act = alg.carrier, alg.act
    ten, I = m.ten, m.unit
    pairs = lambda: ({"X": x, "N": n} for x, n in product(M.objects, repeat=2))
    laws = prefixed("carrier", functor_laws(A))

    def typing(b):
        x, n = b["X"], b["N"]
        return typing_leg(C, act[(x, n)], t.F(x).obj(A.obj(n)), A.obj(ten(x, n)))

    def natural_grade(b):
        f, n = b["f"], b["N"]
        x, x2 = M.morphisms[f]
        An = A.obj(n)
        return (C.chain(("F_f", t.F_mor[f][An]), (f"a_{x2},{n}", act[(x2, n)])),
                C.chain((f"a_{x},{n}", act[(x, n)]), ("A(f(x)N)", A.mor(m.tenm(f, M.identity[n])))))

    def natural_index(b):
        x, g = b["X"], b["g"]
        n, n2 = M.morphisms[g]
        return (C.chain(("F_X A(g)", t.F(x).mor(A.mor(g))), (f"a_{x},{n2}", act[(x, n2)])),
                C.chain((f"a_{x},{n}", act[(x, n)]), ("A(X(x)g)", A.mor(m.tenm(M.identity[x], g)))))

    def unit(b):
        n = b["N"]
        An = A.obj(n)
        return (C.chain(("delta", t.delta[An]), (f"a_I,{n}", act[(I, n)])), Leg(("id",), C.identity[An]))

    def mult(b):
        x, y, n = b["X"], b["Y"], b["N"]
        An = A.obj(n)
        return (C.chain(("gamma", t.gamma[(x, y)][An]), (f"a_{ten(x, y)},{n}", act[(ten(x, y), n)])),
                C.chain(("F_X a_Y", t.F(x).mor(act[(y, n)])), (f"a_{x},{ten(y, n)}", act[(x, ten(y, n))])))

    laws += [
        Law("algebra-typing", pairs, typing),
        Law("algebra-natural-grade", lambda: ({"f": f, "N": n} for f in M.morphisms for n in M.objects),
            natural_grade),
        Law("algebra-natural-index", lambda: ({"X": x, "g": g} for x in M.objects for g in M.morphisms),
            natural_index),
        Law("algebra-unit", lambda: ({"N": n} for n in M.objects), unit),
        Law("algebra-mult", lambda: ({"X": x, "Y": y, "N": n} for x, y, n in product(M.objects, repeat=3)), mult),
    ]
    return laws


def check_graded_algebra(alg: GradedAlgebra, t: GradedMonad) -> Report:
    _require_strict(t)
    alg.validate(t)
    return run(graded_algebra_laws(alg, t), alg.name)


@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    src: GradedAlgebra
    dst: GradedAlgebra
    components: Mapping[str, str]
    name: str = "h"


def algebra_morphism_laws(h: AlgebraMorphism, t: GradedMonad) -> list[Law]:
    m, M, C = t.grading, t.grading.base, t.base
    A, B = h.src.carrier, h.dst.carrier
    hc = h.components

    def typing(b):
        n = b["N"]
        return typing_leg(C, hc[n], A.obj(n), B.obj(n))

    def natural(b):
        g = b["g"]
        n, n2 = M.morphisms[g]
        return C.chain(("h", hc[n]), ("B(g)", B.mor(g))), C.chain(("A(g)", A.mor(g)), ("h", hc[n2]))

    def act(b):
        x, n = b["X"], b["N"]
        xn = m.ten(x, n)
        return (C.chain(("a", h.src.act[(x, n)]), ("h", hc[xn])),
                C.chain(("F_X h", t.F(x).mor(hc[n])), ("b", h.dst.act[(x, n)])))

    return [
        Law("hom-typing", lambda: ({"N": n} for n in M.objects), typing),
        Law("hom-natural", lambda: ({"g": g} for g in M.morphisms), natural),
        Law("hom-act", lambda: ({"X": x, "N": n} for x, n in product(M.objects, repeat=2)), act),
    ]


def check_algebra_morphism(h: AlgebraMorphism, t: GradedMonad) -> Report:
    _require_strict(t)
    M = t.grading.base
    if set(h.components) != set(M.objects) or any(c not in t.base.morphisms for c in h.components.values()):
        raise ShapeMismatch(f"{h.name}: need one base morphism per grade")
    return run(algebra_morphism_laws(h, t), h.name)


def free_algebra(t: GradedMonad, b0: str) -> GradedAlgebra:
    """``A(N) = F_N(b0)`` acting by ``gamma``."""
    M = t.grading.base
    carrier = Functor(M, t.base, {n: t.F(n).obj(b0) for n in M.objects},
                      {g: t.F_mor[g][b0] for g in M.morphisms}, f"F_-({b0})")
    act = {(x, n): t.gamma[(x, n)][b0] for x, n in product(M.objects, repeat=2)}
    return GradedAlgebra(carrier, act, f"free({b0})")


def enumerate_functors(src: FinCategory, dst: FinCategory, bound: int) -> list[Functor]:
    """All functors ``src -> dst`` by backtracking over object then morphism images."""
    found: list[Functor] = []
    tried = 0
    non_id = [f for f in src.morphisms if f not in set(src.identity.values())]
    for images in product(dst.objects, repeat=len(src.objects)):
        om = dict(zip(src.objects, images))
        choices = [dst.hom(om[src.dom(f)], om[src.cod(f)]) for f in non_id]
        for pick in product(*choices):
            tried += 1
            if tried > bound:
                raise SearchBound(f"more than {bound} candidate functors {src.name} -> {dst.name}")
            mm = {src.identity[a]: dst.identity[om[a]] for a in src.objects}
            mm.update(zip(non_id, pick))
            if all(dst.comp[(mm[g], mm[f])] == mm[gf] for (g, f), gf in src.comp.items()):
                found.append(Functor(src, dst, om, mm, f"A{len(found)}"))
    return found


def enumerate_graded_algebras(t: GradedMonad, bound: int = 100_000) -> list[GradedAlgebra]:
    """Every graded algebra of ``t``, tested exhaustively; ``bound`` caps candidate tables."""
    _require_strict(t)
    M, C, m = t.grading.base, t.base, t.grading
    keys = list(product(M.objects, repeat=2))
    out: list[GradedAlgebra] = []
    tried = 0
    for carrier in enumerate_functors(M, C, bound):
        choices = [C.hom(t.F(x).obj(carrier.obj(n)), carrier.obj(m.ten(x, n))) for x, n in keys]
        for pick in product(*choices):
            tried += 1
            if tried > bound:
                raise SearchBound(f"more than {bound} candidate algebras for {t.name}")
            alg = GradedAlgebra(carrier, dict(zip(keys, pick)), f"alg{len(out)}")
            if run(graded_algebra_laws(alg, t)).ok:
                out.append(alg)
    return out


# -- monoidal structure on algebras (oplax only) ------------------------------------


def _require_oplax(t: CommutativeGradedMonad) -> None:
    if t.variant != OPLAX:
        raise VariantMismatch(f"{t.name}: algebras are tensored only for the oplax variant, got {t.variant}")


def tensor_algebras(t: CommutativeGradedMonad, a: GradedAlgebra, b: GradedAlgebra) -> GradedAlgebra:
    """Carrier ``N |-> A(N) (x) B(N)``, action ``(a (x) b) . Phi_X``."""
    _require_oplax(t)
    bm, g = t.base_monoidal, t.underlying
    M, C = g.grading.base, g.base
    A, B = a.carrier, b.carrier
    carrier = Functor(M, C, {n: bm.ten(A.obj(n), B.obj(n)) for n in M.objects},
                      {f: bm.tenm(A.mor(f), B.mor(f)) for f in M.morphisms}, f"{A.name}(x){B.name}")
    act = {}
    for x, n in product(M.objects, repeat=2):
        phi = t.phi[x][(A.obj(n), B.obj(n))]
        try:
            act[(x, n)] = C.compose(bm.tenm(a.act[(x, n)], b.act[(x, n)]), phi)
        except IllTyped as exc:
            raise ShapeMismatch(f"tensor action at ({x},{n}) is ill-typed: {exc}") from exc
    return GradedAlgebra(carrier, act, f"{a.name}(x){b.name}")


def unit_algebra(t: CommutativeGradedMonad) -> GradedAlgebra:
    """Carrier constant at the unit, action ``Phibar_X``."""
    _require_oplax(t)
    g = t.underlying
    M = g.grading.base
    carrier = constant_functor(M, g.base, t.base_monoidal.unit, "I")
    return GradedAlgebra(carrier, {(x, n): t.phibar[x] for x, n in product(M.objects, repeat=2)}, "I")


# -- the regrouping xi ------------------------------------------------------------------


@dataclass
class Regrouped:
    """A commutative graded monad seen as a monoid object among graded monads."""

    monad: GradedMonad
    monoidal: MonoidalStructure
    tensor: GradedMorphism | None
    unit: GradedMorphism | None
    associator: GradedTransformation | None
    left_unitor: GradedTransformation | None
    right_unitor: GradedTransformation | None
    construction_errors: dict = field(default_factory=dict)


def _reassoc_functor(src: FinCategory, dst: FinCategory) -> Functor:
    """``(A,(B,C)) |-> ((A,B),C)`` between nested product categories."""
    def regroup(x, split_outer, split_inner, pair_inner, pair_outer):
        a, bc = split_outer[x]
        b, c = split_inner[bc]
        return pair_outer[(pair_inner[(a, b)], c)]

    L, R = src.right, dst.left  # D x D on either side
    obj = {o: regroup(o, src.split_obj, L.split_obj, R.pair_obj, dst.pair_obj) for o in src.objects}
    mor = {m: regroup(m, src.split_mor, L.split_mor, R.pair_mor, dst.pair_mor) for m in src.morphisms}
    return Functor(src, dst, obj, mor, "reassoc")


def xi_reassociate(t: CommutativeGradedMonad) -> Regrouped:
    """Regroup ``t`` as ``((D,G,mu,eta), ((x),phi), (I,phibar), alpha, lambda, rho)``."""
    t.validate()
    G, bm = t.underlying, t.base_monoidal
    D = G.base
    M = G.grading
    one_g = terminal_graded_monad(M)
    GG = product_graded_monad(G, G, "GxG")
    GGG = product_graded_monad(G, GG, "Gx(GxG)")
    GGl = product_graded_monad(GG, G, "(GxG)xG")
    idG = identity_graded_morphism(G, OPLAX)

    omega = {x: {o: t.phi[x][ab] for o, ab in GG.base.split_obj.items()} for x in M.base.objects}
    ten = GradedMorphism(OPLAX, GG, G, bm.tensor, omega, "(x)")
    unit = GradedMorphism(OPLAX, one_g, G, constant_functor(one_g.base, D, bm.unit, "I"),
                          {x: {"*": t.phibar[x]} for x in M.base.objects}, "I")
    bang = strict_graded_morphism(G, one_g, constant_functor(D, one_g.base, "*", "!"), OPLAX, "!")

    out = Regrouped(G, bm, ten, unit, None, None, None)

    def attempt(label, build):
        try:
            return build()
        except IllTyped as exc:
            out.construction_errors[label] = str(exc)
            return None

    def assoc():
        left = compose_graded_morphisms(ten, product_graded_morphism(idG, ten, GGG, GG))
        reassoc = strict_graded_morphism(GGG, GGl, _reassoc_functor(GGG.base, GGl.base), OPLAX, "reassoc")
        right = compose_graded_morphisms(ten, compose_graded_morphisms(
            product_graded_morphism(ten, idG, GGl, GG), reassoc))
        beta = {o: bm.assoc[(a, *GG.base.split_obj[bc])] for o, (a, bc) in GGG.base.split_obj.items()}
        return GradedTransformation(left, right, beta, "alpha")

    def unitor(side):
        point = compose_graded_morphisms(unit, bang)
        pair = pair_graded_morphism(point, idG, GG) if side == "left" else pair_graded_morphism(idG, point, GG)
        beta = bm.lunit if side == "left" else bm.runit
        return GradedTransformation(compose_graded_morphisms(ten, pair), idG, dict(beta),
                                    "lambda" if side == "left" else "rho")

    out.associator = attempt("associator", assoc)
    out.left_unitor = attempt("left-unitor", lambda: unitor("left"))
    out.right_unitor = attempt("right-unitor", lambda: unitor("right"))
    return out


def check_regrouped(r: Regrouped) -> Report:
    """Check every component with the graded-module checkers; law ids carry the component name."""
    report = Report(f"xi({r.monad.name})")
    report.merge(_renamed("monad", check_graded_monad(r.monad)))
    report.merge(_renamed("monoidal-object", check_monoidal(r.monoidal)))
    report.merge(_renamed("tensor", check_graded_morphism(r.tensor)))
    report.merge(_renamed("unit", check_graded_morphism(r.unit)))
    for label, tr in (("associator", r.associator), ("left-unitor", r.left_unitor),
                      ("right-unitor", r.right_unitor)):
        if tr is None:
            from .laws import Witness
            err = r.construction_errors[label]
            report.laws[f"{label}/composite"] = [
                Witness(f"{label}/composite", {}, ("<composite>",), ("<composite>",), "<defined>",
                        f"<ill-typed: {err}>")]
        else:
            report.merge(_renamed(label, check_graded_transformation(tr)))
    return report


def _renamed(prefix: str, rep: Report) -> Report:
    out = Report(rep.subject)
    for lid, ws in rep.laws.items():
        new = f"{prefix}/{lid}"
        out.laws[new] = [type(w)(new, w.binding, w.lhs_path, w.rhs_path, w.lhs_result, w.rhs_result) for w in ws]
    return out


# Regrouped law id pattern -> commutative law id patterns it corresponds to.
# ``{}`` stands for the matched suffix of a ``*`` pattern.
XI_DICTIONARY: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("monad/*", ("graded/{}",)),
    ("monoidal-object/*", ("base/{}",)),
    ("tensor/Omega/*", ("base/tensor/{}",)),
    ("tensor/omega-typing", ("per-grade/phi-typing",)),
    ("tensor/omega-natural", ("per-grade/phi-natural",)),
    ("tensor/omega-natural-grade", ("grade-morphism/transformation-tensor",)),
    ("tensor/morphism-multiplication", ("multiplication/transformation-tensor", "multiplication/composite-structure")),
    ("tensor/morphism-unit", ("unit/transformation-tensor",)),
    ("unit/Omega/*", ()),
    ("unit/omega-typing", ("per-grade/phibar-typing",)),
    # F_X(id_I) . phibar_X = phibar_X: fails only on an ill-typed phibar or a non-functorial F_X
    ("unit/omega-natural", ("per-grade/phibar-typing", "graded/endofunctor/functor-identity",
                            "graded/endofunctor/functor-typing")),
    ("unit/omega-natural-grade", ("grade-morphism/transformation-unit",)),
    ("unit/morphism-multiplication", ("multiplication/transformation-unit", "multiplication/composite-structure")),
    ("unit/morphism-unit", ("unit/transformation-unit",)),
    ("associator/beta-typing", ("base/associator-typing",)),
    ("associator/beta-natural", ("base/associator-natural",)),
    ("associator/transformation-square", ("per-grade/monoidal-assoc", "grade-morphism/transformation-tensor",
                                          "per-grade/phi-natural", "base/associator-natural")),
    ("associator/composite", ("per-grade/phi-typing", "per-grade/monoidal-assoc")),
    ("left-unitor/beta-typing", ("base/unitor-typing",)),
    ("left-unitor/beta-natural", ("base/unitor-natural",)),
    ("left-unitor/transformation-square", ("per-grade/monoidal-left-unit", "grade-morphism/transformation-tensor",
                                           "grade-morphism/transformation-unit", "per-grade/phi-natural",
                                           "base/unitor-natural")),
    ("left-unitor/composite", ("per-grade/phi-typing", "per-grade/phibar-typing", "per-grade/monoidal-left-unit")),
    ("right-unitor/beta-typing", ("base/unitor-typing",)),
    ("right-unitor/beta-natural", ("base/unitor-natural",)),
    ("right-unitor/transformation-square", ("per-grade/monoidal-right-unit", "grade-morphism/transformation-tensor",
                                            "grade-morphism/transformation-unit", "per-grade/phi-natural",
                                            "base/unitor-natural")),
    ("right-unitor/composite", ("per-grade/phi-typing", "per-grade/phibar-typing",
                                "per-grade/monoidal-right-unit")),
)

# Commutative laws whose failure is already accounted for by another failing
# commutative law: a restatement, or a diagram reading an ill-typed component.
XI_IMPLIED: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("per-grade/functor/*", ("graded/endofunctor/{}",)),
    ("grade-morphism/transformation-typing", ("graded/F-mor-typing",)),
    ("grade-morphism/transformation-natural", ("graded/F-mor-natural",)),
    ("multiplication/transformation-typing", ("graded/gamma-typing",)),
    ("multiplication/transformation-natural", ("graded/gamma-natural",)),
    ("unit/transformation-typing", ("graded/delta-typing",)),
    ("unit/transformation-natural", ("graded/delta-natural",)),
    ("unit/transformation-*", ("graded/delta-typing",)),
    ("multiplication/transformation-*", ("graded/gamma-typing",)),
    ("grade-morphism/transformation-*", ("graded/F-mor-typing",)),
    ("per-grade/monoidal-*", ("per-grade/phi-typing", "per-grade/phibar-typing")),
)


def _expand(table, lid: str) -> tuple[str, ...] | None:
    for pat, targets in table:
        if pat.endswith("*") and lid.startswith(pat[:-1]):
            rest = lid[len(pat) - 1:]
            return tuple(x.replace("{}", rest) for x in targets)
        if pat == lid:
            return targets
    return None


def _expand_all(table, lid: str) -> list[tuple[str, ...]]:
    return [t for i in range(len(table)) if (t := _expand(table[i:i + 1], lid)) is not None]


def xi_counterparts(lid: str) -> tuple[str, ...]:
    """Commutative law ids that a regrouped law id corresponds to."""
    found = _expand(XI_DICTIONARY, lid)
    if found is None:
        raise KeyError(lid)
    return found


@dataclass
class XiEquivalence:
    commutative: Report | None
    regrouped: Report | None
    rejected: str | None  # both sides refused the input with this error
    # failing category laws of the base, grading or tensor categories; the dictionary
    # presupposes lawful categories, so with these present only verdicts are compared
    ingredients: tuple[str, ...] = ()

    @property
    def equivalent(self) -> bool:
        if self.rejected is not None:
            return True
        if self.commutative is None or self.regrouped is None:
            return False
        return self.commutative.ok == self.regrouped.ok

    def unmatched(self) -> list[str]:
        """Failing laws on either side with no failing counterpart on the other."""
        if self.rejected is not None:
            return []
        if self.commutative is None or self.regrouped is None:
            return ["<rejected on one side only>"]
        if self.ingredients:
            return [] if self.equivalent else ["<verdicts differ>"]
        com, reg = set(self.commutative.failed), set(self.regrouped.failed)
        bad = [lid for lid in sorted(reg) if not set(xi_counterparts(lid)) & com]
        covered = {c for lid in reg for c in xi_counterparts(lid)}
        for lid in sorted(com):
            if lid in covered:
                continue
            if any(set(alt) & com for alt in _expand_all(XI_IMPLIED, lid)):
                continue
            bad.append(lid)
        return bad


def _ingredient_failures(t: CommutativeGradedMonad) -> tuple[str, ...]:
    g = t.underlying
    out = []
    for label, c in (("base", g.base), ("grading", g.grading.base)):
        try:
            rep = check_category(c)
        except WorkbenchError as exc:
            out.append(f"{label}/{type(exc).__name__}")
            continue
        out += [f"{label}/{lid}" for lid in rep.failed]
    return tuple(out)


def xi_equivalence(t: CommutativeGradedMonad) -> XiEquivalence:
    try:
        com = check_commutative(t)
    except WorkbenchError as exc:
        com_err = f"{type(exc).__name__}: {exc}"
    else:
        com_err = None
    try:
        reg = check_regrouped(xi_reassociate(t))
    except WorkbenchError as exc:
        reg_err = f"{type(exc).__name__}: {exc}"
    else:
        reg_err = None
    if com_err is not None or reg_err is not None:
        if com_err is None or reg_err is None:
            return XiEquivalence(None if com_err else com, None if reg_err else reg, None)
        return XiEquivalence(None, None, com_err)
    return XiEquivalence(com, reg, None, _ingredient_failures(t))
