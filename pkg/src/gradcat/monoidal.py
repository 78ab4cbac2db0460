"""Monoidal structure on finite categories, (op)lax monoidal functors and their transformations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .core import (
    FinCategory,
    Functor,
    NatTrans,
    ProductCategory,
    compose_functors,
    functor_laws,
    identity_functor,
    product_category,
)
from .errors import ClosureBound, MalformedInput, NotASemilattice, ShapeMismatch, VariantMismatch
from .laws import Law, Leg, Report, prefixed, run, typing_leg

LAX, OPLAX = "lax", "oplax"


@dataclass(frozen=True, eq=False)
class MonoidalStructure:
    base: FinCategory
    tensor: Functor  # base x base -> base
    unit: str
    assoc: Mapping[tuple[str, str, str], str]  # A(x)(B(x)C) -> (A(x)B)(x)C
    lunit: Mapping[str, str]  # I(x)A -> A
    runit: Mapping[str, str]  # A(x)I -> A
    assoc_inv: Mapping[tuple[str, str, str], str]
    lunit_inv: Mapping[str, str]
    runit_inv: Mapping[str, str]
    name: str = "M"

    @classmethod
    def build(
        cls,
        base: FinCategory,
        ten_obj: Callable[[str, str], str],
        ten_mor: Callable[[str, str], str],
        unit: str,
        assoc: Callable[[str, str, str], str] | None = None,
        lunit: Callable[[str], str] | None = None,
        runit: Callable[[str], str] | None = None,
        name: str | None = None,
    ) -> "MonoidalStructure":
        """Tabulate a monoidal structure from callables.

        Omitted coherence maps default to identities; the inverses are looked
        up in ``base`` and missing ones are left absent (so validation fails).
        """
        p = product_category(base, base)
        tensor = Functor(
            p,
            base,
            {o: ten_obj(a, b) for o, (a, b) in p.split_obj.items()},
            {m: ten_mor(f, g) for m, (f, g) in p.split_mor.items()},
            "(x)",
        )
        objs = base.objects
        t = ten_obj
        assoc = assoc or (lambda a, b, c: base.identity[t(a, t(b, c))])
        lunit = lunit or (lambda a: base.identity[t(unit, a)])
        runit = runit or (lambda a: base.identity[t(a, unit)])
        al = {(a, b, c): assoc(a, b, c) for a, b, c in product(objs, repeat=3)}
        lu = {a: lunit(a) for a in objs}
        ru = {a: runit(a) for a in objs}

        def inv(table):
            out = {}
            for k, m in table.items():
                n = base.inverse(m) if m in base.morphisms else None
                if n is not None:
                    out[k] = n
            return out

        return cls(base, tensor, unit, al, lu, ru, inv(al), inv(lu), inv(ru), name or f"({base.name},(x))")

    @property
    def pairs(self) -> ProductCategory:
        return self.tensor.src  # type: ignore[return-value]

    def ten(self, a: str, b: str) -> str:
        return self.tensor.obj(self.pairs.pair_obj[(a, b)])

    def tenm(self, f: str, g: str) -> str:
        return self.tensor.mor(self.pairs.pair_mor[(f, g)])

    def validate(self) -> None:
        self.base.validate()
        if not isinstance(self.tensor.src, ProductCategory) or self.tensor.dst != self.base \
                or self.tensor.src.left != self.base or self.tensor.src.right != self.base:
            raise ShapeMismatch(f"{self.name}: tensor must be a functor base x base -> base")
        self.tensor.validate()
        if self.unit not in self.base.objects:
            raise MalformedInput(f"{self.name}: unknown unit {self.unit!r}")
        objs = self.base.objects
        for table, keys, label in (
            (self.assoc, list(product(objs, repeat=3)), "associator"),
            (self.assoc_inv, list(product(objs, repeat=3)), "associator inverse"),
            (self.lunit, objs, "left unitor"),
            (self.lunit_inv, objs, "left unitor inverse"),
            (self.runit, objs, "right unitor"),
            (self.runit_inv, objs, "right unitor inverse"),
        ):
            for k in keys:
                if table.get(k) not in self.base.morphisms:
                    raise MalformedInput(f"{self.name}: {label} missing or dangling at {k}")

    def is_strict(self) -> bool:
        c = self.base
        objs = c.objects
        for a, b, d in product(objs, repeat=3):
            if self.ten(a, self.ten(b, d)) != self.ten(self.ten(a, b), d):
                return False
            if self.assoc[(a, b, d)] != c.identity[self.ten(a, self.ten(b, d))]:
                return False
        for a in objs:
            if self.ten(self.unit, a) != a or self.ten(a, self.unit) != a:
                return False
            if self.lunit[a] != c.identity[a] or self.runit[a] != c.identity[a]:
                return False
        return True

    @property
    def is_thin(self) -> bool:
        return self.base.is_thin

    def nabla(self, u: str) -> str:
        """The unique morphism ``u (x) u -> u`` of a thin structure."""
        hom = self.base.hom(self.ten(u, u), u)
        if len(hom) != 1:
            raise ShapeMismatch(f"no unique morphism {u}(x){u} -> {u}")
        return hom[0]


def monoidal_laws(m: MonoidalStructure) -> list[Law]:
    c = m.base
    objs = c.objects
    t, tm = m.ten, m.tenm
    I = m.unit
    laws = prefixed("tensor", functor_laws(m.tensor))

    def assoc_typing(b):
        a, b_, d = b["A"], b["B"], b["C"]
        return typing_leg(c, m.assoc[(a, b_, d)], t(a, t(b_, d)), t(t(a, b_), d))

    def unit_typing(b):
        a = b["A"]
        if b["unitor"] == "lambda":
            return typing_leg(c, m.lunit[a], t(I, a), a)
        return typing_leg(c, m.runit[a], t(a, I), a)

    def triples():
        return ({"A": a, "B": b, "C": d} for a, b, d in product(objs, repeat=3))

    def unitor_keys():
        for a in objs:
            yield {"unitor": "lambda", "A": a}
            yield {"unitor": "rho", "A": a}

    def assoc_natural(b):
        f, g, h = b["f"], b["g"], b["h"]
        src = (c.dom(f), c.dom(g), c.dom(h))
        dst = (c.cod(f), c.cod(g), c.cod(h))
        return (c.chain(("f(x)(g(x)h)", tm(f, tm(g, h))), ("alpha", m.assoc[dst])),
                c.chain(("alpha", m.assoc[src]), ("(f(x)g)(x)h", tm(tm(f, g), h))))

    def unit_natural(b):
        f = b["f"]
        a, a2 = c.dom(f), c.cod(f)
        idI = c.identity[I]
        if b["unitor"] == "lambda":
            return (c.chain(("I(x)f", tm(idI, f)), ("lambda", m.lunit[a2])),
                    c.chain(("lambda", m.lunit[a]), ("f", f)))
        return (c.chain(("f(x)I", tm(f, idI)), ("rho", m.runit[a2])),
                c.chain(("rho", m.runit[a]), ("f", f)))

    def mor_triples():
        return ({"f": f, "g": g, "h": h} for f, g, h in product(c.morphisms, repeat=3))

    def mor_unitors():
        for f in c.morphisms:
            yield {"unitor": "lambda", "f": f}
            yield {"unitor": "rho", "f": f}

    def iso_check(mor, inv, b):
        side = b["side"]
        if side == "inv.m":
            return c.chain(("m", mor), ("inv", inv)), Leg(("id",), c.identity[c.dom(mor)])
        return c.chain(("inv", inv), ("m", mor)), Leg(("id",), c.identity[c.cod(mor)])

    def assoc_iso_keys():
        for a, b, d in product(objs, repeat=3):
            for side in ("inv.m", "m.inv"):
                yield {"A": a, "B": b, "C": d, "side": side}

    def assoc_iso(b):
        k = (b["A"], b["B"], b["C"])
        return iso_check(m.assoc[k], m.assoc_inv[k], b)

    def unit_iso_keys():
        for u in unitor_keys():
            for side in ("inv.m", "m.inv"):
                yield {**u, "side": side}

    def unit_iso(b):
        a = b["A"]
        if b["unitor"] == "lambda":
            return iso_check(m.lunit[a], m.lunit_inv[a], b)
        return iso_check(m.runit[a], m.runit_inv[a], b)

    def pentagon(b):
        a, b_, d, e = b["A"], b["B"], b["C"], b["D"]
        al = m.assoc
        lhs = c.chain(("alpha_{A,B,C(x)D}", al[(a, b_, t(d, e))]),
                      ("alpha_{A(x)B,C,D}", al[(t(a, b_), d, e)]))
        rhs = c.chain(("A(x)alpha_{B,C,D}", tm(c.identity[a], al[(b_, d, e)])),
                      ("alpha_{A,B(x)C,D}", al[(a, t(b_, d), e)]),
                      ("alpha_{A,B,C}(x)D", tm(al[(a, b_, d)], c.identity[e])))
        return lhs, rhs

    def triangle(b):
        a, b_ = b["A"], b["B"]
        lhs = c.chain(("alpha_{A,I,B}", m.assoc[(a, I, b_)]),
                      ("rho_A(x)B", tm(m.runit[a], c.identity[b_])))
        rhs = Leg(("A(x)lambda_B",), tm(c.identity[a], m.lunit[b_]))
        return lhs, rhs

    laws += [
        Law("associator-typing", triples, assoc_typing),
        Law("unitor-typing", unitor_keys, unit_typing),
        Law("associator-natural", mor_triples, assoc_natural),
        Law("unitor-natural", mor_unitors, unit_natural),
        Law("associator-iso", assoc_iso_keys, assoc_iso),
        Law("unitor-iso", unit_iso_keys, unit_iso),
        Law("pentagon", lambda: ({"A": a, "B": b, "C": d, "D": e}
                                 for a, b, d, e in product(objs, repeat=4)), pentagon),
        Law("triangle", lambda: ({"A": a, "B": b} for a, b in product(objs, repeat=2)), triangle),
    ]
    return laws


def check_monoidal(m: MonoidalStructure) -> Report:
    m.validate()
    return run(monoidal_laws(m), m.name)


# -- monoidal functors ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MonoidalFunctor:
    variant: str
    src: MonoidalStructure
    dst: MonoidalStructure
    F: Functor
    phi: Mapping[tuple[str, str], str]
    phibar: str
    name: str = "F"

    def validate(self) -> None:
        if self.variant not in (LAX, OPLAX):
            raise MalformedInput(f"unknown variant {self.variant!r}")
        if self.F.src != self.src.base or self.F.dst != self.dst.base:
            raise ShapeMismatch(f"{self.name}: underlying functor does not match the monoidal structures")
        self.F.validate()
        for a, b in product(self.src.base.objects, repeat=2):
            if self.phi.get((a, b)) not in self.dst.base.morphisms:
                raise ShapeMismatch(f"{self.name}: phi component at ({a},{b}) missing or dangling")
        if self.phibar not in self.dst.base.morphisms:
            raise MalformedInput(f"{self.name}: phibar dangling")

    def phi_boundary(self, a: str, b: str) -> tuple[str, str]:
        F, s, d = self.F, self.src, self.dst
        lax = (d.ten(F.obj(a), F.obj(b)), F.obj(s.ten(a, b)))
        return lax if self.variant == LAX else (lax[1], lax[0])

    def phibar_boundary(self) -> tuple[str, str]:
        lax = (self.dst.unit, self.F.obj(self.src.unit))
        return lax if self.variant == LAX else (lax[1], lax[0])


def orientation_conflict(mf: MonoidalFunctor) -> bool:
    """True when the structure maps fit only the opposite variant's boundaries."""
    c = mf.dst.base
    other = MonoidalFunctor(OPLAX if mf.variant == LAX else LAX, mf.src, mf.dst, mf.F, mf.phi, mf.phibar)

    def fits(x: MonoidalFunctor) -> bool:
        if c.morphisms[x.phibar] != x.phibar_boundary():
            return False
        return all(c.morphisms[m] == x.phi_boundary(a, b) for (a, b), m in x.phi.items())

    return not fits(mf) and fits(other)


def monoidal_functor_laws(mf: MonoidalFunctor) -> list[Law]:
    s, d, F = mf.src, mf.dst, mf.F
    c = d.base
    sc = s.base
    lax = mf.variant == LAX
    phi = mf.phi
    objs = sc.objects
    laws = prefixed("functor", functor_laws(F))

    def phi_typing(b):
        a, b_ = b["A"], b["B"]
        return typing_leg(c, phi[(a, b_)], *mf.phi_boundary(a, b_))

    def phibar_typing(b):
        return typing_leg(c, mf.phibar, *mf.phibar_boundary())

    def phi_natural(b):
        f, g = b["f"], b["g"]
        src = (sc.dom(f), sc.dom(g))
        dst = (sc.cod(f), sc.cod(g))
        FfFg = d.tenm(F.mor(f), F.mor(g))
        Ffg = F.mor(s.tenm(f, g))
        if lax:
            return (c.chain(("Ff(x)Fg", FfFg), ("phi", phi[dst])),
                    c.chain(("phi", phi[src]), ("F(f(x)g)", Ffg)))
        return (c.chain(("phi", phi[src]), ("Ff(x)Fg", FfFg)),
                c.chain(("F(f(x)g)", Ffg), ("phi", phi[dst])))

    def assoc_coh(b):
        a, b_, e = b["A"], b["B"], b["C"]
        Fa, Fb, Fe = F.obj(a), F.obj(b_), F.obj(e)
        idFa, idFe = c.identity[Fa], c.identity[Fe]
        alpha_d = d.assoc[(Fa, Fb, Fe)]
        Falpha = F.mor(s.assoc[(a, b_, e)])
        if lax:
            lhs = c.chain(("1(x)phi", d.tenm(idFa, phi[(b_, e)])), ("phi", phi[(a, s.ten(b_, e))]),
                          ("F(alpha)", Falpha))
            rhs = c.chain(("alpha'", alpha_d), ("phi(x)1", d.tenm(phi[(a, b_)], idFe)),
                          ("phi", phi[(s.ten(a, b_), e)]))
        else:
            lhs = c.chain(("F(alpha)", Falpha), ("phi", phi[(s.ten(a, b_), e)]),
                          ("phi(x)1", d.tenm(phi[(a, b_)], idFe)))
            rhs = c.chain(("phi", phi[(a, s.ten(b_, e))]), ("1(x)phi", d.tenm(idFa, phi[(b_, e)])),
                          ("alpha'", alpha_d))
        return lhs, rhs

    def right_unit(b):
        a = b["A"]
        Fa = F.obj(a)
        step = d.tenm(c.identity[Fa], mf.phibar)
        if lax:
            lhs = c.chain(("1(x)phibar", step), ("phi", phi[(a, s.unit)]), ("F(rho)", F.mor(s.runit[a])))
            return lhs, Leg(("rho'",), d.runit[Fa])
        lhs = c.chain(("phi", phi[(a, s.unit)]), ("1(x)phibar", step), ("rho'", d.runit[Fa]))
        return lhs, Leg(("F(rho)",), F.mor(s.runit[a]))

    def left_unit(b):
        a = b["A"]
        Fa = F.obj(a)
        step = d.tenm(mf.phibar, c.identity[Fa])
        if lax:
            lhs = c.chain(("phibar(x)1", step), ("phi", phi[(s.unit, a)]), ("F(lambda)", F.mor(s.lunit[a])))
            return lhs, Leg(("lambda'",), d.lunit[Fa])
        lhs = c.chain(("phi", phi[(s.unit, a)]), ("phibar(x)1", step), ("lambda'", d.lunit[Fa]))
        return lhs, Leg(("F(lambda)",), F.mor(s.lunit[a]))

    laws += [
        Law("phi-typing", lambda: ({"A": a, "B": b} for a, b in product(objs, repeat=2)), phi_typing),
        Law("phibar-typing", lambda: iter([{}]), phibar_typing),
        Law("phi-natural", lambda: ({"f": f, "g": g} for f, g in product(sc.morphisms, repeat=2)), phi_natural),
        Law("monoidal-assoc", lambda: ({"A": a, "B": b, "C": e} for a, b, e in product(objs, repeat=3)),
            assoc_coh),
        Law("monoidal-right-unit", lambda: ({"A": a} for a in objs), right_unit),
        Law("monoidal-left-unit", lambda: ({"A": a} for a in objs), left_unit),
    ]
    return laws


def check_monoidal_functor(mf: MonoidalFunctor) -> Report:
    mf.validate()
    return run(monoidal_functor_laws(mf), mf.name)


def identity_monoidal_functor(m: MonoidalStructure, variant: str = LAX) -> MonoidalFunctor:
    c = m.base
    phi = {(a, b): c.identity[m.ten(a, b)] for a, b in product(c.objects, repeat=2)}
    return MonoidalFunctor(variant, m, m, identity_functor(c), phi, c.identity[m.unit], "Id")


@dataclass(frozen=True, eq=False)
class MonoidalTransformation:
    src: MonoidalFunctor
    dst: MonoidalFunctor
    components: Mapping[str, str]
    name: str = "tau"

    @property
    def underlying(self) -> NatTrans:
        return NatTrans(self.src.F, self.dst.F, self.components, self.name)

    def validate(self) -> None:
        if self.src.variant != self.dst.variant:
            raise VariantMismatch(f"{self.name}: {self.src.variant} and {self.dst.variant} endpoints")
        if self.src.src is not self.dst.src and self.src.src.base != self.dst.src.base:
            raise ShapeMismatch(f"{self.name}: endpoints have different domains")
        for a in self.src.src.base.objects:
            if self.components.get(a) not in self.src.dst.base.morphisms:
                raise MalformedInput(f"{self.name}: component at {a} missing or dangling")


def monoidal_transformation_laws(t: MonoidalTransformation) -> list[Law]:
    F, G = t.src, t.dst
    s, d = F.src, F.dst
    c = d.base
    sc = s.base
    tau = t.components
    lax = F.variant == LAX

    def typing(b):
        a = b["A"]
        return typing_leg(c, tau[a], F.F.obj(a), G.F.obj(a))

    def natural(b):
        f = b["f"]
        return (c.chain(("tau", tau[sc.dom(f)]), ("G(f)", G.F.mor(f))),
                c.chain(("F(f)", F.F.mor(f)), ("tau", tau[sc.cod(f)])))

    def tensor(b):
        a, b_ = b["A"], b["B"]
        tt = d.tenm(tau[a], tau[b_])
        if lax:
            return (c.chain(("phi", F.phi[(a, b_)]), ("tau", tau[s.ten(a, b_)])),
                    c.chain(("tau(x)tau", tt), ("phi'", G.phi[(a, b_)])))
        return (c.chain(("phi", F.phi[(a, b_)]), ("tau(x)tau", tt)),
                c.chain(("tau", tau[s.ten(a, b_)]), ("phi'", G.phi[(a, b_)])))

    def unit(b):
        if lax:
            return c.chain(("phibar", F.phibar), ("tau_I", tau[s.unit])), Leg(("phibar'",), G.phibar)
        return c.chain(("tau_I", tau[s.unit]), ("phibar'", G.phibar)), Leg(("phibar",), F.phibar)

    objs = sc.objects
    return [
        Law("transformation-typing", lambda: ({"A": a} for a in objs), typing),
        Law("transformation-natural", lambda: ({"f": f} for f in sc.morphisms), natural),
        Law("transformation-tensor", lambda: ({"A": a, "B": b} for a, b in product(objs, repeat=2)), tensor),
        Law("transformation-unit", lambda: iter([{}]), unit),
    ]


def check_monoidal_transformation(t: MonoidalTransformation) -> Report:
    t.validate()
    return run(monoidal_transformation_laws(t), t.name)


# -- builders ------------------------------------------------------------------


def thin_category(name: str, elements: Sequence[str], leq: Iterable[tuple[str, str]]) -> FinCategory:
    """Thin category of a preorder: one morphism ``u<=v`` whenever u <= v (reflexive-transitive closure)."""
    elements = list(elements)
    rel = {(u, u) for u in elements} | set(leq)
    for u, v in rel:
        if u not in elements or v not in elements:
            raise MalformedInput(f"{name}: order relation mentions unknown element")
    changed = True
    while changed:
        changed = False
        for (u, v), (v2, w) in product(list(rel), repeat=2):
            if v == v2 and (u, w) not in rel:
                rel.add((u, w))
                changed = True
    mors = [(f"{u}<={v}", u, v) for u in elements for v in elements if (u, v) in rel]
    return FinCategory.generate(
        name, elements, mors, {u: f"{u}<={u}" for u in elements},
        lambda g, f: f"{f.split('<=')[0]}<={g.split('<=')[1]}",
    )


def thin_from_semilattice(elements: Sequence[str], leq: Iterable[tuple[str, str]],
                          name: str = "Z") -> MonoidalStructure:
    """Thin monoidal category of a finite meet-semilattice with top: tensor = meet, unit = top."""
    cat = thin_category(name, elements, leq)
    below = {u: {v for v in elements if cat.hom(v, u)} for u in elements}
    for u, v in product(elements, repeat=2):
        if u != v and cat.hom(u, v) and cat.hom(v, u):
            raise NotASemilattice(f"{u} and {v} are distinct but order-equivalent")
    meet: dict[tuple[str, str], str] = {}
    for u, v in product(elements, repeat=2):
        lower = below[u] & below[v]
        tops = [w for w in lower if all(cat.hom(x, w) for x in lower)]
        if not tops:
            raise NotASemilattice(f"pair ({u}, {v}) has no meet")
        meet[(u, v)] = tops[0]
    tops = [u for u in elements if all(cat.hom(v, u) for v in elements)]
    if not tops:
        raise NotASemilattice("no greatest element")

    def ten_mor(f: str, g: str) -> str:
        (a, b), (c, d) = cat.morphisms[f], cat.morphisms[g]
        return cat.hom(meet[(a, c)], meet[(b, d)])[0]

    return MonoidalStructure.build(cat, lambda u, v: meet[(u, v)], ten_mor, tops[0], name=name)


def monoid_category(name: str, elements: Sequence[str], mult: Callable[[str, str], str],
                    unit: str, obj: str = "*") -> FinCategory:
    """One-object category whose morphisms are monoid elements (``g . f = mult(g, f)``)."""
    return FinCategory.generate(name, [obj], [(e, obj, obj) for e in elements], {obj: unit}, mult)


def commutative_monoid_monoidal(name: str, elements: Sequence[str], mult: Callable[[str, str], str],
                                unit: str) -> MonoidalStructure:
    """Single-object monoidal category of a commutative monoid; tensor multiplies."""
    cat = monoid_category(name, elements, mult, unit)
    return MonoidalStructure.build(cat, lambda a, b: "*", mult, "*", name=name)


def discrete_monoidal(name: str, elements: Sequence[str], mult: Callable[[str, str], str],
                      unit: str) -> MonoidalStructure:
    """Discrete monoidal category of a monoid: only identities, tensor = multiplication."""
    cat = FinCategory.generate(name, elements, [(f"id_{e}", e, e) for e in elements],
                               {e: f"id_{e}" for e in elements}, lambda g, f: g)
    return MonoidalStructure.build(cat, mult, lambda f, g: f"id_{mult(f[3:], g[3:])}", unit, name=name)


def product_monoidal(m1: MonoidalStructure, m2: MonoidalStructure, name: str | None = None) -> MonoidalStructure:
    base = product_category(m1.base, m2.base, name)
    po, pm = base.pair_obj, base.pair_mor
    so = base.split_obj
    sm = base.split_mor

    def ten_obj(a, b):
        (a1, a2), (b1, b2) = so[a], so[b]
        return po[(m1.ten(a1, b1), m2.ten(a2, b2))]

    def ten_mor(f, g):
        (f1, f2), (g1, g2) = sm[f], sm[g]
        return pm[(m1.tenm(f1, g1), m2.tenm(f2, g2))]

    def assoc(a, b, c):
        (a1, a2), (b1, b2), (c1, c2) = so[a], so[b], so[c]
        return pm[(m1.assoc[(a1, b1, c1)], m2.assoc[(a2, b2, c2)])]

    def lunit(a):
        a1, a2 = so[a]
        return pm[(m1.lunit[a1], m2.lunit[a2])]

    def runit(a):
        a1, a2 = so[a]
        return pm[(m1.runit[a1], m2.runit[a2])]

    return MonoidalStructure.build(base, ten_obj, ten_mor, po[(m1.unit, m2.unit)], assoc, lunit, runit,
                                   name=base.name)


def endo_monoidal(c: FinCategory, generators: Sequence[Functor | NatTrans], bound: int = 16,
                  mor_bound: int = 512, name: str | None = None) -> tuple[MonoidalStructure, dict]:
    """Strict monoidal subcategory of End(c) generated by endofunctors and transformations.

    Objects are closed under composition, morphisms under vertical and
    horizontal composition.  Returns the structure and a map from object ids
    to the endofunctors they denote.
    """
    from .core import horizontal, identity_nat, vertical

    functors: list[Functor] = [identity_functor(c)]
    names = [functors[0].name]

    def add_functor(f: Functor) -> str:
        for n, g in zip(names, functors):
            if g == f:
                return n
        if len(functors) >= bound:
            raise ClosureBound(f"more than {bound} endofunctors generated")
        functors.append(f)
        names.append(f.name)
        return f.name

    nats: list[NatTrans] = []
    for g in generators:
        if isinstance(g, Functor):
            if g.src != c or g.dst != c:
                raise ShapeMismatch(f"{g.name} is not an endofunctor of {c.name}")
            add_functor(g)
        else:
            add_functor(g.src)
            add_functor(g.dst)
            nats.append(g)
    # close objects under composition
    frontier = True
    while frontier:
        frontier = False
        for f, g in product(list(functors), repeat=2):
            before = len(functors)
            add_functor(compose_functors(f, g, f"{f.name}.{g.name}"))
            frontier |= len(functors) > before

    def fid(f: Functor) -> str:
        for n, g in zip(names, functors):
            if g == f:
                return n
        raise ClosureBound("composite escaped the generated functors")

    def key(t: NatTrans):
        return (fid(t.src), fid(t.dst), tuple(sorted(t.components.items())))

    mors: dict[tuple, NatTrans] = {}
    for f in functors:
        t = identity_nat(f)
        mors[key(t)] = t
    for t in nats:
        mors.setdefault(key(t), t)
    changed = True
    while changed:
        changed = False
        for s, t in product(list(mors.values()), repeat=2):
            cands = [horizontal(s, t)]
            if fid(t.dst) == fid(s.src):
                cands.append(vertical(s, t))
            for u in cands:
                k = key(u)
                if k not in mors:
                    if len(mors) >= mor_bound:
                        raise ClosureBound(f"more than {mor_bound} transformations generated")
                    mors[k] = u
                    changed = True
    ids = {}
    for i, (k, t) in enumerate(mors.items()):
        ids[k] = f"1_{k[0]}" if k[0] == k[1] and t == identity_nat(functors[names.index(k[0])]) else f"t{i}"
    by_id = {ids[k]: t for k, t in mors.items()}
    cat = FinCategory.generate(
        name or f"End({c.name})",
        names,
        [(ids[k], k[0], k[1]) for k in mors],
        {n: ids[key(identity_nat(f))] for n, f in zip(names, functors)},
        lambda g, f: ids[key(vertical(by_id[g], by_id[f]))],
    )
    fmap = dict(zip(names, functors))
    m = MonoidalStructure.build(
        cat,
        lambda a, b: fid(compose_functors(fmap[a], fmap[b])),
        lambda s, t: ids[key(horizontal(by_id[s], by_id[t]))],
        names[0],
        name=cat.name,
    )
    return m, fmap
