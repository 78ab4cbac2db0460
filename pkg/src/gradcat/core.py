"""Finite categories, functors and natural transformations as explicit tables."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .errors import IllTyped, MalformedInput, ShapeMismatch
from .laws import Law, Leg, Report, run, typing_leg


@dataclass(frozen=True, eq=False)
class FinCategory:
    name: str
    objects: tuple[str, ...]
    morphisms: Mapping[str, tuple[str, str]]  # id -> (dom, cod)
    identity: Mapping[str, str]
    comp: Mapping[tuple[str, str], str]  # (g, f) -> g . f

    @classmethod
    def build(
        cls,
        name: str,
        objects: Iterable[str],
        morphisms: Iterable[tuple[str, str, str]],
        identity: Mapping[str, str],
        comp: Mapping[tuple[str, str], str] | Iterable[tuple[str, str, str]],
    ) -> "FinCategory":
        if not isinstance(comp, Mapping):
            comp = {(g, f): gf for g, f, gf in comp}
        mors: dict[str, tuple[str, str]] = {}
        for mid, d, c in morphisms:
            if mid in mors:
                raise MalformedInput(f"{name}: duplicate morphism id {mid!r}")
            mors[mid] = (d, c)
        return cls(name, tuple(objects), mors, dict(identity), dict(comp))

    @classmethod
    def generate(
        cls,
        name: str,
        objects: Iterable[str],
        morphisms: Iterable[tuple[str, str, str]],
        identity: Mapping[str, str],
        compose: Callable[[str, str], str],
    ) -> "FinCategory":
        """Build the composition table by calling ``compose(g, f)`` on every composable pair."""
        morphisms = list(morphisms)
        table = {
            (g, f): compose(g, f)
            for g, dg, _ in morphisms
            for f, _, cf in morphisms
            if dg == cf
        }
        return cls.build(name, objects, morphisms, identity, table)

    # -- structure -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self is other
            or (
                set(self.objects) == set(other.objects)
                and dict(self.morphisms) == dict(other.morphisms)
                and dict(self.identity) == dict(other.identity)
                and dict(self.comp) == dict(other.comp)
            )
        )

    def __hash__(self) -> int:
        return hash((len(self.objects), len(self.morphisms)))

    def __repr__(self) -> str:
        return f"FinCategory({self.name!r}, {len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def validate(self) -> None:
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise MalformedInput(f"{self.name}: duplicate object ids")
        for mid, (d, c) in self.morphisms.items():
            if d not in objs or c not in objs:
                raise MalformedInput(f"{self.name}: morphism {mid} has unknown endpoint")
        for a in self.objects:
            if self.identity.get(a) not in self.morphisms:
                raise MalformedInput(f"{self.name}: object {a} lacks a known identity")
        for (g, f), gf in self.comp.items():
            for m in (g, f, gf):
                if m not in self.morphisms:
                    raise MalformedInput(f"{self.name}: comp references unknown id {m!r}")
            if self.morphisms[g][0] != self.morphisms[f][1]:
                raise MalformedInput(f"{self.name}: comp entry ({g}, {f}) is not a composable pair")
        for g, f in self.composable_pairs():
            if (g, f) not in self.comp:
                raise MalformedInput(f"{self.name}: comp is partial, missing ({g}, {f})")

    def dom(self, m: str) -> str:
        try:
            return self.morphisms[m][0]
        except KeyError:
            raise IllTyped(f"unknown morphism {m!r} in {self.name}") from None

    def cod(self, m: str) -> str:
        try:
            return self.morphisms[m][1]
        except KeyError:
            raise IllTyped(f"unknown morphism {m!r} in {self.name}") from None

    def id(self, a: str) -> str:
        return self.identity[a]

    def compose(self, g: str, f: str) -> str:
        """``g . f``; raises IllTyped when the pair is not composable."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise IllTyped(f"{g} . {f} undefined in {self.name}") from None

    def chain(self, *steps: tuple[str, str]) -> Leg:
        """Compose ``(label, morphism)`` steps given in application order."""
        path = []
        cur = None
        for label, m in steps:
            path.append(f"{label}={m}")
            cur = m if cur is None else self.compose(m, cur)
        return Leg(tuple(path), cur)

    @cached_property
    def _hom(self) -> dict[tuple[str, str], list[str]]:
        table: dict[tuple[str, str], list[str]] = {}
        for mid, dc in self.morphisms.items():
            table.setdefault(dc, []).append(mid)
        return table

    @cached_property
    def _out(self) -> dict[str, list[str]]:
        table: dict[str, list[str]] = {a: [] for a in self.objects}
        for mid, (d, _) in self.morphisms.items():
            table.setdefault(d, []).append(mid)
        return table

    def hom(self, a: str, b: str) -> list[str]:
        return self._hom.get((a, b), [])

    def out_of(self, a: str) -> list[str]:
        return self._out.get(a, [])

    def composable_pairs(self) -> Iterable[tuple[str, str]]:
        for f, (_, cf) in self.morphisms.items():
            for g in self.out_of(cf):
                yield g, f

    @property
    def is_thin(self) -> bool:
        return all(len(v) <= 1 for v in self._hom.values())

    def inverse(self, m: str) -> str | None:
        d, c = self.morphisms[m]
        for n in self.hom(c, d):
            if self.comp.get((n, m)) == self.identity[d] and self.comp.get((m, n)) == self.identity[c]:
                return n
        return None


class ProductCategory(FinCategory):
    """``left x right`` remembering how its ids split into components."""

    left: FinCategory
    right: FinCategory
    pair_obj: dict
    pair_mor: dict
    split_obj: dict
    split_mor: dict


def pair_id(a: str, b: str) -> str:
    return f"({a},{b})"


def product_category(a: FinCategory, b: FinCategory, name: str | None = None) -> ProductCategory:
    objs = {}
    mors = {}
    for x, y in product(a.objects, b.objects):
        objs[(x, y)] = pair_id(x, y)
    for (f, (fd, fc)), (g, (gd, gc)) in product(a.morphisms.items(), b.morphisms.items()):
        mors[(f, g)] = (pair_id(f, g), objs[(fd, gd)], objs[(fc, gc)])
    if len(set(objs.values())) != len(objs) or len({m[0] for m in mors.values()}) != len(mors):
        raise MalformedInput(f"product of {a.name} and {b.name} has colliding pair ids")
    comp = {}
    for (g1, f1), gf1 in a.comp.items():
        for (g2, f2), gf2 in b.comp.items():
            comp[(mors[(g1, g2)][0], mors[(f1, f2)][0])] = mors[(gf1, gf2)][0]
    cat = ProductCategory(
        name or f"{a.name}x{b.name}",
        tuple(objs.values()),
        {m: (d, c) for m, d, c in mors.values()},
        {objs[(x, y)]: mors[(a.identity[x], b.identity[y])][0] for (x, y) in objs},
        comp,
    )
    object.__setattr__(cat, "left", a)
    object.__setattr__(cat, "right", b)
    object.__setattr__(cat, "pair_obj", objs)
    object.__setattr__(cat, "pair_mor", {k: v[0] for k, v in mors.items()})
    object.__setattr__(cat, "split_obj", {v: k for k, v in objs.items()})
    object.__setattr__(cat, "split_mor", {v[0]: k for k, v in mors.items()})
    return cat


def terminal_category(name: str = "1", obj: str = "*") -> FinCategory:
    return FinCategory.build(name, [obj], [(f"id_{obj}", obj, obj)], {obj: f"id_{obj}"},
                             {(f"id_{obj}", f"id_{obj}"): f"id_{obj}"})


# -- functors ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Functor:
    src: FinCategory
    dst: FinCategory
    obj_map: Mapping[str, str]
    mor_map: Mapping[str, str]
    name: str = "F"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Functor):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and dict(self.obj_map) == dict(other.obj_map)
            and dict(self.mor_map) == dict(other.mor_map)
        )

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.obj_map.items())))

    def __repr__(self) -> str:
        return f"Functor({self.name!r}: {self.src.name} -> {self.dst.name})"

    def obj(self, a: str) -> str:
        return self.obj_map[a]

    def mor(self, f: str) -> str:
        try:
            return self.mor_map[f]
        except KeyError:
            raise IllTyped(f"{self.name} undefined on {f!r}") from None

    def validate(self) -> None:
        for a in self.src.objects:
            if self.obj_map.get(a) not in set(self.dst.objects):
                raise MalformedInput(f"functor {self.name}: object {a} unmapped or dangling")
        for f in self.src.morphisms:
            if self.mor_map.get(f) not in self.dst.morphisms:
                raise MalformedInput(f"functor {self.name}: morphism {f} unmapped or dangling")
        extra = set(self.obj_map) - set(self.src.objects) | set(self.mor_map) - set(self.src.morphisms)
        if extra:
            raise MalformedInput(f"functor {self.name}: entries for unknown ids {sorted(extra)}")


def identity_functor(c: FinCategory) -> Functor:
    return Functor(c, c, {a: a for a in c.objects}, {f: f for f in c.morphisms}, f"Id_{c.name}")


def compose_functors(g: Functor, f: Functor, name: str | None = None) -> Functor:
    """``g . f`` (apply f first)."""
    if f.dst != g.src:
        raise ShapeMismatch(f"cannot compose {g.name} after {f.name}: {f.dst.name} != {g.src.name}")
    return Functor(
        f.src,
        g.dst,
        {a: g.obj_map[f.obj_map[a]] for a in f.src.objects},
        {m: g.mor_map[f.mor_map[m]] for m in f.src.morphisms},
        name or f"{g.name}.{f.name}",
    )


def constant_functor(src: FinCategory, dst: FinCategory, obj: str, name: str | None = None) -> Functor:
    return Functor(src, dst, {a: obj for a in src.objects},
                   {f: dst.identity[obj] for f in src.morphisms}, name or f"const_{obj}")


def product_functor(f: Functor, g: Functor, src: ProductCategory | None = None,
                    dst: ProductCategory | None = None) -> Functor:
    src = src or product_category(f.src, g.src)
    dst = dst or product_category(f.dst, g.dst)
    return Functor(
        src,
        dst,
        {p: dst.pair_obj[(f.obj(x), g.obj(y))] for p, (x, y) in src.split_obj.items()},
        {p: dst.pair_mor[(f.mor(x), g.mor(y))] for p, (x, y) in src.split_mor.items()},
        f"{f.name}x{g.name}",
    )


def pairing_functor(f: Functor, g: Functor, dst: ProductCategory | None = None) -> Functor:
    """``<f, g>: C -> A x B``."""
    if f.src != g.src:
        raise ShapeMismatch("pairing needs functors with a common source")
    dst = dst or product_category(f.dst, g.dst)
    return Functor(
        f.src,
        dst,
        {a: dst.pair_obj[(f.obj(a), g.obj(a))] for a in f.src.objects},
        {m: dst.pair_mor[(f.mor(m), g.mor(m))] for m in f.src.morphisms},
        f"<{f.name},{g.name}>",
    )


def projection(p: ProductCategory, side: int) -> Functor:
    target = p.left if side == 0 else p.right
    return Functor(p, target, {o: xy[side] for o, xy in p.split_obj.items()},
                   {m: fg[side] for m, fg in p.split_mor.items()}, f"pi{side}")


# -- natural transformations --------------------------------------------------


@dataclass(frozen=True, eq=False)
class NatTrans:
    src: Functor
    dst: Functor
    components: Mapping[str, str]
    name: str = "t"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NatTrans):
            return NotImplemented
        return self.src == other.src and self.dst == other.dst and dict(self.components) == dict(other.components)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.components.items())))

    def at(self, a: str) -> str:
        try:
            return self.components[a]
        except KeyError:
            raise IllTyped(f"{self.name} has no component at {a!r}") from None

    def validate(self) -> None:
        if self.src.src != self.dst.src or self.src.dst != self.dst.dst:
            raise ShapeMismatch(f"{self.name}: functors {self.src.name}, {self.dst.name} are not parallel")
        cat = self.src.dst
        for a in self.src.src.objects:
            if self.components.get(a) not in cat.morphisms:
                raise MalformedInput(f"{self.name}: component at {a} missing or dangling")


def identity_nat(f: Functor) -> NatTrans:
    return NatTrans(f, f, {a: f.dst.identity[f.obj(a)] for a in f.src.objects}, f"1_{f.name}")


def vertical(t2: NatTrans, t1: NatTrans) -> NatTrans:
    """``t2 . t1`` for ``t1: F -> G``, ``t2: G -> H``."""
    if t1.dst != t2.src:
        raise ShapeMismatch(f"vertical: cod of {t1.name} is not dom of {t2.name}")
    cat = t1.src.dst
    return NatTrans(t1.src, t2.dst, {a: cat.compose(t2.at(a), t1.at(a)) for a in t1.src.src.objects},
                    f"{t2.name}.{t1.name}")


def whisker_left(h: Functor, t: NatTrans) -> NatTrans:
    """``H t: H F -> H G``."""
    if t.src.dst != h.src:
        raise ShapeMismatch(f"whisker-left: {h.name} does not start at {t.src.dst.name}")
    return NatTrans(compose_functors(h, t.src), compose_functors(h, t.dst),
                    {a: h.mor(t.at(a)) for a in t.src.src.objects}, f"{h.name}{t.name}")


def whisker_right(t: NatTrans, k: Functor) -> NatTrans:
    """``t K: F K -> G K``."""
    if k.dst != t.src.src:
        raise ShapeMismatch(f"whisker-right: {k.name} does not land in {t.src.src.name}")
    return NatTrans(compose_functors(t.src, k), compose_functors(t.dst, k),
                    {a: t.at(k.obj(a)) for a in k.src.objects}, f"{t.name}{k.name}")


def horizontal(s: NatTrans, t: NatTrans) -> NatTrans:
    """``s * t: F G -> F' G'`` for ``s: F -> F'``, ``t: G -> G'``."""
    if t.src.dst != s.src.src:
        raise ShapeMismatch("horizontal: inner codomain differs from outer domain")
    cat = s.src.dst
    comps = {a: cat.compose(s.at(t.dst.obj(a)), s.src.mor(t.at(a))) for a in t.src.src.objects}
    return NatTrans(compose_functors(s.src, t.src), compose_functors(s.dst, t.dst), comps,
                    f"{s.name}*{t.name}")


def compose_2cells(kind: str, *args) -> NatTrans:
    ops = {
        "vertical": vertical,
        "horizontal": horizontal,
        "whisker-left": whisker_left,
        "whisker-right": whisker_right,
    }
    if kind not in ops:
        raise ValueError(f"unknown 2-cell composition {kind!r}")
    return ops[kind](*args)


# -- law sets ------------------------------------------------------------------


def category_laws(c: FinCategory) -> list[Law]:
    mors = c.morphisms

    def typing_bindings():
        for g, f in c.composable_pairs():
            yield {"g": g, "f": f}

    def typing_eval(b):
        g, f = b["g"], b["f"]
        return typing_leg(c, c.compose(g, f), c.dom(f), c.cod(g))

    def id_bindings():
        for f in mors:
            yield {"f": f, "side": "right"}
            yield {"f": f, "side": "left"}

    def id_eval(b):
        f = b["f"]
        if b["side"] == "right":
            idd = c.identity[c.dom(f)]
            return c.chain(("id_dom", idd), ("f", f)), Leg(("f",), f)
        idc = c.identity[c.cod(f)]
        return c.chain(("f", f), ("id_cod", idc)), Leg(("f",), f)

    def assoc_bindings():
        for g, f in c.composable_pairs():
            for h in c.out_of(c.cod(g)):
                yield {"h": h, "g": g, "f": f}

    def assoc_eval(b):
        h, g, f = b["h"], b["g"], b["f"]
        gf = c.compose(g, f)
        hg = c.compose(h, g)
        return (Leg((f"g.f={gf}", "h.(g.f)"), c.compose(h, gf)),
                Leg((f"h.g={hg}", "(h.g).f"), c.compose(hg, f)))

    return [
        Law("comp-typing", typing_bindings, typing_eval),
        Law("identity-law", id_bindings, id_eval),
        Law("associativity", assoc_bindings, assoc_eval),
    ]


def check_category(c: FinCategory) -> Report:
    c.validate()
    return run(category_laws(c), c.name)


def functor_laws(fn: Functor) -> list[Law]:
    s, d = fn.src, fn.dst

    def typing_eval(b):
        f = b["f"]
        return typing_leg(d, fn.mor(f), fn.obj(s.dom(f)), fn.obj(s.cod(f)))

    def id_eval(b):
        a = b["A"]
        return Leg((f"{fn.name}(id_{a})",), fn.mor(s.identity[a])), Leg(("id",), d.identity[fn.obj(a)])

    def comp_eval(b):
        g, f = b["g"], b["f"]
        return (Leg((f"{fn.name}(g.f)",), fn.mor(s.compose(g, f))),
                d.chain((f"{fn.name}(f)", fn.mor(f)), (f"{fn.name}(g)", fn.mor(g))))

    return [
        Law("functor-typing", lambda: ({"f": f} for f in s.morphisms), typing_eval),
        Law("functor-identity", lambda: ({"A": a} for a in s.objects), id_eval),
        Law("functor-composition", lambda: ({"g": g, "f": f} for g, f in s.composable_pairs()), comp_eval),
    ]


def check_functor(fn: Functor) -> Report:
    fn.src.validate()
    fn.dst.validate()
    fn.validate()
    return run(functor_laws(fn), fn.name)


def naturality_laws(t: NatTrans) -> list[Law]:
    F, G = t.src, t.dst
    s, d = F.src, F.dst

    def typing_eval(b):
        a = b["A"]
        return typing_leg(d, t.at(a), F.obj(a), G.obj(a))

    def square_eval(b):
        f = b["f"]
        a, a2 = s.dom(f), s.cod(f)
        return (d.chain((f"{t.name}_{a}", t.at(a)), (f"{G.name}(f)", G.mor(f))),
                d.chain((f"{F.name}(f)", F.mor(f)), (f"{t.name}_{a2}", t.at(a2))))

    return [
        Law("component-typing", lambda: ({"A": a} for a in s.objects), typing_eval),
        Law("naturality", lambda: ({"f": f} for f in s.morphisms), square_eval),
    ]


def check_naturality(t: NatTrans) -> Report:
    t.validate()
    t.src.validate()
    t.dst.validate()
    return run(naturality_laws(t), t.name)


def component_laws(cat: FinCategory, objects: Sequence[str], comp: Callable[[str], str],
                   src_obj: Callable[[str], str], dst_obj: Callable[[str], str],
                   src_mor: Callable[[str], str], dst_mor: Callable[[str], str],
                   morphisms: Iterable[str], dom: Callable[[str], str], cod: Callable[[str], str],
                   label: str, prefix: str) -> list[Law]:
    """Typing and naturality laws for a transformation given by raw callables."""
    morphisms = list(morphisms)

    def typing_eval(b):
        a = b["A"]
        return typing_leg(cat, comp(a), src_obj(a), dst_obj(a))

    def square_eval(b):
        f = b["f"]
        a, a2 = dom(f), cod(f)
        return (cat.chain((f"{label}_{a}", comp(a)), ("G(f)", dst_mor(f))),
                cat.chain(("F(f)", src_mor(f)), (f"{label}_{a2}", comp(a2))))

    return [
        Law(f"{prefix}-typing", lambda: ({"A": a} for a in objects), typing_eval),
        Law(f"{prefix}-natural", lambda: ({"f": f} for f in morphisms), square_eval),
    ]


def full_subcategory(c: FinCategory, objects: Iterable[str], name: str | None = None) -> FinCategory:
    keep = [a for a in c.objects if a in set(objects)]
    mors = [(m, d, e) for m, (d, e) in c.morphisms.items() if d in keep and e in keep]
    ids = {m for m, _, _ in mors}
    comp = {k: v for k, v in c.comp.items() if k[0] in ids and k[1] in ids}
    return FinCategory.build(name or f"{c.name}|{','.join(keep)}", keep, mors,
                             {a: c.identity[a] for a in keep}, comp)


def inclusion_functor(sub: FinCategory, c: FinCategory, name: str = "incl") -> Functor:
    return Functor(sub, c, {a: a for a in sub.objects}, {f: f for f in sub.morphisms}, name)
