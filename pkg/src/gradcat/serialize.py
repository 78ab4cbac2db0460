"""JSON bundles of named resources, and their canonical form.

A bundle is ``{"schema": "bundle/v1", "resources": {name: resource}}``.  Each
resource carries its own ``schema`` tag and refers to other resources by
name.  Functors are written inline as ``{"objects": {...}, "morphisms": {...}}``
with source and target implied by where they sit.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from .constructions import GradedAlgebra
from .core import FinCategory, Functor, pair_id, product_category
from .errors import MalformedInput, WorkbenchError
from .graded import CommutativeGradedMonad, GradedMonad, GradedMorphism
from .localisable import FormalMonad, MonadMorphismFamily, Pairing, PresheafOfCategories
from .monoidal import MonoidalStructure, thin_from_semilattice

BUNDLE = "bundle/v1"
SCHEMAS = ("fincat/v1", "semilattice/v1", "monoidal/v1", "graded/v1", "algebra/v1", "presheaf/v1",
           "formalmonad/v1", "pairing/v1", "monadmorphism/v1", "gradedmorphism/v1")


def canonical(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(doc: Any) -> str:
    return hashlib.sha256(canonical(doc).encode()).hexdigest()


@dataclass
class Bundle:
    resources: dict[str, Any] = field(default_factory=dict)  # name -> loaded object
    docs: dict[str, dict] = field(default_factory=dict)  # name -> raw resource document
    links: dict[str, dict] = field(default_factory=dict)  # context an object needs but does not hold

    def add(self, name: str, obj: Any, **links: Any) -> "Bundle":
        self.resources[name] = obj
        if links:
            self.links[name] = links
        return self

    def of_type(self, cls) -> dict[str, Any]:
        return {n: o for n, o in self.resources.items() if isinstance(o, cls)}

    def name_of(self, obj: Any) -> str | None:
        for n, o in self.resources.items():
            if o is obj:
                return n
        return None


# -- loading ----------------------------------------------------------------------------


def _functor(doc: dict, src: FinCategory, dst: FinCategory, name: str) -> Functor:
    return Functor(src, dst, dict(doc["objects"]), dict(doc["morphisms"]), doc.get("name", name))


class _Loader:
    def __init__(self, doc: dict):
        if not isinstance(doc, dict) or doc.get("schema") != BUNDLE:
            raise MalformedInput(f"not a {BUNDLE} document")
        res = doc.get("resources")
        if not isinstance(res, dict):
            raise MalformedInput("bundle has no resources table")
        self.docs = res
        self.done: dict[str, Any] = {}
        self.active: set[str] = set()
        self.links: dict[str, dict] = {}

    def get(self, ref: str, *kinds: type) -> Any:
        if not isinstance(ref, str) or ref not in self.docs:
            raise MalformedInput(f"unresolved reference {ref!r}")
        if ref not in self.done:
            if ref in self.active:
                raise MalformedInput(f"reference cycle through {ref!r}")
            self.active.add(ref)
            self.done[ref] = self.build(ref, self.docs[ref])
            self.active.discard(ref)
        obj = self.done[ref]
        if kinds and not isinstance(obj, kinds):
            raise MalformedInput(f"{ref!r} is a {type(obj).__name__}, expected {' or '.join(k.__name__ for k in kinds)}")
        return obj

    def category(self, ref: str) -> FinCategory:
        obj = self.get(ref, FinCategory, MonoidalStructure)
        return obj.base if isinstance(obj, MonoidalStructure) else obj

    def monoidal(self, ref: str) -> MonoidalStructure:
        return self.get(ref, MonoidalStructure)

    def build(self, name: str, d: dict) -> Any:
        schema = d.get("schema")
        if schema not in SCHEMAS:
            raise MalformedInput(f"{name}: unknown schema {schema!r}")
        return getattr(self, "_" + schema.split("/")[0])(name, d)

    def _fincat(self, name, d):
        return FinCategory.build(name, d["objects"], [tuple(m) for m in d["morphisms"]], d["identity"],
                                 [tuple(c) for c in d["comp"]])

    def _semilattice(self, name, d):
        return thin_from_semilattice(d["elements"], [tuple(p) for p in d["leq"]], name=d.get("category", name))

    def _monoidal(self, name, d):
        C = self.category(d["category"])
        p = product_category(C, C)
        ten_obj = {pair_id(a, b): ab for a, b, ab in d["tensor"]["objects"]}
        ten_mor = {pair_id(f, g): fg for f, g, fg in d["tensor"]["morphisms"]}
        tensor = Functor(p, C, ten_obj, ten_mor, "(x)")
        assoc = {(a, b, c): m for a, b, c, m in d["assoc"]}
        lunit, runit = dict(d["lunit"]), dict(d["runit"])

        def inv(table):
            return {k: n for k, m in table.items()
                    if m in C.morphisms and (n := C.inverse(m)) is not None}

        return MonoidalStructure(C, tensor, d["unit"], assoc, lunit, runit, inv(assoc), inv(lunit), inv(runit), name)

    def _graded(self, name, d):
        grading = self.monoidal(d["grading"])
        C = self.category(d["base"])
        F = {x: _functor(f, C, C, f"F_{x}") for x, f in d["F"].items()}
        g = GradedMonad(grading, C, F, {f: dict(c) for f, c in d["F_mor"].items()},
                        {(x, y): dict(c) for x, y, c in d["gamma"]}, dict(d["delta"]), name)
        com = d.get("commutative")
        if com is None:
            return g
        phi = {x: {(a, b): m for a, b, m in rows} for x, rows in com["phi"].items()}
        return CommutativeGradedMonad(g, com["variant"], self.monoidal(com["monoidal"]), phi, dict(com["phibar"]))

    def _algebra(self, name, d):
        t = self.get(d["monad"], GradedMonad, CommutativeGradedMonad)
        g = t.underlying if isinstance(t, CommutativeGradedMonad) else t
        self.links[name] = {"monad": t}
        carrier = _functor(d["carrier"], g.grading.base, g.base, f"{name}_carrier")
        return GradedAlgebra(carrier, {(x, n): m for x, n, m in d["act"]}, name)

    def _presheaf(self, name, d):
        site = self.monoidal(d["site"])
        at = {u: self.category(r) for u, r in d["at"].items()}
        restrict = {}
        for r, f in d["restrict"].items():
            if r not in site.base.morphisms:
                raise MalformedInput(f"{name}: restriction along unknown site morphism {r!r}")
            v, u = site.base.morphisms[r]
            if u not in at or v not in at:
                raise MalformedInput(f"{name}: restriction {r} between elements without categories")
            restrict[r] = _functor(f, at[u], at[v], f"R({r})")
        return PresheafOfCategories(site, at, restrict, name)

    def _formalmonad(self, name, d):
        p = self.get(d["presheaf"], PresheafOfCategories)
        T = {}
        for u, f in d["T"].items():
            if u not in p.at:
                raise MalformedInput(f"{name}: T at unknown element {u!r}")
            T[u] = _functor(f, p.at[u], p.at[u], f"T_{u}")
        return FormalMonad(p, T, {u: dict(c) for u, c in d["mu"].items()},
                           {u: dict(c) for u, c in d["eta"].items()}, name)

    def _pairing(self, name, d):
        formal = self.get(d["formal"], FormalMonad)
        t = self.get(d["graded"], GradedMonad, CommutativeGradedMonad)
        g = t.underlying if isinstance(t, CommutativeGradedMonad) else t
        at = formal.base.at
        for u in list(d["localise"]) + list(d["embed"]):
            if u not in at:
                raise MalformedInput(f"{name}: component map at unknown element {u!r}")
        loc = {u: _functor(f, g.base, at[u], f"localise_{u}") for u, f in d["localise"].items()}
        emb = {u: _functor(f, at[u], g.base, f"embed_{u}") for u, f in d["embed"].items()}
        return Pairing(formal, g, loc, emb, name)

    def _monadmorphism(self, name, d):
        src, dst = self.get(d["src"], Pairing), self.get(d["dst"], Pairing)
        self.links[name] = {"src": src, "dst": dst}
        return MonadMorphismFamily(src.formal, dst.formal, {u: dict(c) for u, c in d["phibar"].items()}, name)

    def _gradedmorphism(self, name, d):
        def monad(ref):
            t = self.get(ref, GradedMonad, CommutativeGradedMonad)
            return t.underlying if isinstance(t, CommutativeGradedMonad) else t

        src, dst = monad(d["src"]), monad(d["dst"])
        Om = _functor(d["Omega"], src.base, dst.base, "Omega")
        if "pairing" in d:
            self.links[name] = {"src": self.get(d["pairing"]["src"], Pairing),
                                "dst": self.get(d["pairing"]["dst"], Pairing)}
        return GradedMorphism(d["variant"], src, dst, Om, {x: dict(c) for x, c in d["omega"].items()}, name)


def load_doc(doc: Any) -> Bundle:
    """Build every resource of a parsed bundle; structural problems raise :class:`MalformedInput`."""
    try:
        loader = _Loader(doc)
        for name in loader.docs:
            loader.get(name)
    except WorkbenchError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise MalformedInput(f"bundle does not match its schemas: {type(exc).__name__}: {exc}") from exc
    order = list(loader.docs)
    return Bundle({n: loader.done[n] for n in order}, {n: loader.docs[n] for n in order}, loader.links)


def load_text(text: str) -> Bundle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"not valid JSON: {exc}") from exc
    return load_doc(doc)


def load_path(path: str) -> Bundle:
    with open(path, encoding="utf-8") as fh:
        return load_text(fh.read())


# -- dumping -------------------------------------------------------------------------------


def _same(a: Any, b: Any) -> bool:
    """Same name and structure, for resource kinds that get rebuilt independently."""
    if getattr(a, "name", None) != getattr(b, "name", None):
        return False
    if isinstance(a, MonoidalStructure) and isinstance(b, MonoidalStructure):
        return (a.base == b.base and a.tensor == b.tensor and a.unit == b.unit and dict(a.assoc) == dict(b.assoc)
                and dict(a.lunit) == dict(b.lunit) and dict(a.runit) == dict(b.runit))
    if isinstance(a, FinCategory) and isinstance(b, FinCategory):
        return a == b
    return False


def _ftable(f: Functor) -> dict:
    return {"objects": dict(f.obj_map), "morphisms": dict(f.mor_map)}


def _comps(table) -> dict:
    return {k: dict(v) for k, v in table.items()}


class _Dumper:
    def __init__(self, bundle: Bundle):
        self.bundle = bundle
        self.names: list[tuple[Any, str]] = []
        self.out: dict[str, dict] = {}
        for n, o in bundle.resources.items():
            self.names.append((o, n))
            if isinstance(o, CommutativeGradedMonad):
                self.names.append((o.underlying, n))

    def ref(self, obj: Any, hint: str) -> str:
        for o, n in self.names:
            if o is obj:
                return n
        for o, n in self.names:
            if _same(o, obj):
                return n
        if isinstance(obj, MonoidalStructure) and hint == obj.base.name:
            hint += ".mon"
        taken = {n for _, n in self.names}
        name, i = hint, 1
        while name in taken:
            i += 1
            name = f"{hint}-{i}"
        self.names.append((obj, name))
        self.emit(name, obj)
        return name

    def monad_ref(self, g: GradedMonad) -> str:
        return self.ref(g, g.name)

    def emit(self, name: str, obj: Any) -> None:
        self.out[name] = self.encode(name, obj)

    def encode(self, name: str, obj: Any) -> dict:
        links = self.bundle.links.get(name, {})
        if isinstance(obj, MonoidalStructure):
            C = obj.base
            p = obj.pairs
            return {
                "schema": "monoidal/v1",
                "category": self.ref(C, C.name),
                "tensor": {"objects": [[a, b, obj.tensor.obj(o)] for o, (a, b) in p.split_obj.items()],
                           "morphisms": [[f, g, obj.tensor.mor(m)] for m, (f, g) in p.split_mor.items()]},
                "unit": obj.unit,
                "assoc": [[a, b, c, m] for (a, b, c), m in obj.assoc.items()],
                "lunit": dict(obj.lunit),
                "runit": dict(obj.runit),
            }
        if isinstance(obj, FinCategory):
            return {
                "schema": "fincat/v1",
                "objects": list(obj.objects),
                "morphisms": [[m, d, c] for m, (d, c) in obj.morphisms.items()],
                "identity": dict(obj.identity),
                "comp": [[g, f, gf] for (g, f), gf in obj.comp.items()],
            }
        if isinstance(obj, CommutativeGradedMonad):
            doc = self.encode_graded(obj.underlying)
            doc["commutative"] = {
                "variant": obj.variant,
                "monoidal": self.ref(obj.base_monoidal, obj.base_monoidal.name),
                "phi": {x: [[a, b, m] for (a, b), m in rows.items()] for x, rows in obj.phi.items()},
                "phibar": dict(obj.phibar),
            }
            return doc
        if isinstance(obj, GradedMonad):
            return self.encode_graded(obj)
        if isinstance(obj, GradedAlgebra):
            monad = links.get("monad")
            if monad is None:
                raise MalformedInput(f"{name}: an algebra needs its monad as a link")
            return {"schema": "algebra/v1", "monad": self.ref(monad, monad.name),
                    "carrier": _ftable(obj.carrier), "act": [[x, n, m] for (x, n), m in obj.act.items()]}
        if isinstance(obj, PresheafOfCategories):
            return {"schema": "presheaf/v1", "site": self.ref(obj.site, obj.site.name),
                    "at": {u: self.ref(c, c.name) for u, c in obj.at.items()},
                    "restrict": {r: _ftable(f) for r, f in obj.restrict.items()}}
        if isinstance(obj, FormalMonad):
            return {"schema": "formalmonad/v1", "presheaf": self.ref(obj.base, obj.base.name),
                    "T": {u: _ftable(f) for u, f in obj.T.items()}, "mu": _comps(obj.mu), "eta": _comps(obj.eta)}
        if isinstance(obj, Pairing):
            return {"schema": "pairing/v1", "formal": self.ref(obj.formal, obj.formal.name),
                    "graded": self.monad_ref(obj.graded),
                    "localise": {u: _ftable(f) for u, f in obj.localise.items()},
                    "embed": {u: _ftable(f) for u, f in obj.embed.items()}}
        if isinstance(obj, MonadMorphismFamily):
            src, dst = links.get("src"), links.get("dst")
            if src is None or dst is None:
                raise MalformedInput(f"{name}: a monad morphism family needs its src/dst pairings as links")
            return {"schema": "monadmorphism/v1", "src": self.ref(src, src.name), "dst": self.ref(dst, dst.name),
                    "phibar": _comps(obj.phibar)}
        if isinstance(obj, GradedMorphism):
            doc = {"schema": "gradedmorphism/v1", "variant": obj.variant, "src": self.monad_ref(obj.src),
                   "dst": self.monad_ref(obj.dst), "Omega": _ftable(obj.Omega), "omega": _comps(obj.omega)}
            if "src" in links and "dst" in links:
                doc["pairing"] = {"src": self.ref(links["src"], links["src"].name),
                                  "dst": self.ref(links["dst"], links["dst"].name)}
            return doc
        raise MalformedInput(f"{name}: cannot serialise a {type(obj).__name__}")

    def encode_graded(self, g: GradedMonad) -> dict:
        return {
            "schema": "graded/v1",
            "grading": self.ref(g.grading, g.grading.name),
            "base": self.ref(g.base, g.base.name),
            "F": {x: _ftable(f) for x, f in g.F_obj.items()},
            "F_mor": _comps(g.F_mor),
            "gamma": [[x, y, dict(c)] for (x, y), c in g.gamma.items()],
            "delta": dict(g.delta),
        }


def dump_doc(bundle: Bundle) -> dict:
    d = _Dumper(bundle)
    for name, obj in bundle.resources.items():
        d.emit(name, obj)
    return {"schema": BUNDLE, "resources": d.out}


def dump_text(bundle: Bundle) -> str:
    return canonical(dump_doc(bundle))
