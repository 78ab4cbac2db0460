"""Suite dispatch over a loaded bundle and the report document built from it."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .constructions import GradedAlgebra, graded_algebra_laws
from .core import FinCategory, ProductCategory, category_laws
from .graded import (
    CommutativeGradedMonad,
    GradedMonad,
    GradedMorphism,
    commutative_laws,
    graded_monad_laws,
    graded_morphism_laws,
)
from .laws import Law, Leg, Report, Witness, replay, run
from .localisable import (
    FormalMonad,
    MonadMorphismFamily,
    Pairing,
    PresheafOfCategories,
    formal_monad_laws,
    monad_morphism_family_laws,
    presheaf_laws,
)
from .monoidal import MonoidalStructure, monoidal_laws
from .serialize import Bundle, digest, dump_doc

SUITES = ("all", "category", "monoidal", "graded", "commutative", "morphism", "algebra", "localisable")

DESCRIPTIONS = {
    "comp-typing": "a recorded composite has the boundary of the pair it composes",
    "identity-law": "identities are units for composition",
    "associativity": "composition (or graded multiplication) is associative",
    "functor-typing": "the functor sends a morphism to one between the images of its ends",
    "functor-identity": "the functor preserves identities",
    "functor-composition": "the functor preserves composites",
    "component-typing": "each component goes between the images of its object",
    "naturality": "the naturality square commutes",
    "associator-typing": "alpha_{A,B,C}: A(x)(B(x)C) -> (A(x)B)(x)C",
    "unitor-typing": "lambda_A: I(x)A -> A and rho_A: A(x)I -> A",
    "associator-natural": "the associator is natural in all three variables",
    "unitor-natural": "the unitors are natural",
    "associator-iso": "the associator is invertible",
    "unitor-iso": "the unitors are invertible",
    "pentagon": "the pentagon commutes",
    "triangle": "the triangle commutes",
    "phi-typing": "phi has the boundary fixed by the variant",
    "phibar-typing": "phibar has the boundary fixed by the variant",
    "phi-natural": "phi is natural in both arguments",
    "monoidal-assoc": "phi is compatible with the associators",
    "monoidal-right-unit": "phi and phibar are compatible with the right unitors",
    "monoidal-left-unit": "phi and phibar are compatible with the left unitors",
    "transformation-typing": "each component goes between the images of its object",
    "transformation-natural": "the transformation is natural",
    "transformation-tensor": "the transformation is compatible with phi",
    "transformation-unit": "the transformation is compatible with phibar",
    "F-mor-typing": "F_f has components F_X A -> F_Y A",
    "F-mor-natural": "F_f is natural",
    "F-identity": "F sends grade identities to identity transformations",
    "F-composition": "F preserves composition of grade morphisms",
    "gamma-typing": "gamma_{X,Y}: F_X F_Y -> F_{X(x)Y}",
    "gamma-natural": "gamma is natural in the base object",
    "gamma-natural-grade": "gamma is natural in both grades",
    "delta-typing": "delta: Id -> F_I",
    "delta-natural": "delta is natural",
    "unit-right": "gamma_{X,I} . F_X delta = F_{rho}",
    "unit-left": "gamma_{I,X} . delta F_X = F_{lambda}",
    "composite-structure": "the pasted structure on F_X F_Y is well typed",
    "omega-typing": "omega has the boundary fixed by the variant",
    "omega-natural": "omega is natural in the base object",
    "omega-natural-grade": "omega is natural in the grade",
    "morphism-multiplication": "omega is compatible with the multiplications",
    "morphism-unit": "omega is compatible with the units",
    "algebra-typing": "a_{X,N}: F_X A(N) -> A(X(x)N)",
    "algebra-natural-grade": "the action is natural in the grade X",
    "algebra-natural-index": "the action is natural in the index N",
    "algebra-unit": "a_{I,N} . delta = id",
    "algebra-mult": "a_{X(x)Y,N} . gamma = a_{X,Y(x)N} . F_X a_{Y,N}",
    "presheaf-identity": "restriction along an identity is the identity",
    "presheaf-composition": "restriction respects composition in the site",
    "monad-typing": "mu and eta have the monad boundaries at each element",
    "monad-natural": "mu and eta are natural at each element",
    "monad-assoc": "mu . T mu = mu . mu T at each element",
    "monad-unit": "mu . eta T = id = mu . T eta at each element",
    "restrict-T": "restriction commutes with T",
    "restrict-mu": "restriction commutes with mu",
    "restrict-eta": "restriction commutes with eta",
    "phi-mult": "phi . mu^S = mu^T . phi T . S phi",
    "phi-unit": "phi . eta^S = eta^T",
    "restrict-phi": "restriction commutes with phi",
    "pairing-components": "F_u agrees with embed_u . T_u . localise_u",
}


def describe(law_id: str) -> str:
    leaf = law_id.rsplit("/", 1)[-1]
    return DESCRIPTIONS.get(leaf, "")


@dataclass
class Subject:
    resource: str
    check: str
    laws: Callable[[], list[Law]]
    prepare: Callable[[], None]


def _underlying(t):
    return t.underlying if isinstance(t, CommutativeGradedMonad) else t


def subjects(bundle: Bundle, suite: str = "all") -> list[Subject]:
    """Checks implied by ``suite``, in resource order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    want = (lambda s: True) if suite == "all" else (lambda s: s == suite)
    out: list[Subject] = []
    for name, obj in bundle.resources.items():
        add = lambda check, laws, prep: out.append(Subject(name, check, laws, prep)) if want(check) else None
        if isinstance(obj, MonoidalStructure):
            add("monoidal", lambda o=obj: monoidal_laws(o), obj.validate)
        elif isinstance(obj, FinCategory) and not isinstance(obj, ProductCategory):
            add("category", lambda o=obj: category_laws(o), obj.validate)
        elif isinstance(obj, CommutativeGradedMonad):
            add("graded", lambda o=obj: graded_monad_laws(o.underlying), obj.underlying.validate)
            add("commutative", lambda o=obj: commutative_laws(o), obj.validate)
        elif isinstance(obj, GradedMonad):
            add("graded", lambda o=obj: graded_monad_laws(o), obj.validate)
        elif isinstance(obj, GradedMorphism):
            add("morphism", lambda o=obj: graded_morphism_laws(o), obj.validate)
        elif isinstance(obj, GradedAlgebra):
            t = _underlying(bundle.links[name]["monad"])
            add("algebra", lambda o=obj, t=t: graded_algebra_laws(o, t), lambda o=obj, t=t: _prep_algebra(o, t))
        elif isinstance(obj, PresheafOfCategories):
            add("localisable", lambda o=obj: presheaf_laws(o), obj.validate)
        elif isinstance(obj, FormalMonad):
            add("localisable", lambda o=obj: formal_monad_laws(o), obj.validate)
        elif isinstance(obj, Pairing):
            add("localisable", lambda o=obj: [pairing_law(o)], lambda o=obj: _prep_pairing(o))
        elif isinstance(obj, MonadMorphismFamily):
            add("localisable", lambda o=obj: monad_morphism_family_laws(o), obj.validate)
    return out


def _prep_algebra(alg: GradedAlgebra, t: GradedMonad) -> None:
    from .constructions import _require_strict
    _require_strict(t)
    alg.validate(t)


def _prep_pairing(p: Pairing) -> None:
    p.formal.validate()
    p.graded.validate()
    for f in (*p.localise.values(), *p.embed.values()):
        f.validate()


def pairing_law(p: Pairing) -> Law:
    """Component agreement of a declared pairing, as a one-binding law."""
    from .errors import PairingMismatch

    def evaluate(b):
        try:
            p.validate()
        except PairingMismatch as exc:
            return Leg(("declared",), "consistent"), Leg(("found",), str(exc))
        return Leg(("declared",), "consistent"), Leg(("found",), "consistent")

    return Law("pairing-components", lambda: iter([{"pairing": p.name}]), evaluate)


def _jobs() -> int:
    try:
        return max(1, int(os.environ.get("GRADCAT_JOBS", "1")))
    except ValueError:
        return 1


def _run_subject(s: Subject) -> tuple[Report, float]:
    start = time.perf_counter()
    s.prepare()
    rep = run(s.laws(), s.resource)
    return rep, time.perf_counter() - start


def run_suite(bundle: Bundle, suite: str = "all", canonical: bool = True) -> dict:
    """Run every selected check.  Structural errors propagate as :class:`WorkbenchError`."""
    subs = subjects(bundle, suite)
    if _jobs() > 1 and len(subs) > 1:
        with ThreadPoolExecutor(_jobs()) as pool:
            results = list(pool.map(_run_subject, subs))
    else:
        results = [_run_subject(s) for s in subs]
    docs = dump_doc(bundle)["resources"]
    entries = []
    for s, (rep, secs) in zip(subs, results):
        laws = []
        for lid, ws in rep.laws.items():
            laws.append({
                "law_id": lid,
                "status": "fail" if ws else "pass",
                "description": describe(lid),
                "witnesses": [{"id": witness_id(s.resource, s.check, lid, i), **w.to_json()}
                              for i, w in enumerate(ws)],
            })
        entry = {"resource": s.resource, "check": s.check, "verdict": "pass" if rep.ok else "fail", "laws": laws}
        if not canonical:
            entry["seconds"] = round(secs, 6)
        entries.append(entry)
    doc = {
        "schema": "report/v1",
        "suite": suite,
        "verdict": "pass" if all(e["verdict"] == "pass" for e in entries) else "fail",
        "subjects": entries,
        "digests": {n: digest(d) for n, d in docs.items()},
    }
    return doc


def witness_id(resource: str, check: str, law_id: str, index: int) -> str:
    return f"{resource}:{check}:{law_id}#{index}"


def find_witness(report: dict, wid: str) -> tuple[dict, dict, dict]:
    for subj in report.get("subjects", []):
        for law in subj["laws"]:
            for w in law["witnesses"]:
                if w["id"] == wid:
                    return subj, law, w
    raise KeyError(wid)


def replay_witness(bundle: Bundle, subj: dict, w: dict) -> bool:
    """Re-evaluate a reported witness against ``bundle``; True iff it still fails."""
    for s in subjects(bundle, subj["check"]):
        if s.resource == subj["resource"]:
            s.prepare()
            return replay(s.laws(), Witness.from_json(w))
    raise KeyError(subj["resource"])


def render_text(report: dict) -> str:
    lines = [f"suite {report['suite']}: {report['verdict'].upper()}"]
    for subj in report["subjects"]:
        bad = [law for law in subj["laws"] if law["status"] == "fail"]
        lines.append(f"  {subj['verdict']:4} {subj['check']:12} {subj['resource']} "
                     f"({len(subj['laws']) - len(bad)}/{len(subj['laws'])} laws)")
        for law in bad:
            lines.append(f"       FAIL {law['law_id']}: {law['description']}")
            for w in law["witnesses"][:3]:
                lines.append("         " + render_witness(w).replace("\n", "\n         "))
            if len(law["witnesses"]) > 3:
                lines.append(f"         ... {len(law['witnesses']) - 3} more")
    return "\n".join(lines) + "\n"


def render_witness(w: dict) -> str:
    binding = ", ".join(f"{k}={v}" for k, v in w["binding"].items())
    return (f"[{w['id']}] at {binding or '-'}\n"
            f"  lhs: {' ; '.join(w['lhs_path'])} = {w['lhs_result']}\n"
            f"  rhs: {' ; '.join(w['rhs_path'])} = {w['rhs_result']}")

