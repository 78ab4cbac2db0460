"""Brute-force reference checks and random instance generators for the tests.

The oracle below works on raw dictionaries and shares no code with the
library's law machinery, so agreement between the two is meaningful.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from gradcat.core import FinCategory, Functor, product_category, terminal_category
from gradcat.constructions import enumerate_functors
from gradcat.monoidal import thin_category
from gradcat.stock import bz2, chain3, diamond, forced_graded_monad, meet_functor, walking_arrow


# -- plain monad oracle ----------------------------------------------------------


def _comp(C: FinCategory, g, f):
    """``g . f`` or None when undefined."""
    if g not in C.morphisms or f not in C.morphisms:
        return None
    if C.morphisms[g][0] != C.morphisms[f][1]:
        return None
    return C.comp.get((g, f))


def _chain(C, *ms):
    """Compose in application order; None as soon as a step is undefined."""
    cur = ms[0] if ms[0] in C.morphisms else None
    for m in ms[1:]:
        if cur is None:
            return None
        cur = _comp(C, m, cur)
    return cur


def _has_type(C, m, d, c):
    return m in C.morphisms and C.morphisms[m] == (d, c)


def plain_monad_ok(C: FinCategory, Tobj: dict, Tmor: dict, mu: dict, eta: dict) -> bool:
    """Monad laws for ``(T, mu, eta)`` on ``C``, evaluated directly on the tables."""
    for f, (a, b) in C.morphisms.items():
        if not _has_type(C, Tmor.get(f), Tobj[a], Tobj[b]):
            return False
    for a in C.objects:
        if Tmor[C.identity[a]] != C.identity[Tobj[a]]:
            return False
    for (g, f), gf in C.comp.items():
        if _comp(C, Tmor[g], Tmor[f]) != Tmor[gf]:
            return False
    for a in C.objects:
        Ta = Tobj[a]
        if not _has_type(C, eta[a], a, Ta) or not _has_type(C, mu[a], Tobj[Ta], Ta):
            return False
    for f, (a, b) in C.morphisms.items():
        if _chain(C, eta[a], Tmor[f]) != _chain(C, f, eta[b]):
            return False
        if _chain(C, mu[a], Tmor[f]) != _chain(C, Tmor[Tmor[f]], mu[b]):
            return False
    for a in C.objects:
        Ta = Tobj[a]
        if _chain(C, Tmor[mu[a]], mu[a]) != _chain(C, mu[Ta], mu[a]):
            return False
        if _chain(C, eta[Ta], mu[a]) != C.identity[Ta]:
            return False
        if _chain(C, Tmor[eta[a]], mu[a]) != C.identity[Ta]:
            return False
    return True


# -- random plain monads -------------------------------------------------------


def small_categories() -> list[FinCategory]:
    """Base categories with at most three objects, thin and non-thin."""
    discrete = FinCategory.build("D2", ["p", "q"], [("id_p", "p", "p"), ("id_q", "q", "q")],
                                 {"p": "id_p", "q": "id_q"}, {("id_p", "id_p"): "id_p", ("id_q", "id_q"): "id_q"})
    span = thin_category("V", ["l", "m", "r"], [("m", "l"), ("m", "r")])
    return [
        terminal_category("T1"),
        walking_arrow(),
        discrete,
        bz2().base,
        chain3().base,
        span,
        product_category(walking_arrow(), bz2().base, "AxBZ2"),
    ]


@dataclass
class PlainCandidate:
    base: FinCategory
    T: Functor
    mu: dict
    eta: dict

    def oracle(self) -> bool:
        return plain_monad_ok(self.base, dict(self.T.obj_map), dict(self.T.mor_map), self.mu, self.eta)


_FUNCTORS: dict[str, list[Functor]] = {}


def _endofunctors(C: FinCategory) -> list[Functor]:
    if C.name not in _FUNCTORS:
        _FUNCTORS[C.name] = enumerate_functors(C, C, 100_000)
    return _FUNCTORS[C.name]


def random_plain(rng: random.Random, C: FinCategory | None = None) -> PlainCandidate:
    """A candidate monad: usually a genuine functor with well-typed components, sometimes not."""
    C = C or rng.choice(small_categories())
    mors = list(C.morphisms)
    if rng.random() < 0.85:
        T = rng.choice(_endofunctors(C))
    else:
        om = {a: rng.choice(C.objects) for a in C.objects}
        T = Functor(C, C, om, {f: rng.choice(mors) for f in mors}, "R")

    def pick(d, c):
        hom = C.hom(d, c)
        return rng.choice(hom) if hom and rng.random() < 0.9 else rng.choice(mors)

    eta = {a: pick(a, T.obj(a)) for a in C.objects}
    mu = {a: pick(T.obj(T.obj(a)), T.obj(a)) for a in C.objects}
    return PlainCandidate(C, Functor(C, C, dict(T.obj_map), dict(T.mor_map), "T"), mu, eta)


# -- random graded monads ------------------------------------------------------------


def random_readers() -> list:
    """Reader monads ``u meet -`` graded by small semilattices over themselves."""
    out = []
    for m in (chain3("C3"), diamond("D")):
        F = {u: meet_functor(m, u, f"T{u}") for u in m.base.objects}
        out.append(forced_graded_monad(m, m.base, F, f"reader-{m.name}"))
    return out
