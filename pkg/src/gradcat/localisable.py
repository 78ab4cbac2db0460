"""Semilattice-graded monads against formal monads in presheaves of categories.

The site is a thin monoidal grading ``Z`` (a finite meet-semilattice with
top as unit).  A presheaf assigns a category to every element and a
restriction functor ``at(u) -> at(v)`` to every ``v <= u``; everything is
strict.  A :class:`Pairing` records how a graded monad on ``C`` corresponds
to a formal monad: per element, ``localise_u: C -> at(u)`` and
``embed_u: at(u) -> C`` with ``localise_u . embed_u = Id`` and
``F_u = embed_u . T_u . localise_u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import FinCategory, Functor, compose_functors, functor_laws, identity_functor
from .errors import MalformedInput, NotIdentityCarrier, PairingMismatch, ShapeMismatch
from .graded import GradedMonad, GradedMorphism
from .laws import Law, Leg, Report, family, prefixed, run, typing_leg
from .monoidal import OPLAX, MonoidalStructure

Components = Mapping[str, str]


def _site_arrows(site: MonoidalStructure) -> list[tuple[str, str, str]]:
    """``(r, v, u)`` for every site morphism ``r: v -> u``."""
    return [(r, d, c) for r, (d, c) in site.base.morphisms.items()]


@dataclass(frozen=True, eq=False)
class PresheafOfCategories:
    site: MonoidalStructure
    at: Mapping[str, FinCategory]
    restrict: Mapping[str, Functor]  # site morphism v -> u  |->  at(u) -> at(v)
    name: str = "P"

    def validate(self) -> None:
        Z = self.site.base
        if not Z.is_thin:
            raise MalformedInput(f"{self.name}: site {Z.name} must be thin")
        if set(self.at) != set(Z.objects):
            raise MalformedInput(f"{self.name}: need one category per site element")
        for c in self.at.values():
            c.validate()
        if set(self.restrict) != set(Z.morphisms):
            raise MalformedInput(f"{self.name}: need one restriction per site morphism")
        for r, v, u in _site_arrows(self.site):
            R = self.restrict[r]
            if R.src != self.at[u] or R.dst != self.at[v]:
                raise MalformedInput(f"{self.name}: restriction along {r} must go at({u}) -> at({v})")
            R.validate()


def presheaf_laws(p: PresheafOfCategories) -> list[Law]:
    Z = p.site.base
    R = p.restrict
    laws = family("r", list(Z.morphisms), lambda r: prefixed("restrict", functor_laws(R[r])))

    def identity(b):
        u, f = b["u"], b["f"]
        return Leg((f"R(id_{u})",), R[Z.identity[u]].mor(f)), Leg(("f",), f)

    def triples():
        for s, w, v in _site_arrows(p.site):
            for r, v2, u in _site_arrows(p.site):
                if v2 == v:
                    for f in p.at[u].morphisms:
                        yield {"r": r, "s": s, "f": f}

    def composition(b):
        r, s, f = b["r"], b["s"], b["f"]
        sr = Z.compose(r, s)
        return (Leg((f"R({sr})",), R[sr].mor(f)),
                Leg((f"R({r})", f"R({s})"), R[s].mor(R[r].mor(f))))

    return laws + [
        Law("presheaf-identity", lambda: ({"u": u, "f": f} for u in Z.objects for f in p.at[u].morphisms), identity),
        Law("presheaf-composition", triples, composition),
    ]


def check_presheaf(p: PresheafOfCategories) -> Report:
    p.validate()
    return run(presheaf_laws(p), p.name)


# -- formal monads ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FormalMonad:
    base: PresheafOfCategories
    T: Mapping[str, Functor]
    mu: Mapping[str, Components]
    eta: Mapping[str, Components]
    name: str = "T"

    def validate(self) -> None:
        self.base.validate()
        elems = self.base.site.base.objects
        for label, table in (("T", self.T), ("mu", self.mu), ("eta", self.eta)):
            if set(table) != set(elems):
                raise ShapeMismatch(f"{self.name}: {label} needs one entry per site element")
        for u in elems:
            C = self.base.at[u]
            if self.T[u].src != C or self.T[u].dst != C:
                raise ShapeMismatch(f"{self.name}: T_{u} is not an endofunctor of at({u})")
            self.T[u].validate()
            for label, comps in (("mu", self.mu[u]), ("eta", self.eta[u])):
                if set(comps) != set(C.objects):
                    raise ShapeMismatch(f"{self.name}: {label}_{u} needs one component per object")
                if any(m not in C.morphisms for m in comps.values()):
                    raise ShapeMismatch(f"{self.name}: {label}_{u} has a dangling component")


def formal_monad_laws(m: FormalMonad) -> list[Law]:
    P = m.base
    Z = P.site.base
    T, mu, eta, R = m.T, m.mu, m.eta, P.restrict
    laws = family("u", Z.objects, lambda u: prefixed("T", functor_laws(T[u])))

    def per_object():
        return ({"u": u, "A": a} for u in Z.objects for a in P.at[u].objects)

    def typing_keys():
        return ({"u": u, "A": a, "map": k} for u in Z.objects for a in P.at[u].objects for k in ("mu", "eta"))

    def typing(b):
        u, a, k = b["u"], b["A"], b["map"]
        C, Tu = P.at[u], T[u]
        if k == "mu":
            return typing_leg(C, mu[u][a], Tu.obj(Tu.obj(a)), Tu.obj(a))
        return typing_leg(C, eta[u][a], a, Tu.obj(a))

    def natural_keys():
        return ({"u": u, "f": f, "map": k} for u in Z.objects for f in P.at[u].morphisms for k in ("mu", "eta"))

    def natural(b):
        u, f, k = b["u"], b["f"], b["map"]
        C, Tu = P.at[u], T[u]
        a, a2 = C.dom(f), C.cod(f)
        if k == "mu":
            return (C.chain(("mu", mu[u][a]), ("Tf", Tu.mor(f))),
                    C.chain(("TTf", Tu.mor(Tu.mor(f))), ("mu", mu[u][a2])))
        return C.chain(("eta", eta[u][a]), ("Tf", Tu.mor(f))), C.chain(("f", f), ("eta", eta[u][a2]))

    def assoc(b):
        u, a = b["u"], b["A"]
        C, Tu = P.at[u], T[u]
        return (C.chain(("T mu", Tu.mor(mu[u][a])), ("mu", mu[u][a])),
                C.chain(("mu T", mu[u][Tu.obj(a)]), ("mu", mu[u][a])))

    def unit_keys():
        return ({"u": u, "A": a, "side": s} for u in Z.objects for a in P.at[u].objects for s in ("left", "right"))

    def unit(b):
        u, a = b["u"], b["A"]
        C, Tu = P.at[u], T[u]
        first = eta[u][Tu.obj(a)] if b["side"] == "left" else Tu.mor(eta[u][a])
        return C.chain(("eta T" if b["side"] == "left" else "T eta", first), ("mu", mu[u][a])), \
            Leg(("id",), C.identity[Tu.obj(a)])

    def restrict_T(b):
        r, f = b["r"], b["f"]
        v, u = Z.morphisms[r]
        return Leg(("R", "T_v"), T[v].mor(R[r].mor(f))), Leg(("T_u", "R"), R[r].mor(T[u].mor(f)))

    def restrict_comp(table, label):
        def ev(b):
            r, a = b["r"], b["A"]
            v, u = Z.morphisms[r]
            return Leg((f"{label}_v R",), table[v][R[r].obj(a)]), Leg((f"R {label}_u",), R[r].mor(table[u][a]))
        return ev

    def over_arrows(kind):
        def gen():
            for r, (v, u) in Z.morphisms.items():
                items = P.at[u].morphisms if kind == "f" else P.at[u].objects
                for x in items:
                    yield {"r": r, kind: x}
        return gen

    return laws + [
        Law("monad-typing", typing_keys, typing),
        Law("monad-natural", natural_keys, natural),
        Law("monad-assoc", per_object, assoc),
        Law("monad-unit", unit_keys, unit),
        Law("restrict-T", over_arrows("f"), restrict_T),
        Law("restrict-mu", over_arrows("A"), restrict_comp(mu, "mu")),
        Law("restrict-eta", over_arrows("A"), restrict_comp(eta, "eta")),
    ]


def check_formal_monad(m: FormalMonad) -> Report:
    m.validate()
    return run(formal_monad_laws(m), m.name)


def identity_formal_monad(p: PresheafOfCategories, name: str = "Id") -> FormalMonad:
    Z = p.site.base
    T = {u: identity_functor(p.at[u]) for u in Z.objects}
    ids = {u: {a: p.at[u].identity[a] for a in p.at[u].objects} for u in Z.objects}
    return FormalMonad(p, T, ids, dict(ids), name)


@dataclass(frozen=True, eq=False)
class MonadMorphismFamily:
    """``phibar_u: S_u -> T_u`` for ``src = T`` and ``dst = S`` (the oplax direction)."""

    src: FormalMonad
    dst: FormalMonad
    phibar: Mapping[str, Components]
    name: str = "phi"

    def validate(self) -> None:
        if self.src.base is not self.dst.base:
            P, Q = self.src.base, self.dst.base
            if set(P.at) != set(Q.at) or any(P.at[u] != Q.at[u] for u in P.at):
                raise ShapeMismatch(f"{self.name}: endpoints live on different presheaves")
        P = self.src.base
        if set(self.phibar) != set(P.site.base.objects):
            raise ShapeMismatch(f"{self.name}: need one component family per site element")
        for u, comps in self.phibar.items():
            C = P.at[u]
            if set(comps) != set(C.objects):
                raise ShapeMismatch(f"{self.name}: phi_{u} needs one component per object")
            if any(m not in C.morphisms for m in comps.values()):
                raise MalformedInput(f"{self.name}: phi_{u} has a dangling component")


def monad_morphism_family_laws(fam: MonadMorphismFamily) -> list[Law]:
    T, S = fam.src, fam.dst
    P = T.base
    Z = P.site.base
    phi, R = fam.phibar, P.restrict

    def per_object():
        return ({"u": u, "A": a} for u in Z.objects for a in P.at[u].objects)

    def typing(b):
        u, a = b["u"], b["A"]
        return typing_leg(P.at[u], phi[u][a], S.T[u].obj(a), T.T[u].obj(a))

    def natural(b):
        u, f = b["u"], b["f"]
        C = P.at[u]
        a, a2 = C.dom(f), C.cod(f)
        return (C.chain(("phi", phi[u][a]), ("T f", T.T[u].mor(f))),
                C.chain(("S f", S.T[u].mor(f)), ("phi", phi[u][a2])))

    def mult(b):
        u, a = b["u"], b["A"]
        C, Tu, Su = P.at[u], T.T[u], S.T[u]
        return (C.chain(("mu^S", S.mu[u][a]), ("phi", phi[u][a])),
                C.chain(("S phi", Su.mor(phi[u][a])), ("phi T", phi[u][Tu.obj(a)]), ("mu^T", T.mu[u][a])))

    def unit(b):
        u, a = b["u"], b["A"]
        C = P.at[u]
        return C.chain(("eta^S", S.eta[u][a]), ("phi", phi[u][a])), Leg(("eta^T",), T.eta[u][a])

    def restrict(b):
        r, a = b["r"], b["A"]
        v, u = Z.morphisms[r]
        return Leg(("phi_v R",), phi[v][R[r].obj(a)]), Leg(("R phi_u",), R[r].mor(phi[u][a]))

    return [
        Law("phi-typing", per_object, typing),
        Law("phi-natural", lambda: ({"u": u, "f": f} for u in Z.objects for f in P.at[u].morphisms), natural),
        Law("phi-mult", per_object, mult),
        Law("phi-unit", per_object, unit),
        Law("restrict-phi", lambda: ({"r": r, "A": a} for r, (v, u) in Z.morphisms.items()
                                     for a in P.at[u].objects), restrict),
    ]


def check_monad_morphism_family(fam: MonadMorphismFamily) -> Report:
    fam.validate()
    return run(monad_morphism_family_laws(fam), fam.name)


def identity_family(m: FormalMonad) -> MonadMorphismFamily:
    P = m.base
    comps = {u: {a: P.at[u].identity[m.T[u].obj(a)] for a in P.at[u].objects} for u in P.site.base.objects}
    return MonadMorphismFamily(m, m, comps, f"1_{m.name}")


# -- pairing with graded monads -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Pairing:
    formal: FormalMonad
    graded: GradedMonad
    localise: Mapping[str, Functor]  # C -> at(u)
    embed: Mapping[str, Functor]  # at(u) -> C
    name: str = "pairing"

    def validate(self) -> None:
        """Raise :class:`PairingMismatch` unless the declared correspondence holds componentwise."""
        P, g = self.formal.base, self.graded
        Z, C = P.site.base, g.base
        if g.grading.base != Z or g.grading.unit != P.site.unit:
            raise PairingMismatch(f"{self.name}: graded monad is not graded by the site {Z.name}")
        for u in Z.objects:
            loc, emb = self.localise.get(u), self.embed.get(u)
            if loc is None or emb is None:
                raise PairingMismatch(f"{self.name}: missing localise/embed at {u}")
            if loc.src != C or loc.dst != P.at[u] or emb.src != P.at[u] or emb.dst != C:
                raise PairingMismatch(f"{self.name}: localise/embed at {u} have the wrong boundary")
            if compose_functors(loc, emb) != identity_functor(P.at[u]):
                raise PairingMismatch(f"{self.name}: localise_{u} . embed_{u} is not the identity")
            expected = compose_functors(emb, compose_functors(self.formal.T[u], loc))
            got = g.F(u)
            for a in C.objects:
                if got.obj(a) != expected.obj(a):
                    raise PairingMismatch(f"{self.name}: F_{u}({a}) = {got.obj(a)} but the formal monad "
                                          f"gives {expected.obj(a)}")
            for f in C.morphisms:
                if got.mor(f) != expected.mor(f):
                    raise PairingMismatch(f"{self.name}: F_{u}({f}) = {got.mor(f)} but the formal monad "
                                          f"gives {expected.mor(f)}")


def _same_localisation(a: Pairing, b: Pairing) -> None:
    for u in a.localise:
        if a.localise[u] != b.localise.get(u) or a.embed[u] != b.embed.get(u):
            raise PairingMismatch(f"pairings {a.name} and {b.name} localise differently at {u}")


def theta_to_graded(fam: MonadMorphismFamily, src: Pairing, dst: Pairing) -> GradedMorphism:
    """``(Id, omega)`` with ``omega_u(A) = embed_u(phibar_u(localise_u A))``, oplax."""
    fam.validate()
    src.validate()
    dst.validate()
    _same_localisation(src, dst)
    C = src.graded.base
    om = {u: {a: src.embed[u].mor(fam.phibar[u][src.localise[u].obj(a)]) for a in C.objects}
          for u in fam.phibar}
    return GradedMorphism(OPLAX, src.graded, dst.graded, identity_functor(C), om, f"Theta({fam.name})")


def theta_from_graded(h: GradedMorphism, src: Pairing, dst: Pairing) -> MonadMorphismFamily:
    """``phibar_u(B) = localise_u(omega_u(embed_u B))``."""
    if h.variant != OPLAX:
        raise ShapeMismatch(f"{h.name}: only oplax morphisms correspond to monad morphism families")
    h.validate()
    if h.Omega != identity_functor(h.src.base):
        raise NotIdentityCarrier(f"{h.name}: carrier {h.Omega.name} is not the identity functor")
    src.validate()
    dst.validate()
    _same_localisation(src, dst)
    P = src.formal.base
    comps = {u: {b: src.localise[u].mor(h.omega[u][src.embed[u].obj(b)]) for b in P.at[u].objects}
             for u in h.omega}
    fam = MonadMorphismFamily(src.formal, dst.formal, comps, f"Theta^-1({h.name})")
    # only embedded objects are read, so a table off the image would lose data silently
    back = theta_to_graded(fam, src, dst).omega
    stray = sorted(u for u in h.omega if dict(back[u]) != dict(h.omega[u]))
    if stray:
        raise PairingMismatch(f"{h.name}: omega at grades {stray} does not factor through the pairing")
    return fam


# -- transformations ------------------------------------------------------------------------


def family_transformation_laws(phi: MonadMorphismFamily, psi: MonadMorphismFamily, beta: Components,
                               pairing: Pairing) -> list[Law]:
    """Laws for ``beta: Id_C -> Id_C`` as a transformation ``phi => psi`` of monad morphism families.

    ``beta`` is localised as ``beta_u(A) = localise_u(beta_{embed_u A})``.
    """
    T, S = phi.src, phi.dst
    P = T.base
    Z = P.site.base
    C = pairing.graded.base
    loc, emb = pairing.localise, pairing.embed

    def b_u(u, a):
        return loc[u].mor(beta[emb[u].obj(a)])

    def typing(b):
        a = b["A"]
        return typing_leg(C, beta[a], a, a)

    def natural(b):
        f = b["f"]
        return C.chain(("beta", beta[C.dom(f)]), ("f", f)), C.chain(("f", f), ("beta", beta[C.cod(f)]))

    def square(b):
        u, a = b["u"], b["A"]
        A = P.at[u]
        return (A.chain(("phi", phi.phibar[u][a]), ("T beta", T.T[u].mor(b_u(u, a)))),
                A.chain(("S beta", S.T[u].mor(b_u(u, a))), ("psi", psi.phibar[u][a])))

    return [
        Law("beta-typing", lambda: ({"A": a} for a in C.objects), typing),
        Law("beta-natural", lambda: ({"f": f} for f in C.morphisms), natural),
        Law("family-square", lambda: ({"u": u, "A": a} for u in Z.objects for a in P.at[u].objects), square),
    ]


def check_family_transformation(phi: MonadMorphismFamily, psi: MonadMorphismFamily, beta: Components,
                                pairing: Pairing) -> Report:
    C = pairing.graded.base
    if set(beta) != set(C.objects) or any(m not in C.morphisms for m in beta.values()):
        raise ShapeMismatch("beta needs one base morphism per object")
    return run(family_transformation_laws(phi, psi, beta, pairing), "beta")


# -- central idempotents --------------------------------------------------------------------


@dataclass(frozen=True)
class CentralIdempotentCandidate:
    obj: str
    eps: str
    via_right: str  # rho_u . (u (x) eps): u(x)u -> u
    via_left: str  # lambda_u . (eps (x) u)
    inverse: str


def find_central_idempotents(m: MonoidalStructure) -> list[CentralIdempotentCandidate]:
    """Every ``(u, eps: u -> I)`` whose two induced maps ``u (x) u -> u`` agree and are invertible."""
    C = m.base
    out = []
    for u in C.objects:
        iu = C.identity[u]
        for eps in C.hom(u, m.unit):
            right = C.compose(m.runit[u], m.tenm(iu, eps))
            left = C.compose(m.lunit[u], m.tenm(eps, iu))
            if right != left:
                continue
            inv = C.inverse(right)
            if inv is not None:
                out.append(CentralIdempotentCandidate(u, eps, right, left, inv))
    return out


def verdict_equivalence(fam: MonadMorphismFamily, src: Pairing, dst: Pairing) -> tuple[bool, bool]:
    """``(family passes, translated morphism passes)``."""
    from .graded import check_graded_morphism
    return check_monad_morphism_family(fam).ok, check_graded_morphism(theta_to_graded(fam, src, dst)).ok

