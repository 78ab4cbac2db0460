"""Single-entry mutations of serialised bundles, and the soundness verdict on each.

A mutation replaces one object- or morphism-valued table entry by a
different id (another id of the bundle or a foreign one).  The checker is
sound on a mutation when it either refuses the bundle as malformed or
reports a law failure whose witness still fails when replayed.
"""

from __future__ import annotations

import copy
import random
from dataclasses import dataclass
from typing import Any, Iterator

from .errors import WorkbenchError
from .runner import replay_witness, run_suite
from .serialize import load_doc

FOREIGN_MOR = ("?bogus", "id_?", "")
FOREIGN_OBJ = ("?nowhere",)

W = "*"
FUNCTOR = (("objects", W, "obj"), ("morphisms", W, "mor"))

# schema -> patterns; the last element of each pattern is the entry kind.
SITES: dict[str, tuple[tuple, ...]] = {
    "fincat/v1": (("comp", W, 2, "mor"), ("identity", W, "mor")),
    "monoidal/v1": (("tensor", "objects", W, 2, "obj"), ("tensor", "morphisms", W, 2, "mor"),
                    ("assoc", W, 3, "mor"), ("lunit", W, "mor"), ("runit", W, "mor"), ("unit", "obj")),
    "graded/v1": tuple(("F", W, *p) for p in FUNCTOR) + (
        ("F_mor", W, W, "mor"), ("gamma", W, 2, W, "mor"), ("delta", W, "mor"),
        ("commutative", "phi", W, W, 2, "mor"), ("commutative", "phibar", W, "mor")),
    "algebra/v1": tuple(("carrier", *p) for p in FUNCTOR) + (("act", W, 2, "mor"),),
    "presheaf/v1": tuple(("restrict", W, *p) for p in FUNCTOR),
    "formalmonad/v1": tuple(("T", W, *p) for p in FUNCTOR) + (("mu", W, W, "mor"), ("eta", W, W, "mor")),
    "pairing/v1": tuple((side, W, *p) for side in ("localise", "embed") for p in FUNCTOR),
    "monadmorphism/v1": (("phibar", W, W, "mor"),),
    "gradedmorphism/v1": tuple(("Omega", *p) for p in FUNCTOR) + (("omega", W, W, "mor"),),
}


@dataclass(frozen=True)
class Mutation:
    resource: str
    path: tuple
    old: str
    new: str

    def label(self) -> str:
        return f"{self.resource}:{'/'.join(map(str, self.path))}: {self.old!r} -> {self.new!r}"


def _walk(node: Any, pattern: tuple, prefix: tuple = ()) -> Iterator[tuple[tuple, Any]]:
    if not pattern:
        yield prefix, node
        return
    head, rest = pattern[0], pattern[1:]
    if head == W:
        keys = node.keys() if isinstance(node, dict) else range(len(node)) if isinstance(node, list) else ()
        for k in keys:
            yield from _walk(node[k], rest, prefix + (k,))
    elif isinstance(node, dict) and head in node:
        yield from _walk(node[head], rest, prefix + (head,))
    elif isinstance(node, list) and isinstance(head, int) and head < len(node):
        yield from _walk(node[head], rest, prefix + (head,))


def sites(doc: dict) -> Iterator[tuple[str, tuple, str, str]]:
    """``(resource, path, kind, current value)`` for every mutable entry."""
    for name, res in doc["resources"].items():
        for pattern in SITES.get(res.get("schema"), ()):
            *steps, kind = pattern
            for path, value in _walk(res, tuple(steps)):
                if isinstance(value, str):
                    yield name, path, kind, value


def id_pools(doc: dict) -> dict[str, list[str]]:
    objs: list[str] = []
    mors: list[str] = []
    for res in doc["resources"].values():
        if res.get("schema") == "fincat/v1":
            objs += [o for o in res["objects"] if o not in objs]
            mors += [m[0] for m in res["morphisms"] if m[0] not in mors]
    return {"obj": objs + list(FOREIGN_OBJ), "mor": mors + list(FOREIGN_MOR)}


def mutations(doc: dict) -> list[Mutation]:
    """Every single-entry mutation of ``doc``, in a fixed order."""
    pools = id_pools(doc)
    return [Mutation(name, path, old, new)
            for name, path, kind, old in sites(doc) for new in pools[kind] if new != old]


def stratum(m: Mutation) -> tuple[str, str]:
    """Resource and table a mutation touches (``phi``/``phibar`` for the commutative block)."""
    head = m.path[0]
    return m.resource, m.path[1] if head == "commutative" else head


def sample(muts: list[Mutation], limit: int | None, seed: int = 0) -> list[Mutation]:
    """At most ``limit`` mutations, drawn round-robin across strata so every table is hit."""
    if limit is None or len(muts) <= limit:
        return list(muts)
    rng = random.Random(seed)
    groups: dict[tuple[str, str], list[int]] = {}
    for i, m in enumerate(muts):
        groups.setdefault(stratum(m), []).append(i)
    queues = [rng.sample(ix, len(ix)) for ix in groups.values()]
    picked: list[int] = []
    while len(picked) < limit:
        for q in queues:
            if q and len(picked) < limit:
                picked.append(q.pop())
    return [muts[i] for i in sorted(picked)]


def apply(doc: dict, m: Mutation) -> dict:
    out = copy.deepcopy(doc)
    node = out["resources"][m.resource]
    for step in m.path[:-1]:
        node = node[step]
    node[m.path[-1]] = m.new
    return out


@dataclass
class Outcome:
    mutation: Mutation
    status: str  # "rejected" | "detected" | "silent" | "unreplayable"
    detail: str = ""


def assess(doc: dict, m: Mutation, suite: str = "all") -> Outcome:
    mutated = apply(doc, m)
    try:
        bundle = load_doc(mutated)
        report = run_suite(bundle, suite)
    except WorkbenchError as exc:
        return Outcome(m, "rejected", f"{type(exc).__name__}: {exc}")
    if report["verdict"] == "pass":
        return Outcome(m, "silent")
    for subj in report["subjects"]:
        for law in subj["laws"]:
            for w in law["witnesses"]:
                if not replay_witness(bundle, subj, w):
                    return Outcome(m, "unreplayable", w["id"])
    failing = [f"{s['resource']}:{law['law_id']}" for s in report["subjects"]
               for law in s["laws"] if law["status"] == "fail"]
    return Outcome(m, "detected", ", ".join(failing))


def sweep(doc: dict, limit: int | None = None, seed: int = 0, suite: str = "all") -> list[Outcome]:
    return [assess(doc, m, suite) for m in sample(mutations(doc), limit, seed)]
