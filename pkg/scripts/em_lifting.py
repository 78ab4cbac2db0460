"""Tensor closure of graded algebras on the thin reader, and what a corrupted Phi does to it."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, replace

from gradcat.constructions import enumerate_graded_algebras, graded_algebra_laws, tensor_algebras, unit_algebra
from gradcat.errors import ShapeMismatch
from gradcat.laws import run
from gradcat import stock


@dataclass
class Config:
    bound: int = 100_000
    show: int = 5  # corruptions to describe in detail


def closure(t, algs):
    out = {}
    for a in algs:
        for b in algs:
            try:
                rep = run(graded_algebra_laws(tensor_algebras(t, a, b), t.underlying))
                out[(a.name, b.name)] = rep.failed
            except ShapeMismatch as exc:
                out[(a.name, b.name)] = [f"ill-typed: {exc}"]
    return out


def main(cfg: Config) -> None:
    t = stock.thin_reader()
    algs = enumerate_graded_algebras(t.underlying, cfg.bound)
    print(f"{len(algs)} graded algebras of {t.name}")
    for a in algs:
        print(f"  {a.name}: carrier {dict(a.carrier.obj_map)}")
    res = closure(t, algs)
    print(f"tensor pairs closed: {sum(not v for v in res.values())}/{len(res)}")
    print("unit algebra laws failing:", run(graded_algebra_laws(unit_algebra(t), t.underlying)).failed or "none")
    C = t.underlying.base
    shown = 0
    for x, row in t.phi.items():
        for key, m in row.items():
            for other in C.morphisms:
                if other == m:
                    continue
                bad = replace(t, phi={**t.phi, x: {**row, key: other}})
                broken = {k: v for k, v in closure(bad, algs).items() if v}
                if shown < cfg.show:
                    print(f"Phi_{x}{key}: {m} -> {other}: {len(broken)}/{len(res)} pairs break")
                    shown += 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=100_000)
    ap.add_argument("--show", type=int, default=5)
    main(Config(**vars(ap.parse_args())))
