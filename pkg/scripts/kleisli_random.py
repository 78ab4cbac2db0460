"""Kleisli tables of random small monad candidates, related back to the monad laws they break."""

from __future__ import annotations

import argparse
import random
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from gradcat.constructions import trace_kleisli  # noqa: E402
from gradcat.graded import from_plain_monad  # noqa: E402
from oracles import random_plain  # noqa: E402


@dataclass
class Config:
    n: int = 500
    seed: int = 0


def main(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    examples = []
    for _ in range(cfg.n):
        c = random_plain(rng)
        tr = trace_kleisli(from_plain_monad(c.base, c.T, c.mu, c.eta))
        lawful_monad = tr["monad"].ok
        if tr["category"] is None:
            kind = "not built"
        else:
            kind = "category" if tr["category"].ok else "fails"
        traced = all(tr["traced"].values()) if tr["traced"] else None
        tally[(lawful_monad, kind, traced)] += 1
        if not lawful_monad and kind == "category" and len(examples) < 3:
            examples.append((c.base.name, dict(c.T.mor_map), c.mu, c.eta, tr["monad"].failed))
    print("(monad lawful, Kleisli table, failures traced): count")
    for k, v in sorted(tally.items(), key=str):
        print(f"  {k}: {v}")
    for ex in examples:
        print("non-monad with a lawful Kleisli table:", ex)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    main(Config(**vars(ap.parse_args())))
