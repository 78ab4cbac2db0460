"""Every single-entry mutation of each corpus bundle, classified.

A mutation is sound when it is rejected as malformed or detected by a law
whose witness still fails on replay.  Prints a table and lists any silent
or unreplayable mutation.
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass, field

from gradcat.corpus import CORPUS
from gradcat.mutation import stratum, sweep
from gradcat.serialize import dump_doc


@dataclass
class Config:
    bundles: list[str] = field(default_factory=lambda: sorted(CORPUS))
    limit: int | None = None  # None: every mutation
    seed: int = 0


def main(cfg: Config) -> int:
    unsound = 0
    print(f"{'bundle':12} {'n':>6} {'rejected':>9} {'detected':>9} {'silent':>7} {'unrepl':>7} {'secs':>7}")
    for name in cfg.bundles:
        start = time.perf_counter()
        out = sweep(dump_doc(CORPUS[name]()), cfg.limit, cfg.seed)
        c = Counter(o.status for o in out)
        print(f"{name:12} {len(out):6} {c['rejected']:9} {c['detected']:9} {c['silent']:7} "
              f"{c['unreplayable']:7} {time.perf_counter() - start:7.2f}")
        by_table = Counter(stratum(o.mutation)[1] for o in out if o.status == "detected")
        print("             detected by table:", dict(sorted(by_table.items())))
        for o in out:
            if o.status in ("silent", "unreplayable"):
                unsound += 1
                print(f"  {o.status}: {o.mutation.label()} {o.detail}")
    return 1 if unsound else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("bundles", nargs="*", default=sorted(CORPUS))
    ap.add_argument("--limit", type=int)
    ap.add_argument("--seed", type=int, default=0)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
