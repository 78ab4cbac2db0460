"""Regenerate corpus/*.json from the stock builders."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from gradcat.corpus import CORPUS
from gradcat.serialize import dump_text, load_text


@dataclass
class Config:
    out: Path = Path(__file__).resolve().parents[1] / "corpus"


def main(cfg: Config) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, make in CORPUS.items():
        text = dump_text(make())
        assert dump_text(load_text(text)) == text, name
        (cfg.out / f"{name}.json").write_text(text)
        print(f"wrote {cfg.out / f'{name}.json'} ({len(text)} bytes)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Config.out)
    main(Config(**vars(ap.parse_args())))
