"""Tabulate small binary and ternary GQC codes to CSV."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from gqcodes.gf import field_of_order
from gqcodes.tabulate import tabulate


@dataclass
class TabulateConfig:
    q: int = 2
    blocks: list[int] = field(default_factory=lambda: [3, 5, 7])
    max_gens: int = 2
    max_codes: int = 16
    max_ell: int | None = None
    out: str = "gqc_table.csv"


def main() -> None:
    cfg = TabulateConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=cfg.q)
    ap.add_argument("--blocks", type=int, nargs="*", default=cfg.blocks)
    ap.add_argument("--max-gens", type=int, default=cfg.max_gens)
    ap.add_argument("--max-codes", type=int, default=cfg.max_codes)
    ap.add_argument("--max-ell", type=int, default=cfg.max_ell)
    ap.add_argument("--out", default=cfg.out)
    cfg = TabulateConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})
    n = tabulate(cfg.out, field_of_order(cfg.q), cfg.blocks, cfg.max_gens, cfg.max_codes, max_ell=cfg.max_ell)
    print(f"{n} rows -> {cfg.out}")


if __name__ == "__main__":
    main()
