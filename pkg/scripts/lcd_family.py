"""Grow a family of LCD codes by juxtaposing searched QC LCD components.

At step ``t`` the components are the best one-generator QC LCD codes of
co-index ``m`` (for each ``m`` in the co-index list) and index ``ells[t]``.
Prints the exact rate and relative distance of every step as CSV.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from gqcodes.construct import Params, family_accounting, family_csv, lcd_family
from gqcodes.gf import field_of_order


@dataclass
class FamilyConfig:
    q: int = 2
    coindices: list[int] = field(default_factory=lambda: [3, 5, 7])
    indices: list[int] = field(default_factory=lambda: [2, 3])
    min_k: int = 2
    pool: str = "divisors"


def run(cfg: FamilyConfig) -> str:
    F = field_of_order(cfg.q)
    codes, params = lcd_family(F, cfg.coindices, cfg.indices, cfg.pool, cfg.min_k)
    rows = family_accounting(params)
    for code, row in zip(codes, rows):
        P = Params.of(code)
        assert (P.n, P.k, P.d) == (row.length, row.k, row.d), "juxtaposition parameters drifted"
        assert code.linear.is_lcd()
    return family_csv(rows)


def main() -> None:
    cfg = FamilyConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=cfg.q)
    ap.add_argument("--coindices", type=int, nargs="+", default=cfg.coindices)
    ap.add_argument("--indices", type=int, nargs="+", default=cfg.indices)
    ap.add_argument("--min-k", type=int, default=cfg.min_k)
    ap.add_argument("--pool", choices=["divisors", "all"], default=cfg.pool)
    print(run(FamilyConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})), end="")


if __name__ == "__main__":
    main()
