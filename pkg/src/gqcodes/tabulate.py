"""Deterministic, resumable tabulation of small GQC codes to CSV."""

from __future__ import annotations

import csv
import itertools
import os
from typing import Iterator, Sequence

from .bounds import jensen_bound_gqc
from .codespec import generator_text
from .construct import divisor_pool
from .cyclic import RingElem
from .duality import is_lcd, is_self_dual
from .gf import Field
from .gqc import GqcCode
from .lincode import DistanceBudgetError, min_distance_bruteforce

HEADER = ["blocks", "generators", "k", "d", "bound", "self_dual", "lcd"]


def block_tuples(block_set: Sequence[int], max_ell: int | None = None) -> list[tuple[int, ...]]:
    """Nonempty subsets of the block-length set, by size then lexicographically."""
    vals = sorted(set(block_set))
    max_ell = len(vals) if max_ell is None else max_ell
    return [c for r in range(1, max_ell + 1) for c in itertools.combinations(vals, r)]


def candidate_codes(field: Field, blocks: tuple[int, ...], max_gens: int, max_codes: int) -> Iterator[GqcCode]:
    """Distinct nonzero codes whose generators take divisor-of-(x^m - 1) entries."""
    pools = [[RingElem.from_poly(p, m) for p in divisor_pool(field, m)] for m in blocks]
    tuples = [t for t in itertools.product(*pools) if not all(a.is_zero() for a in t)]
    seen = set()
    for r in range(1, max_gens + 1):
        for gens in itertools.combinations(tuples, r):
            code = GqcCode(field, blocks, gens)
            if code.k == 0 or code.linear in seen:
                continue
            seen.add(code.linear)
            yield code
            if len(seen) >= max_codes:
                return


def rows(field: Field, block_set: Sequence[int], max_gens: int = 1, max_codes: int = 32,
         budget: int | None = None, max_ell: int | None = None) -> Iterator[list]:
    for blocks in block_tuples(block_set, max_ell):
        for code in candidate_codes(field, blocks, max_gens, max_codes):
            gens = "|".join(generator_text(g) for g in code.generators)
            try:
                d = min_distance_bruteforce(code.linear, budget=budget)
                bound = jensen_bound_gqc(code, budget=budget).bound if code.is_coprime() else "n/a"
            except DistanceBudgetError:
                d = bound = "skipped"
            sd = is_self_dual(code).holds
            lcd = is_lcd(code).holds
            yield [" ".join(map(str, blocks)), gens, code.k, d, bound, int(sd), int(lcd)]


def tabulate(path: str, field: Field, block_set: Sequence[int], max_gens: int = 1,
             max_codes: int = 32, budget: int | None = None, max_ell: int | None = None) -> int:
    """Write (or resume) the CSV at ``path``; returns the number of data rows."""
    done = None
    if os.path.exists(path):
        with open(path, newline="") as fh:
            existing = list(csv.reader(fh))
        if existing and existing[0] == HEADER:
            done = len(existing) - 1
    mode = "w" if done is None else "a"
    done = done or 0
    total = done
    with open(path, mode, newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if mode == "w":
            w.writerow(HEADER)
            fh.flush()
        for row in itertools.islice(rows(field, block_set, max_gens, max_codes, budget, max_ell), done, None):
            w.writerow(row)
            fh.flush()
            total += 1
    return total
