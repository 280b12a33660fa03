"""Juxtaposition ``[C_1 | ... | C_a]`` of GQC codes and finite-step
rate / relative-distance accounting for families built that way."""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .cyclic import RingElem
from .gf import Field
from .gqc import GqcCode
from .lincode import min_distance_bruteforce
from .polyring import Poly, factor_xm_minus_1


def juxtapose(codes: Sequence[GqcCode]) -> GqcCode:
    """Side-by-side code; its block list is the concatenation of the inputs'."""
    if not codes:
        raise ValueError("nothing to juxtapose")
    F = codes[0].field
    if any(c.field != F for c in codes):
        raise ValueError("juxtaposed codes must share one field")
    blocks = tuple(m for c in codes for m in c.blocks)
    gens = []
    for a, c in enumerate(codes):
        for g in c.generators:
            row = []
            for b, other in enumerate(codes):
                if b == a:
                    row.extend(g)
                else:
                    row.extend(RingElem.zero(F, m) for m in other.blocks)
            gens.append(tuple(row))
    return GqcCode(F, blocks, gens)


@dataclass(frozen=True)
class Params:
    n: int
    k: int
    d: int | None  # None for the zero code

    @classmethod
    def of(cls, code: GqcCode, budget: int | None = None) -> Params:
        L = code.linear
        return cls(L.n, L.k, min_distance_bruteforce(L, budget=budget) if L.k else None)


def predicted_params(parts: Sequence[Params]) -> Params:
    """Parameters of a juxtaposition: lengths and dimensions add, distance is the min.

    Zero-dimensional parts do not take part in the minimum.
    """
    ds = [p.d for p in parts if p.k]
    return Params(sum(p.n for p in parts), sum(p.k for p in parts), min(ds) if ds else None)


# -- searching small QC LCD components ---------------------------------------


def divisor_pool(field: Field, m: int) -> list[Poly]:
    """Zero plus every monic divisor of ``x^m - 1`` (products of factor subsets)."""
    factors = factor_xm_minus_1(field, m).factors
    out = [Poly(field)]
    for bits in itertools.product((0, 1), repeat=len(factors)):
        p = Poly(field, [1])
        for b, f in zip(bits, factors):
            if b:
                p = p * f
        if p.degree < m:
            out.append(p)
    return out


def all_pool(field: Field, m: int) -> list[Poly]:
    return [Poly(field, c) for c in itertools.product(range(field.order), repeat=m)]


@lru_cache(maxsize=None)
def search_qccd(field: Field, m: int, ell: int, pool: str = "divisors", min_k: int = 1) -> GqcCode:
    """Best one-generator QC LCD code of co-index ``m`` and index ``ell``.

    Candidates ``(a_0, ..., a_{ell-1})`` range over the chosen pool in a fixed
    order; the winner maximises ``(d, k)`` and the first one found wins ties.
    """
    polys = divisor_pool(field, m) if pool == "divisors" else all_pool(field, m)
    best, best_key = None, None
    for gen in itertools.product(polys, repeat=ell):
        code = GqcCode(field, (m,) * ell, [gen])
        L = code.linear
        if L.k < min_k or not L.is_lcd():
            continue
        key = (min_distance_bruteforce(L), L.k)
        if best_key is None or key > best_key:
            best, best_key = code, key
    if best is None:
        raise LookupError(f"no QC LCD code with k >= {min_k} for m={m}, index {ell}")
    return best


# -- family accounting -------------------------------------------------------


@dataclass(frozen=True)
class FamilyRow:
    step: int
    length: int
    k: int
    d: int
    rate: Fraction
    relative_distance: Fraction

    def as_csv(self) -> list:
        return [self.step, self.length, self.k, self.d, str(self.rate), str(self.relative_distance)]


def family_accounting(steps: Iterable[Sequence[Params]]) -> list[FamilyRow]:
    """One row per step from the component parameters of that step.

    rate = sum k / sum n and relative distance = min d / sum n, which equal
    ``sum (n_a/n) R_a`` and ``min (n_a/n) delta_a`` over the components.
    """
    rows = []
    for i, parts in enumerate(steps, start=1):
        P = predicted_params(parts)
        if P.d is None:
            raise ValueError(f"step {i} has only zero components")
        rows.append(FamilyRow(i, P.n, P.k, P.d, Fraction(P.k, P.n), Fraction(P.d, P.n)))
    return rows


def weighted_rate(parts: Sequence[Params]) -> Fraction:
    n = sum(p.n for p in parts)
    return sum((Fraction(p.n, n) * Fraction(p.k, p.n) for p in parts), Fraction(0))


def weighted_relative_distance(parts: Sequence[Params]) -> Fraction:
    n = sum(p.n for p in parts)
    return min(Fraction(p.n, n) * Fraction(p.d, p.n) for p in parts if p.k)


def lcd_family(field: Field, ms: Sequence[int], ells: Sequence[int], pool: str = "divisors", min_k: int = 1):
    """Juxtapose the best searched QC LCD components of co-indices ``ms`` for each index.

    Returns ``(codes, component_params)`` with one entry per index in ``ells``.
    """
    codes, params = [], []
    for ell in ells:
        comps = [search_qccd(field, m, ell, pool, min_k) for m in ms]
        codes.append(juxtapose(comps))
        params.append([Params.of(c) for c in comps])
    return codes, params


FAMILY_HEADER = ["step", "length", "k", "d", "rate", "relative_distance"]


def family_csv(rows: Sequence[FamilyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FAMILY_HEADER)
    for r in rows:
        w.writerow(r.as_csv())
    return buf.getvalue()
