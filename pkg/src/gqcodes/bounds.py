"""Jensen-type lower bound on the minimum distance of a GQC code."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

from .cyclic import RingElem, divides_xm1, primitive_idempotent
from .gf import Field
from .gqc import ConstituentSet, GqcCode, decompose
from .lincode import Echelon, LinearCode, min_distance_bruteforce
from .polyring import Poly

INF = math.inf


def _cyclic_span(field: Field, m: int, gens: Sequence[RingElem]) -> LinearCode:
    ech = Echelon(field, m)
    for g in gens:
        v = g
        while ech.add(v.coeffs):
            v = v.shift()
    return LinearCode(field, m, ech.rows)


@lru_cache(maxsize=None)
def column_sum_distance(level: tuple[Poly, ...], m: int, budget: int | None = None) -> float:
    """Distance of ``<I_{f,m}> + ... `` over the ``f`` in ``level`` dividing ``x^m - 1``.

    ``inf`` marks a structurally zero column (no factor in the level divides).
    """
    present = [f for f in level if divides_xm1(f, m)]
    if not present:
        return INF
    F = present[0].field
    code = _cyclic_span(F, m, [primitive_idempotent(m, f) for f in present])
    return min_distance_bruteforce(code, budget=budget)


@dataclass
class BoundReport:
    order: list[int]                      # constituent indices, by increasing distance
    factors: list[str]
    constituent_distances: list[int]
    column_distances: list[list[float]]   # [level u][column t]
    levels: list[int]                     # D_1 .. D_g
    bound: int
    true_distance: int | None = None
    blocks: tuple[int, ...] = dc_field(default=())

    def as_dict(self) -> dict:
        return {
            "blocks": list(self.blocks),
            "order": self.order,
            "factors": self.factors,
            "constituent_distances": self.constituent_distances,
            "column_distances": [[None if math.isinf(d) else int(d) for d in row] for row in self.column_distances],
            "levels": self.levels,
            "bound": self.bound,
            "true_distance": self.true_distance,
        }


class BoundConsistencyError(AssertionError):
    """Fewer finite columns at a level than the constituent distance requires."""


def jensen_bound_gqc(
    code: GqcCode | ConstituentSet,
    with_true_distance: bool = False,
    budget: int | None = None,
) -> BoundReport:
    """``min_u D_u`` where ``D_u`` sums the ``d_u`` smallest column distances at level ``u``."""
    S = code if isinstance(code, ConstituentSet) else decompose(code)
    nz = S.nonzero()
    if not nz:
        raise ValueError("zero code has no minimum distance")
    dists = {i: min_distance_bruteforce(S.codes[i], budget=budget) for i in nz}
    order = sorted(nz, key=lambda i: (dists[i], i))
    col_rows, levels = [], []
    for u in range(1, len(order) + 1):
        level = tuple(S.factors[i] for i in order[:u])
        cols = [column_sum_distance(level, m, budget) for m in S.blocks]
        finite = sorted(d for d in cols if not math.isinf(d))
        du = dists[order[u - 1]]
        if len(finite) < du:
            raise BoundConsistencyError(
                f"level {u}: only {len(finite)} supported columns for constituent distance {du}"
            )
        col_rows.append(cols)
        levels.append(int(sum(finite[:du])))
    report = BoundReport(
        order=order,
        factors=[str(S.factors[i]) for i in order],
        constituent_distances=[dists[i] for i in order],
        column_distances=col_rows,
        levels=levels,
        bound=min(levels),
        blocks=S.blocks,
    )
    if with_true_distance:
        if isinstance(code, ConstituentSet):
            from .gqc import reconstruct

            code = reconstruct(code)
        report.true_distance = min_distance_bruteforce(code.linear, budget=budget)
    return report


def _generator_poly_code(field: Field, m: int, checks: Sequence[Poly]) -> LinearCode:
    """Cyclic code of length ``m`` whose check polynomial is ``prod(checks)``."""
    h = Poly(field, [1])
    for f in checks:
        h = h * f
    g = Poly.xm_minus_1(field, m) // h
    rows = []
    for k in range(m - g.degree):
        rows.append([0] * k + list(g.coeffs) + [0] * (m - g.degree - 1 - k))
    return LinearCode(field, m, rows)


def jensen_bound_qc(code: GqcCode, budget: int | None = None) -> int:
    """Jensen's bound for a quasi-cyclic code (all blocks equal).

    Uses generator-polynomial cyclic codes for the direct sums, independent
    of the idempotent construction above.
    """
    if len(set(code.blocks)) != 1:
        raise ValueError("Jensen's QC bound needs equal block lengths")
    m = code.blocks[0]
    S = decompose(code)
    nz = S.nonzero()
    if not nz:
        raise ValueError("zero code has no minimum distance")
    dists = {i: min_distance_bruteforce(S.codes[i], budget=budget) for i in nz}
    order = sorted(nz, key=lambda i: (dists[i], i))
    best = None
    for u in range(1, len(order) + 1):
        inner = _generator_poly_code(code.field, m, [S.factors[i] for i in order[:u]])
        val = dists[order[u - 1]] * min_distance_bruteforce(inner, budget=budget)
        best = val if best is None else min(best, val)
    return best
