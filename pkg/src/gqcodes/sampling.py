"""Seeded random GQC codes for property checks and experiments."""

from __future__ import annotations

import random
from typing import Sequence

from .construct import divisor_pool
from .duality import from_constituents, pair_iso
from .gf import Field
from .gqc import GqcCode, zero_constituents
from .lincode import LinearCode
from .polyring import Poly, classify_reciprocal


def random_generator(rng: random.Random, field: Field, blocks: Sequence[int], density: float = 0.5):
    """One generator tuple; each block is zero with probability ``1 - density``."""
    out = []
    for m in blocks:
        if rng.random() < density:
            out.append([rng.randrange(field.order) for _ in range(m)])
        else:
            out.append([0])
    return out


def random_gqc(rng: random.Random, field: Field, blocks: Sequence[int], max_gens: int = 3,
               density: float = 0.7) -> GqcCode:
    r = rng.randint(1, max_gens)
    return GqcCode(field, tuple(blocks), [random_generator(rng, field, blocks, density) for _ in range(r)])


def random_divisor_gqc(rng: random.Random, field: Field, blocks: Sequence[int], max_gens: int = 2) -> GqcCode:
    """Generators built from divisors of ``x^m - 1``; these reach larger distances than uniform entries."""
    pools = [divisor_pool(field, m) for m in blocks]
    r = rng.randint(1, max_gens)
    return GqcCode(field, tuple(blocks), [[rng.choice(pl).coeffs for pl in pools] for _ in range(r)])


def random_blocks(rng: random.Random, pool: Sequence[int], max_ell: int = 3) -> tuple[int, ...]:
    ell = rng.randint(1, max_ell)
    return tuple(rng.choice(pool) for _ in range(ell))


# -- seeded constructions through constituents --------------------------------


def _random_rows(rng, E, n, k):
    return [[rng.randrange(E.order) for _ in range(n)] for _ in range(k)]


def _random_code(rng, E, n, accept, tries=200):
    for _ in range(tries):
        C = LinearCode(E, n, _random_rows(rng, E, n, rng.randint(0, n)))
        if accept(C):
            return C
    raise LookupError("no acceptable random code found")


def _hermitian_unit(E, F):
    """Some beta with beta * conj(beta) = -1, so <(1, beta)> is Hermitian self-orthogonal."""
    target = E.neg(1)
    for b in range(1, E.order):
        if E.mul(b, E.conj(b, F)) == target:
            return b
    raise LookupError(f"-1 is not a Hermitian norm in {E!r}")


def hermitian_self_dual_rows(E, F, n: int) -> list[list[int]]:
    """``n/2`` disjoint copies of ``(1, beta)``; ``n`` must be even."""
    if n % 2:
        raise ValueError("Hermitian self-dual codes need even length here")
    beta = _hermitian_unit(E, F)
    return [[0] * (2 * t) + [1, beta] + [0] * (n - 2 * t - 2) for t in range(n // 2)]


def _congruent_blocks(field: Field, blocks: Sequence[int]) -> None:
    if len({m % field.p for m in blocks}) > 1:
        raise ValueError("seeded constructions assume block lengths congruent modulo the characteristic")


def seeded_self_dual(rng: random.Random, field: Field, blocks: Sequence[int]) -> GqcCode:
    """Self-dual code from Hermitian self-dual C_i and C'' the Euclidean dual of C'."""
    _congruent_blocks(field, blocks)
    Z = zero_constituents(field, blocks)
    cls = classify_reciprocal(Z.factors)
    partner = {Z.index(h): Z.index(hs) for h, hs in cls.pairs}
    chosen: dict[int, list] = {}

    def chooser(i, f, E, coords):
        n = len(coords)
        if f in cls.self_reciprocal:
            return hermitian_self_dual_rows(E, field, n)
        if i in partner:
            C1 = LinearCode(E, n, _random_rows(rng, E, n, rng.randint(0, n)))
            chosen[partner[i]] = C1
            return C1.basis
        # C'' := iota(C'^perp); the pair's first member is always visited first
        C1 = chosen[i]
        h = next(a for a, b in cls.pairs if b == f)
        iso = pair_iso(h, f)
        return [[iso(a) for a in r] for r in C1.dual().basis]

    return from_constituents(field, blocks, chooser)


def seeded_lcd(rng: random.Random, field: Field, blocks: Sequence[int]) -> GqcCode:
    """LCD code from Hermitian LCD C_i and Euclidean LCD C' = C'' (identified by x -> x^-1)."""
    _congruent_blocks(field, blocks)
    Z = zero_constituents(field, blocks)
    cls = classify_reciprocal(Z.factors)
    firsts = {h: hs for h, hs in cls.pairs}
    chosen: dict[Poly, LinearCode] = {}

    def chooser(i, f, E, coords):
        n = len(coords)
        if f in cls.self_reciprocal:
            return _random_code(rng, E, n, lambda C: C.is_lcd("hermitian", field)).basis
        if f in firsts:
            C1 = _random_code(rng, E, n, lambda C: C.is_lcd())
            chosen[firsts[f]] = C1
            return C1.basis
        h = next(a for a, b in cls.pairs if b == f)
        iso = pair_iso(h, f)
        return [[iso(a) for a in r] for r in chosen[f].basis]

    return from_constituents(field, blocks, chooser)
