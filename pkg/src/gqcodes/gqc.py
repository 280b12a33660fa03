"""Generalized quasi-cyclic codes and their three presentations.

A GQC code of block lengths ``(m_0, ..., m_{l-1})`` is an ``F_q[x]``-submodule
of ``R' = R_0 x ... x R_{l-1}``.  It can be given by module generators, by its
CRT constituents (one ``E_i``-linear code of length ``l`` per irreducible
factor ``f_i``), or as a sum of concatenations of those constituents with
minimal cyclic codes.  This module converts between the three.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from .cyclic import (
    RingElem,
    divides_xm1,
    inverse_of_length,
    phi_map,
    psi_map,
    residue_field,
    trace_column,
)
from .gf import Field
from .lincode import Echelon, LinearCode
from .polyring import Poly, global_factors


class CRTUnavailable(ValueError):
    """A block length shares a factor with q, so x^m - 1 is not separable."""


def _ring_elem(field: Field, m: int, a) -> RingElem:
    if isinstance(a, RingElem):
        if a.m != m or a.field != field:
            raise ValueError(f"generator entry {a!r} is not in R_{m}")
        return a
    if isinstance(a, Poly):
        a = a.coeffs
    a = list(a)
    if len(a) > m:
        raise ValueError(f"polynomial with {len(a)} coefficients in a block of length {m}")
    return RingElem(field, m, a)


@dataclass(frozen=True, eq=False)
class GqcCode:
    """Module generators of a GQC code.

    ``generators`` holds tuples ``(a^0, ..., a^{l-1})`` with ``a^j`` in ``R_j``;
    entries may be given as RingElem, Poly or ascending coefficient lists.
    """

    field: Field
    blocks: tuple[int, ...]
    generators: tuple[tuple[RingElem, ...], ...] = ()

    def __post_init__(self):
        blocks = tuple(int(m) for m in self.blocks)
        if not blocks or any(m < 1 for m in blocks):
            raise ValueError("block lengths must be positive")
        gens = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != len(blocks):
                raise ValueError(f"generator has {len(g)} entries for {len(blocks)} blocks")
            gens.append(tuple(_ring_elem(self.field, m, a) for m, a in zip(blocks, g)))
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def ell(self) -> int:
        return len(self.blocks)

    @property
    def offsets(self) -> list[int]:
        out, s = [], 0
        for m in self.blocks:
            out.append(s)
            s += m
        return out

    def is_coprime(self) -> bool:
        return all(math.gcd(m, self.field.order) == 1 for m in self.blocks)

    @cached_property
    def linear(self) -> LinearCode:
        return to_linear(self)

    @property
    def k(self) -> int:
        return self.linear.k

    def __eq__(self, other):
        return (
            isinstance(other, GqcCode)
            and self.field == other.field
            and self.blocks == other.blocks
            and self.linear == other.linear
        )

    def __hash__(self):
        return hash((self.field, self.blocks, self.linear))

    def __repr__(self):
        return f"GqcCode(q={self.field.order}, blocks={self.blocks}, r={len(self.generators)})"


def flatten(tup: Sequence[RingElem]) -> list[int]:
    out: list[int] = []
    for a in tup:
        out.extend(a.coeffs)
    return out


def split_blocks(v: Sequence[int], blocks: Sequence[int]) -> list[list[int]]:
    out, s = [], 0
    for m in blocks:
        out.append(list(v[s:s + m]))
        s += m
    if s != len(v):
        raise ValueError(f"vector of length {len(v)} does not match blocks {tuple(blocks)}")
    return out


def block_shift(v: Sequence[int], blocks: Sequence[int]) -> list[int]:
    """Multiply by ``x`` in every block simultaneously."""
    out: list[int] = []
    for b in split_blocks(v, blocks):
        out.extend(b[-1:] + b[:-1])
    return out


def to_linear(code: GqcCode) -> LinearCode:
    """The F_q-linear code spanned by the module generated by ``code.generators``."""
    F, blocks = code.field, code.blocks
    ech = Echelon(F, code.n)
    for g in code.generators:
        v = flatten(g)
        # Krylov closure: stop once x^t g falls into the current span, which
        # is shift-invariant apart from the partial orbit of g itself.
        while ech.add(v):
            v = block_shift(v, blocks)
    return LinearCode(F, code.n, ech.rows)


def is_gqc(code: LinearCode, blocks: Sequence[int]) -> bool:
    """True iff ``code`` is closed under the simultaneous per-block shift."""
    if sum(blocks) != code.n:
        raise ValueError(f"blocks {tuple(blocks)} do not partition length {code.n}")
    return all(block_shift(r, blocks) in code for r in code.basis)


def from_linear(code: LinearCode, blocks: Sequence[int]) -> GqcCode:
    """View a shift-invariant linear code as a GQC code (basis rows as generators)."""
    if not is_gqc(code, blocks):
        raise ValueError(f"code is not closed under the block shift for blocks {tuple(blocks)}")
    return GqcCode(code.field, tuple(blocks), [split_blocks(r, blocks) for r in code.basis])


# -- constituents -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ConstituentSet:
    """CRT constituents of a GQC code.

    ``codes[i]`` is a length-``l`` code over ``fields[i] = F_q[x]/(factors[i])``
    whose coordinate ``j`` vanishes wherever ``masks[i][j]`` is False.
    """

    field: Field
    blocks: tuple[int, ...]
    factors: tuple[Poly, ...]
    codes: tuple[LinearCode, ...]
    masks: tuple[tuple[bool, ...], ...] = dc_field(default=())

    def __post_init__(self):
        if not self.masks:
            masks = tuple(tuple(divides_xm1(f, m) for m in self.blocks) for f in self.factors)
            object.__setattr__(self, "masks", masks)

    @property
    def fields(self) -> tuple[Field, ...]:
        return tuple(residue_field(f) for f in self.factors)

    def __len__(self):
        return len(self.factors)

    def fq_dimension(self) -> int:
        return sum(f.degree * c.k for f, c in zip(self.factors, self.codes))

    def nonzero(self) -> list[int]:
        return [i for i, c in enumerate(self.codes) if c.k]

    def __eq__(self, other):
        return (
            isinstance(other, ConstituentSet)
            and self.blocks == other.blocks
            and self.factors == other.factors
            and self.codes == other.codes
        )

    def index(self, f: Poly) -> int:
        return self.factors.index(f)


def _require_coprime(field: Field, blocks: Sequence[int]) -> None:
    for m in blocks:
        if math.gcd(m, field.order) != 1:
            raise CRTUnavailable(f"CRT unavailable: gcd({m}, {field.order}) != 1")


def decompose(code: GqcCode) -> ConstituentSet:
    """Constituent ``i`` is the ``E_i``-span of the generators reduced mod ``f_i``."""
    F, blocks = code.field, code.blocks
    _require_coprime(F, blocks)
    factors = global_factors(F, blocks)
    codes = []
    for f in factors:
        E = residue_field(f)
        rows = [[phi_map(m, f, a) for m, a in zip(blocks, g)] for g in code.generators]
        codes.append(LinearCode(E, len(blocks), rows))
    return ConstituentSet(F, blocks, factors, tuple(codes))


def zero_constituents(field: Field, blocks: Sequence[int]) -> ConstituentSet:
    blocks = tuple(blocks)
    _require_coprime(field, blocks)
    factors = global_factors(field, blocks)
    return ConstituentSet(field, blocks, factors, tuple(LinearCode(residue_field(f), len(blocks)) for f in factors))


def check_masks(S: ConstituentSet) -> None:
    for f, mask, code in zip(S.factors, S.masks, S.codes):
        expect = tuple(divides_xm1(f, m) for m in S.blocks)
        if tuple(mask) != expect:
            raise ValueError(f"support mask {mask} for {f} is inconsistent with blocks {S.blocks}")
        if code.field != residue_field(f) or code.n != len(S.blocks):
            raise ValueError(f"constituent for {f} has the wrong field or length")
        for r in code.basis:
            if any(a and not keep for a, keep in zip(r, mask)):
                raise ValueError(f"constituent for {f} is nonzero on an unsupported coordinate")


def reconstruct(S: ConstituentSet) -> GqcCode:
    """The GQC code ``sum_i <I_i> [] C_i``: each constituent codeword
    ``(c_0, ..., c_{l-1})`` becomes the generator ``(psi_{i,0}(c_0), ...)``."""
    check_masks(S)
    gens = []
    for f, code in zip(S.factors, S.codes):
        for r in code.basis:
            gens.append(tuple(psi_map(m, f, c) for m, c in zip(S.blocks, r)))
    return GqcCode(S.field, S.blocks, gens)


def trace_codeword(S: ConstituentSet, picks: Sequence[Sequence[int]]) -> list[int]:
    """Codeword with block ``j`` entries ``(1/m_j) sum_i Tr(lambda_{i,j} alpha_i^-k)``."""
    F = S.field
    if len(picks) != len(S.factors):
        raise ValueError(f"need one codeword per constituent ({len(S.factors)}), got {len(picks)}")
    for i, (lam, code) in enumerate(zip(picks, S.codes)):
        if list(lam) not in code and not (code.k == 0 and not any(lam)):
            raise ValueError(f"pick {i} is not a codeword of constituent {i} ({S.factors[i]})")
    out: list[int] = []
    for j, m in enumerate(S.blocks):
        col = [0] * m
        for f, lam in zip(S.factors, picks):
            if lam[j]:
                for k, t in enumerate(trace_column(m, f, lam[j])):
                    col[k] = F.add(col[k], t)
        inv_m = inverse_of_length(F, m)
        out.extend(F.mul(inv_m, c) for c in col)
    return out


def trace_words(S: ConstituentSet) -> list[list[int]]:
    """Trace codewords from the F_q-basis ``alpha_i^t b`` of every constituent basis row ``b``."""
    words = []
    ell = len(S.blocks)
    for i, (f, code) in enumerate(zip(S.factors, S.codes)):
        E = residue_field(f)
        for r in code.basis:
            for t in range(f.degree):
                picks = [[0] * ell for _ in S.factors]
                picks[i] = [E.mul(E.pow(E.gen, t), a) for a in r]
                words.append(trace_codeword(S, picks))
    return words


def trace_span(S: ConstituentSet) -> LinearCode:
    return LinearCode(S.field, sum(S.blocks), trace_words(S))


def _column_psi(S: ConstituentSet, j: int, column: Sequence[int]) -> RingElem:
    """``psi_j``: a mixed-alphabet symbol ``(a_1j, ..., a_sj)`` to ``R_j``."""
    m = S.blocks[j]
    acc = RingElem.zero(S.field, m)
    for f, a in zip(S.factors, column):
        if a:
            acc = acc + psi_map(m, f, a)
    return acc


def multilevel_image(S: ConstituentSet) -> LinearCode:
    """F_q-span of ``psi(B)``, where ``B`` stacks all constituents as rows.

    ``B`` is spanned over F_q by stacked arrays carrying one ``E_i``-multiple
    ``alpha_i^t c`` of a constituent basis vector in row ``i``; each column of
    such an array is pushed through ``psi_j``.
    """
    check_masks(S)
    F = S.field
    s = len(S.factors)
    rows = []
    for i, (f, code) in enumerate(zip(S.factors, S.codes)):
        E = residue_field(f)
        for r in code.basis:
            for t in range(f.degree):
                scale = E.pow(E.gen, t)
                array = [[0] * len(S.blocks) for _ in range(s)]
                array[i] = [E.mul(scale, c) for c in r]
                image = []
                for j in range(len(S.blocks)):
                    image.extend(_column_psi(S, j, [array[u][j] for u in range(s)]).coeffs)
                rows.append(image)
    return LinearCode(F, sum(S.blocks), rows)


def constituent_dimension_identity(code: GqcCode, S: ConstituentSet | None = None) -> bool:
    S = S or decompose(code)
    return S.fq_dimension() == code.k
