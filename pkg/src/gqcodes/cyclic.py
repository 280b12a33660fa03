"""Quotient rings ``R_m = F_q[x]/(x^m - 1)``, primitive idempotents, and the
maps identifying a minimal cyclic code with its field ``E = F_q[x]/(f)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .gf import Field, FieldError, make_extension
from .polyring import Poly, ext_gcd, global_factors


class RingElem:
    """Element of ``F[x]/(x^m - 1)`` stored as its length-``m`` coefficient vector."""

    __slots__ = ("field", "m", "coeffs")

    def __init__(self, field: Field, m: int, coeffs: Iterable[int] = ()):
        c = [0] * m
        for k, v in enumerate(coeffs):
            if v:
                c[k % m] = field.add(c[k % m], v)
        self.field = field
        self.m = m
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_poly(cls, f: Poly, m: int) -> RingElem:
        return cls(f.field, m, f.coeffs)

    @classmethod
    def zero(cls, field: Field, m: int) -> RingElem:
        return cls(field, m)

    @classmethod
    def one(cls, field: Field, m: int) -> RingElem:
        return cls(field, m, [1])

    def to_poly(self) -> Poly:
        return Poly(self.field, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: RingElem) -> None:
        if other.field != self.field or other.m != self.m:
            raise FieldError("ring elements from different rings")

    def __add__(self, other: RingElem) -> RingElem:
        self._check(other)
        F = self.field
        return RingElem(F, self.m, [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: RingElem) -> RingElem:
        self._check(other)
        F = self.field
        return RingElem(F, self.m, [F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other) -> RingElem:
        F, m = self.field, self.m
        if isinstance(other, int):
            return RingElem(F, m, [F.mul(a, other) for a in self.coeffs])
        self._check(other)
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        k = (i + j) % m
                        out[k] = F.add(out[k], F.mul(a, b))
        return RingElem(F, m, out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> RingElem:
        """Multiply by ``x^k``: a cyclic shift of the coefficient vector."""
        m = self.m
        k %= m
        return RingElem(self.field, m, self.coeffs[m - k:] + self.coeffs[: m - k])

    def __eq__(self, other):
        return (
            isinstance(other, RingElem)
            and self.field == other.field
            and self.m == other.m
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.m, self.coeffs))

    def __repr__(self):
        return f"RingElem(m={self.m}, {list(self.coeffs)})"


@lru_cache(maxsize=None)
def residue_field(f: Poly) -> Field:
    """``E = F[x]/(f)``; its generator is the residue class of ``x``."""
    return make_extension(f.field, f.coeffs, check=False)


def divides_xm1(f: Poly, m: int) -> bool:
    return f.divides(Poly.xm_minus_1(f.field, m))


def inverse_of_length(field: Field, m: int) -> int:
    """``1/m`` in the prime subfield, as an element of ``field``."""
    p = field.p
    if m % p == 0:
        raise ValueError(f"trace normalization undefined: {m} is divisible by the characteristic {p}")
    return pow(m % p, p - 2, p) if p > 2 else 1


@lru_cache(maxsize=None)
def primitive_idempotent(m: int, f: Poly) -> RingElem:
    """Idempotent ``theta`` with ``theta = 1 mod f`` and ``0 mod (x^m-1)/f``.

    Returns zero when ``f`` does not divide ``x^m - 1``.
    """
    F = f.field
    if math.gcd(m, F.order) != 1:
        raise ValueError(f"non-separable modulus: gcd({m}, {F.order}) != 1")
    xm1 = Poly.xm_minus_1(F, m)
    g, r = divmod(xm1, f)
    if not r.is_zero():
        return RingElem.zero(F, m)
    one, u, v = ext_gcd(f, g)
    if one.coeffs != (1,):
        raise ValueError(f"{f} is a repeated factor of x^{m} - 1")
    return RingElem.from_poly((v * g) % xm1, m)


def phi_map(m: int, f: Poly, a: RingElem) -> int:
    """Evaluate ``a`` at the root of ``f``: the residue of ``a`` mod ``f`` in ``E``.

    Zero when ``f`` does not divide ``x^m - 1``.
    """
    if a.m != m or a.field != f.field:
        raise FieldError("ring element does not belong to R_m")
    if not divides_xm1(f, m):
        return 0
    return a.to_poly().reduce_into(residue_field(f))


@lru_cache(maxsize=None)
def _inverse_powers(f: Poly, m: int) -> tuple[int, ...]:
    E = residue_field(f)
    ainv = E.inv(E.gen)
    out, v = [], 1
    for _ in range(m):
        out.append(v)
        v = E.mul(v, ainv)
    return tuple(out)


def trace_column(m: int, f: Poly, delta: int) -> list[int]:
    """``(Tr(delta * alpha^-k))_{k < m}`` without the ``1/m`` factor."""
    E = residue_field(f)
    F = f.field
    return [E.trace(E.mul(delta, w), F) for w in _inverse_powers(f, m)]


def psi_map(m: int, f: Poly, delta: int) -> RingElem:
    """Map ``delta`` in ``E`` into the minimal cyclic code ``<I>`` of ``R_m``.

    Coefficient ``k`` is ``(1/m) Tr_{E/F_q}(delta * alpha^-k)``.
    """
    F = f.field
    inv_m = inverse_of_length(F, m)
    if not divides_xm1(f, m):
        if delta:
            raise ValueError(f"{f} does not divide x^{m} - 1; only 0 maps into the zero component")
        return RingElem.zero(F, m)
    if delta == 0:
        return RingElem.zero(F, m)
    return RingElem(F, m, [F.mul(inv_m, t) for t in trace_column(m, f, delta)])


@dataclass(frozen=True)
class IdempotentTable:
    """``I[i][j]``: the primitive idempotent of factor ``i`` in block ``j``."""

    field: Field
    blocks: tuple[int, ...]
    factors: tuple[Poly, ...]
    entries: tuple[tuple[RingElem, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> RingElem:
        i, j = ij
        return self.entries[i][j]

    def support(self, i: int) -> tuple[bool, ...]:
        return tuple(not e.is_zero() for e in self.entries[i])

    def component_dimension(self, i: int) -> int:
        """F_q-dimension of ``<I_i>`` inside ``R' = R_0 x ... x R_{l-1}``."""
        return self.factors[i].degree * sum(self.support(i))


def build_idempotent_table(field: Field, blocks: Sequence[int]) -> IdempotentTable:
    blocks = tuple(blocks)
    for m in blocks:
        if math.gcd(m, field.order) != 1:
            raise ValueError(f"non-separable modulus: gcd({m}, {field.order}) != 1")
    factors = global_factors(field, blocks)
    entries = tuple(tuple(primitive_idempotent(m, f) for m in blocks) for f in factors)
    return IdempotentTable(field, blocks, factors, entries)
