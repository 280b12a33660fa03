"""Univariate polynomials over a :class:`~gqcodes.gf.Field` and the
factorization of ``x^m - 1`` through cyclotomic cosets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .gf import Field, FieldError, canonical_irreducible, field_of_order, make_extension, prime_factors


class Poly:
    """Dense polynomial with ascending coefficients, trailing zeros trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: Field, k: int, c: int = 1) -> Poly:
        return cls(field, [0] * k + [c])

    @classmethod
    def xm_minus_1(cls, field: Field, m: int) -> Poly:
        return cls(field, [field.neg(1)] + [0] * (m - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: Poly) -> None:
        if not isinstance(other, Poly) or other.field != self.field:
            raise FieldError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(F, [F.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> Poly:
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        F = self.field
        if isinstance(other, int):
            return Poly(F, [F.mul(c, other) for c in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        d = other.degree
        inv = F.inv(other.lead)
        q = [0] * max(0, len(r) - d)
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if c:
                c = F.mul(c, inv)
                q[k - d] = c
                for t, b in enumerate(other.coeffs):
                    if b:
                        r[k - d + t] = F.sub(r[k - d + t], F.mul(c, b))
        return Poly(F, q), Poly(F, r[:d])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({format_poly(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def sort_key(self) -> tuple:
        """Canonical order: degree first, then ascending coefficient vector."""
        return (self.degree, self.coeffs)

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead)
        return Poly(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero()

    def __call__(self, x: int, field: Field | None = None) -> int:
        """Evaluate at an element (int) of ``field``, an extension of ours."""
        E = field or self.field
        if E is not self.field and not E.contains(self.field):
            raise FieldError(f"{E!r} does not contain {self.field!r}")
        v = 0
        for c in reversed(self.coeffs):
            v = E.add(E.mul(v, x), c)
        return v

    def reduce_into(self, E: Field) -> int:
        """Residue of this polynomial in ``E = F[x]/(f)``, as an element of ``E``."""
        if E.base != self.field:
            raise FieldError(f"{E!r} is not a simple extension of {self.field!r}")
        f = Poly(self.field, E.modulus)
        return E.encode(list((self % f).coeffs))

    def powmod(self, e: int, f: Poly) -> Poly:
        r, a = Poly(self.field, [1]), self % f
        while e:
            if e & 1:
                r = (r * a) % f
            a = (a * a) % f
            e >>= 1
        return r


def format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for i, v in enumerate(coeffs):
        if not v:
            continue
        mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mon:
            terms.append(str(v))
        else:
            terms.append(mon if v == 1 else f"{v}*{mon}")
    return " + ".join(reversed(terms)) or "0"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return monic ``g`` and ``u, v`` with ``u*a + v*b == g``."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly(F, [1]), Poly(F)
    t0, t1 = Poly(F), Poly(F, [1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = F.inv(r0.lead)
    return r0 * inv, s0 * inv, t0 * inv


def poly_arith(a: Poly, b: Poly, op: str):
    """Dispatch add, mul, divrem, gcd, ext_gcd on two polynomials.

    ``eval_in_extension`` takes ``b = (E, point)`` and returns ``a(point)`` in ``E``.
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divrem":
        return divmod(a, b)
    if op == "gcd":
        return poly_gcd(a, b)
    if op == "ext_gcd":
        return ext_gcd(a, b)
    if op == "eval_in_extension":
        E, point = b
        return a(point, E)
    raise ValueError(f"unknown operation {op!r}")


# -- cyclotomic cosets and x^m - 1 ----------------------------------------


def _order_of(field_or_q) -> int:
    return field_or_q.order if isinstance(field_or_q, Field) else int(field_or_q)


def multiplicative_order(q: int, m: int) -> int:
    if math.gcd(q, m) != 1:
        raise ValueError(f"gcd({q}, {m}) != 1")
    if m == 1:
        return 1
    t, v = 1, q % m
    while v != 1:
        v = (v * q) % m
        t += 1
    return t


def cyclotomic_cosets(q, m: int) -> list[list[int]]:
    """q-cyclotomic cosets modulo m, each sorted, ordered by smallest member."""
    q = _order_of(q)
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(m, q) != 1:
        raise ValueError(f"non-separable modulus: gcd({m}, {q}) != 1")
    seen: set[int] = set()
    out = []
    for a in range(m):
        if a in seen:
            continue
        coset, b = [], a
        while b not in coset:
            coset.append(b)
            b = (b * q) % m
        seen.update(coset)
        out.append(sorted(coset))
    return out


@dataclass(frozen=True)
class Factorization:
    """Distinct monic irreducible factors of ``x^m - 1`` over ``field``."""

    m: int
    field: Field
    factors: tuple[Poly, ...]
    cosets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        prod = Poly(self.field, [1])
        for f in self.factors:
            prod = prod * f
        if prod != Poly.xm_minus_1(self.field, self.m):
            raise AssertionError(f"factors do not multiply to x^{self.m} - 1")
        if sum(f.degree for f in self.factors) != self.m:
            raise AssertionError("factor degrees do not sum to m")

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def _element_of_order(K: Field, m: int) -> int:
    n = K.order - 1
    if n % m:
        raise FieldError(f"{K!r} has no element of order {m}")
    if m == 1:
        return 1
    primes = prime_factors(m)
    for g in range(2, K.order):
        b = K.pow(g, n // m)
        if all(K.pow(b, m // r) != 1 for r in primes):
            return b
    raise FieldError("no element of the requested order")  # pragma: no cover


@lru_cache(maxsize=None)
def _splitting_field(F: Field, t: int) -> Field:
    if t == 1:
        return F
    return make_extension(F, canonical_irreducible(F, t), check=False)


@lru_cache(maxsize=None)
def _factor(F: Field, m: int) -> Factorization:
    q = F.order
    cosets = cyclotomic_cosets(q, m)
    t = multiplicative_order(q, m)
    K = _splitting_field(F, t)
    beta = _element_of_order(K, m)
    pairs = []
    for coset in cosets:
        # prod (x - beta^a) over the coset, coefficients in K
        poly = [1]
        for a in coset:
            root = K.neg(K.pow(beta, a))
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = K.add(nxt[i + 1], c)
                nxt[i] = K.add(nxt[i], K.mul(c, root))
            poly = nxt
        if any(c >= q for c in poly):
            raise AssertionError("minimal polynomial has coefficients outside the base field")
        pairs.append((Poly(F, poly), tuple(coset)))
    pairs.sort(key=lambda fc: fc[0].sort_key())
    return Factorization(m, F, tuple(f for f, _ in pairs), tuple(c for _, c in pairs))


def factor_xm_minus_1(q, m: int) -> Factorization:
    """Factor ``x^m - 1`` over ``F_q`` (``q`` an int or a Field).

    Factors are sorted by degree, then by ascending coefficient vector.
    """
    F = q if isinstance(q, Field) else field_of_order(q)
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(m, F.order) != 1:
        raise ValueError(f"non-separable modulus: gcd({m}, {F.order}) != 1")
    return _factor(F, m)


def reciprocal(f: Poly) -> Poly:
    """Monic reciprocal ``x^deg f * f(1/x)``, normalised."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ValueError("reciprocal undefined: constant term is zero")
    return Poly(f.field, reversed(f.coeffs)).monic()


def is_self_reciprocal(f: Poly) -> bool:
    return reciprocal(f) == f.monic()


@dataclass(frozen=True)
class ReciprocalClasses:
    self_reciprocal: tuple[Poly, ...]
    pairs: tuple[tuple[Poly, Poly], ...]


def classify_reciprocal(factors: Iterable[Poly]) -> ReciprocalClasses:
    """Split factors into self-reciprocal ones and (h, h*) pairs.

    Within a pair the canonically smaller polynomial comes first.
    """
    factors = list(dict.fromkeys(factors))
    present = set(factors)
    selfrec, pairs, used = [], [], set()
    for f in sorted(factors, key=Poly.sort_key):
        if f in used:
            continue
        g = reciprocal(f)
        if g == f:
            selfrec.append(f)
            used.add(f)
        else:
            if g not in present:
                raise ValueError(f"reciprocal of {f} is not in the factor list")
            pairs.append((f, g) if f.sort_key() < g.sort_key() else (g, f))
            used.update((f, g))
    return ReciprocalClasses(tuple(selfrec), tuple(pairs))


def global_factors(q, blocks: Sequence[int]) -> tuple[Poly, ...]:
    """Union of the irreducible factors of every ``x^{m_j} - 1``, canonically sorted."""
    out: dict[Poly, None] = {}
    for m in blocks:
        for f in factor_xm_minus_1(q, m):
            out[f] = None
    return tuple(sorted(out, key=Poly.sort_key))
