"""Exact arithmetic in prime fields and towers of extension fields.

Every element is stored as a plain ``int``.  For an extension ``F = B[x]/(f)``
of degree ``n`` over a base ``B`` with ``Q`` elements, the element
``c_0 + c_1 x + ... + c_{n-1} x^{n-1}`` is encoded as ``sum(c_i * Q**i)``
where each ``c_i`` is itself an encoded element of ``B``.  Unwinding the
tower, this is the base-``p`` expansion of the flat coefficient vector over
the prime field, so every subfield on the tower path embeds as the integers
``0 .. |subfield| - 1``.

:class:`FieldElement` is a thin operator-friendly wrapper for interactive
use.  Hot loops elsewhere in the package call the ``Field`` methods on raw
ints directly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

# Fields at most this large get log/exp tables; larger ones multiply by
# polynomial arithmetic.  Tables are built lazily, once a field has done
# enough raw multiplications (a fraction of its order) to amortise them.
TABLE_LIMIT = 1 << 16
TABLE_AMORTISE = 16
# Hard cap on field size for anything that enumerates elements.
MAX_ORDER = 1 << 20
# Odd-characteristic extensions at most this large get a full addition table.
ADD_TABLE_LIMIT = 2187


class FieldError(ValueError):
    """Raised for invalid field construction or cross-field arithmetic."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """A finite field, either ``F_p`` or ``base[x]/(modulus)``.

    Use :func:`prime_field`, :func:`make_extension` or :func:`field_of_order`
    rather than calling the constructor; those cache instances so that equal
    fields are the same object.
    """

    def __init__(self, p: int, base: Field | None = None, modulus: Sequence[int] | None = None):
        self.p = p
        self.base = base
        if base is None:
            self.degree = 1
            self.modulus: tuple[int, ...] | None = None
            self.order = p
            self.absolute_degree = 1
            self._key: tuple = (p,)
        else:
            self.modulus = tuple(modulus)
            self.degree = len(self.modulus) - 1
            self.order = base.order**self.degree
            self.absolute_degree = base.absolute_degree * self.degree
            self._key = (p, base._key, self.modulus)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._np_tables = None
        self._add_table: list[list[int]] | None = None
        self._kron = None
        self._raw_mults = 0

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.order}; over GF({self.base.order}) mod {list(self.modulus)})"

    @property
    def is_prime(self) -> bool:
        return self.base is None

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def gen(self) -> int:
        """The residue class of ``x`` (for a prime field, ``1``)."""
        if self.base is None:
            return 1
        if self.degree == 1:
            return self.base.neg(self.modulus[0])
        return self.base.order

    def tower(self) -> list[Field]:
        """This field followed by its base, the base's base, ... down to F_p."""
        out, f = [], self
        while f is not None:
            out.append(f)
            f = f.base
        return out

    def contains(self, sub: Field) -> bool:
        return sub in self.tower()

    def elements(self) -> range:
        return range(self.order)

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"{value!r} does not belong to {self!r}")
            return value
        if isinstance(value, (list, tuple)):
            value = self.encode(value)
        if not 0 <= value < self.order:
            raise FieldError(f"{value} is not an element of {self!r}")
        return FieldElement(self, value)

    # -- coefficient vectors -----------------------------------------------

    def digits(self, a: int) -> list[int]:
        """Coefficient vector of ``a`` over the base field (ascending)."""
        if self.base is None:
            return [a]
        Q = self.base.order
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, Q)
            out.append(r)
        return out

    def encode(self, coeffs: Sequence[int]) -> int:
        if self.base is None:
            if len(coeffs) != 1:
                raise FieldError("prime field elements have a single coefficient")
            return coeffs[0] % self.p
        if len(coeffs) > self.degree:
            raise FieldError(f"coefficient vector longer than degree {self.degree}")
        Q = self.base.order
        v = 0
        for c in reversed(coeffs):
            v = v * Q + c
        return v

    def prime_digits(self, a: int) -> list[int]:
        """Flat coefficient vector over F_p."""
        out = []
        for _ in range(self.absolute_degree):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    # -- additive group ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % p
        if self._add_table is not None:
            return self._add_table[a][b]
        if self.order <= ADD_TABLE_LIMIT:
            self._add_table = self._np_add_table().tolist()
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def _np_add_table(self) -> np.ndarray:
        p, n = self.p, self.order
        vals = np.arange(n, dtype=np.int64)
        out = np.zeros((n, n), dtype=np.int64)
        scale = 1
        for _ in range(self.absolute_degree):
            d = (vals // scale) % p
            out += ((d[:, None] + d[None, :]) % p) * scale
            scale *= p
        return out

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        v, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            v += ((x + y) % p) * scale
            scale *= p
        return v

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2 or a == 0:
            return a
        if self.base is None:
            return p - a
        v, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            v += ((p - x) % p) * scale
            scale *= p
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- multiplicative group ----------------------------------------------

    def _want_tables(self) -> bool:
        if self._exp is not None or self.order > TABLE_LIMIT:
            return False
        self._raw_mults += 1
        return self._raw_mults > 64 + self.order // TABLE_AMORTISE

    def mul(self, a: int, b: int) -> int:
        if self.base is None:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._want_tables():
            self._build_tables()
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def _mul_raw(self, a: int, b: int) -> int:
        if self.base.is_prime:
            return self._mul_kronecker(a, b)
        B = self.base
        n = self.degree
        ad, bd = self.digits(a), self.digits(b)
        if self.p == 2 and B.order <= 256:
            return self._mul_tower_char2(ad, bd)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(ad):
            if x:
                for j, y in enumerate(bd):
                    if y:
                        prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        mod = self.modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c:
                for t in range(n):
                    if mod[t]:
                        prod[k - n + t] = B.sub(prod[k - n + t], B.mul(c, mod[t]))
        return self.encode(prod[:n])

    def _mul_tower_char2(self, ad: list[int], bd: list[int]) -> int:
        # schoolbook product over a small base of characteristic 2: XOR adds, base tables multiply
        B = self.base
        if B._exp is None:
            B._build_tables()
        exp, log = B._exp, B._log
        n = self.degree
        prod = [0] * (2 * n - 1)
        lb = [(j, log[y]) for j, y in enumerate(bd) if y]
        for i, x in enumerate(ad):
            if x:
                lx = log[x]
                for j, ly in lb:
                    prod[i + j] ^= exp[lx + ly]
        mod = [(t, log[c]) for t, c in enumerate(self.modulus[:n]) if c]
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c:
                lc = log[c]
                for t, lm in mod:
                    prod[k - n + t] ^= exp[lc + lm]
        Q = B.order
        v = 0
        for c in reversed(prod[:n]):
            v = v * Q + c
        return v

    def _mul_kronecker(self, a: int, b: int) -> int:
        # Pack coefficient vectors into big ints, multiply natively, unpack.
        if self._kron is None:
            n, p = self.degree, self.p
            bits = (2 * n * p * p).bit_length() + 1
            mask = (1 << bits) - 1
            # x^(n+k) mod f, packed, for k = 0 .. n-2
            red = []
            row = [(-c) % p for c in self.modulus[:n]]
            for _ in range(n - 1):
                red.append(sum(c << (bits * i) for i, c in enumerate(row)))
                top = row[-1]
                row = [0] + row[:-1]
                row = [(r - top * m) % p for r, m in zip(row, self.modulus[:n])]
            self._kron = (bits, mask, red)
        bits, mask, red = self._kron
        n, p = self.degree, self.p
        A = sum(d << (bits * i) for i, d in enumerate(self.digits(a)))
        Bv = sum(d << (bits * i) for i, d in enumerate(self.digits(b)))
        P = A * Bv
        low = P & ((1 << (bits * n)) - 1)
        high = P >> (bits * n)
        for k in range(n - 1):
            c = ((high >> (bits * k)) & mask) % p
            if c:
                low += c * red[k]
        v, scale = 0, 1
        for i in range(n):
            v += (((low >> (bits * i)) & mask) % p) * scale
            scale *= p
        return v

    def _build_tables(self) -> None:
        n = self.order - 1
        primes = prime_factors(n)
        for g in range(2, self.order):
            if all(self._pow_raw(g, n // r) != 1 for r in primes):
                break
        else:  # pragma: no cover - only F_2 lacks a candidate, and it is prime
            g = 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, g)
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.base is None:
            return pow(a, e, self.p)
        if self._want_tables():
            self._build_tables()
        if self._exp is not None:
            n = self.order - 1
            return self._exp[(self._log[a] * e) % n]
        return self._pow_raw(a, e % (self.order - 1) if e else 0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in {self!r}")
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def mul_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        for r in prime_factors(n):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    # -- Galois structure --------------------------------------------------

    def degree_over(self, sub: Field) -> int:
        if not self.contains(sub):
            raise FieldError(f"{sub!r} is not on the tower of {self!r}")
        return self.absolute_degree // sub.absolute_degree

    def frobenius(self, a: int, sub: Field | None = None, times: int = 1) -> int:
        """``a ** (|sub| ** times)``; ``sub`` defaults to the base field."""
        sub = self._sub_or_base(sub)
        return self.pow(a, sub.order**times) if times else a

    def trace(self, a: int, sub: Field | None = None) -> int:
        """Trace of ``a`` down to the subfield ``sub`` (default: base field)."""
        sub = self._sub_or_base(sub)
        d = self.degree_over(sub)
        s, t = a, a
        for _ in range(d - 1):
            t = self.pow(t, sub.order)
            s = self.add(s, t)
        if s >= sub.order:  # pragma: no cover - would mean broken arithmetic
            raise FieldError("trace escaped the target subfield")
        return s

    def norm(self, a: int, sub: Field | None = None) -> int:
        sub = self._sub_or_base(sub)
        d = self.degree_over(sub)
        s, t = a, a
        for _ in range(d - 1):
            t = self.pow(t, sub.order)
            s = self.mul(s, t)
        return s

    def conj(self, a: int, sub: Field | None = None) -> int:
        """Hermitian conjugation ``a -> a ** sqrt(|self|/|sub|... )`` relative to ``sub``.

        Over a degree-1 extension this is the identity.  Over an even-degree
        extension of ``sub`` it is the unique involutive automorphism fixing
        the middle subfield.  Odd degree above 1 has no such involution.
        """
        sub = self._sub_or_base(sub)
        d = self.degree_over(sub)
        if d == 1:
            return a
        if d % 2:
            raise FieldError(f"{self!r} has odd degree {d} over {sub!r}; no Hermitian conjugation")
        return self.pow(a, sub.order ** (d // 2))

    def _sub_or_base(self, sub: Field | None) -> Field:
        if sub is None:
            return self.base if self.base is not None else self
        if not self.contains(sub):
            raise FieldError(f"{sub!r} is not on the tower of {self!r}")
        return sub

    # -- vectorised helpers (numpy int64 arrays) ---------------------------

    def _np(self):
        if self._np_tables is None:
            if self.base is not None:
                if self._exp is None and self.order <= TABLE_LIMIT:
                    self._build_tables()
                if self._exp is None:
                    raise FieldError(f"{self!r} is too large for vectorised arithmetic")
                exp = np.array(self._exp, dtype=np.int64)
                log = np.array(self._log, dtype=np.int64)
            else:
                exp = log = None
            add = None
            if self.p != 2 and self.base is not None and self.order <= ADD_TABLE_LIMIT:
                add = self._np_add_table()
            self._np_tables = (exp, log, add)
        return self._np_tables

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        add = self._np()[2]
        if add is not None:
            return add[a, b]
        p, out, scale = self.p, np.zeros(np.broadcast(a, b).shape, dtype=np.int64), 1
        a, b = a.copy(), b.copy()
        for _ in range(self.absolute_degree):
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def vscale(self, c: int, a: np.ndarray) -> np.ndarray:
        """Multiply every entry of ``a`` by the scalar ``c``."""
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a.copy()
        if self.base is None:
            return (a * c) % self.p
        exp, log, _ = self._np()
        out = exp[log[a] + log[c]]
        out[a == 0] = 0
        return out

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.base is None:
            return (a * b) % self.p
        exp, log, _ = self._np()
        out = exp[log[a] + log[b]]
        out[(a == 0) | (b == 0)] = 0
        return out


class FieldElement:
    """An element of a :class:`Field` with Python operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"cannot mix elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            # integers act through the prime subfield
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.div(o, self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def trace(self, sub: Field | None = None) -> FieldElement:
        sub = self.field._sub_or_base(sub)
        return FieldElement(sub, self.field.trace(self.value, sub))

    def conj(self, sub: Field | None = None) -> FieldElement:
        return FieldElement(self.field, self.field.conj(self.value, sub))

    @property
    def coeffs(self) -> list[int]:
        return self.field.digits(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other and other < self.field.order
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.field!r}({self.coeffs})"


# -- constructors --------------------------------------------------------


@lru_cache(maxsize=None)
def prime_field(p: int) -> Field:
    if not _is_prime(p):
        raise FieldError(f"{p} is not prime")
    return Field(p)


def _poly_mulmod(F: Field, a: list[int], b: list[int], f: list[int]) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = F.add(prod[i + j], F.mul(x, y))
    return _poly_rem(F, prod, f)


def _poly_rem(F: Field, a: list[int], f: list[int]) -> list[int]:
    # f monic
    a = list(a)
    n = len(f) - 1
    for k in range(len(a) - 1, n - 1, -1):
        c = a[k]
        if c:
            for t in range(n + 1):
                if f[t]:
                    a[k - n + t] = F.sub(a[k - n + t], F.mul(c, f[t]))
    a = a[:n]
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_gcd(F: Field, a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(a), _trim(b)
    while b:
        inv = F.inv(b[-1])
        bm = [F.mul(c, inv) for c in b]
        a, b = b, _poly_rem(F, a, bm)
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(c, inv) for c in a]
    return a


def _trim(a: Iterable[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_powmod(F: Field, a: list[int], e: int, f: list[int]) -> list[int]:
    r = [1]
    a = _poly_rem(F, a, f)
    while e:
        if e & 1:
            r = _poly_mulmod(F, r, a, f)
        a = _poly_mulmod(F, a, a, f)
        e >>= 1
    return r


def _fmt_poly(c: Sequence[int]) -> str:
    terms = []
    for i, v in enumerate(c):
        if not v:
            continue
        mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mon:
            terms.append(str(v))
        else:
            terms.append(mon if v == 1 else f"{v}*{mon}")
    return " + ".join(reversed(terms)) or "0"


def irreducible_factor_witness(base: Field, modulus: Sequence[int]) -> list[int] | None:
    """Return a proper factor of ``modulus`` over ``base``, or None if irreducible.

    Uses gcd(f, x^(Q^k) - x) for k <= deg/2, which exposes every factor of
    degree dividing k; a degree-1 factor (a root) shows up at k = 1.
    """
    f = list(modulus)
    n = len(f) - 1
    xp = [0, 1]
    for k in range(1, n // 2 + 1):
        xp = _poly_powmod(base, xp, base.order, f)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = base.sub(diff[1], 1)
        g = _poly_gcd(base, f, _trim(diff))
        if len(g) > 1:
            return g
    return None


@lru_cache(maxsize=None)
def _make_extension(base: Field, modulus: tuple[int, ...]) -> Field:
    return Field(base.p, base, modulus)


def make_extension(base: Field, modulus, check: bool = True) -> Field:
    """The field ``base[x]/(modulus)``.

    ``modulus`` is a :class:`~gqcodes.polyring.Poly` over ``base`` or an
    ascending coefficient sequence of base-field ints.
    """
    coeffs = getattr(modulus, "coeffs", modulus)
    coeffs = tuple(_trim(coeffs))
    if len(coeffs) < 2:
        raise FieldError("modulus must have degree at least 1")
    if coeffs[-1] != 1:
        raise FieldError(f"modulus {_fmt_poly(coeffs)} is not monic")
    if any(not 0 <= c < base.order for c in coeffs):
        raise FieldError("modulus coefficients are not elements of the base field")
    if base.order ** (len(coeffs) - 1) > 1 << 64:
        raise FieldError("field too large")
    if check and len(coeffs) > 2:
        w = irreducible_factor_witness(base, coeffs)
        if w is not None:
            raise FieldError(f"modulus {_fmt_poly(coeffs)} is reducible: factor {_fmt_poly(w)}")
    return _make_extension(base, coeffs)


@lru_cache(maxsize=None)
def canonical_irreducible(base: Field, degree: int) -> tuple[int, ...]:
    """Smallest (by encoding) monic irreducible polynomial of the given degree."""
    Q = base.order
    if degree == 1:
        return (0, 1)
    for code in range(Q**degree):
        c, low = code, []
        for _ in range(degree):
            c, r = divmod(c, Q)
            low.append(r)
        if low[0] == 0:
            continue
        f = tuple(low) + (1,)
        if irreducible_factor_witness(base, f) is None:
            return f
    raise FieldError("no irreducible polynomial found")  # pragma: no cover


@lru_cache(maxsize=None)
def field_of_order(q: int) -> Field:
    """Canonical ``F_q``: the prime field, or a degree-n extension of ``F_p``."""
    for p in prime_factors(q)[:1]:
        n, r = 0, q
        while r % p == 0:
            r //= p
            n += 1
        if r != 1:
            break
        if n == 1:
            return prime_field(p)
        F = prime_field(p)
        return make_extension(F, canonical_irreducible(F, n), check=False)
    raise FieldError(f"{q} is not a prime power")


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch one of add, sub, mul, div, inv, pow on field elements.

    For ``pow`` the exponent is ``b`` given as an int.
    """
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    if not isinstance(b, FieldElement) or b.field != a.field:
        raise FieldError("operands belong to different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def trace_to_base(e: FieldElement, sub: Field | None = None) -> FieldElement:
    return e.trace(sub)


def hermitian_conj(e: FieldElement, sub: Field | None = None) -> FieldElement:
    return e.conj(sub)
