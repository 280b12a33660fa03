"""Linear codes over an arbitrary finite field.

This is the plain linear-algebra layer every structural result is checked
against: row reduction, duals, sums and intersections, and exhaustive
minimum distance.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Sequence

import numpy as np

from .gf import Field

DEFAULT_BUDGET = 1 << 24
BUDGET_ENV = "GQC_ENUM_BUDGET"
# Inner enumeration block: at most this many codewords per numpy batch.
_INNER = 1 << 14


class DistanceBudgetError(RuntimeError):
    """Exhaustive enumeration would exceed the configured budget."""


def enumeration_budget() -> int:
    v = os.environ.get(BUDGET_ENV)
    return int(v) if v else DEFAULT_BUDGET


def rref(field: Field, rows: Iterable[Sequence[int]], n: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    F = field
    M = [list(r) for r in rows]
    for r in M:
        if len(r) != n:
            raise ValueError(f"row of length {len(r)} in a length-{n} code")
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv(M[rank][col])
        prow = [F.mul(x, inv) for x in M[rank]]
        M[rank] = prow
        for i in range(len(M)):
            if i != rank:
                c = M[i][col]
                if c:
                    row = M[i]
                    M[i] = [F.sub(a, F.mul(c, b)) if b else a for a, b in zip(row, prow)]
        pivots.append(col)
        rank += 1
        if rank == len(M):
            break
    return tuple(tuple(r) for r in M[:rank]), tuple(pivots)


class Echelon:
    """Incrementally grown row space, kept in reduced echelon form."""

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence[int]) -> list[int]:
        F = self.field
        v = list(v)
        for row, col in zip(self.rows, self.pivots):
            c = v[col]
            if c:
                v = [F.sub(a, F.mul(c, b)) if b else a for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence[int]) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        F = self.field
        r = self.reduce(v)
        col = next((i for i, a in enumerate(r) if a), None)
        if col is None:
            return False
        inv = F.inv(r[col])
        r = [F.mul(a, inv) for a in r]
        for i, row in enumerate(self.rows):
            c = row[col]
            if c:
                self.rows[i] = [F.sub(a, F.mul(c, b)) if b else a for a, b in zip(row, r)]
        self.rows.append(r)
        self.pivots.append(col)
        return True

    def __len__(self):
        return len(self.rows)


class LinearCode:
    """Row space of a generator matrix over ``field``.

    Equality is equality of row spaces (compared through the RREF).
    """

    def __init__(self, field: Field, n: int, rows: Iterable[Sequence[int]] = ()):
        self.field = field
        self.n = n
        self.basis, self.pivots = rref(field, rows, n)

    @classmethod
    def full(cls, field: Field, n: int) -> LinearCode:
        return cls(field, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def k(self) -> int:
        return len(self.basis)

    dim = k

    def rref_and_dim(self) -> tuple[tuple[tuple[int, ...], ...], int]:
        return self.basis, self.k

    def __repr__(self):
        return f"LinearCode(GF({self.field.order}), n={self.n}, k={self.k})"

    def _check(self, other: LinearCode) -> None:
        if other.field != self.field or other.n != self.n:
            raise ValueError("codes differ in field or length")

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.n, self.basis))

    def reduce(self, v: Sequence[int]) -> list[int]:
        """Remainder of ``v`` after elimination against the RREF basis."""
        F = self.field
        v = list(v)
        for row, col in zip(self.basis, self.pivots):
            c = v[col]
            if c:
                v = [F.sub(a, F.mul(c, b)) if b else a for a, b in zip(v, row)]
        return v

    def __contains__(self, v: Sequence[int]) -> bool:
        if len(v) != self.n:
            return False
        return not any(self.reduce(v))

    def contains_code(self, other: LinearCode) -> bool:
        self._check(other)
        return all(r in self for r in other.basis)

    def __add__(self, other: LinearCode) -> LinearCode:
        self._check(other)
        return LinearCode(self.field, self.n, self.basis + other.basis)

    def encode(self, msg: Sequence[int]) -> list[int]:
        F = self.field
        out = [0] * self.n
        for c, row in zip(msg, self.basis):
            if c:
                out = [F.add(a, F.mul(c, b)) for a, b in zip(out, row)]
        return out

    def codewords(self) -> Iterator[list[int]]:
        for msg in itertools.product(range(self.field.order), repeat=self.k):
            yield self.encode(msg)

    # -- duality -----------------------------------------------------------

    def _kernel(self, rows: Sequence[Sequence[int]]) -> list[list[int]]:
        F = self.field
        basis, pivots = rref(F, rows, self.n)
        free = [c for c in range(self.n) if c not in set(pivots)]
        out = []
        for fc in free:
            v = [0] * self.n
            v[fc] = 1
            for row, pc in zip(basis, pivots):
                v[pc] = F.neg(row[fc])
            out.append(v)
        return out

    def dual(self, form: str = "euclidean", sub: Field | None = None) -> LinearCode:
        """Dual under ``<c, d> = sum c_j conj(d_j)``.

        ``form`` is ``"euclidean"`` (no conjugation) or ``"hermitian"``
        (conjugation relative to ``sub``, default the base field).
        """
        F = self.field
        if form == "euclidean":
            rows = self.basis
        elif form == "hermitian":
            # <c, d> = 0  iff  sum conj(c_j) d_j = 0
            rows = [[F.conj(a, sub) for a in r] for r in self.basis]
        else:
            raise ValueError(f"unknown form {form!r}")
        return LinearCode(F, self.n, self._kernel(rows))

    def inner(self, c: Sequence[int], d: Sequence[int], form: str = "euclidean", sub: Field | None = None) -> int:
        F = self.field
        s = 0
        for a, b in zip(c, d):
            if a and b:
                s = F.add(s, F.mul(a, F.conj(b, sub) if form == "hermitian" else b))
        return s

    def intersect(self, other: LinearCode) -> LinearCode:
        self._check(other)
        both = self.dual() + other.dual()
        return both.dual()

    def hull(self, form: str = "euclidean", sub: Field | None = None) -> LinearCode:
        return self.intersect(self.dual(form, sub))

    def is_lcd(self, form: str = "euclidean", sub: Field | None = None) -> bool:
        return self.hull(form, sub).k == 0

    def is_self_dual(self, form: str = "euclidean", sub: Field | None = None) -> bool:
        return self == self.dual(form, sub)

    def is_self_orthogonal(self, form: str = "euclidean", sub: Field | None = None) -> bool:
        return self.dual(form, sub).contains_code(self)

    def scale_coordinates(self, scalars: Sequence[int]) -> LinearCode:
        """Image under ``v -> (s_0 v_0, ..., s_{n-1} v_{n-1})``."""
        F = self.field
        return LinearCode(F, self.n, [[F.mul(s, a) for s, a in zip(scalars, r)] for r in self.basis])

    def restrict(self, coords: Sequence[int]) -> LinearCode:
        """Puncture to the given coordinates (in order)."""
        return LinearCode(self.field, len(coords), [[r[c] for c in coords] for r in self.basis])

    def embed(self, coords: Sequence[int], n: int) -> LinearCode:
        """Inverse of :meth:`restrict` for codes vanishing off ``coords``."""
        rows = []
        for r in self.basis:
            v = [0] * n
            for c, a in zip(coords, r):
                v[c] = a
            rows.append(v)
        return LinearCode(self.field, n, rows)

    # -- distance ----------------------------------------------------------

    def min_distance(self, budget: int | None = None, workers: int = 1) -> int:
        return min_distance_bruteforce(self, budget=budget, workers=workers)


def weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a)


def _span_array(F: Field, rows: np.ndarray) -> np.ndarray:
    """All F-linear combinations of ``rows`` (shape (Q^r, n))."""
    out = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for g in rows:
        parts = [out] + [F.vadd(out, F.vscale(c, g)[None, :]) for c in range(1, F.order)]
        out = np.concatenate(parts, axis=0)
    return out


def _min_weight_task(args) -> int:
    F, lead, outer_rows, inner_span, outer_msgs = args
    best = lead.shape[0] + 1
    for msg in outer_msgs:
        v = lead
        for c, g in zip(msg, outer_rows):
            if c:
                v = F.vadd(v, F.vscale(c, g))
        w = int(np.count_nonzero(F.vadd(inner_span, v[None, :]), axis=1).min())
        if w < best:
            best = w
    return best


def _tasks(code: LinearCode):
    F = code.field
    G = np.array(code.basis, dtype=np.int64)
    k = code.k
    Q = F.order
    r_inner = 0
    while Q ** (r_inner + 1) <= _INNER:
        r_inner += 1
    # Projective enumeration: the first nonzero message symbol is 1.
    for i in range(k):
        rest = G[i + 1:]
        r = min(r_inner, len(rest))
        inner = _span_array(F, rest[len(rest) - r:]) if r else np.zeros((1, code.n), dtype=np.int64)
        outer = rest[: len(rest) - r]
        msgs = itertools.product(range(Q), repeat=len(outer))
        yield G[i], outer, inner, msgs


def min_distance_bruteforce(code: LinearCode, budget: int | None = None, workers: int = 1) -> int:
    """Minimum Hamming weight over all nonzero codewords.

    Raises ``ValueError`` for the zero code and ``DistanceBudgetError`` if
    ``|F|^k`` exceeds ``budget``.  ``workers > 1`` spreads the message space
    over processes; the result does not depend on the split.
    """
    if code.k == 0:
        raise ValueError("zero code has no minimum distance")
    budget = enumeration_budget() if budget is None else budget
    if code.field.order**code.k > budget:
        raise DistanceBudgetError(
            f"enumerating {code.field.order}^{code.k} codewords exceeds the budget of {budget}"
        )
    F = code.field
    jobs = []
    for lead, outer, inner, msgs in _tasks(code):
        msgs = list(msgs)
        if workers > 1 and len(msgs) > 1:
            step = -(-len(msgs) // workers)
            for s in range(0, len(msgs), step):
                jobs.append((F, lead, outer, inner, msgs[s:s + step]))
        else:
            jobs.append((F, lead, outer, inner, msgs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_min_weight_task, jobs))
    else:
        results = [_min_weight_task(j) for j in jobs]
    return min(results)


def rref_and_dim(code: LinearCode):
    return code.rref_and_dim()


def dual(code: LinearCode, form: str = "euclidean", sub: Field | None = None) -> LinearCode:
    return code.dual(form, sub)


def intersect(a: LinearCode, b: LinearCode) -> LinearCode:
    return a.intersect(b)


def repetition_code(field: Field, n: int) -> LinearCode:
    return LinearCode(field, n, [[1] * n])


def parity_check_code(field: Field, n: int) -> LinearCode:
    return repetition_code(field, n).dual()
