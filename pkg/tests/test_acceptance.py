"""Exit criteria, one test each, run at their stated tolerances and time limits.

Every test prints ``criterion N: PASS|FAIL (...)``; the lines are also
collected into the terminal summary.
"""

import contextlib
import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from gqcodes import polyring
from gqcodes.bounds import jensen_bound_gqc, jensen_bound_qc
from gqcodes.construct import (
    Params,
    family_accounting,
    juxtapose,
    lcd_family,
    predicted_params,
    search_qccd,
    weighted_rate,
    weighted_relative_distance,
)
from gqcodes.cyclic import RingElem, build_idempotent_table, residue_field
from gqcodes.duality import dual_gqc, is_lcd, is_self_dual
from gqcodes.gf import field_of_order, prime_field
from gqcodes.gqc import (
    ConstituentSet,
    GqcCode,
    decompose,
    is_gqc,
    multilevel_image,
    reconstruct,
    trace_codeword,
    trace_span,
    zero_constituents,
)
from gqcodes.lincode import LinearCode, min_distance_bruteforce
from gqcodes.polyring import Poly, factor_xm_minus_1
from gqcodes.sampling import random_divisor_gqc, random_gqc, seeded_lcd, seeded_self_dual
from gqcodes.tabulate import tabulate

pytestmark = pytest.mark.acceptance

F2 = prime_field(2)


@contextlib.contextmanager
def criterion(log, number: int, limit: float, detail: dict):
    """Time the block, enforce ``limit`` seconds, and record one pass/fail line."""
    start = time.perf_counter()
    ok = False
    try:
        yield detail
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        extras = ", ".join(f"{k}={v}" for k, v in detail.items())
        line = f"criterion {number}: {status} ({elapsed:.2f}s of {limit:g}s; {extras})"
        print(line)
        log.append(line)
    assert within, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def _subsets(vals):
    return [c for r in range(1, len(vals) + 1) for c in itertools.combinations(vals, r)]


def _random_blocks(rng, pool, max_ell=3):
    return tuple(rng.sample(pool, rng.randint(1, min(max_ell, len(pool)))))


# 1 ----------------------------------------------------------------------------


def test_criterion_1_factorizations(acceptance_log):
    polyring._factor.cache_clear()
    polyring._splitting_field.cache_clear()
    with criterion(acceptance_log, 1, 1.0, {}) as info:
        expected = {
            3: [[1, 1], [1, 1, 1]],
            5: [[1, 1], [1, 1, 1, 1, 1]],
            9: [[1, 1], [1, 1, 1], [1, 0, 0, 1, 0, 0, 1]],
        }
        for m, fs in expected.items():
            assert [list(f.coeffs) for f in factor_xm_minus_1(2, m).factors] == fs
        count = 0
        for q in (2, 3, 4, 5):
            F = field_of_order(q)
            for m in range(1, 31):
                if math.gcd(m, q) != 1:
                    continue
                prod = Poly(F, [1])
                for f in factor_xm_minus_1(q, m).factors:
                    prod = prod * f
                assert prod == Poly.xm_minus_1(F, m)
                count += 1
        info["factorizations"] = count


# 2 ----------------------------------------------------------------------------


def test_criterion_2_cordaro_wagner(acceptance_log):
    with criterion(acceptance_log, 2, 1.0, {}) as info:
        C = GqcCode(F2, (6, 5, 5), [([1, 1, 1, 1, 1, 1], [0], [1, 1, 1, 1, 1]), ([0], [1, 1, 1, 1, 1], [1, 1, 1, 1, 1])])
        L = C.linear
        assert (L.n, L.k, min_distance_bruteforce(L)) == (16, 2, 10)
        assert L == LinearCode(F2, 16, [[1] * 6 + [0] * 5 + [1] * 5, [0] * 6 + [1] * 10])
        assert is_gqc(L, (6, 5, 5))
        v = is_lcd(C, method="direct")
        assert v.holds and v.method == "direct"
        C12 = GqcCode(F2, (4, 4, 4), [([1] * 4, [0], [1] * 4), ([0], [1] * 4, [1] * 4)])
        assert (C12.linear.n, C12.linear.k, min_distance_bruteforce(C12.linear)) == (12, 2, 8)
        assert not is_lcd(C12, method="direct").holds
        info["params"] = "[16,2,10]"


# 3 ----------------------------------------------------------------------------


def test_criterion_3_idempotent_identities(acceptance_log):
    with criterion(acceptance_log, 3, 10.0, {}) as info:
        tables = 0
        for q in (2, 3, 4):
            F = field_of_order(q)
            pool = [m for m in (1, 3, 5, 7, 9, 11, 13) if math.gcd(m, q) == 1]
            for blocks in _subsets(pool):
                T = build_idempotent_table(F, blocks)
                s = len(T.factors)
                for j, m in enumerate(blocks):
                    total = RingElem.zero(F, m)
                    for u in range(s):
                        e = T[u, j]
                        assert e * e == e
                        for v in range(u + 1, s):
                            assert (e * T[v, j]).is_zero()
                        total = total + e
                    assert total == RingElem.one(F, m)
                # <I_i> = <I_i0> x ... x <I_i,l-1>, measured as an F_q-span of shifts
                comps = []
                for i in range(s):
                    gens = [[T[i, j] if t == j else RingElem.zero(F, m) for t, m in enumerate(blocks)]
                            for j in range(len(blocks))]
                    comps.append(GqcCode(F, blocks, gens).linear)
                dims = [c.k for c in comps]
                assert dims == [T.component_dimension(i) for i in range(s)]
                assert sum(dims) == sum(blocks)
                total_span = comps[0]
                for c in comps[1:]:
                    total_span = total_span + c
                assert total_span.k == sum(blocks)
                tables += 1
        info["tables"] = tables


# 4 ----------------------------------------------------------------------------


def test_criterion_4_round_trip(acceptance_log):
    with criterion(acceptance_log, 4, 60.0, {}) as info:
        rng = random.Random(20240404)
        n = 0
        for _ in range(240):
            q = rng.choice([2, 3])
            F = field_of_order(q)
            pool = [m for m in (1, 3, 5, 7, 9, 13) if m % q]
            C = random_gqc(rng, F, _random_blocks(rng, pool), max_gens=3)
            S = decompose(C)
            assert reconstruct(S).linear == C.linear
            n += 1
        C = GqcCode(F2, (3, 5, 9), [([1, 1], [1, 0, 1], [1, 1, 0, 1])])
        S = decompose(C)
        table = sorted((residue_field(f).order, m) for f, m in zip(S.factors, S.masks))
        assert table == [
            (2, (True, True, True)),
            (4, (True, False, True)),
            (16, (False, True, False)),
            (64, (False, False, True)),
        ]
        info["round_trips"] = n


# 5 ----------------------------------------------------------------------------


def test_criterion_5_trace_representation(acceptance_log):
    with criterion(acceptance_log, 5, 10.0, {}) as info:
        blocks = (3, 5)
        Z = zero_constituents(F2, blocks)
        idx = {residue_field(f).order: i for i, f in enumerate(Z.factors)}
        E = {k: residue_field(Z.factors[i]) for k, i in idx.items()}
        codes = list(Z.codes)
        codes[idx[2]] = LinearCode(E[2], 2, [[1, 0], [0, 1]])
        codes[idx[4]] = LinearCode(E[4], 2, [[1, 0]])
        codes[idx[16]] = LinearCode(E[16], 2, [[0, 1]])
        S = ConstituentSet(F2, blocks, Z.factors, tuple(codes), Z.masks)
        dim = sum(f.degree * c.k for f, c in zip(S.factors, S.codes))
        combos = 0
        for z1, z2, a, b, c, d, e, f in itertools.product((0, 1), repeat=dim):
            picks = [None] * 3
            picks[idx[2]] = [z1, z2]
            picks[idx[4]] = [a | b << 1, 0]
            picks[idx[16]] = [0, c | d << 1 | e << 2 | f << 3]
            expect = [
                z1 ^ b, z1 ^ a, z1 ^ a ^ b,
                z2 ^ d ^ e ^ f, z2 ^ c ^ e ^ f, z2 ^ c ^ d ^ f, z2 ^ c ^ d ^ e, z2 ^ c ^ d ^ e ^ f,
            ]
            assert trace_codeword(S, picks) == expect
            combos += 1
        rng = random.Random(55)
        spans = 0
        for _ in range(60):
            q = rng.choice([2, 3, 4])
            F = field_of_order(q)
            pool = [m for m in (1, 2, 3, 4, 5, 7, 9) if m % F.p]
            C = random_gqc(rng, F, _random_blocks(rng, pool))
            assert trace_span(decompose(C)) == C.linear
            spans += 1
        info["pattern_inputs"] = combos
        info["span_checks"] = spans


# 6 ----------------------------------------------------------------------------


def test_criterion_6_multilevel(acceptance_log):
    with criterion(acceptance_log, 6, 30.0, {}) as info:
        rng = random.Random(66)
        n = 0
        for _ in range(120):
            q = rng.choice([2, 3, 4])
            F = field_of_order(q)
            pool = [m for m in (1, 2, 3, 4, 5, 7, 9) if m % F.p]
            C = random_gqc(rng, F, _random_blocks(rng, pool))
            assert multilevel_image(decompose(C)) == C.linear
            n += 1
        info["instances"] = n


# 7 ----------------------------------------------------------------------------


def test_criterion_7_bound_soundness(acceptance_log):
    with criterion(acceptance_log, 7, 120.0, {}) as info:
        rng = random.Random(77)
        n = tight = above_two = 0
        while n < 160:
            q = rng.choice([2, 3])
            F = field_of_order(q)
            pool = [m for m in (1, 2, 3, 4, 5, 7, 9) if m % q]
            blocks = _random_blocks(rng, pool)
            C = random_gqc(rng, F, blocks) if n % 2 else random_divisor_gqc(rng, F, blocks)
            if C.k == 0:
                continue
            r = jensen_bound_gqc(C, with_true_distance=True)
            assert r.bound <= r.true_distance
            tight += r.bound == r.true_distance
            above_two += r.true_distance > 2
            n += 1
        qc = 0
        while qc < 40:
            q, m = rng.choice([(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (2, 9)])
            C = random_gqc(rng, field_of_order(q), (m,) * rng.randint(1, 3))
            if C.k == 0:
                continue
            assert jensen_bound_gqc(C).bound == jensen_bound_qc(C)
            qc += 1
        info["instances"] = n
        info["tight"] = tight
        info["d_above_2"] = above_two
        info["qc_equalities"] = qc


# 8 ----------------------------------------------------------------------------


def test_criterion_8_duality(acceptance_log):
    with criterion(acceptance_log, 8, 60.0, {}) as info:
        rng = random.Random(88)
        n = lcd_count = sd_count = 0
        for _ in range(120):
            q = rng.choice([2, 3, 4])
            F = field_of_order(q)
            pool = [m for m in (1, 2, 3, 4, 5, 7) if m % F.p]
            C = random_gqc(rng, F, _random_blocks(rng, pool))
            assert dual_gqc(C, method="constituent").linear == C.linear.dual()
            v_sd = is_self_dual(C, method="both")
            v_lcd = is_lcd(C, method="both")
            assert v_sd.constituent == v_sd.direct == (C.linear == C.linear.dual())
            assert v_lcd.constituent == v_lcd.direct == C.linear.is_lcd()
            lcd_count += v_lcd.holds
            n += 1
        for q, blocks in [(2, (7, 7)), (2, (3, 3)), (2, (3, 5, 3, 5)), (2, (7, 7, 7, 7)), (4, (5, 5)), (5, (4, 4))]:
            for _ in range(3):
                C = seeded_self_dual(rng, field_of_order(q), blocks)
                assert is_self_dual(C, method="constituent").holds
                assert C.linear == C.linear.dual()
                sd_count += 1
        seeded = 0
        for q, blocks in [(2, (7, 7)), (2, (3, 5, 9)), (3, (1, 4, 7)), (4, (3, 5)), (2, (15,)), (5, (4, 4))]:
            for _ in range(3):
                C = seeded_lcd(rng, field_of_order(q), blocks)
                assert is_lcd(C, method="constituent").holds
                assert C.linear.is_lcd()
                seeded += 1
        info["random"] = n
        info["random_lcd"] = lcd_count
        info["seeded_self_dual"] = sd_count
        info["seeded_lcd"] = seeded


# 9 ----------------------------------------------------------------------------


def test_criterion_9_juxtaposition(acceptance_log):
    with criterion(acceptance_log, 9, 60.0, {}) as info:
        rng = random.Random(99)
        comps = []
        for q in (2, 3):
            F = field_of_order(q)
            for m in (1, 2, 3, 4, 5):
                if m % q == 0:
                    continue
                for ell in (2, 3):
                    comps.append(search_qccd(F, m, ell))
        for q, blocks in [(2, (7, 7)), (2, (3, 5)), (3, (1, 4)), (3, (2, 5, 8))]:
            while sum(c.blocks == blocks for c in comps) < 3:
                C = seeded_lcd(rng, field_of_order(q), blocks)
                if C.k:
                    comps.append(C)
        by_field = {}
        for c in comps:
            by_field.setdefault(c.field.order, []).append(c)
        checked = 0
        while checked < 60:
            pool = by_field[rng.choice(sorted(by_field))]
            parts = rng.sample(pool, rng.choice([2, 3]))
            E = juxtapose(parts)
            ps = [Params.of(p) for p in parts]
            PE = Params.of(E)
            assert PE.k == sum(p.k for p in ps)
            assert PE.d == min(p.d for p in ps)
            assert PE == predicted_params(ps)
            assert E.blocks == tuple(m for p in parts for m in p.blocks)
            assert is_gqc(E.linear, E.blocks)
            assert all(p.linear.is_lcd() for p in parts) and E.linear.is_lcd()
            checked += 1
        fam, params = lcd_family(F2, (3, 5, 7), (2, 3), min_k=2)
        rows = family_accounting(params)
        for code, parts, row in zip(fam, params, rows):
            P = Params.of(code)
            n = sum(p.n for p in parts)
            assert row.rate == sum(Fraction(p.n, n) * Fraction(p.k, p.n) for p in parts) == Fraction(P.k, P.n)
            assert row.relative_distance == min(Fraction(p.n, n) * Fraction(p.d, p.n) for p in parts)
            assert row.relative_distance == Fraction(P.d, P.n)
            assert row.rate == weighted_rate(parts)
            assert row.relative_distance == weighted_relative_distance(parts)
            assert code.linear.is_lcd()
        info["juxtapositions"] = checked
        info["components"] = len(comps)
        info["family_steps"] = len(rows)


# 10 ---------------------------------------------------------------------------


def test_criterion_10_determinism(acceptance_log, tmp_path):
    with criterion(acceptance_log, 10, 30.0, {}) as info:
        runs = []
        for i in range(2):
            p = tmp_path / f"run{i}.csv"
            tabulate(str(p), F2, [3, 5, 7], max_gens=2, max_codes=8)
            runs.append(p.read_bytes())
        assert runs[0] == runs[1]
        rng = random.Random(1010)
        compared = 0
        for q, n, k in [(2, 28, 16), (2, 24, 14), (3, 16, 9), (4, 12, 7)]:
            F = field_of_order(q)
            L = LinearCode(F, n, [[rng.randrange(q) for _ in range(n)] for _ in range(k)])
            assert min_distance_bruteforce(L, workers=1) == min_distance_bruteforce(L, workers=2)
            compared += 1
        info["csv_bytes"] = len(runs[0])
        info["parallel_checks"] = compared
