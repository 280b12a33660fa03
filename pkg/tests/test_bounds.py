import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from gqcodes.bounds import column_sum_distance, jensen_bound_gqc, jensen_bound_qc
from gqcodes.gf import field_of_order, prime_field
from gqcodes.gqc import GqcCode, decompose
from gqcodes.polyring import Poly, factor_xm_minus_1
from gqcodes.sampling import random_blocks, random_divisor_gqc, random_gqc

F2 = prime_field(2)


def test_repetition_m9():
    C = GqcCode(F2, (9,), [([1] * 9,)])
    r = jensen_bound_gqc(C, with_true_distance=True)
    assert r.bound == r.true_distance == 9


def test_column_distance_is_inf_when_structurally_zero():
    f = Poly(F2, [1, 0, 0, 1, 0, 0, 1])
    assert math.isinf(column_sum_distance((f,), 5))
    assert column_sum_distance((f,), 9) == 2  # generated by x^3 + 1


def test_column_distance_values():
    fs = factor_xm_minus_1(2, 7).factors
    # minimal cyclic code with check polynomial x+1 is the repetition code
    assert column_sum_distance((fs[0],), 7) == 7
    # with check polynomial of degree 3: the [7,3,4] simplex code
    assert column_sum_distance((fs[1],), 7) == 4
    assert column_sum_distance((fs[0], fs[1]), 7) == 3


def test_report_fields():
    C = GqcCode(F2, (3, 5, 9), [([0, 0, 1], [0, 1, 1, 1, 1], [0, 0, 1, 0, 1, 1, 0, 1, 1])])
    r = jensen_bound_gqc(C, with_true_distance=True)
    d = r.as_dict()
    assert d["bound"] == min(d["levels"]) <= d["true_distance"]
    assert d["constituent_distances"] == sorted(d["constituent_distances"])
    assert len(d["column_distances"]) == len(d["levels"])


def test_zero_code_has_no_bound():
    with pytest.raises(ValueError):
        jensen_bound_gqc(GqcCode(F2, (3, 5), []))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 30), st.sampled_from([2, 3]))
def test_bound_is_sound(seed, q):
    rng = random.Random(seed)
    F = field_of_order(q)
    pool = [m for m in (1, 2, 3, 4, 5, 7) if m % q]
    blocks = random_blocks(rng, pool)
    C = random_gqc(rng, F, blocks) if seed % 2 else random_divisor_gqc(rng, F, blocks)
    if C.k == 0:
        return
    r = jensen_bound_gqc(C, with_true_distance=True)
    assert 1 <= r.bound <= r.true_distance


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 30), st.sampled_from([(2, 7), (2, 5), (3, 4), (2, 9)]))
def test_equal_blocks_match_qc_bound(seed, qm):
    q, m = qm
    rng = random.Random(seed)
    C = random_gqc(rng, field_of_order(q), (m,) * rng.randint(1, 3))
    if C.k == 0:
        return
    assert jensen_bound_gqc(C).bound == jensen_bound_qc(C)


def test_qc_bound_needs_equal_blocks():
    with pytest.raises(ValueError):
        jensen_bound_qc(GqcCode(F2, (3, 5), [([1], [1])]))


def test_bound_on_constituent_set():
    C = GqcCode(F2, (7, 7), [([1, 1, 0, 1], [1, 0, 1, 1])])
    S = decompose(C)
    assert jensen_bound_gqc(S).bound == jensen_bound_gqc(C).bound
