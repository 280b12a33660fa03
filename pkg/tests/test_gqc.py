import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gqcodes.cyclic import RingElem, phi_map, residue_field
from gqcodes.gf import field_of_order, make_extension, prime_field
from gqcodes.gqc import (
    ConstituentSet,
    CRTUnavailable,
    GqcCode,
    block_shift,
    constituent_dimension_identity,
    decompose,
    from_linear,
    is_gqc,
    multilevel_image,
    reconstruct,
    split_blocks,
    trace_codeword,
    zero_constituents,
)
from gqcodes.lincode import LinearCode
from gqcodes.sampling import random_blocks, random_gqc

F2, F3 = prime_field(2), prime_field(3)
F4 = field_of_order(4)

CW16 = GqcCode(F2, (6, 5, 5), [([1] * 6, [0], [1] * 5), ([0], [1] * 5, [1] * 5)])


def test_cordaro_wagner_as_gqc():
    L = CW16.linear
    assert (L.n, L.k, L.min_distance()) == (16, 2, 10)
    assert is_gqc(L, (6, 5, 5))
    assert not is_gqc(L, (8, 8))
    assert L == LinearCode(F2, 16, [[1] * 6 + [0] * 5 + [1] * 5, [0] * 6 + [1] * 10])


def test_block_shift_and_split():
    v = [1, 0, 0, 1, 2, 0]
    assert block_shift(v, (3, 3)) == [0, 1, 0, 0, 1, 2]
    assert split_blocks(v, (2, 4)) == [[1, 0], [0, 1, 2, 0]]


def test_to_linear_is_shift_closed_and_minimal():
    rng = random.Random(0)
    for _ in range(20):
        blocks = random_blocks(rng, [1, 2, 3, 4, 5, 6])
        C = random_gqc(rng, F3, blocks)
        L = C.linear
        assert is_gqc(L, blocks)
        # every generator lies in the code and the code is the span of all shifts
        rows = []
        for g in C.generators:
            for t in range(max(blocks)):
                rows.append([c for a in g for c in a.shift(t).coeffs])
        assert L == LinearCode(F3, C.n, rows)


def test_from_linear_rejects_non_invariant():
    L = LinearCode(F2, 4, [[1, 0, 0, 0]])
    with pytest.raises(ValueError, match="shift"):
        from_linear(L, (2, 2))
    assert from_linear(L, (1, 1, 1, 1)).linear == L


def test_constituents_359_fields_and_masks():
    C = GqcCode(F2, (3, 5, 9), [([1, 1], [1, 0, 1], [1, 1, 0, 1])])
    S = decompose(C)
    got = {residue_field(f).order: mask for f, mask in zip(S.factors, S.masks)}
    assert got == {
        2: (True, True, True),
        4: (True, False, True),
        16: (False, True, False),
        64: (False, False, True),
    }
    for f, code in zip(S.factors, S.codes):
        E = residue_field(f)
        # constituent codeword = generator evaluated at the root, through polynomial evaluation
        expect = [g.to_poly()(E.gen, E) if keep else 0 for g, keep in zip(C.generators[0], S.masks[S.index(f)])]
        assert expect in code


def test_crt_requires_coprime_blocks():
    C = GqcCode(F2, (4, 3), [([1], [1])])
    with pytest.raises(CRTUnavailable, match="gcd"):
        decompose(C)


def test_qc_evaluation_oracle_equal_blocks():
    """For equal blocks, C_i is spanned by the generators evaluated at alpha_i."""
    rng = random.Random(3)
    for _ in range(15):
        C = random_gqc(rng, F2, (7, 7, 7))
        S = decompose(C)
        for f, code in zip(S.factors, S.codes):
            E = residue_field(f)
            rows = [[g.to_poly()(E.gen, E) for g in gen] for gen in C.generators]
            assert code == LinearCode(E, 3, rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 30), st.sampled_from([2, 3, 4]))
def test_round_trip(seed, q):
    rng = random.Random(seed)
    F = field_of_order(q)
    pool = [m for m in (1, 2, 3, 4, 5, 7, 9) if m % F.p]
    C = random_gqc(rng, F, random_blocks(rng, pool))
    S = decompose(C)
    assert reconstruct(S) == C
    assert constituent_dimension_identity(C, S)
    assert multilevel_image(S) == C.linear


def test_length8_trace_pattern():
    blocks = (3, 5)
    Z = zero_constituents(F2, blocks)
    idx = {residue_field(f).order: i for i, f in enumerate(Z.factors)}
    codes = list(Z.codes)
    codes[idx[2]] = LinearCode(residue_field(Z.factors[idx[2]]), 2, [[1, 0], [0, 1]])
    codes[idx[4]] = LinearCode(residue_field(Z.factors[idx[4]]), 2, [[1, 0]])
    codes[idx[16]] = LinearCode(residue_field(Z.factors[idx[16]]), 2, [[0, 1]])
    S = ConstituentSet(F2, blocks, Z.factors, tuple(codes), Z.masks)
    words = set()
    for z1, z2, a, b, c, d, e, f in itertools.product((0, 1), repeat=8):
        picks = [None] * 3
        picks[idx[2]] = [z1, z2]
        picks[idx[4]] = [a + 2 * b, 0]
        picks[idx[16]] = [0, c + 2 * d + 4 * e + 8 * f]
        w = trace_codeword(S, picks)
        expect = [
            z1 ^ b, z1 ^ a, z1 ^ a ^ b,
            z2 ^ d ^ e ^ f, z2 ^ c ^ e ^ f, z2 ^ c ^ d ^ f, z2 ^ c ^ d ^ e, z2 ^ c ^ d ^ e ^ f,
        ]
        assert w == expect
        words.add(tuple(w))
    C = reconstruct(S)
    assert C.k == 8 and len(words) == 256
    assert all(list(w) in C.linear for w in words)


def test_trace_codeword_inverts_under_phi():
    """CRT oracle: reducing block j of a trace codeword mod f_i returns lambda_{i,j}."""
    rng = random.Random(11)
    for _ in range(20):
        F = rng.choice([F2, F3])
        pool = [m for m in (1, 2, 3, 4, 5, 7) if m % F.p]
        C = random_gqc(rng, F, random_blocks(rng, pool))
        S = decompose(C)
        picks = []
        for code in S.codes:
            msg = [rng.randrange(code.field.order) for _ in range(code.k)]
            picks.append(code.encode(msg) if code.k else [0] * len(S.blocks))
        w = trace_codeword(S, picks)
        assert w in C.linear
        parts = split_blocks(w, S.blocks)
        for i, f in enumerate(S.factors):
            for j, m in enumerate(S.blocks):
                assert phi_map(m, f, RingElem(F, m, parts[j])) == picks[i][j]


def test_trace_rejects_non_codeword():
    C = GqcCode(F2, (3,), [([1, 1, 1],)])
    S = decompose(C)
    picks = [[0] for _ in S.factors]
    picks[1] = [1]  # the x^2+x+1 constituent is zero
    with pytest.raises(ValueError, match="not a codeword"):
        trace_codeword(S, picks)


def test_reconstruct_rejects_bad_mask():
    Z = zero_constituents(F2, (3, 5))
    i = [residue_field(f).order for f in Z.factors].index(4)
    codes = list(Z.codes)
    codes[i] = LinearCode(codes[i].field, 2, [[0, 1]])
    with pytest.raises(ValueError, match="unsupported"):
        reconstruct(ConstituentSet(F2, (3, 5), Z.factors, tuple(codes), Z.masks))


def test_extension_base_field():
    F16 = make_extension(F4, [F4.gen, 1, 1])
    C = GqcCode(F16, (3, 5), [([1, 2], [0, 7, 1])])
    S = decompose(C)
    assert reconstruct(S) == C
    assert multilevel_image(S) == C.linear
