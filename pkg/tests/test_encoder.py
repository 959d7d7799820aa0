import numpy as np
import pytest

from hermitian.encoder import (encode, encode_uniform, is_codeword, row_memberships, syndrome_matrix_check,
                               syndromes_direct, syndromes_fast, transform_columns)
from hermitian.errors import ParameterError
from hermitian.hermitian_code import CodeArray, enumerate_points, make_code, make_uniform_code, read_info
from hermitian.oracle import complete_systematic


def _random_array(f, rng):
    return CodeArray(f, rng.integers(0, f.q2, size=(f.q, f.q2)))


def test_zero_array_syndromes(code_q2, f2):
    zero = CodeArray.zeros(f2)
    assert syndromes_direct(code_q2, zero).is_zero()
    assert syndromes_fast(code_q2, zero).is_zero()
    assert is_codeword(code_q2, zero)


def test_syndrome_keys_are_basis(code_q4, f4):
    table = syndromes_fast(code_q4, CodeArray.zeros(f4))
    assert set(table.values) == set(code_q4.basis)


def test_indicator_syndromes(code_q4, f4):
    GF = f4.GF
    point = enumerate_points(f4)[f4.q2 + 3]
    r = CodeArray.zeros(f4)
    r.entries[point.row, point.column] = 1
    table = syndromes_direct(code_q4, r)
    for (a, b), value in table.values.items():
        assert value == GF(point.x) ** a * GF(point.y) ** b
    assert table == syndromes_fast(code_q4, r)


def test_indicator_at_alpha_zero(code_q4, f4):
    r = CodeArray.zeros(f4)
    r.entries[2, f4.q2 - 1] = 1
    assert syndromes_direct(code_q4, r) == syndromes_fast(code_q4, r)


@pytest.mark.parametrize("s, m", [(1, 4), (2, 16), (2, 19), (2, 23)])
def test_fast_matches_direct(s, m, rng):
    from hermitian.gf_core import build_field
    f = build_field(s)
    p = make_code(f, m)
    for _ in range(30):
        r = _random_array(f, rng)
        assert syndromes_fast(p, r) == syndromes_direct(p, r)


def test_encode_zero_info(code_q2, f2):
    result = encode(code_q2, [0] * code_q2.k)
    assert result.codeword == CodeArray.zeros(f2)


def test_encode_q2_matches_oracle(code_q2, f2, rng):
    for _ in range(20):
        info = rng.integers(0, f2.q2, size=code_q2.k)
        c = encode(code_q2, info).codeword
        assert c == complete_systematic(code_q2, info)


def test_encode_q4_properties(code_q4, f4, rng):
    for _ in range(30):
        info = rng.integers(0, f4.q2, size=code_q4.k)
        result = encode(code_q4, info)
        c = result.codeword
        assert is_codeword(code_q4, c)
        assert syndromes_direct(code_q4, c).is_zero()
        assert read_info(code_q4, c).view(np.ndarray).tolist() == info.tolist()
        assert all(row_memberships(code_q4, result.rtilde))
        assert syndrome_matrix_check(code_q4, c, result.rtilde)
        assert transform_columns(code_q4, c) == result.rtilde


def test_encode_linear(code_q4, f4, rng):
    u = rng.integers(0, f4.q2, size=code_q4.k)
    w = rng.integers(0, f4.q2, size=code_q4.k)
    summed = (f4.array(u) + f4.array(w)).view(np.ndarray)
    left = encode(code_q4, summed).codeword
    right = CodeArray(f4, encode(code_q4, u).codeword.entries + encode(code_q4, w).codeword.entries)
    assert left == right


def test_streaming_matches_reinvocation(code_q4, f4, rng):
    info = rng.integers(0, f4.q2, size=code_q4.k)
    streamed = encode(code_q4, info)
    reinvoked = encode(code_q4, info, streaming=False)
    assert streamed.codeword == reinvoked.codeword
    assert streamed.rtilde == reinvoked.rtilde


def test_single_symbol_corruption_detected(code_q4, f4, rng):
    for _ in range(20):
        c = encode(code_q4, rng.integers(0, f4.q2, size=code_q4.k)).codeword
        row, col = int(rng.integers(f4.q)), int(rng.integers(f4.q2))
        c.entries[row, col] += f4.GF(int(rng.integers(1, f4.q2)))
        assert not is_codeword(code_q4, c)


def test_encode_length_mismatch(code_q4):
    with pytest.raises(ParameterError):
        encode(code_q4, [0] * (code_q4.k - 1))


def test_encode_uniform_q2(f2, rng):
    p = make_uniform_code(f2, 2)
    dim = p.row_dim(0)
    assert not np.any(encode_uniform(p, np.zeros((f2.q, dim), dtype=np.int64)).entries)
    for _ in range(10):
        d = rng.integers(0, f2.q2, size=(f2.q, dim))
        c = encode_uniform(p, d)
        assert c.to_ints()[:, :dim].tolist() == d.tolist()
        table = syndromes_direct(p, c)
        assert set(table.values) == {(a, b) for a in range(3) for b in range(2)}
        assert table.is_zero()


def test_encode_uniform_matches_encode(f4, rng):
    p = make_uniform_code(f4, 3)
    dim = p.row_dim(0)
    for _ in range(10):
        d = rng.integers(0, f4.q2, size=(f4.q, dim))
        assert encode_uniform(p, d) == encode(p, d.reshape(-1)).codeword


def test_encode_uniform_rejects_nonuniform(code_q4, f4):
    with pytest.raises(ParameterError):
        encode_uniform(code_q4, np.zeros((f4.q, 10), dtype=np.int64))


def test_encode_uniform_shape_mismatch(f2):
    p = make_uniform_code(f2, 1)
    with pytest.raises(ParameterError):
        encode_uniform(p, np.zeros((f2.q, 1), dtype=np.int64))
