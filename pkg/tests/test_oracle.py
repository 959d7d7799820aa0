import numpy as np
import pytest

from hermitian.encoder import encode, syndromes_direct
from hermitian.errors import InvariantViolation
from hermitian.gf_core import build_field
from hermitian.hermitian_code import CodeArray, make_code
from hermitian.oracle import (build_H, complete_systematic, encode_with_generator, rank, solve_dense,
                              systematic_generator_matrix, verify_information_set)


def test_H_q2(code_q2, f2):
    H = build_H(code_q2)
    assert H.shape == (4, 8)
    assert np.array_equal(H.entries[0], f2.GF.Ones(8))
    assert rank(H.entries) == 4


def test_H_matches_direct_syndromes(code_q4, f4, rng):
    H = build_H(code_q4)
    for _ in range(20):
        r = CodeArray(f4, rng.integers(0, f4.q2, size=(f4.q, f4.q2)))
        direct = syndromes_direct(code_q4, r)
        assert H.apply(r).view(np.ndarray).tolist() == [direct.values[key] for key in code_q4.basis]


@pytest.mark.parametrize("s, m", [(1, 4), (2, 16), (2, 19), (2, 23)])
def test_information_set(s, m):
    p = make_code(build_field(s), m)
    assert verify_information_set(p)


def test_complete_zero(code_q4, f4):
    assert complete_systematic(code_q4, [0] * code_q4.k) == CodeArray.zeros(f4)


def test_completion_matches_encoder(code_q4, f4, rng):
    H = build_H(code_q4)
    for _ in range(10):
        info = rng.integers(0, f4.q2, size=code_q4.k)
        assert complete_systematic(code_q4, info, H=H) == encode(code_q4, info).codeword


def test_completion_independent_of_pivot_order(code_q4, f4, rng):
    info = rng.integers(0, f4.q2, size=code_q4.k)
    order = rng.permutation(len(code_q4.basis)).tolist()
    assert complete_systematic(code_q4, info, row_order=order) == complete_systematic(code_q4, info)


def test_solve_dense(f4):
    M = f4.GF([[1, 2], [3, 4]])
    x = f4.GF([5, 6])
    assert np.array_equal(solve_dense(M, M @ x), x)


def test_solve_dense_singular(f4):
    M = f4.GF([[1, 2], [1, 2]])
    with pytest.raises(InvariantViolation):
        solve_dense(M, f4.GF([1, 1]))
    assert rank(M) == 1


def test_generator_matrix_q2(code_q2, f2, rng):
    G = systematic_generator_matrix(code_q2)
    assert G.shape == (code_q2.k, code_q2.n)
    # 系统形式: 信息位上为单位阵
    info_cols = [0, 1, 2, 4]
    assert np.array_equal(G[:, info_cols], f2.GF.Identity(code_q2.k))
    for _ in range(5):
        info = rng.integers(0, f2.q2, size=code_q2.k)
        assert encode_with_generator(code_q2, info, G) == encode(code_q2, info).codeword
