import numpy as np
import pytest

from hermitian import gf_core
from hermitian.errors import InvariantViolation, ParameterError
from hermitian.gf_core import (SUBFIELD_ZERO, alpha_values, beta_values, build_field, field_summary,
                               subfield_index, table_matvec, table_mul)


def test_gf4_constants(f2):
    assert (f2.q, f2.q2) == (2, 4)
    assert f2.modulus == 0b111
    assert f2.epsilon == 2
    # GF(2) 只有一个非零元
    assert f2.gamma == 1
    assert f2.y0 == 2


def test_field_summary_is_hex(f2):
    assert field_summary(f2) == {
        "s": 1, "q": 2, "q2": 4, "modulus": "111",
        "epsilon": "2", "gamma": "1", "y0": "2",
    }


def test_build_field_is_cached():
    assert build_field(2) is build_field(2)


@pytest.mark.parametrize("s", [0, 9, -1])
def test_build_field_rejects_out_of_range(s):
    with pytest.raises(ParameterError):
        build_field(s)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_field_invariants(s):
    f = build_field(s)
    GF = f.GF
    # ε 的阶为 q²-1
    assert len(set(int(v) for v in f.exp_table)) == f.q2 - 1
    assert f.gamma == f.eps_pow(f.q + 1)
    assert GF(f.gamma) ** (f.q - 1) == 1
    y0 = GF(f.y0)
    assert y0 + y0 ** f.q == 1


def test_y0_is_smallest_solution(f4):
    elements = f4.GF.elements
    trace = (elements + elements ** f4.q).view(np.ndarray)
    assert f4.y0 == int(np.nonzero(trace == 1)[0][0])


def test_element_operations(f4):
    a, b = 7, 11
    assert gf_core.add(f4, a, b) == a ^ b
    assert gf_core.add(f4, a, a) == 0
    assert gf_core.mul(f4, a, gf_core.inv(f4, a)) == 1
    assert gf_core.pow(f4, a, 0) == 1
    assert gf_core.pow(f4, 0, 0) == 1
    assert gf_core.pow(f4, 0, 3) == 0
    assert gf_core.pow(f4, f4.epsilon, f4.q2 - 1) == 1
    assert gf_core.pow(f4, a, 3) == gf_core.mul(f4, a, gf_core.mul(f4, a, a))


def test_inverse_of_zero_raises(f4):
    with pytest.raises(InvariantViolation):
        gf_core.inv(f4, 0)


def test_element_out_of_range(f4):
    with pytest.raises(ParameterError):
        gf_core.add(f4, 16, 1)


def test_subfield_index(f4):
    assert subfield_index(f4, 0) == SUBFIELD_ZERO
    assert subfield_index(f4, 1) == 0
    assert subfield_index(f4, f4.gamma) == 1
    assert subfield_index(f4, f4.epsilon) is None


def test_subfield_closed(f4):
    sub = set(beta_values(f4))
    assert len(sub) == f4.q
    for a in sub:
        for b in sub:
            assert gf_core.add(f4, a, b) in sub
            assert gf_core.mul(f4, a, b) in sub


def test_row_and_column_labels(f4):
    alphas = alpha_values(f4)
    assert len(alphas) == f4.q2
    assert len(set(alphas)) == f4.q2
    assert alphas[0] == 1 and alphas[-1] == 0
    assert beta_values(f4)[0] == 0


def test_power_matrix(f4):
    V = gf_core.power_matrix(f4, [0, 1, 5], 4)
    eps = f4.GF(f4.epsilon)
    assert np.array_equal(V[0], f4.GF.Ones(4))
    assert V[1, 3] == eps ** 3
    assert V[2, 2] == eps ** 10


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_frobenius_is_additive(s):
    f = build_field(s)
    E = f.GF.elements
    a, b = E[:, None], E[None, :]
    assert np.array_equal((a + b) ** f.q, a ** f.q + b ** f.q)


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_trace_onto_subfield(s):
    f = build_field(s)
    E = f.GF.elements
    image = set((E + E ** f.q).view(np.ndarray).tolist())
    assert image == set(beta_values(f))


@pytest.mark.parametrize("s", [1, 2, 3])
def test_table_operations_match_galois(s, rng):
    f = build_field(s)
    a = rng.integers(0, f.q2, size=200)
    b = rng.integers(0, f.q2, size=200)
    a[:5] = 0
    b[5:10] = 0
    assert np.array_equal(table_mul(f, a, b), (f.array(a) * f.array(b)).view(np.ndarray))

    M = rng.integers(0, f.q2, size=(f.q, f.q))
    v = rng.integers(0, f.q2, size=f.q)
    assert np.array_equal(table_matvec(f, M, v), (f.array(M) @ f.array(v)).view(np.ndarray))
