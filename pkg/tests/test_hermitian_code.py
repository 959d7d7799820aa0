import numpy as np
import pytest

from hermitian.errors import ParameterError
from hermitian.hermitian_code import (CodeArray, enumerate_points, info_positions, make_code,
                                      make_uniform_code, place_info, read_info, staircase_art)


def test_q2_m4_parameters(code_q2):
    p = code_q2
    assert set(p.basis) == {(0, 0), (1, 0), (2, 0), (0, 1)}
    assert p.a_hat == (2, 0)
    assert p.info_len == (3, 1)
    assert p.b_hat == (2, 1, 1, 0)
    assert (p.n, p.k, p.g) == (8, 4, 1)
    assert p.k < p.n - p.g - p.q


def test_q2_m3_rejected_by_dimension_bound(f2):
    with pytest.raises(ParameterError, match="k=5"):
        make_code(f2, 3)


@pytest.mark.parametrize("m", [2, 6])
def test_q2_m_out_of_range(f2, m):
    with pytest.raises(ParameterError):
        make_code(f2, m)


def test_q4_m15_rejected(f4):
    # k = 54 不小于 n - g - q = 54
    with pytest.raises(ParameterError):
        make_code(f4, 15)


@pytest.mark.parametrize("m, a_hat, k", [
    (16, (4, 2, 1, 0), 53),
    (19, (4, 3, 2, 1), 50),
    (23, (5, 4, 3, 2), 46),
])
def test_q4_parameters(f4, m, a_hat, k):
    p = make_code(f4, m)
    assert p.a_hat == a_hat
    assert p.k == k
    assert p.k == sum(p.info_len) == sum(p.b_hat) == p.n - len(p.basis)
    assert len(p.basis) == sum(a + 1 for a in p.a_hat)
    assert all(a * f4.q + b * (f4.q + 1) <= m for a, b in p.basis)
    assert list(p.info_len) == sorted(p.info_len, reverse=True)
    assert list(p.b_hat) == sorted(p.b_hat, reverse=True)
    assert p.b_hat[-1] == 0


def test_points_q2(f2):
    points = enumerate_points(f2)
    assert len(points) == 8
    assert len({(pt.x, pt.y) for pt in points}) == 8
    origin = next(pt for pt in points if pt.alpha == 0 and pt.beta == 0)
    assert (origin.x, origin.y) == (0, 0)


def test_points_q4_on_curve(f4):
    points = enumerate_points(f4)
    GF = f4.GF
    assert len({(pt.x, pt.y) for pt in points}) == 64
    for pt in points:
        assert GF(pt.x) ** 5 == GF(pt.y) ** 4 + GF(pt.y)
    # α = 0 列上的点为 (0, β)
    for pt in points:
        if pt.alpha == 0:
            assert (pt.x, pt.y) == (0, pt.beta)


def test_info_positions_q2(code_q2):
    assert info_positions(code_q2) == [(0, 0), (0, 1), (0, 2), (1, 0)]


def test_info_positions_staircase(code_q4):
    positions = info_positions(code_q4)
    assert len(positions) == code_q4.k
    assert (code_q4.q - 1, code_q4.field.q2 - 1) not in positions
    for j in range(code_q4.field.q2):
        rows = sorted(i for i, col in positions if col == j)
        assert rows == list(range(code_q4.b_hat[j]))


def test_place_and_read_info(code_q2):
    d = place_info(code_q2, [1, 2, 3, 1])
    assert d.to_ints().tolist() == [[1, 2, 3, 0], [1, 0, 0, 0]]
    assert read_info(code_q2, d).view(np.ndarray).tolist() == [1, 2, 3, 1]


def test_place_info_length_mismatch(code_q2):
    with pytest.raises(ParameterError):
        place_info(code_q2, [1, 2, 3])


def test_code_array_shape_checked(f2):
    with pytest.raises(ParameterError):
        CodeArray(f2, np.zeros((2, 3), dtype=np.int64))


def test_uniform_code(f2):
    p = make_uniform_code(f2, 2)
    assert p.is_uniform
    assert p.m is None
    assert p.k == (f2.q2 - 2 - 1) * f2.q
    with pytest.raises(ParameterError):
        make_uniform_code(f2, 3)


def test_staircase_art(code_q2):
    assert staircase_art(code_q2).splitlines() == ["row  0 |###.|", "row  1 |#...|"]
