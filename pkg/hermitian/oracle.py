# -*- coding: utf-8 -*-
"""
功能: 暴力对照模块。
      直接由单项式求值得到校验矩阵 H，用稠密高斯消元验证信息集并求唯一的系统补全。
      本模块只依赖点坐标与码参数，与列变换/行码路径完全独立，作为编码器的对照基准。
      复杂度为 O(n³)，仅用于小 q。

主要功能:
- `build_H`: H[(a,b), P] = x(P)^a · y(P)^b。
- `rank` / `solve_dense`: GF(q²) 上的高斯-约当消元。
- `verify_information_set`: 校验位对应的 H 子矩阵是否满秩。
- `complete_systematic`: 给定信息位求唯一码字。
- `systematic_generator_matrix` / `encode_with_generator`: 系统生成矩阵基线。
"""

import logging
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from hermitian.errors import InvariantViolation, ParameterError
from hermitian.hermitian_code import CodeArray, CodeParams, info_positions, point_coordinates


@dataclass(frozen=True, eq=False)
class ParityCheckMatrix:
    params: CodeParams
    # |basis| × n，行序同 basis，列序同点序 (行优先展平)
    entries: Any

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def apply(self, c: CodeArray) -> Any:
        return self.entries @ c.flatten()


def _monomial_powers(values, exponent: int, GF) -> Any:
    if exponent == 0:
        return GF.Ones(values.shape)
    return values ** exponent


def build_H(p: CodeParams) -> ParityCheckMatrix:
    """逐单项式求值构造校验矩阵，约定 0^0 = 1。"""
    f = p.field
    X, Y = point_coordinates(f)
    xs, ys = X.reshape(-1), Y.reshape(-1)
    entries = f.zeros((len(p.basis), p.n))
    for row, (a, b) in enumerate(p.basis):
        entries[row] = _monomial_powers(xs, a, f.GF) * _monomial_powers(ys, b, f.GF)
    return ParityCheckMatrix(params=p, entries=entries)


# =============================================================================
# 稠密消元
# =============================================================================
def _eliminate(work, n_cols: int, row_order: Sequence[int] | None = None) -> list[int]:
    """
    对 work 的前 n_cols 列做原地高斯-约当消元 (化为行最简形)，返回主元列。
    row_order 指定选主元时的行搜索顺序，默认按行号。
    """
    n_rows = work.shape[0]
    order = list(row_order) if row_order is not None else list(range(n_rows))
    if sorted(order) != list(range(n_rows)):
        raise ParameterError(f"row_order 必须是 0..{n_rows - 1} 的排列")

    used: set[int] = set()
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    for col in range(n_cols):
        pivot = next((r for r in order if r not in used and work[r, col] != 0), None)
        if pivot is None:
            continue
        used.add(pivot)
        work[pivot] = work[pivot] / work[pivot, col]
        for r in range(n_rows):
            if r != pivot and work[r, col] != 0:
                work[r] = work[r] - work[r, col] * work[pivot]
        pivot_rows.append(pivot)
        pivot_cols.append(col)
    # 按主元列顺序重排，使结果与 row_order 无关
    rearranged = work[pivot_rows + [r for r in range(n_rows) if r not in used]]
    work[:] = rearranged
    return pivot_cols


def rank(M) -> int:
    work = M.copy()
    return len(_eliminate(work, work.shape[1]))


def solve_dense(M, rhs, row_order: Sequence[int] | None = None) -> Any:
    """
    求解方阵方程 M·x = rhs。

    参数:
        M: n × n 的域矩阵。
        rhs: 长度 n 的右端向量。
        row_order: 可选的主元搜索顺序，用于检验解的唯一性。

    返回:
        长度 n 的解向量。M 奇异时抛出 InvariantViolation。
    """
    n = M.shape[0]
    if M.shape != (n, n) or rhs.shape != (n,):
        raise ParameterError(f"solve_dense 需要方阵与等长右端，收到 {M.shape} 与 {rhs.shape}")
    GF = type(M)
    work = GF.Zeros((n, n + 1))
    work[:, :n] = M
    work[:, n] = rhs
    pivots = _eliminate(work, n, row_order)
    if len(pivots) != n:
        raise InvariantViolation(f"稠密方程组奇异: 秩 {len(pivots)} < {n}")
    return work[:, n].copy()


# =============================================================================
# 信息集与系统补全
# =============================================================================
def _flat_info_indices(p: CodeParams) -> tuple[list[int], list[int]]:
    q2 = p.field.q2
    info = [i * q2 + j for i, j in info_positions(p)]
    info_set = set(info)
    parity = [t for t in range(p.n) if t not in info_set]
    return info, parity


def verify_information_set(p: CodeParams, H: ParityCheckMatrix | None = None) -> bool:
    """信息位的补集是否对应 H 的一个满秩 |basis| 列子矩阵。"""
    H = H or build_H(p)
    _, parity = _flat_info_indices(p)
    if len(parity) != len(p.basis):
        return False
    return rank(H.entries[:, parity]) == len(p.basis)


def complete_systematic(p: CodeParams, info, row_order: Sequence[int] | None = None,
                        H: ParityCheckMatrix | None = None) -> CodeArray:
    """
    返回在信息位上等于 info、且满足 H·c = 0 的唯一码阵。
    """
    f = p.field
    values = f.array(info).reshape(-1)
    if values.size != p.k:
        raise ParameterError(f"信息向量长度应为 k={p.k}，实际为 {values.size}")
    H = H or build_H(p)
    info_idx, parity_idx = _flat_info_indices(p)

    rhs = -(H.entries[:, info_idx] @ values)
    parity_values = solve_dense(H.entries[:, parity_idx], rhs, row_order)

    flat = f.zeros(p.n)
    flat[info_idx] = values
    flat[parity_idx] = parity_values
    return CodeArray(f, flat.reshape(f.q, f.q2))


def systematic_generator_matrix(p: CodeParams) -> Any:
    """k × n 的系统生成矩阵，第 t 行为第 t 个单位信息向量的补全。"""
    f = p.field
    H = build_H(p)
    G = f.zeros((p.k, p.n))
    for t in range(p.k):
        unit = np.zeros(p.k, dtype=np.int64)
        unit[t] = 1
        G[t] = complete_systematic(p, unit, H=H).flatten()
    logging.info(f"已构造系统生成矩阵: {p.k} × {p.n} (q={p.q}, m={p.m})")
    return G


def encode_with_generator(p: CodeParams, info, G=None) -> CodeArray:
    """生成矩阵基线编码: c = info · G。"""
    f = p.field
    G = systematic_generator_matrix(p) if G is None else G
    values = f.array(info).reshape(-1)
    if values.size != p.k:
        raise ParameterError(f"信息向量长度应为 k={p.k}，实际为 {values.size}")
    return CodeArray(f, (values @ G).reshape(f.q, f.q2))
