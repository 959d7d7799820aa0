# -*- coding: utf-8 -*-
"""
功能: 整阵列运算模块。
      两种伴随式计算 (按点直接求值 / 列变换后按行码求值)、统一码的编码流程、
      一般 C(m) 的逐列系统编码，以及码字判定。

主要功能:
- `syndromes_direct` / `syndromes_fast`: 两条独立路径，结果必须完全一致。
- `transform_columns`: r̃_j = A_j·r_j。
- `encode_uniform`: 统一 â 的码: r̂ = A·d，逐行编码，再逐列乘逆。
- `encode`: 一般码的逐列扫描编码，返回码阵与内部 r̃。
- `is_codeword`: 伴随式全 0 判定。
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from hermitian.errors import InvariantViolation, ParameterError
from hermitian.gf_core import Element
from hermitian.hermitian_code import CodeArray, CodeParams, place_info, point_coordinates
from hermitian.row_codes import RowEncoderBank, encode_row, make_Ei, row_syndromes
from hermitian.transforms import column_matrix, matrix_family, solve_mixed_ints


# =============================================================================
# 数据类型
# =============================================================================
@dataclass
class SyndromeTable:
    """(a, b) -> S_{a,b}，键恰为码参数中的单项式基。"""
    values: dict[tuple[int, int], Element] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def nonzero(self) -> dict[tuple[int, int], Element]:
        return {key: value for key, value in self.values.items() if value}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SyndromeTable):
            return NotImplemented
        return self.values == other.values


@dataclass(eq=False)
class EncodeResult:
    codeword: CodeArray
    rtilde: CodeArray


def _check_array(p: CodeParams, r: CodeArray) -> CodeArray:
    if not isinstance(r, CodeArray):
        r = CodeArray(p.field, r)
    if r.field is not p.field:
        raise ParameterError("码阵与码参数不在同一个域上")
    return r


# =============================================================================
# 伴随式
# =============================================================================
def syndromes_direct(p: CodeParams, r: CodeArray) -> SyndromeTable:
    """按定义逐点求值: S_{a,b} = Σ_P r_P · x(P)^a · y(P)^b，约定 0^0 = 1。"""
    r = _check_array(p, r)
    f = p.field
    X, Y = point_coordinates(f)
    max_a = max(a for a, _ in p.basis)

    ones = f.GF.Ones(X.shape)
    x_powers = [ones]
    for _ in range(max_a):
        x_powers.append(x_powers[-1] * X)
    y_powers = [ones]
    for _ in range(f.q - 1):
        y_powers.append(y_powers[-1] * Y)

    table = SyndromeTable()
    for a, b in p.basis:
        table.values[(a, b)] = int(np.sum(r.entries * x_powers[a] * y_powers[b]))
    return table


def transform_columns(p: CodeParams, r: CodeArray) -> CodeArray:
    """r̃_j = A·r_j (j < q²-1)，最后一列用 A'。"""
    r = _check_array(p, r)
    f = p.field
    family = matrix_family(f)
    rtilde = f.zeros((f.q, f.q2))
    rtilde[:, :f.q2 - 1] = family.A.entries @ r.entries[:, :f.q2 - 1]
    rtilde[:, f.q2 - 1] = family.Aprime.entries @ r.entries[:, f.q2 - 1]
    return CodeArray(f, rtilde)


def syndromes_fast(p: CodeParams, r: CodeArray) -> SyndromeTable:
    """S_{a,b} 取 r̃ 第 b 行在根 ε^(a+b(q+1)) 处的行伴随式 (a = 0 时含扩展位)。"""
    rtilde = transform_columns(p, r)
    table = SyndromeTable()
    for b in range(p.q):
        if p.a_hat[b] < 0:
            continue
        row = row_syndromes(make_Ei(p, b), rtilde.entries[b])
        for a, value in enumerate(row.view(np.ndarray)):
            table.values[(a, b)] = int(value)
    return table


def is_codeword(p: CodeParams, r: CodeArray) -> bool:
    return syndromes_fast(p, r).is_zero()


# =============================================================================
# 统一码编码
# =============================================================================
def encode_uniform(p: CodeParams, d) -> CodeArray:
    """
    统一 â 码的编码流程。

    参数:
        p (CodeParams): 必须满足 p.is_uniform。
        d: q × (q²-â-1) 的信息阵列。

    返回:
        CodeArray: 码阵，前 q²-â-1 列与 d 相同。
    """
    if not p.is_uniform:
        raise ParameterError(f"encode_uniform 要求各行 â 相同，收到: {p.a_hat}")
    f = p.field
    dim = p.row_dim(0)
    d = f.array(d)
    if d.shape != (f.q, dim):
        raise ParameterError(f"信息阵列形状应为 {(f.q, dim)}，实际为 {d.shape}")

    family = matrix_family(f)
    r_hat = family.A.entries @ d
    r_hat_encoded = f.zeros((f.q, f.q2))
    for i in range(f.q):
        r_hat_encoded[i] = encode_row(make_Ei(p, i), r_hat[i])

    c = f.zeros((f.q, f.q2))
    c[:, :f.q2 - 1] = family.Ainv.entries @ r_hat_encoded[:, :f.q2 - 1]
    c[:, f.q2 - 1] = family.AprimeInv.entries @ r_hat_encoded[:, f.q2 - 1]
    return CodeArray(f, c)


# =============================================================================
# 一般码编码
# =============================================================================
def encode(p: CodeParams, info, streaming: bool = True) -> EncodeResult:
    """
    逐列系统编码。

    对每一列 j，记 l = q - b̂(j)：
        1. r̃ 的前 l 行在该列已处于各自行码的校验区，由行编码器给出；
        2. 以 d 在该列的 b̂(j) 个信息符号与上述 l 个已知值求解 (solve_mixed_ints，查表实现)；
        3. 写回 c_j 与 r̃_j，并把 r̃ 其余行在该列的值送入对应行编码器。

    参数:
        p (CodeParams): 码参数。
        info: 长度为 k 的信息向量，按行优先阶梯顺序放置。
        streaming (bool): True 时行编码器逐步推进；False 时每列重新调用 encode_row。

    返回:
        EncodeResult: 码阵 c 与内部 r̃。
    """
    f = p.field
    q, q2 = f.q, f.q2
    d = place_info(p, info).to_ints()
    codes = [make_Ei(p, i) for i in range(q)]
    bank = RowEncoderBank(codes) if streaming else None

    c = np.zeros((q, q2), dtype=np.int64)
    rtilde = np.zeros((q, q2), dtype=np.int64)
    for j in range(q2):
        l = q - p.b_hat[j]
        if streaming:
            v = bank.emit(slice(0, l))
        else:
            v = np.array([int(encode_row(codes[i], rtilde[i, :codes[i].dim])[j]) for i in range(l)],
                         dtype=np.int64)

        left, right = solve_mixed_ints(f, column_matrix(f, j).role, l, d[:q - l, j], v)
        if not np.array_equal(right[:l], v):
            raise InvariantViolation(f"第 {j} 列求解后右端已知分量被改变")
        c[:, j] = left
        rtilde[:, j] = right

        if streaming:
            bank.absorb(slice(l, q), right[l:])

    codeword = CodeArray(f, c)
    logging.debug(f"编码完成: q={q}, m={p.m}, k={p.k}")
    return EncodeResult(codeword=codeword, rtilde=CodeArray(f, rtilde))


def row_memberships(p: CodeParams, rtilde: CodeArray) -> list[bool]:
    """r̃ 各行是否属于对应的行码。"""
    return [not np.any(row_syndromes(make_Ei(p, i), rtilde.entries[i])) for i in range(p.q)]


def syndrome_matrix_check(p: CodeParams, c: CodeArray, rtilde: CodeArray) -> bool:
    """r̃ 是否恰为 c 的列变换。"""
    return transform_columns(p, c) == rtilde
