# -*- coding: utf-8 -*-
"""
功能: 列变换矩阵模块。
      构造 q × q 结构化矩阵 A、A'，按闭式给出其逆矩阵，构造混合已知/未知
      列方程所需的投影矩阵 D(l)，并实现对应的列求解流程 (`solve_mixed`)。

主要功能:
- `build_A` / `build_Aprime` / `build_A_inverse` / `build_Aprime_inverse`
- `check_corner_submatrices`: 角块子矩阵非奇异性检查。
- `build_D`: D(l) = [[I_l, 0], [P, 0]]，使 M⁻¹·D(l) 的前 q-l 行全为 0。
- `matrix_family`: 每个域只构造一次的矩阵族缓存 (含所有 l 的 D(l))。
- `solve_mixed`: 已知左端前 q-l 个分量与右端前 l 个分量时，解出其余分量。
- `solve_mixed_ints`: 同一流程在整数编码上的查表实现，逐列编码器直接调用。
"""

import enum
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any

import numpy as np

from hermitian.errors import InvariantViolation, ParameterError
from hermitian.gf_core import FieldSpec, beta_values, table_matvec


class MatrixRole(str, enum.Enum):
    A = "A"
    APRIME = "Aprime"
    AINV = "Ainv"
    APRIME_INV = "AprimeInv"
    D = "D"


@dataclass(frozen=True, eq=False)
class ColumnMatrix:
    role: MatrixRole
    entries: Any
    # 仅 D 使用: 单位块大小 l；forward_role 指明由 A 还是 A' 派生
    l: int | None = None
    forward_role: MatrixRole | None = None

    @cached_property
    def ints(self) -> np.ndarray:
        """entries 的整数编码副本，供查表运算使用。"""
        return self.entries.view(np.ndarray).astype(np.int64)


@dataclass(frozen=True)
class MixedSolveResult:
    left_full: Any
    right_full: Any


# =============================================================================
# 矩阵构造
# =============================================================================
def _nodes(f: FieldSpec) -> Any:
    """y0 + β，β 按码阵行顺序排列。"""
    return f.GF(f.y0) + f.array(beta_values(f))


def build_A(f: FieldSpec) -> ColumnMatrix:
    """A[b, col] = (y0 + β_col)^b。"""
    nodes = _nodes(f)
    entries = f.zeros((f.q, f.q))
    for b in range(f.q):
        entries[b] = nodes ** b
    return ColumnMatrix(MatrixRole.A, entries)


def build_Aprime(f: FieldSpec) -> ColumnMatrix:
    """A'[b, 0] = [b = 0]，A'[b, j+1] = (γ^j)^b。"""
    betas = f.array(beta_values(f))
    entries = f.zeros((f.q, f.q))
    entries[0, 0] = 1
    for b in range(f.q):
        entries[b, 1:] = betas[1:] ** b
    return ColumnMatrix(MatrixRole.APRIME, entries)


def _check_identity(f: FieldSpec, inverse: ColumnMatrix, forward: ColumnMatrix):
    identity = f.GF.Identity(f.q)
    if not (np.array_equal(inverse.entries @ forward.entries, identity)
            and np.array_equal(forward.entries @ inverse.entries, identity)):
        raise InvariantViolation(f"{inverse.role.value} · {forward.role.value} != I (q={f.q})")


def build_A_inverse(f: FieldSpec) -> ColumnMatrix:
    """
    闭式逆矩阵: 第 μ 行为 (1 + (y0+μ)^(q-1), (y0+μ)^(q-2), ..., (y0+μ)^0)。
    特征 2 下原式中的减号即加号。
    """
    q = f.q
    nodes = _nodes(f)
    entries = f.zeros((q, q))
    for col in range(1, q):
        entries[:, col] = nodes ** (q - 1 - col)
    entries[:, 0] = f.GF(1) + nodes ** (q - 1)
    inverse = ColumnMatrix(MatrixRole.AINV, entries)
    _check_identity(f, inverse, build_A(f))
    return inverse


def build_Aprime_inverse(f: FieldSpec) -> ColumnMatrix:
    """
    闭式逆矩阵: 第 0 行为 (1, 0, ..., 0, 1)；
    β = γ^j 对应的行为 (0, β^(q-2), ..., β^1, β^0)。
    """
    q = f.q
    betas = f.array(beta_values(f))
    entries = f.zeros((q, q))
    entries[0, 0] = 1
    entries[0, q - 1] = entries[0, q - 1] + f.GF(1)
    for col in range(1, q):
        entries[1:, col] = betas[1:] ** (q - 1 - col)
    inverse = ColumnMatrix(MatrixRole.APRIME_INV, entries)
    _check_identity(f, inverse, build_Aprime(f))
    return inverse


def check_corner_submatrices(f: FieldSpec, l: int) -> bool:
    """
    检查 A 的 (行 q-l..q-1, 列 0..l-1) 子矩阵与 A' 的 (行 0..l-1, 列 q-l..q-1) 子矩阵
    是否都非奇异。
    """
    q = f.q
    if not 1 <= l <= q:
        raise ParameterError(f"l 必须满足 1 <= l <= q={q}，收到: {l}")
    corner_a = build_A(f).entries[q - l:, :l]
    corner_aprime = build_Aprime(f).entries[:l, q - l:]
    return bool(np.linalg.matrix_rank(corner_a) == l and np.linalg.matrix_rank(corner_aprime) == l)


def _inverse_for(f: FieldSpec, role: MatrixRole) -> ColumnMatrix:
    if role is MatrixRole.A:
        return build_A_inverse(f)
    if role is MatrixRole.APRIME:
        return build_Aprime_inverse(f)
    raise ParameterError(f"D(l) 只能由 A 或 Aprime 派生，收到: {role}")


def build_D(f: FieldSpec, A_role: MatrixRole | str, l: int) -> ColumnMatrix:
    """
    构造 D(l) = [[I_l, 0], [P, 0]]，使 M⁻¹·D(l) 的前 q-l 行全为 0 (M 为 A 或 A')。

    记 H 为 M⁻¹ 的前 q-l 行，按列 l 切分为 [H1 | H2]，则 P = H2⁻¹·H1。
    l = 0 时 D 为零矩阵；l = q 时零带为空，D 即单位阵。

    参数:
        f (FieldSpec): 域。
        A_role (MatrixRole | str): "A" 或 "Aprime"。
        l (int): 单位块大小，0 ≤ l ≤ q。

    返回:
        ColumnMatrix: role 为 D 的矩阵。
    """
    q = f.q
    role = MatrixRole(A_role)
    if not 0 <= l <= q:
        raise ParameterError(f"l 必须满足 0 <= l <= q={q}，收到: {l}")
    inverse = _inverse_for(f, role).entries

    entries = f.zeros((q, q))
    if l:
        entries[:l, :l] = f.GF.Identity(l)
    if 0 < l < q:
        band = inverse[:q - l]
        h1, h2 = band[:, :l], band[:, l:]
        if np.linalg.matrix_rank(h2) != q - l:
            raise InvariantViolation(f"构造 D({l}) 时子矩阵奇异 (role={role.value}, q={q})")
        entries[l:, :l] = np.linalg.inv(h2) @ h1
        if np.any(inverse[:q - l] @ entries):
            raise InvariantViolation(f"M⁻¹·D({l}) 的前 {q - l} 行不为 0 (role={role.value})")
    return ColumnMatrix(MatrixRole.D, entries, l=l, forward_role=role)


# =============================================================================
# 矩阵族缓存
# =============================================================================
@dataclass(frozen=True, eq=False)
class MatrixFamily:
    field: FieldSpec
    A: ColumnMatrix
    Aprime: ColumnMatrix
    Ainv: ColumnMatrix
    AprimeInv: ColumnMatrix
    D_A: tuple[ColumnMatrix, ...]
    D_Aprime: tuple[ColumnMatrix, ...]

    def forward(self, role: MatrixRole) -> ColumnMatrix:
        return self.A if role is MatrixRole.A else self.Aprime

    def inverse(self, role: MatrixRole) -> ColumnMatrix:
        return self.Ainv if role is MatrixRole.A else self.AprimeInv

    def D(self, role: MatrixRole, l: int) -> ColumnMatrix:
        return (self.D_A if role is MatrixRole.A else self.D_Aprime)[l]


@lru_cache(maxsize=None)
def matrix_family(f: FieldSpec) -> MatrixFamily:
    """A、A'、两者的逆以及 l = 0..q 的全部 D(l)，每个域只构造一次。"""
    family = MatrixFamily(
        field=f,
        A=build_A(f),
        Aprime=build_Aprime(f),
        Ainv=build_A_inverse(f),
        AprimeInv=build_Aprime_inverse(f),
        D_A=tuple(build_D(f, MatrixRole.A, l) for l in range(f.q + 1)),
        D_Aprime=tuple(build_D(f, MatrixRole.APRIME, l) for l in range(f.q + 1)),
    )
    logging.info(f"已缓存 q={f.q} 的列变换矩阵族 (含 {f.q + 1} 个 D(l))")
    return family


def column_matrix(f: FieldSpec, j: int) -> ColumnMatrix:
    """A_j: 最后一列 (α = 0) 用 A'，其余列用 A。"""
    family = matrix_family(f)
    return family.Aprime if j == f.q2 - 1 else family.A


def d_code_syndrome(f: FieldSpec, role: MatrixRole | str, l: int, vec) -> Any:
    """码 D_l 的校验: M⁻¹ 的前 q-l 行作用于 vec，全 0 当且仅当 vec ∈ D_l。"""
    inverse = matrix_family(f).inverse(MatrixRole(role)).entries
    return inverse[:f.q - l] @ f.array(vec)


# =============================================================================
# 混合列求解
# =============================================================================
def solve_mixed(f: FieldSpec, M: ColumnMatrix, l: int, x, v) -> MixedSolveResult:
    """
    求解 M·(x, y)ᵀ = (v, u)ᵀ，其中 x 为左端已知的前 q-l 个分量，v 为右端已知的前 l 个分量。

    步骤:
        1. b = M·(x, 0)
        2. b̂ = (v, 0) - (b[0..l-1], 0)
        3. b̃ = D(l)·b̂
        4. left = (x, 0) + M⁻¹·b̃
        5. right = b̃ + b
    l = 0 与 l = q 两端直接计算。

    返回:
        MixedSolveResult: left_full = (x, y)，right_full = (v, u)。
    """
    q = f.q
    if M.role not in (MatrixRole.A, MatrixRole.APRIME):
        raise ParameterError(f"solve_mixed 需要 A 或 Aprime，收到: {M.role.value}")
    if not 0 <= l <= q:
        raise ParameterError(f"l 必须满足 0 <= l <= q={q}，收到: {l}")
    x = f.array(x).reshape(-1)
    v = f.array(v).reshape(-1)
    if x.size != q - l or v.size != l:
        raise ParameterError(f"长度不匹配: 需要 |x|={q - l}, |v|={l}，实际为 {x.size}, {v.size}")

    left, right = solve_mixed_ints(f, M.role, l, x.view(np.ndarray).astype(np.int64),
                                   v.view(np.ndarray).astype(np.int64))
    return MixedSolveResult(left_full=f.array(left), right_full=f.array(right))


def solve_mixed_ints(f: FieldSpec, role: MatrixRole, l: int, x: np.ndarray,
                     v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """solve_mixed 的查表实现，输入输出均为整数编码数组，不做参数检查。"""
    q = f.q
    family = matrix_family(f)
    forward = family.forward(role).ints
    inverse = family.inverse(role).ints
    if l == q:
        return table_matvec(f, inverse, v), v.copy()
    if l == 0:
        return x.copy(), table_matvec(f, forward, x)

    x_full = np.zeros(q, dtype=np.int64)
    x_full[:q - l] = x
    b = table_matvec(f, forward, x_full)
    b_hat = np.zeros(q, dtype=np.int64)
    b_hat[:l] = v ^ b[:l]
    b_tilde = table_matvec(f, family.D(role, l).ints, b_hat)
    left = x_full ^ table_matvec(f, inverse, b_tilde)
    right = b_tilde ^ b
    return left, right
