# -*- coding: utf-8 -*-
"""
功能: Hermitian 曲线 x^(q+1) = y^q + y 及其一点 AG 码 C(m) 的参数模块。

主要功能:
- `enumerate_points`: 按码阵 (行 β, 列 α) 顺序生成 q³ 个仿射有理点。
- `make_code` / `make_uniform_code`: 由 m (或统一的 â) 推导 â、各行信息长度、b̂、维数 k 等参数。
- `info_positions` / `place_info` / `read_info`: 信息位的阶梯形区域及其按行展开的序列化顺序。
- `CodeArray`: q × q² 码阵 (码字、接收字以及变换后的 r̃ 都用它承载)。
"""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from hermitian.errors import InvariantViolation, ParameterError
from hermitian.gf_core import Element, FieldSpec, alpha_values, beta_values


# =============================================================================
# 数据类型
# =============================================================================
@dataclass(frozen=True)
class RationalPoint:
    row: int
    column: int
    alpha: Element
    beta: Element
    x: Element
    y: Element


@dataclass(eq=False)
class CodeArray:
    """q × q² 的 GF(q²) 阵列，entries 为 galois 数组。"""
    field: FieldSpec
    entries: Any

    def __post_init__(self):
        shape = (self.field.q, self.field.q2)
        if not isinstance(self.entries, self.field.GF):
            self.entries = self.field.array(self.entries)
        if self.entries.shape != shape:
            raise ParameterError(f"码阵形状应为 {shape}，实际为 {self.entries.shape}")

    @classmethod
    def zeros(cls, f: FieldSpec) -> "CodeArray":
        return cls(f, f.zeros((f.q, f.q2)))

    def to_ints(self) -> np.ndarray:
        return self.entries.view(np.ndarray).astype(np.int64)

    def copy(self) -> "CodeArray":
        return CodeArray(self.field, self.entries.copy())

    def flatten(self) -> Any:
        """按点序 (行优先) 展平。"""
        return self.entries.reshape(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CodeArray):
            return NotImplemented
        return self.field is other.field and np.array_equal(self.to_ints(), other.to_ints())


@dataclass(frozen=True, eq=False)
class CodeParams:
    field: FieldSpec
    m: int | None
    n: int
    g: int
    basis: tuple[tuple[int, int], ...]
    a_hat: tuple[int, ...]
    info_len: tuple[int, ...]
    b_hat: tuple[int, ...]
    k: int

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def is_uniform(self) -> bool:
        return len(set(self.a_hat)) == 1

    def row_dim(self, b: int) -> int:
        """第 b 行行码 E_b 的维数 q² - â(b) - 1。"""
        return self.field.q2 - self.a_hat[b] - 1


# =============================================================================
# 有理点
# =============================================================================
def point_coordinates(f: FieldSpec) -> tuple[Any, Any]:
    """
    返回形状为 (q, q²) 的坐标数组 (X, Y)，X[β行, α列] = α，
    Y = α^(q+1)(y0+β) + δ(α)β。
    """
    GF = f.GF
    alphas = f.array(alpha_values(f))
    betas = f.array(beta_values(f))
    X = f.array(np.tile(np.asarray(alpha_values(f), dtype=np.int64), (f.q, 1)))
    norm = alphas ** (f.q + 1)
    Y = norm[None, :] * (GF(f.y0) + betas)[:, None]
    # α = 0 的列: 点为 (0, β)
    Y[:, f.q2 - 1] = betas
    return X, Y


def enumerate_points(f: FieldSpec) -> list[RationalPoint]:
    """
    按 (行, 列) 顺序生成全部 q³ 个仿射有理点，并逐点验证曲线方程。
    """
    X, Y = point_coordinates(f)
    lhs = X ** (f.q + 1)
    rhs = Y ** f.q + Y
    if not np.array_equal(lhs, rhs):
        raise InvariantViolation("生成的点不满足 x^(q+1) = y^q + y，域表可能已损坏")

    alphas = alpha_values(f)
    betas = beta_values(f)
    Xi = X.view(np.ndarray)
    Yi = Y.view(np.ndarray)
    return [
        RationalPoint(row=r, column=c, alpha=alphas[c], beta=betas[r],
                      x=int(Xi[r, c]), y=int(Yi[r, c]))
        for r in range(f.q) for c in range(f.q2)
    ]


# =============================================================================
# 码参数
# =============================================================================
def a_hat_for(f: FieldSpec, m: int) -> tuple[int, ...]:
    """â(b) = max(a : x^a y^b ∈ L(mP∞)) = ⌊(m - b(q+1))/q⌋，空集记为 -1。"""
    q = f.q
    return tuple(max((m - b * (q + 1)) // q, -1) for b in range(q))


def _params_from_a_hat(f: FieldSpec, a_hat: tuple[int, ...], m: int | None) -> CodeParams:
    q, q2 = f.q, f.q2
    basis = tuple((a, b) for b in range(q) for a in range(a_hat[b] + 1))
    # 第 i 行信息长度取自 y 指数 q-1-i 的 â
    info_len = tuple(q2 - a_hat[q - 1 - i] - 1 for i in range(q))
    b_hat = tuple(sum(1 for length in info_len if length > j) for j in range(q2))
    k = sum(info_len)
    n = q ** 3
    if k != sum(b_hat) or k != n - len(basis):
        raise InvariantViolation(f"维数计数不一致: k={k}, Σb̂={sum(b_hat)}, n-|basis|={n - len(basis)}")
    return CodeParams(
        field=f, m=m, n=n, g=q * (q - 1) // 2, basis=basis,
        a_hat=a_hat, info_len=info_len, b_hat=b_hat, k=k,
    )


def make_code(f: FieldSpec, m: int) -> CodeParams:
    """
    构造 Hermitian 码 C(m) 的参数。

    参数:
        f (FieldSpec): 域。
        m (int): 极点阶上界，需满足 (q-1)(q+1) ≤ m ≤ q³-q-1，
                 且所得维数满足 0 < k < q³ - g - q。

    返回:
        CodeParams: 全部派生参数。
    """
    q = f.q
    low, high = (q - 1) * (q + 1), q ** 3 - q - 1
    if not low <= m <= high:
        raise ParameterError(f"m={m} 超出范围: 需满足 (q-1)(q+1)={low} <= m <= q³-q-1={high}")

    params = _params_from_a_hat(f, a_hat_for(f, m), m)
    bound = params.n - params.g - q
    if not 0 < params.k < bound:
        raise ParameterError(f"m={m} 得到 k={params.k}，违反维数限制 0 < k < q³-g-q={bound}")
    logging.info(f"已构造 C(m={m}) (q={q})：n={params.n}, k={params.k}, g={params.g}, â={params.a_hat}")
    return params


def make_uniform_code(f: FieldSpec, a_hat: int) -> CodeParams:
    """
    所有 y 指数共用同一 â 的码 Ĉ (S_{a,b} = 0，a ≤ â，b < q)，维数 (q² - â - 1)q。
    该码不是某个 C(m)，因此 m 记为 None，也不施加 C(m) 的维数限制。
    """
    if not 0 <= a_hat < f.q2 - 1:
        raise ParameterError(f"统一码要求 0 <= â < q²-1={f.q2 - 1}，收到: {a_hat}")
    return _params_from_a_hat(f, (a_hat,) * f.q, None)


# =============================================================================
# 信息位
# =============================================================================
def info_positions(p: CodeParams) -> list[tuple[int, int]]:
    """按行优先的阶梯顺序返回全部 k 个信息位 (行, 列)。"""
    return [(i, j) for i in range(p.q) for j in range(p.info_len[i])]


def _info_mask(p: CodeParams) -> np.ndarray:
    mask = np.zeros((p.q, p.field.q2), dtype=bool)
    for i, length in enumerate(p.info_len):
        mask[i, :length] = True
    return mask


def place_info(p: CodeParams, info) -> CodeArray:
    """把长度为 k 的信息向量按行优先写入阵列 d，其余位置为 0。"""
    values = np.asarray(info, dtype=np.int64).reshape(-1)
    if values.size != p.k:
        raise ParameterError(f"信息向量长度应为 k={p.k}，实际为 {values.size}")
    d = CodeArray.zeros(p.field)
    d.entries[_info_mask(p)] = p.field.array(values)
    return d


def read_info(p: CodeParams, array: CodeArray) -> Any:
    """place_info 的逆操作: 取出信息位上的符号。"""
    return array.entries[_info_mask(p)]


def staircase_art(p: CodeParams) -> str:
    """用 ASCII 字符画出信息位区域: '#' 为信息位，'.' 为校验位。"""
    mask = _info_mask(p)
    lines = [f"row {i:>2} |" + "".join("#" if cell else "." for cell in row) + "|"
             for i, row in enumerate(mask)]
    return "\n".join(lines)
