# -*- coding: utf-8 -*-
"""
功能: 特征 2 的塔域 GF(q) ⊂ GF(q²) 精确运算模块，q = 2^s。
      域本身由 `galois` 库构造 (最小字典序本原多项式)，本模块在其上固定
      构造所需的本原元 ε、子域本原元 γ = ε^(q+1) 以及满足 y0 + y0^q = 1 的 y0，
      并维护 ε 的指数/对数表，供各模块按指数查表。

主要功能:
- `build_field`: 构造并缓存 FieldSpec (结果对同一 s 完全可复现)。
- `add` / `mul` / `inv` / `pow`: 以整数编码 (多项式基) 表示的元素运算。
- `solve_y0`: 求迹为 1 的最小编码元素。
- `subfield_index`: 判断元素是否落在子域 GF(q) 中并给出其 γ 指数。
- `table_mul` / `table_matvec`: 直接在整数编码数组上查指数/对数表的向量运算，供逐列编码的内层循环使用。
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import galois
import numpy as np

from hermitian.errors import InvariantViolation, ParameterError

# 支持的 s 上限 (q² ≤ 65536)
MAX_S = 8
# subfield_index 对 0 元素返回的标记
SUBFIELD_ZERO = -1

# 域元素以多项式基下的整数编码表示，取值范围 [0, q²-1]
Element = int


@dataclass(frozen=True, eq=False)
class FieldSpec:
    s: int
    q: int
    q2: int
    modulus: int
    GF: Any
    epsilon: Element
    gamma: Element
    y0: Element
    exp_table: np.ndarray
    log_table: np.ndarray

    @property
    def order(self) -> int:
        """乘法群阶 q² - 1。"""
        return self.q2 - 1

    @property
    def hex_width(self) -> int:
        """十六进制编码时每个符号的固定位数。"""
        return math.ceil(2 * self.s / 4)

    def eps_pow(self, k: int) -> Element:
        return int(self.exp_table[k % self.order])

    def array(self, values) -> Any:
        """把整数 (或整数数组) 转为本域的 galois 数组。"""
        return self.GF(np.asarray(values, dtype=np.int64))

    def zeros(self, shape) -> Any:
        return self.GF.Zeros(shape)


# =============================================================================
# 域构造
# =============================================================================
@lru_cache(maxsize=None)
def build_field(s: int) -> FieldSpec:
    """
    构造 GF(q²)，q = 2^s，并固定 ε、γ、y0。

    参数:
        s (int): 子域指数，1 ≤ s ≤ 8。

    返回:
        FieldSpec: 不可变的域描述，同一 s 多次调用返回同一对象。
    """
    if not isinstance(s, int) or not 1 <= s <= MAX_S:
        raise ParameterError(f"s 必须满足 1 <= s <= {MAX_S}，收到: {s!r}")

    q = 2 ** s
    q2 = q * q
    degree = 2 * s
    # 最小字典序本原多项式，保证输出逐位可复现
    modulus_poly = galois.primitive_poly(2, degree, method="min")
    GF = galois.GF(2 ** degree, irreducible_poly=modulus_poly)

    epsilon = int(GF.primitive_element)
    exp_table = (GF(epsilon) ** np.arange(q2 - 1)).view(np.ndarray).astype(np.int64)
    log_table = np.full(q2, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(q2 - 1, dtype=np.int64)

    gamma = int(exp_table[(q + 1) % (q2 - 1)])

    partial = FieldSpec(
        s=s, q=q, q2=q2, modulus=int(modulus_poly), GF=GF,
        epsilon=epsilon, gamma=gamma, y0=0,
        exp_table=exp_table, log_table=log_table,
    )
    y0 = solve_y0(partial)
    field = FieldSpec(
        s=s, q=q, q2=q2, modulus=int(modulus_poly), GF=GF,
        epsilon=epsilon, gamma=gamma, y0=y0,
        exp_table=exp_table, log_table=log_table,
    )
    verify_field(field)
    logging.info(f"已构造 GF({q2}) (q={q})，模多项式 0x{field.modulus:x}，"
                 f"ε=0x{epsilon:x}，γ=0x{gamma:x}，y0=0x{y0:x}")
    return field


def verify_field(f: FieldSpec):
    """校验 FieldSpec 的全部类型不变量，不成立时抛出 InvariantViolation。"""
    GF = f.GF
    if len(np.unique(f.exp_table)) != f.order or 0 in f.exp_table:
        raise InvariantViolation(f"ε=0x{f.epsilon:x} 的乘法阶不是 {f.order}")

    if f.gamma != f.eps_pow(f.q + 1):
        raise InvariantViolation("γ 不等于 ε^(q+1)")
    gamma_powers = GF(f.gamma) ** np.arange(1, f.q)
    if gamma_powers[-1] != 1 or np.any(gamma_powers[:-1] == 1):
        raise InvariantViolation(f"γ 的乘法阶不是 q-1 = {f.q - 1}")

    y0 = GF(f.y0)
    if y0 + y0 ** f.q != 1:
        raise InvariantViolation("y0 + y0^q != 1")

    sub = subfield_elements(f)
    members = np.zeros(f.q2, dtype=bool)
    members[sub.view(np.ndarray)] = True
    sums = (sub[:, None] + sub[None, :]).view(np.ndarray)
    products = (sub[:, None] * sub[None, :]).view(np.ndarray)
    if not (members[sums].all() and members[products].all()):
        raise InvariantViolation("子域像集对加法或乘法不封闭")


# =============================================================================
# 元素运算
# =============================================================================
def _check(f: FieldSpec, a: Element) -> Element:
    if not 0 <= int(a) < f.q2:
        raise ParameterError(f"元素编码 {a} 超出 [0, {f.q2 - 1}]")
    return int(a)


def add(f: FieldSpec, a: Element, b: Element) -> Element:
    # 特征 2: 减法与加法相同
    return int(f.GF(_check(f, a)) + f.GF(_check(f, b)))


def mul(f: FieldSpec, a: Element, b: Element) -> Element:
    return int(f.GF(_check(f, a)) * f.GF(_check(f, b)))


def inv(f: FieldSpec, a: Element) -> Element:
    if _check(f, a) == 0:
        raise InvariantViolation("对 0 求逆: 上游出现了奇异计算")
    return int(f.GF(1) / f.GF(a))


def pow(f: FieldSpec, a: Element, e: int) -> Element:  # noqa: A001
    a = _check(f, a)
    if e == 0:
        return 1
    if a == 0:
        if e < 0:
            raise InvariantViolation("0 的负次幂无定义")
        return 0
    return int(f.GF(a) ** e)


# =============================================================================
# 塔域结构
# =============================================================================
def solve_y0(f: FieldSpec) -> Element:
    """
    返回满足 e + e^q = 1 的最小编码元素 e。
    y -> y + y^q 是 GF(q) 线性满射，解必然存在；找不到说明域表已损坏。
    """
    elements = f.GF.elements
    trace = elements + elements ** f.q
    solutions = np.nonzero(trace.view(np.ndarray) == 1)[0]
    if len(solutions) == 0:
        raise InvariantViolation(f"GF({f.q2}) 中找不到 y0 + y0^q = 1 的解")
    return int(solutions[0])


def subfield_index(f: FieldSpec, a: Element) -> int | None:
    """
    返回 j 使得 a = γ^j (0 ≤ j ≤ q-2)；a = 0 时返回 SUBFIELD_ZERO；a 不在 GF(q) 中返回 None。
    """
    a = _check(f, a)
    if a == 0:
        return SUBFIELD_ZERO
    k = int(f.log_table[a])
    if k % (f.q + 1) == 0:
        return k // (f.q + 1)
    return None


def subfield_elements(f: FieldSpec) -> Any:
    """子域像集 {0} ∪ {γ^j}，按 beta_values 的顺序排列。"""
    return f.array(beta_values(f))


def beta_values(f: FieldSpec) -> list[Element]:
    """码阵行标签: 第 0 行 ↔ β=0，第 j+1 行 ↔ β=γ^j。"""
    return [0] + [f.eps_pow(j * (f.q + 1)) for j in range(f.q - 1)]


def alpha_values(f: FieldSpec) -> list[Element]:
    """码阵列标签: 第 i 列 ↔ α=ε^i (i ≤ q²-2)，最后一列 ↔ α=0。"""
    return [int(v) for v in f.exp_table] + [0]


def power_matrix(f: FieldSpec, exponents, length: int) -> Any:
    """
    返回矩阵 V，V[r, t] = ε^(exponents[r]·t)，t = 0..length-1。
    直接查 ε 指数表，避免逐元素求幂。
    """
    e = np.asarray(exponents, dtype=np.int64).reshape(-1, 1)
    t = np.arange(length, dtype=np.int64).reshape(1, -1)
    return f.array(f.exp_table[(e * t) % f.order])


def field_summary(f: FieldSpec) -> dict:
    """field-info 命令使用的十六进制摘要。"""
    width = f.hex_width
    return {
        "s": f.s,
        "q": f.q,
        "q2": f.q2,
        "modulus": f"{f.modulus:b}",
        "epsilon": f"{f.epsilon:0{width}x}",
        "gamma": f"{f.gamma:0{width}x}",
        "y0": f"{f.y0:0{width}x}",
    }


# =============================================================================
# 整数编码上的查表运算
# =============================================================================
def table_mul(f: FieldSpec, a, b) -> np.ndarray:
    """逐元素乘法 (支持广播)，a、b 为整数编码数组: ε^(log a + log b)，任一为 0 时为 0。"""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    product = f.exp_table[(f.log_table[a] + f.log_table[b]) % f.order]
    return np.where((a == 0) | (b == 0), 0, product)


def table_matvec(f: FieldSpec, M, v) -> np.ndarray:
    """M·v，M 为 (r, c) 整数矩阵，v 长度为 c；特征 2 下求和即按位异或。"""
    v = np.asarray(v, dtype=np.int64)
    return np.bitwise_xor.reduce(table_mul(f, M, v[None, :]), axis=-1)
