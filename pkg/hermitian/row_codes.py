# -*- coding: utf-8 -*-
"""
功能: 行码模块。
      码阵变换后的第 i 行属于长度 q² 的扩展循环码 E_i：
      循环部分 (位置 0..q²-2) 以 ξ_a = ε^(a + i(q+1)) (1 ≤ a ≤ â(i)) 为根，
      扩展位 q²-1 承载对 ξ_0 的校验。

主要功能:
- `make_Ei`: 构造 E_i 的描述。
- `encode_row`: 系统编码，信息在前 dim 个位置，校验在后 â(i)+1 个位置。
- `RowEncoderBank`: 同一列中 q 个行编码器按向量一次推进。
- `RowEncoderStream` / `encode_row_streaming`: 每步输出一个符号的移位寄存器实现。
- `row_syndromes`: 逐根计算行伴随式。
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Iterator, Sequence

import galois
import numpy as np

from hermitian.errors import InvariantViolation, ParameterError
from hermitian.gf_core import Element, FieldSpec, power_matrix, table_mul
from hermitian.hermitian_code import CodeParams


@dataclass(frozen=True, eq=False)
class ExtendedCyclicCode:
    field: FieldSpec
    row_index: int
    a_hat: int
    # 根的 ε 指数，第 0 个为承载扩展校验的 ξ_0
    root_exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.root_exponents) != self.a_hat + 1:
            raise ParameterError(f"E_{self.row_index} 需要 {self.a_hat + 1} 个根，实际为 {len(self.root_exponents)}")
        residues = {e % self.field.order for e in self.root_exponents}
        if len(residues) != len(self.root_exponents):
            raise ParameterError(f"E_{self.row_index} 的根不互异: {self.root_exponents}")

    @property
    def length(self) -> int:
        return self.field.q2

    @property
    def dim(self) -> int:
        return self.field.q2 - self.a_hat - 1

    @property
    def roots(self) -> tuple[Element, ...]:
        return tuple(self.field.eps_pow(e) for e in self.root_exponents)

    @property
    def distinguished_root(self) -> Element:
        return self.roots[0]

    @property
    def parity_positions(self) -> range:
        return range(self.dim, self.length)

    @cached_property
    def reciprocal_generator(self) -> galois.Poly:
        """g'(x) = ∏_{a=1..â} (x - ξ_a⁻¹)；信息按降幂写入时对它做除法。"""
        f = self.field
        if self.a_hat == 0:
            return galois.Poly.One(field=f.GF)
        inverse_roots = f.array([f.eps_pow(-e) for e in self.root_exponents[1:]])
        return galois.Poly.Roots(inverse_roots, field=f.GF)

    @cached_property
    def feedback_taps(self) -> Any:
        """g' 的低次系数 g_0..g_{â-1} (首一，最高次系数省略)。"""
        coeffs = self.reciprocal_generator.coefficients(self.a_hat + 1, order="asc")
        return coeffs[:self.a_hat]

    @cached_property
    def check_matrix(self) -> Any:
        """V[a, t] = ξ_a^t，t = 0..q²-2。"""
        return power_matrix(self.field, self.root_exponents, self.length - 1)


def make_row_code(f: FieldSpec, i: int, a_hat: int) -> ExtendedCyclicCode:
    """不依赖 CodeParams 的构造入口，统一码与一般码共用。"""
    if not 0 <= i < f.q:
        raise ParameterError(f"行号 i 必须满足 0 <= i < q={f.q}，收到: {i}")
    if not 0 <= a_hat < f.q2 - 1:
        raise ParameterError(f"E_{i} 要求 0 <= â < q²-1，收到: {a_hat}")
    exponents = tuple(a + i * (f.q + 1) for a in range(a_hat + 1))
    return ExtendedCyclicCode(field=f, row_index=i, a_hat=a_hat, root_exponents=exponents)


@lru_cache(maxsize=None)
def make_Ei(p: CodeParams, i: int) -> ExtendedCyclicCode:
    """
    构造第 i 行的行码 E_i = EC((ε^(0+i(q+1)), ..., ε^(â(i)+i(q+1))), q²)。

    参数:
        p (CodeParams): 码参数。
        i (int): 行号，0 ≤ i ≤ q-1。

    返回:
        ExtendedCyclicCode: dim = q² - â(i) - 1。
    """
    return make_row_code(p.field, i, p.a_hat[i])


# =============================================================================
# 编码
# =============================================================================
def _as_vector(E: ExtendedCyclicCode, values, length: int, what: str) -> Any:
    vec = E.field.array(values).reshape(-1)
    if vec.size != length:
        raise ParameterError(f"E_{E.row_index} 的{what}长度应为 {length}，实际为 {vec.size}")
    return vec


def encode_row(E: ExtendedCyclicCode, info) -> Any:
    """
    系统编码 φ_i: 前 dim 个位置为信息，随后 â 个循环校验位，最后一位为扩展校验。

    把 c 的循环部分按降幂写成 c'(x) = Σ c_t x^(q²-2-t)，则 c(ξ) = 0 等价于 c'(ξ⁻¹) = 0，
    校验位即 (u'(x)·x^â mod g'(x)) 的系数 (高次在前)。
    """
    f = E.field
    info = _as_vector(E, info, E.dim, "信息")
    word = f.zeros(E.length)
    word[:E.dim] = info
    if E.a_hat > 0:
        shifted = galois.Poly(np.concatenate([info.view(np.ndarray), np.zeros(E.a_hat, dtype=np.int64)]),
                              field=f.GF)
        remainder = shifted % E.reciprocal_generator
        word[E.dim:E.length - 1] = remainder.coefficients(E.a_hat, order="desc")
    word[E.length - 1] = E.check_matrix[0] @ word[:E.length - 1]
    return word


class RowEncoderBank:
    """
    多个行编码器并排推进的移位寄存器组。同一列中处于校验阶段的行由 `emit` 一次输出，
    处于信息阶段的行由 `absorb` 一次读入，运算都在整数编码上查表完成。

    寄存器按最大 â 右对齐存放，â 较小的行在低位补 0，对应抽头也为 0，
    因此补位在移位过程中始终保持为 0。
    """

    def __init__(self, codes: Sequence[ExtendedCyclicCode]):
        if not codes:
            raise ParameterError("行编码器组至少需要一个行码")
        self.codes = list(codes)
        self.field = codes[0].field
        rows = len(self.codes)
        width = max(1, max(E.a_hat for E in self.codes))
        self._registers = np.zeros((rows, width), dtype=np.int64)
        self._taps = np.zeros((rows, width), dtype=np.int64)
        for r, E in enumerate(self.codes):
            if E.a_hat:
                self._taps[r, width - E.a_hat:] = E.feedback_taps.view(np.ndarray)
        self._xi0 = np.array([E.distinguished_root for E in self.codes], dtype=np.int64)
        self._power = np.ones(rows, dtype=np.int64)
        self._accumulator = np.zeros(rows, dtype=np.int64)
        self.dims = np.array([E.dim for E in self.codes], dtype=np.int64)
        self.length = self.field.q2
        self.positions = np.zeros(rows, dtype=np.int64)

    def _rows(self, rows: slice) -> np.ndarray:
        return np.arange(len(self.codes))[rows]

    def _accumulate(self, idx: np.ndarray, symbols: np.ndarray):
        # 扩展位累加 Σ c_t ξ0^t
        f = self.field
        self._accumulator[idx] ^= table_mul(f, symbols, self._power[idx])
        self._power[idx] = table_mul(f, self._power[idx], self._xi0[idx])

    def absorb(self, rows: slice, symbols) -> np.ndarray:
        """信息阶段: 读入 rows 各行本位置的信息符号并原样返回。"""
        f = self.field
        idx = self._rows(rows)
        symbols = np.asarray(symbols, dtype=np.int64).reshape(-1)
        if symbols.size != idx.size:
            raise ParameterError(f"需要 {idx.size} 个信息符号，收到 {symbols.size}")
        if np.any((symbols < 0) | (symbols >= f.q2)):
            raise ParameterError(f"信息符号超出 [0, {f.q2 - 1}]: {symbols.tolist()}")
        if np.any(self.positions[idx] >= self.dims[idx]):
            late = [int(r) for r in idx if self.positions[r] >= self.dims[r]]
            raise ParameterError(f"行 {late} 已处于校验阶段，不接受输入")

        registers = self._registers[idx]
        feedback = symbols ^ registers[:, -1]
        shifted = np.zeros_like(registers)
        shifted[:, 1:] = registers[:, :-1]
        self._registers[idx] = shifted ^ table_mul(f, feedback[:, None], self._taps[idx])
        self._accumulate(idx, symbols)
        self.positions[idx] += 1
        return symbols

    def emit(self, rows: slice) -> np.ndarray:
        """校验阶段: 输出 rows 各行本位置的校验符号 (最后一位为扩展校验)。"""
        idx = self._rows(rows)
        positions = self.positions[idx]
        if np.any(positions >= self.length):
            raise InvariantViolation(f"编码流已输出全部 {self.length} 个符号")
        if np.any(positions < self.dims[idx]):
            early = [int(r) for r in idx if self.positions[r] < self.dims[r]]
            raise ParameterError(f"行 {early} 仍处于信息阶段，需要输入信息符号")

        extended = positions == self.length - 1
        registers = self._registers[idx]
        out = np.where(extended, self._accumulator[idx], registers[:, -1])
        shifted = np.zeros_like(registers)
        shifted[:, 1:] = registers[:, :-1]
        self._registers[idx] = shifted
        self._accumulate(idx[~extended], out[~extended])
        self.positions[idx] += 1
        return out


class RowEncoderStream:
    """
    φ_i 的逐符号实现: 信息阶段每步读入一个符号并原样输出，
    之后依次输出寄存器中的 â 个校验符号，最后输出扩展校验符号，共 q² 步。
    """

    def __init__(self, E: ExtendedCyclicCode):
        self.code = E
        self._bank = RowEncoderBank([E])
        self._row = slice(0, 1)

    @property
    def position(self) -> int:
        return int(self._bank.positions[0])

    @property
    def expects_input(self) -> bool:
        return self.position < self.code.dim

    @property
    def finished(self) -> bool:
        return self.position >= self.code.length

    def step(self, symbol: Element | None = None) -> Element:
        """推进一步并返回本位置的码符号。信息阶段必须提供 symbol，其后不得提供。"""
        E = self.code
        if self.finished:
            raise InvariantViolation(f"E_{E.row_index} 的编码流已输出全部 {E.length} 个符号")
        if self.expects_input:
            if symbol is None:
                raise ParameterError(f"E_{E.row_index} 第 {self.position} 步需要输入信息符号")
            return int(self._bank.absorb(self._row, [int(symbol)])[0])
        if symbol is not None:
            raise ParameterError(f"E_{E.row_index} 第 {self.position} 步处于校验阶段，不接受输入")
        return int(self._bank.emit(self._row)[0])


def encode_row_streaming(E: ExtendedCyclicCode, info) -> Iterator[Element]:
    """逐步产出 encode_row 的结果，共 q² 个符号。"""
    info = _as_vector(E, info, E.dim, "信息")
    stream = RowEncoderStream(E)
    for symbol in info.view(np.ndarray):
        yield stream.step(int(symbol))
    while not stream.finished:
        yield stream.step()


def row_syndromes(E: ExtendedCyclicCode, c) -> Any:
    """
    返回长度 â+1 的伴随式: 第 a 项为 Σ_{t<q²-1} c_t ξ_a^t，
    第 0 项另加扩展位 c_{q²-1}。全 0 当且仅当 c ∈ E。
    """
    c = _as_vector(E, c, E.length, "码字")
    syndromes = E.check_matrix @ c[:E.length - 1]
    syndromes[0] += c[E.length - 1]
    return syndromes
