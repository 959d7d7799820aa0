# -*- coding: utf-8 -*-
"""
功能: 编码器硬件结构的周期级数据流模型 (基于 simpy 离散事件仿真)。
      模块 A (乘 A_j)、模块 C (q 个行编码器)、模块 D (D_l 系统编码) 与模块 B (乘逆)
      作为带延迟的流水单元连接；每列的数值计算按列顺序在发射时完成，
      流水进程只负责时间推进与事件记录，因此输出码阵与 `encoder.encode` 逐位一致。

主要功能:
- `ScheduleConfig` / `ScheduleConfig.preset`: 时序参数与 paper / serial 两种预设。
- `simulate_encode`: 返回 (码阵, 总周期数, 事件轨迹)。
- `cycle_formula`: 总周期数的闭式预测。
- `resource_report`: 乘法器与存储单元计数。
- `write_trace_csv`: 导出事件轨迹。
"""

import logging
from dataclasses import dataclass, field

import numpy as np
import pandas as pd
import simpy
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from hermitian.errors import InvariantViolation, ScheduleConfigError
from hermitian.gf_core import FieldSpec, table_matvec
from hermitian.hermitian_code import CodeArray, CodeParams, place_info
from hermitian.row_codes import RowEncoderBank, make_Ei
from hermitian.settings import AppConfig
from hermitian.transforms import column_matrix, d_code_syndrome, matrix_family

TRACE_COLUMNS = ["cycle", "unit", "action", "column"]


# =============================================================================
# 时序配置
# =============================================================================
class ScheduleConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    moduleA_latency: int = Field(..., gt=0)
    moduleB_latency: int = Field(..., gt=0)
    moduleC_rate_divisor: int = Field(..., gt=0)
    moduleD_latency: int = Field(..., gt=0)
    column_initiation_interval: int = Field(..., gt=0)
    model_feedback_hazard: bool = False

    @classmethod
    def defaults(cls, q: int, **overrides) -> "ScheduleConfig":
        """全部延迟取 q (串行输入输出、模块 C 以 1/q 时钟运行)。"""
        values = dict(
            moduleA_latency=q, moduleB_latency=q, moduleC_rate_divisor=q,
            moduleD_latency=q, column_initiation_interval=q,
        )
        values.update(overrides)
        try:
            return cls(**values)
        except ValidationError as e:
            raise ScheduleConfigError(f"时序配置无效: {e}") from e

    @classmethod
    def preset(cls, q: int, name: str, config: AppConfig | None = None,
               model_feedback_hazard: bool | None = None) -> "ScheduleConfig":
        """
        按配置文件中的预设构造时序配置，预设值 "q" 代入当前 q。

        参数:
            q (int): 子域大小。
            name (str): 预设名，默认提供 "paper" (列间隔 1) 与 "serial" (列间隔 q)。
            config (AppConfig | None): 配置对象，None 时使用默认配置。
            model_feedback_hazard (bool | None): 覆盖配置中的反馈冒险开关。
        """
        arch = (config or AppConfig()).architecture_parameters
        if name not in arch.presets:
            raise ScheduleConfigError(f"未知的时序预设: {name}，可选: {sorted(arch.presets)}")
        preset = arch.presets[name]

        def resolve(value):
            return q if value == "q" else value

        hazard = arch.model_feedback_hazard if model_feedback_hazard is None else model_feedback_hazard
        return cls.defaults(
            q,
            column_initiation_interval=resolve(preset.column_initiation_interval),
            moduleC_rate_divisor=resolve(preset.moduleC_rate_divisor),
            model_feedback_hazard=hazard,
        )

    @property
    def fill(self) -> int:
        return self.moduleA_latency + self.moduleD_latency + self.moduleB_latency

    @property
    def feedback_stall(self) -> int:
        """行编码器由信息阶段切换到校验阶段时，列发射需额外等待的周期数。"""
        return max(0, self.moduleD_latency + self.moduleC_rate_divisor - self.column_initiation_interval)


def validate_schedule(cfg: ScheduleConfig):
    # 模块 C 每个行编码器每列需输出一个符号
    if cfg.moduleC_rate_divisor > cfg.column_initiation_interval:
        raise ScheduleConfigError(
            f"moduleC_rate_divisor={cfg.moduleC_rate_divisor} 大于列间隔 "
            f"column_initiation_interval={cfg.column_initiation_interval}，模块 C 跟不上列速率"
        )


@dataclass(frozen=True)
class TraceEvent:
    cycle: int
    unit: str
    action: str
    column: int


@dataclass
class SimulationResult:
    codeword: CodeArray
    total_cycles: int
    trace: list[TraceEvent] = field(default_factory=list)
    stalls: int = 0
    feedback_hazards: int = 0

    def __iter__(self):
        return iter((self.codeword, self.total_cycles, self.trace))


# =============================================================================
# 功能单元
# =============================================================================
class ModuleA:
    """b = A_j·(x, 0)。"""

    def __init__(self, f: FieldSpec):
        self.field = f

    def apply(self, j: int, x_full: np.ndarray) -> np.ndarray:
        return table_matvec(self.field, column_matrix(self.field, j).ints, x_full)


class ModuleB:
    """M⁻¹·b̃，列 q²-1 使用 A' 的逆。"""

    def __init__(self, f: FieldSpec):
        self.field = f
        self.family = matrix_family(f)

    def apply(self, j: int, b_tilde: np.ndarray) -> np.ndarray:
        return table_matvec(self.field, self.family.inverse(column_matrix(self.field, j).role).ints, b_tilde)


class ModuleC:
    """q 个行编码器，同一列内按向量一次推进。"""

    def __init__(self, p: CodeParams):
        self.q = p.q
        self.bank = RowEncoderBank([make_Ei(p, i) for i in range(p.q)])

    def emit(self, l: int) -> np.ndarray:
        return self.bank.emit(slice(0, l))

    def absorb(self, l: int, right_full: np.ndarray):
        self.bank.absorb(slice(l, self.q), right_full[l:])


class ModuleD:
    """b̃ = D(l)·b̂，即码 D_l 的系统编码；l = q 时为恒等。"""

    def __init__(self, f: FieldSpec):
        self.field = f
        self.family = matrix_family(f)

    def apply(self, j: int, l: int, b_hat: np.ndarray) -> np.ndarray:
        role = column_matrix(self.field, j).role
        b_tilde = table_matvec(self.field, self.family.D(role, l).ints, b_hat)
        if np.any(d_code_syndrome(self.field, role, l, b_tilde)):
            raise InvariantViolation(f"第 {j} 列模块 D 的输出不属于码 D_{l}")
        return b_tilde


@dataclass
class _ColumnWork:
    column: int
    l: int
    left: np.ndarray
    right: np.ndarray


# =============================================================================
# 仿真
# =============================================================================
def _transition_columns(p: CodeParams) -> set[int]:
    """行编码器由信息阶段进入校验阶段的列号 (即各行码维数)。"""
    return {p.row_dim(i) for i in range(p.q) if p.row_dim(i) < p.field.q2}


class _Pipeline:
    def __init__(self, p: CodeParams, d: CodeArray, cfg: ScheduleConfig):
        self.p = p
        self.f = p.field
        self.d = d.to_ints()
        self.cfg = cfg
        self.env = simpy.Environment()
        self.trace: list[TraceEvent] = []
        self.codeword = np.zeros((self.f.q, self.f.q2), dtype=np.int64)
        self.stalls = 0
        self.feedback_hazards = 0
        self.retired = 0

        self.module_a = ModuleA(self.f)
        self.module_b = ModuleB(self.f)
        self.module_c = ModuleC(p)
        self.module_d = ModuleD(self.f)
        # 各行校验符号可用的最早周期
        self.parity_ready: dict[int, int] = {}
        self.row_dims = [p.row_dim(i) for i in range(self.f.q)]

        self.fifo_a = simpy.Store(self.env)
        self.fifo_d = simpy.Store(self.env)
        self.fifo_b = simpy.Store(self.env)

    def record(self, unit: str, action: str, column: int):
        self.trace.append(TraceEvent(cycle=int(self.env.now), unit=unit, action=action, column=column))

    def compute_column(self, j: int) -> _ColumnWork:
        """按列顺序完成该列的全部数值计算。"""
        q = self.f.q
        l = q - self.p.b_hat[j]
        x_full = np.zeros(q, dtype=np.int64)
        x_full[:q - l] = self.d[:q - l, j]

        b = self.module_a.apply(j, x_full)
        v = self.module_c.emit(l)
        b_hat = np.zeros(q, dtype=np.int64)
        b_hat[:l] = v ^ b[:l]
        b_tilde = self.module_d.apply(j, l, b_hat)
        right = b_tilde ^ b
        left = x_full ^ self.module_b.apply(j, b_tilde)
        self.module_c.absorb(l, right)
        return _ColumnWork(column=j, l=l, left=left, right=right)

    def issuer(self):
        transitions = _transition_columns(self.p)
        for j in range(self.f.q2):
            if self.cfg.model_feedback_hazard and j in transitions and self.cfg.feedback_stall:
                self.record("switch_a", "stall", j)
                self.stalls += self.cfg.feedback_stall
                yield self.env.timeout(self.cfg.feedback_stall)
            work = self.compute_column(j)
            # 列的 q 个符号串行移入
            yield self.env.timeout(self.cfg.column_initiation_interval)
            self.record("switch_a", "admit", j)
            yield self.fifo_a.put(work)

    def _delayed(self, latency: int, work: _ColumnWork, on_done, out_fifo):
        yield self.env.timeout(latency)
        on_done(work)
        if out_fifo is not None:
            yield out_fifo.put(work)

    def module_a_proc(self):
        while True:
            work = yield self.fifo_a.get()
            self.record("A", "start", work.column)
            self.env.process(self._delayed(self.cfg.moduleA_latency, work, self._a_done, self.fifo_d))

    def _a_done(self, work: _ColumnWork):
        j, now = work.column, int(self.env.now)
        self.record("A", "done", j)
        for i in range(work.l):
            ready = self.parity_ready.get(i)
            if self.row_dims[i] <= j and (ready is None or ready > now):
                self.feedback_hazards += 1
                if self.cfg.model_feedback_hazard:
                    raise InvariantViolation(f"第 {j} 列读取 C_{i} 时其校验符号尚未就绪 (就绪于 {ready}，当前 {now})")
            self.record(f"C_{i}", "emit", j)
        self.record("adder", "subtract", j)

    def module_d_proc(self):
        while True:
            work = yield self.fifo_d.get()
            self.record("D", "start", work.column)
            self.env.process(self._delayed(self.cfg.moduleD_latency, work, self._d_done, self.fifo_b))

    def _d_done(self, work: _ColumnWork):
        j, now = work.column, int(self.env.now)
        self.record("D", "done", j)
        self.record("adder", "combine_right", j)
        for i in range(work.l, self.f.q):
            self.record(f"C_{i}", "absorb", j)
            if j == self.row_dims[i] - 1:
                self.parity_ready[i] = now + self.cfg.moduleC_rate_divisor
        self.record("switch_b", "route", j)

    def module_b_proc(self):
        while True:
            work = yield self.fifo_b.get()
            self.record("B", "start", work.column)
            self.env.process(self._delayed(self.cfg.moduleB_latency, work, self._b_done, None))

    def _b_done(self, work: _ColumnWork):
        j = work.column
        self.record("B", "done", j)
        self.record("adder", "combine_left", j)
        self.codeword[:, j] = work.left
        self.record("switch_b", "retire", j)
        self.retired += 1

    def run(self) -> int:
        self.env.process(self.issuer())
        self.env.process(self.module_a_proc())
        self.env.process(self.module_d_proc())
        self.env.process(self.module_b_proc())
        self.env.run()
        if self.retired != self.f.q2:
            raise InvariantViolation(f"仿真结束时只完成了 {self.retired}/{self.f.q2} 列")
        return int(self.env.now)


def simulate_encode(p: CodeParams, info, cfg: ScheduleConfig) -> SimulationResult:
    """
    周期级仿真一次编码。

    参数:
        p (CodeParams): 码参数。
        info: 长度 k 的信息向量。
        cfg (ScheduleConfig): 时序配置，仿真前先做一致性检查。

    返回:
        SimulationResult: 可按 (codeword, total_cycles, trace) 解包。
    """
    validate_schedule(cfg)
    d = place_info(p, info)
    pipeline = _Pipeline(p, d, cfg)
    total = pipeline.run()
    expected = cycle_formula(p, cfg)
    if total != expected:
        raise InvariantViolation(f"仿真周期数 {total} 与闭式 {expected} 不一致")
    logging.info(f"仿真完成: q={p.q}, m={p.m}, 列间隔={cfg.column_initiation_interval}, 总周期={total}")
    return SimulationResult(
        codeword=CodeArray(p.field, pipeline.codeword),
        total_cycles=total,
        trace=pipeline.trace,
        stalls=pipeline.stalls,
        feedback_hazards=pipeline.feedback_hazards,
    )


def cycle_formula(p: CodeParams, cfg: ScheduleConfig) -> int:
    """q²·II + (A + D + B)，开启反馈冒险建模时每个切换列再加一次停顿。"""
    total = p.field.q2 * cfg.column_initiation_interval + cfg.fill
    if cfg.model_feedback_hazard:
        total += len(_transition_columns(p)) * cfg.feedback_stall
    return total


# =============================================================================
# 资源统计
# =============================================================================
class ResourceReport(BaseModel):
    q: int
    module_a_multipliers: int
    module_b_multipliers: int
    module_c_multipliers: int
    module_c_registers: int
    module_d_multipliers: int
    module_d_registers: int
    column_buffers: int
    total: int
    bound_constant: int
    bound: int
    within_bound: bool
    reference: dict[str, dict[str, int]]

    @property
    def ratio(self) -> float:
        return self.total / (self.q * self.q)


def resource_report(p: CodeParams, bound_constant: int = 6) -> ResourceReport:
    """
    统计模型中的有限域乘法器与存储单元，并与 C·q² 比较。
    同时给出生成矩阵编码器的对照数值。
    """
    q = p.q
    c_cells = sum(a + 1 for a in p.a_hat)
    counts = dict(
        module_a_multipliers=q * q,
        module_b_multipliers=q * q,
        module_c_multipliers=c_cells,
        module_c_registers=c_cells,
        module_d_multipliers=q * (q - 1) // 2,
        module_d_registers=q,
        column_buffers=2 * q,
    )
    total = sum(counts.values())
    bound = bound_constant * q * q
    if c_cells != p.n - p.k:
        raise InvariantViolation(f"模块 C 寄存器数 {c_cells} 不等于 n-k={p.n - p.k}")
    multipliers = sum(v for k, v in counts.items() if k.endswith("_multipliers"))
    reference = {
        "generator_matrix": {"multipliers": p.k * (p.n - p.k), "memory": p.n, "cycles": 2 * p.n},
        "serial_groebner": {"multipliers": q ** 3, "memory": q ** 3, "cycles": p.n},
        "column_pipeline": {"multipliers": multipliers, "memory": total - multipliers, "cycles": q * q},
    }
    return ResourceReport(
        q=q, **counts, total=total, bound_constant=bound_constant, bound=bound,
        within_bound=total <= bound, reference=reference,
    )


def write_trace_csv(trace: list[TraceEvent], path: str):
    frame = pd.DataFrame([(e.cycle, e.unit, e.action, e.column) for e in trace], columns=TRACE_COLUMNS)
    frame.to_csv(path, index=False)
    logging.info(f"事件轨迹已写入: {path} ({len(frame)} 条)")


def trace_is_ordered(trace: list[TraceEvent]) -> bool:
    cycles = np.array([e.cycle for e in trace], dtype=np.int64)
    return bool(np.all(np.diff(cycles) >= 0))
