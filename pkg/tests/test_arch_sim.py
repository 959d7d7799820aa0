import numpy as np
import pandas as pd
import pytest

from hermitian.arch_sim import (TRACE_COLUMNS, ModuleD, ScheduleConfig, cycle_formula, resource_report, simulate_encode,
                                trace_is_ordered, write_trace_csv)
from hermitian.encoder import encode
from hermitian.errors import InvariantViolation, ScheduleConfigError
from hermitian.gf_core import build_field
from hermitian.hermitian_code import make_code
from hermitian.transforms import column_matrix, d_code_syndrome, matrix_family

UNITS = {"A", "B", "D", "switch_a", "switch_b", "adder"}


def _valid_unit(unit: str) -> bool:
    return unit in UNITS or (unit.startswith("C_") and unit[2:].isdigit())


@pytest.mark.parametrize("preset", ["paper", "serial"])
@pytest.mark.parametrize("hazard", [False, True])
def test_fidelity(code_q4, f4, rng, preset, hazard):
    cfg = ScheduleConfig.preset(f4.q, preset, model_feedback_hazard=hazard)
    for _ in range(3):
        info = rng.integers(0, f4.q2, size=code_q4.k)
        codeword, total, trace = simulate_encode(code_q4, info, cfg)
        assert codeword == encode(code_q4, info).codeword
        assert total == cycle_formula(code_q4, cfg)
        assert trace_is_ordered(trace)
        assert all(_valid_unit(e.unit) for e in trace)


@pytest.mark.parametrize("s, m, preset, expected", [
    (1, 4, "paper", 4 + 6),
    (2, 19, "paper", 16 + 12),
    (1, 4, "serial", 8 + 6),
    (2, 19, "serial", 64 + 12),
])
def test_total_cycles(s, m, preset, expected):
    f = build_field(s)
    p = make_code(f, m)
    cfg = ScheduleConfig.preset(f.q, preset, model_feedback_hazard=False)
    assert cycle_formula(p, cfg) == expected
    assert simulate_encode(p, [1] * p.k, cfg).total_cycles == expected


def test_feedback_hazard_stalls(code_q2, f2):
    # 切换列为 {1, 3}，每次停顿 D + 分频 - II
    paper = ScheduleConfig.preset(f2.q, "paper", model_feedback_hazard=True)
    assert paper.feedback_stall == 2
    assert cycle_formula(code_q2, paper) == 10 + 2 * 2
    result = simulate_encode(code_q2, [1, 2, 3, 1], paper)
    assert result.total_cycles == 14
    assert result.stalls == 4
    assert result.feedback_hazards == 0

    serial = ScheduleConfig.preset(f2.q, "serial", model_feedback_hazard=True)
    assert cycle_formula(code_q2, serial) == 14 + 2 * 2


def test_paper_preset_reports_hazards(code_q4, f4):
    cfg = ScheduleConfig.preset(f4.q, "paper", model_feedback_hazard=False)
    result = simulate_encode(code_q4, [0] * code_q4.k, cfg)
    assert result.feedback_hazards > 0


def test_deterministic(code_q4, f4, rng):
    cfg = ScheduleConfig.preset(f4.q, "paper")
    info = rng.integers(0, f4.q2, size=code_q4.k)
    first = simulate_encode(code_q4, info, cfg)
    second = simulate_encode(code_q4, info, cfg)
    assert first.trace == second.trace
    assert first.total_cycles == second.total_cycles


def test_rate_divisor_exceeds_interval(code_q2, f2):
    cfg = ScheduleConfig.defaults(f2.q, column_initiation_interval=1)
    with pytest.raises(ScheduleConfigError):
        simulate_encode(code_q2, [0] * code_q2.k, cfg)


def test_nonpositive_latency_rejected(f2):
    with pytest.raises(ScheduleConfigError):
        ScheduleConfig.defaults(f2.q, moduleA_latency=0)


def test_unknown_preset(f2):
    with pytest.raises(ScheduleConfigError):
        ScheduleConfig.preset(f2.q, "turbo")


@pytest.mark.parametrize("s, m, total", [(1, 4, 23), (2, 16, 72), (3, 64, 254)])
def test_resource_counts(s, m, total):
    p = make_code(build_field(s), m)
    report = resource_report(p)
    q = p.q
    assert report.module_a_multipliers == q * q
    assert report.module_b_multipliers == q * q
    assert report.module_c_registers == p.n - p.k
    assert report.total == total
    assert report.within_bound
    assert report.total <= 6 * q * q


def test_resource_growth_is_quadratic():
    totals = [resource_report(make_code(build_field(s), m)).total for s, m in [(1, 4), (2, 16), (3, 64)]]
    for small, large in zip(totals, totals[1:]):
        assert 3 <= large / small <= 5


def test_resource_report_q4_m19(code_q4):
    report = resource_report(code_q4, bound_constant=6)
    assert report.bound == 96
    assert report.within_bound


def test_write_trace_csv(tmp_path, code_q2, f2):
    cfg = ScheduleConfig.preset(f2.q, "serial")
    result = simulate_encode(code_q2, [1, 0, 0, 1], cfg)
    path = tmp_path / "trace.csv"
    write_trace_csv(result.trace, str(path))
    frame = pd.read_csv(path)
    assert list(frame.columns) == TRACE_COLUMNS
    assert len(frame) == len(result.trace)
    assert frame["cycle"].is_monotonic_increasing


def test_resource_bound_exceeded_above_square(f2):
    report = resource_report(make_code(f2, 5), bound_constant=6)
    assert report.total == 25
    assert report.bound == 24
    assert not report.within_bound


def test_module_d_output_lies_in_code(f4, rng):
    role = column_matrix(f4, 0).role
    b_hat = np.zeros(f4.q, dtype=np.int64)
    b_hat[:2] = rng.integers(0, f4.q2, size=2)
    b_tilde = ModuleD(f4).apply(0, 2, b_hat)
    assert np.array_equal(b_tilde, (matrix_family(f4).D(role, 2).entries @ f4.array(b_hat)).view(np.ndarray))
    assert not np.any(d_code_syndrome(f4, role, 2, b_tilde))


def test_module_d_rejects_output_outside_code(f4, monkeypatch):
    # A 的第 0 列经 A⁻¹ 变为单位向量 e_0，不在 D_2 中
    role = column_matrix(f4, 0).role
    outside = matrix_family(f4).forward(role).ints[:, 0]
    monkeypatch.setattr("hermitian.arch_sim.table_matvec", lambda f, M, v: outside.copy())
    with pytest.raises(InvariantViolation):
        ModuleD(f4).apply(0, 2, np.zeros(f4.q, dtype=np.int64))
