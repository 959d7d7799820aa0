# -*- coding: utf-8 -*-
"""
功能: `selftest` 子命令，按配置的试验次数运行全部验收活动。

主要功能:
- 列变换: 角块子矩阵非奇异、solve_mixed 随机试验并与稠密消元对照。
- 行码: 随机信息编码后伴随式为 0，流式输出与整体编码一致。
- 伴随式: direct 与 fast 两条路径在随机阵列上逐项一致。
- 编码: 码字判定、信息位回读、r̃ 行成员、线性性、流式与重调用一致。
- 对照: 与高斯消元系统补全逐位一致 (q ≤ 4)。
- 扰动: 单符号扰动后不再是码字。
- 统一码: encode_uniform 与 encode 一致。
- 仿真: 输出与编码器一致，周期数符合闭式；资源计数 Θ(q²)。
"""

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from cli.common import EXIT_FAIL, EXIT_OK, RunConfig, add_field_arguments
from hermitian.arch_sim import ScheduleConfig, resource_report, simulate_encode
from hermitian.encoder import (encode, encode_uniform, is_codeword, row_memberships, syndrome_matrix_check,
                               syndromes_direct, syndromes_fast)
from hermitian.errors import ParameterError
from hermitian.gf_core import build_field
from hermitian.hermitian_code import CodeArray, CodeParams, make_code, make_uniform_code, read_info
from hermitian.oracle import build_H, complete_systematic, solve_dense, verify_information_set
from hermitian.row_codes import encode_row, encode_row_streaming, make_Ei, row_syndromes
from hermitian.settings import AppConfig, CampaignConfig, resolve_seed
from hermitian.transforms import MatrixRole, check_corner_submatrices, matrix_family, solve_mixed

# 资源缩放检查使用的 (s, m = q²)
RESOURCE_SCALING_SUITE = [(1, 4), (2, 16), (3, 64)]
ORACLE_MAX_Q = 4


@dataclass
class CampaignResult:
    name: str
    passed: bool
    trials: int
    detail: str = ""
    skipped: bool = False


def register(subparsers):
    parser = subparsers.add_parser("selftest", help="运行验收活动")
    add_field_arguments(parser, required=False)
    parser.add_argument("--seed", type=int, help="随机种子 (缺省时取 HERMIT_SEED 或配置默认值)")
    parser.set_defaults(handler=run_selftest)


# =============================================================================
# 单项活动
# =============================================================================
def _random_symbols(rng, p: CodeParams, size) -> np.ndarray:
    return rng.integers(0, p.field.q2, size=size, dtype=np.int64)


def _dense_mixed(p: CodeParams, M, l: int, x, v):
    """高斯消元对照: 由前 l 个方程解出 y，再乘出 (x, y) 的像。"""
    f = p.field
    q = f.q
    if l == 0:
        return x, M @ x
    if l == q:
        return solve_dense(M, v), v
    left = f.zeros(q)
    left[:q - l] = x
    left[q - l:] = solve_dense(M[:l, q - l:], v - M[:l, :q - l] @ x)
    return left, M @ left


def campaign_transforms(p: CodeParams, rng, counts: CampaignConfig) -> CampaignResult:
    f = p.field
    family = matrix_family(f)
    failures = [f"corner l={l}" for l in range(1, f.q + 1) if not check_corner_submatrices(f, l)]
    for _ in range(counts.solve_mixed_trials):
        role = MatrixRole.A if rng.integers(2) == 0 else MatrixRole.APRIME
        M = family.forward(role)
        l = int(rng.integers(0, f.q + 1))
        x = f.array(_random_symbols(rng, p, f.q - l))
        v = f.array(_random_symbols(rng, p, l))
        result = solve_mixed(f, M, l, x, v)
        if not (np.array_equal(M.entries @ result.left_full, result.right_full)
                and np.array_equal(result.left_full[:f.q - l], x)
                and np.array_equal(result.right_full[:l], v)):
            failures.append(f"solve_mixed role={role.value} l={l}")
            continue
        dense_left, dense_right = _dense_mixed(p, M.entries, l, x, v)
        if not (np.array_equal(result.left_full, dense_left) and np.array_equal(result.right_full, dense_right)):
            failures.append(f"solve_dense role={role.value} l={l}")
    return CampaignResult("transforms", not failures, counts.solve_mixed_trials, "; ".join(failures[:5]))


def campaign_row_codes(p: CodeParams, rng, counts: CampaignConfig) -> CampaignResult:
    failures = []
    for i in range(p.q):
        E = make_Ei(p, i)
        for _ in range(counts.row_code_infos):
            info = _random_symbols(rng, p, E.dim)
            word = encode_row(E, info)
            streamed = list(encode_row_streaming(E, info))
            if (np.any(row_syndromes(E, word)) or streamed != [int(v) for v in word]
                    or not np.array_equal(word[:E.dim].view(np.ndarray), info)):
                failures.append(f"E_{i}")
                break
    return CampaignResult("row_codes", not failures, counts.row_code_infos * p.q, ", ".join(failures))


def campaign_syndromes(p: CodeParams, rng, counts: CampaignConfig) -> CampaignResult:
    f = p.field
    mismatches = 0
    for _ in range(counts.syndrome_arrays):
        r = CodeArray(f, _random_symbols(rng, p, (f.q, f.q2)))
        if syndromes_direct(p, r) != syndromes_fast(p, r):
            mismatches += 1
    return CampaignResult("syndromes", mismatches == 0, counts.syndrome_arrays, f"{mismatches} 个不一致")


def campaign_encode(p: CodeParams, rng, counts: CampaignConfig) -> CampaignResult:
    f = p.field
    failures = 0
    previous = None
    for trial in range(counts.encode_infos):
        info = _random_symbols(rng, p, p.k)
        result = encode(p, info)
        c = result.codeword
        ok = (is_codeword(p, c)
              and np.array_equal(read_info(p, c).view(np.ndarray), info)
              and all(row_memberships(p, result.rtilde))
              and syndrome_matrix_check(p, c, result.rtilde))
        if trial < 5:
            ok = ok and encode(p, info, streaming=False).codeword == c
        if previous is not None and trial < 20:
            prev_info, prev_c = previous
            summed = (f.array(prev_info) + f.array(info)).view(np.ndarray)
            ok = ok and encode(p, summed).codeword == CodeArray(f, prev_c.entries + c.entries)
        previous = (info, c)
        failures += not ok
    return CampaignResult("encode", failures == 0, counts.encode_infos, f"{failures} 个失败")


def campaign_oracle(p: CodeParams, rng, counts: CampaignConfig) -> CampaignResult:
    if p.q > ORACLE_MAX_Q:
        return CampaignResult("oracle", True, 0, f"q > {ORACLE_MAX_Q}，跳过", skipped=True)
    H = build_H(p)
    if not verify_information_set(p, H):
        return CampaignResult("oracle", True, 0, "信息位补集不满秩，跳过等价性检查", skipped=True)
    failures = 0
    reversed_order = list(range(len(p.basis)))[::-1]
    for trial in range(counts.oracle_infos):
        info = _random_symbols(rng, p, p.k)
        expected = complete_systematic(p, info, H=H)
        ok = encode(p, info).codeword == expected
        if trial == 0:
            ok = ok and complete_systematic(p, info, row_order=reversed_order, H=H) == expected
        failures += not ok
    return CampaignResult("oracle", failures == 0, counts.oracle_infos, f"{failures} 个不一致")


def campaign_corruption(p: CodeParams, rng, counts: CampaignConfig) -> CampaignResult:
    f = p.field
    undetected = 0
    for _ in range(counts.corruption_trials):
        c = encode(p, _random_symbols(rng, p, p.k)).codeword
        row, col = int(rng.integers(f.q)), int(rng.integers(f.q2))
        c.entries[row, col] += f.GF(int(rng.integers(1, f.q2)))
        undetected += is_codeword(p, c)
    return CampaignResult("corruption", undetected == 0, counts.corruption_trials, f"{undetected} 个未检出")


def campaign_uniform(p: CodeParams, rng, counts: CampaignConfig) -> CampaignResult:
    f = p.field
    uniform = make_uniform_code(f, p.a_hat[-1])
    dim = uniform.row_dim(0)
    trials = max(1, counts.encode_infos // 10)
    failures = 0
    for _ in range(trials):
        d = _random_symbols(rng, p, (f.q, dim))
        c = encode_uniform(uniform, d)
        ok = (np.array_equal(c.to_ints()[:, :dim], d)
              and syndromes_direct(uniform, c).is_zero()
              and encode(uniform, d.reshape(-1)).codeword == c)
        failures += not ok
    return CampaignResult("uniform", failures == 0, trials, f"â={p.a_hat[-1]}，{failures} 个失败")


def campaign_simulate(p: CodeParams, rng, counts: CampaignConfig, config: AppConfig) -> CampaignResult:
    configs = [ScheduleConfig.preset(p.q, name, config, model_feedback_hazard=hazard)
               for name in config.architecture_parameters.presets for hazard in (False, True)]
    failures = 0
    for _ in range(counts.simulate_infos):
        info = _random_symbols(rng, p, p.k)
        reference = encode(p, info).codeword
        for cfg in configs:
            # 周期数与闭式不一致时 simulate_encode 直接抛出异常
            failures += simulate_encode(p, info, cfg).codeword != reference
    return CampaignResult("simulate", failures == 0, counts.simulate_infos * len(configs), f"{failures} 个不一致")


def campaign_resources(config: AppConfig) -> CampaignResult:
    bound = config.architecture_parameters.resource_bound_constant
    reports = [resource_report(make_code(build_field(s), m), bound) for s, m in RESOURCE_SCALING_SUITE]
    ratios = [report.ratio for report in reports]
    growth = [b.total / a.total for a, b in zip(reports, reports[1:])]
    ok = all(r.within_bound for r in reports) and all(3 <= g <= 5 for g in growth)
    detail = ", ".join(f"q={r.q}: {r.total} ({ratio:.2f}·q²)" for r, ratio in zip(reports, ratios))
    return CampaignResult("resources", ok, len(reports), detail)


# =============================================================================
# 调度
# =============================================================================
def _campaigns_for(p: CodeParams, rng, counts: CampaignConfig,
                   config: AppConfig) -> list[Callable[[], CampaignResult]]:
    return [
        lambda: campaign_transforms(p, rng, counts),
        lambda: campaign_row_codes(p, rng, counts),
        lambda: campaign_syndromes(p, rng, counts),
        lambda: campaign_encode(p, rng, counts),
        lambda: campaign_oracle(p, rng, counts),
        lambda: campaign_corruption(p, rng, counts),
        lambda: campaign_uniform(p, rng, counts),
        lambda: campaign_simulate(p, rng, counts, config),
    ]


def _print_result(label: str, result: CampaignResult):
    status = "SKIP" if result.skipped else ("PASS" if result.passed else "FAIL")
    suffix = f" ({result.detail})" if result.detail else ""
    print(f"[{status}] {label} {result.name}: {result.trials} 次{suffix}")


def run_selftest(run: RunConfig, config: AppConfig) -> int:
    if (run.s is None) != (run.m is None):
        raise ParameterError("--s 与 --m 需同时指定或同时省略")
    suite = [(run.s, run.m)] if run.s is not None else list(config.campaign_parameters.suite)
    seed = resolve_seed(run.seed, config)
    counts = config.campaign_parameters
    logging.info(f"开始自检: 参数组 {suite}，种子 {seed}")

    results: list[CampaignResult] = []
    for s, m in suite:
        p = make_code(build_field(s), m)
        rng = np.random.default_rng(seed)
        for campaign in _campaigns_for(p, rng, counts, config):
            result = campaign()
            _print_result(f"s={s} m={m}", result)
            results.append(result)

    result = campaign_resources(config)
    _print_result("q∈{2,4,8}", result)
    results.append(result)

    failed = [r for r in results if not r.passed]
    print(f"{'PASS' if not failed else 'FAIL'}: {len(results) - len(failed)}/{len(results)} 项通过 (seed={seed})")
    return EXIT_OK if not failed else EXIT_FAIL
