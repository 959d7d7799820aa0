# -*- coding: utf-8 -*-
"""
功能: `field-info` 与 `code-info` 子命令，打印域常量与码参数。
"""

from cli.common import EXIT_OK, RunConfig, add_field_arguments, print_json, resolve_code
from hermitian.errors import ParameterError
from hermitian.gf_core import build_field, field_summary
from hermitian.hermitian_code import staircase_art
from hermitian.settings import AppConfig


def register(subparsers):
    field_parser = subparsers.add_parser("field-info", help="打印 GF(q²) 的模多项式与 ε、γ、y0")
    add_field_arguments(field_parser, with_m=False)
    field_parser.set_defaults(handler=run_field_info)

    code_parser = subparsers.add_parser("code-info", help="打印 C(m) 的 n、k、g、â、b̂ 与信息位阶梯")
    add_field_arguments(code_parser)
    code_parser.add_argument("--json", action="store_true", help="以 JSON 输出")
    code_parser.set_defaults(handler=run_code_info)


def run_field_info(run: RunConfig, config: AppConfig) -> int:
    if run.s is None:
        raise ParameterError("需要指定 --s")
    summary = field_summary(build_field(run.s))
    for key, value in summary.items():
        print(f"{key}: {value}")
    return EXIT_OK


def run_code_info(run: RunConfig, config: AppConfig) -> int:
    f, p = resolve_code(run)
    if run.json_output:
        print_json({
            "s": f.s, "q": f.q, "m": p.m, "n": p.n, "k": p.k, "g": p.g,
            "a_hat": list(p.a_hat), "info_len": list(p.info_len), "b_hat": list(p.b_hat),
            "basis": [list(pair) for pair in p.basis],
        })
        return EXIT_OK

    print(f"q={f.q}, m={p.m}")
    print(f"n={p.n} k={p.k} g={p.g}")
    print(f"a_hat: {' '.join(str(a) for a in p.a_hat)}")
    print(f"info_len: {' '.join(str(a) for a in p.info_len)}")
    print(f"b_hat: {' '.join(str(b) for b in p.b_hat)}")
    print(staircase_art(p))
    return EXIT_OK
