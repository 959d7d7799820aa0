# -*- coding: utf-8 -*-
"""
功能: `encode`、`check` 与 `syndrome` 子命令。
"""

import logging

from cli.common import (EXIT_FAIL, EXIT_OK, RunConfig, add_field_arguments, format_table,
                        resolve_code)
from hermitian.array_io import LoadedArray, read_code_array, read_info_vector, write_code_array
from hermitian.encoder import encode, syndromes_direct, syndromes_fast
from hermitian.errors import ParameterError
from hermitian.gf_core import build_field
from hermitian.hermitian_code import make_code
from hermitian.settings import AppConfig


def register(subparsers):
    encode_parser = subparsers.add_parser("encode", help="对信息向量做系统编码")
    add_field_arguments(encode_parser)
    encode_parser.add_argument("--info", required=True, help="信息向量文件 (十六进制或 JSON)，- 表示标准输入")
    encode_parser.add_argument("--out", default="-", help="码阵输出路径，默认标准输出")
    encode_parser.add_argument("--dump-rtilde", action="store_true", help="同时输出内部 r̃")
    encode_parser.set_defaults(handler=run_encode)

    check_parser = subparsers.add_parser("check", help="检查码阵是否为码字")
    add_field_arguments(check_parser, required=False)
    check_parser.add_argument("--array", required=True, help="码阵 JSON 文件")
    check_parser.set_defaults(handler=run_check)

    syndrome_parser = subparsers.add_parser("syndrome", help="打印码阵的伴随式表")
    add_field_arguments(syndrome_parser, required=False)
    syndrome_parser.add_argument("--array", required=True, help="码阵 JSON 文件")
    syndrome_parser.add_argument("--method", choices=["direct", "fast", "both"], default="fast")
    syndrome_parser.set_defaults(handler=run_syndrome)


def _load_for_code(run: RunConfig):
    """读取码阵文件；命令行的 --s / --m 与文件声明不一致时报错，缺省时取文件中的值。"""
    loaded: LoadedArray = read_code_array(run.paths["array"])
    s = run.s if run.s is not None else loaded.field.s
    m = run.m if run.m is not None else loaded.m
    if s != loaded.field.s:
        raise ParameterError(f"--s={s} 与码阵文件中的 s={loaded.field.s} 不一致")
    if m is None:
        raise ParameterError("码阵文件未给出 m，需要指定 --m")
    if loaded.m is not None and m != loaded.m:
        raise ParameterError(f"--m={m} 与码阵文件中的 m={loaded.m} 不一致")
    p = make_code(build_field(s), m)
    return p, loaded


def run_encode(run: RunConfig, config: AppConfig) -> int:
    f, p = resolve_code(run)
    info = read_info_vector(run.paths["info"], f, p.k)
    result = encode(p, info)
    write_code_array(run.paths.get("out", "-"), result.codeword, p.m,
                     result.rtilde if run.dump_rtilde else None)
    return EXIT_OK


def run_check(run: RunConfig, config: AppConfig) -> int:
    p, loaded = _load_for_code(run)
    table = syndromes_fast(p, loaded.array)
    if table.is_zero():
        print("PASS")
        return EXIT_OK
    print("FAIL")
    print(format_table(table.nonzero(), p.field))
    logging.warning(f"码阵 {run.paths['array']} 有 {len(table.nonzero())} 个非零伴随式")
    return EXIT_FAIL


def run_syndrome(run: RunConfig, config: AppConfig) -> int:
    p, loaded = _load_for_code(run)
    method = run.method or "fast"
    tables = {}
    if method in ("direct", "both"):
        tables["direct"] = syndromes_direct(p, loaded.array)
    if method in ("fast", "both"):
        tables["fast"] = syndromes_fast(p, loaded.array)

    for name, table in tables.items():
        print(f"[{name}]")
        print(format_table(table.values, p.field))
    if method == "both" and tables["direct"] != tables["fast"]:
        print("FAIL: direct 与 fast 结果不一致")
        return EXIT_FAIL
    return EXIT_OK
