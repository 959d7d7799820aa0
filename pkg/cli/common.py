# -*- coding: utf-8 -*-
"""
功能: 子命令共用的工具: 退出码、运行参数模型、域/码参数解析与输出格式化。
"""

import argparse
import json
import logging
import sys
from typing import Literal

from pydantic import BaseModel, Field, ValidationError

from hermitian.errors import ParameterError
from hermitian.gf_core import MAX_S, FieldSpec, build_field
from hermitian.hermitian_code import CodeParams, make_code

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAIL = 2


class UsageErrorParser(argparse.ArgumentParser):
    """参数错误时打印用法并以退出码 1 结束。"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class RunConfig(BaseModel):
    verb: str
    s: int | None = Field(None, ge=1, le=MAX_S)
    m: int | None = None
    paths: dict[str, str] = Field(default_factory=dict)
    seed: int | None = None
    preset: str | None = None
    method: Literal["direct", "fast", "both"] | None = None
    json_output: bool = False
    dump_rtilde: bool = False
    hazard: bool = False


def build_run_config(args: argparse.Namespace) -> RunConfig:
    path_keys = ("info", "out", "array", "trace")
    try:
        return RunConfig(
            verb=args.command,
            s=getattr(args, "s", None),
            m=getattr(args, "m", None),
            paths={key: getattr(args, key) for key in path_keys if getattr(args, key, None)},
            seed=getattr(args, "seed", None),
            preset=getattr(args, "preset", None),
            method=getattr(args, "method", None),
            json_output=getattr(args, "json", False),
            dump_rtilde=getattr(args, "dump_rtilde", False),
            hazard=getattr(args, "hazard", False),
        )
    except ValidationError as e:
        raise ParameterError(f"命令参数无效: {e}") from e


def add_field_arguments(parser: argparse.ArgumentParser, required: bool = True, with_m: bool = True):
    parser.add_argument("--s", type=int, required=required, help="子域指数 s，q = 2^s")
    if with_m:
        parser.add_argument("--m", type=int, required=required, help="极点阶上界 m")


def resolve_code(run: RunConfig) -> tuple[FieldSpec, CodeParams]:
    if run.s is None or run.m is None:
        raise ParameterError("需要同时指定 --s 与 --m")
    f = build_field(run.s)
    return f, make_code(f, run.m)


def format_table(rows: dict[tuple[int, int], int], f: FieldSpec) -> str:
    width = f.hex_width
    return "\n".join(f"S({a},{b}) = {value:0{width}x}" for (a, b), value in rows.items())


def print_json(payload):
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def log_and_print_error(message: str):
    logging.error(message)
    print(f"错误: {message}", file=sys.stderr)
