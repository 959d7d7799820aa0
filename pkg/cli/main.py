# -*- coding: utf-8 -*-
"""
功能: Hermitian 码系统编码器的命令行主程序。
      负责解析参数、加载配置与日志系统，并把子命令分派到 `cli.commands` 中的处理函数。

用法:
    python -m cli.main [--config PATH] [--log-level LEVEL] <verb> [options]
    verb: field-info | code-info | encode | check | syndrome | simulate | selftest
退出码: 0 成功；1 参数或输入无效；2 检查/等价性失败。
"""

import logging
import os
import sys

# =============================================================================
# 路径配置与模块导入
# =============================================================================
# __file__ -> cli/main.py
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from cli.common import (EXIT_FAIL, EXIT_USAGE, UsageErrorParser, build_run_config,  # noqa: E402
                        log_and_print_error)
from cli.commands import codec, info, selftest, simulate  # noqa: E402
from hermitian import __version__  # noqa: E402
from hermitian.errors import HermitianError, InvariantViolation  # noqa: E402
from hermitian.settings import load_config, setup_logging  # noqa: E402


def build_parser() -> UsageErrorParser:
    parser = UsageErrorParser(prog="hermit", description="Hermitian 码系统编码器")
    parser.add_argument("--config", help="配置文件路径 (默认取 HERMIT_CONFIG_PATH 或项目根目录 config.json)")
    parser.add_argument("--log-level", help="日志级别，覆盖配置文件")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="verb")
    subparsers.required = True
    # 登记各子命令
    info.register(subparsers)
    codec.register(subparsers)
    simulate.register(subparsers)
    selftest.register(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = load_config(args.config)
        setup_logging(args.log_level or config.logging.level)
        run = build_run_config(args)
        return args.handler(run, config)
    except InvariantViolation as e:
        logging.error(f"内部不变量被破坏: {e}", exc_info=True)
        print(f"FAIL: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (HermitianError, OSError) as e:
        log_and_print_error(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
