# -*- coding: utf-8 -*-
"""
功能: 码阵与信息向量的文件格式。
      所有符号以多项式基整数的小写十六进制表示，位宽固定为 ceil(2s/4)。

主要功能:
- `CodeArrayFile`: 码阵 JSON 文件模型 {"s", "m", "rows", 可选 "rtilde"}。
- `write_code_array` / `read_code_array`: 码阵文件读写 (路径为 "-" 时使用标准输入输出)。
- `read_info_vector`: 信息向量输入，支持十六进制符号流、JSON 数组或 {"info": [...]}。
"""

import json
import logging
import sys
from dataclasses import dataclass

from pydantic import BaseModel, ValidationError

from hermitian.errors import ArrayFormatError, HermitianError
from hermitian.gf_core import Element, FieldSpec, build_field
from hermitian.hermitian_code import CodeArray


class CodeArrayFile(BaseModel):
    s: int
    m: int | None = None
    rows: list[list[str]]
    rtilde: list[list[str]] | None = None


@dataclass(eq=False)
class LoadedArray:
    field: FieldSpec
    m: int | None
    array: CodeArray
    rtilde: CodeArray | None = None


# =============================================================================
# 符号编码
# =============================================================================
def format_symbol(f: FieldSpec, value: Element) -> str:
    return f"{int(value):0{f.hex_width}x}"


def parse_symbol(f: FieldSpec, token) -> Element:
    """解析一个符号，接受十六进制字符串或整数。"""
    if isinstance(token, bool):
        raise ArrayFormatError(f"无效的符号: {token!r}")
    if isinstance(token, int):
        value = token
    else:
        text = str(token).strip().lower()
        if text.startswith("0x"):
            text = text[2:]
        try:
            value = int(text, 16)
        except ValueError as e:
            raise ArrayFormatError(f"无效的十六进制符号: {token!r}") from e
    if not 0 <= value < f.q2:
        raise ArrayFormatError(f"符号 {token!r} 超出 GF({f.q2}) 的编码范围")
    return value


def _rows_to_hex(array: CodeArray) -> list[list[str]]:
    f = array.field
    return [[format_symbol(f, v) for v in row] for row in array.to_ints()]


def _rows_from_hex(f: FieldSpec, rows: list[list[str]], what: str) -> CodeArray:
    if len(rows) != f.q or any(len(row) != f.q2 for row in rows):
        shape = (len(rows), sorted({len(row) for row in rows}))
        raise ArrayFormatError(f"{what} 形状应为 {f.q} 行 × {f.q2} 列，实际为 {shape}")
    return CodeArray(f, [[parse_symbol(f, token) for token in row] for row in rows])


# =============================================================================
# 文件读写
# =============================================================================
def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            return fh.read()
    except OSError as e:
        raise ArrayFormatError(f"无法读取文件 {path}: {e}") from e


def dump_code_array(array: CodeArray, m: int | None, rtilde: CodeArray | None = None) -> str:
    payload = CodeArrayFile(
        s=array.field.s, m=m, rows=_rows_to_hex(array),
        rtilde=_rows_to_hex(rtilde) if rtilde is not None else None,
    )
    return payload.model_dump_json(exclude_none=True, indent=2)


def write_code_array(path: str, array: CodeArray, m: int | None, rtilde: CodeArray | None = None):
    """把码阵写为 JSON；path 为 "-" 时写到标准输出。"""
    text = dump_code_array(array, m, rtilde)
    if path == "-":
        sys.stdout.write(text + "\n")
        return
    with open(path, 'w', encoding='utf-8') as fh:
        fh.write(text + "\n")
    logging.info(f"码阵已写入: {path}")


def read_code_array(path: str) -> LoadedArray:
    """
    读取码阵 JSON 文件。

    返回:
        LoadedArray: 文件声明的域、m、码阵以及可选的 r̃。
    """
    text = _read_text(path)
    try:
        payload = CodeArrayFile.model_validate_json(text)
    except ValidationError as e:
        raise ArrayFormatError(f"码阵文件格式错误 ({path}): {e}") from e
    try:
        f = build_field(payload.s)
    except HermitianError as e:
        raise ArrayFormatError(f"码阵文件中的 s 无效: {e}") from e
    array = _rows_from_hex(f, payload.rows, "rows")
    rtilde = _rows_from_hex(f, payload.rtilde, "rtilde") if payload.rtilde is not None else None
    return LoadedArray(field=f, m=payload.m, array=array, rtilde=rtilde)


def parse_info_text(f: FieldSpec, text: str, k: int | None = None) -> list[Element]:
    """
    解析信息向量文本:
    - JSON 数组 (元素为十六进制字符串或整数)，或 {"info": [...]}；
    - 以空白分隔的十六进制符号；
    - 不含空白的连续十六进制串 (每 hex_width 个字符一个符号)。
    """
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ArrayFormatError(f"信息向量 JSON 无法解析: {e}") from e
        if isinstance(data, dict):
            if "info" not in data:
                raise ArrayFormatError("信息向量 JSON 对象缺少 'info' 键")
            data = data["info"]
        if not isinstance(data, list):
            raise ArrayFormatError("信息向量必须是数组")
        tokens = data
    else:
        tokens = stripped.split()
        width = f.hex_width
        if len(tokens) == 1 and k is not None and k > 1 and len(tokens[0]) == k * width:
            tokens = [tokens[0][t:t + width] for t in range(0, len(tokens[0]), width)]

    values = [parse_symbol(f, token) for token in tokens]
    if k is not None and len(values) != k:
        raise ArrayFormatError(f"信息向量长度应为 k={k}，实际为 {len(values)}")
    return values


def read_info_vector(path: str, f: FieldSpec, k: int | None = None) -> list[Element]:
    return parse_info_text(f, _read_text(path), k)
