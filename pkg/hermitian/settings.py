# -*- coding: utf-8 -*-
"""
功能: 配置与日志管理模块。
      负责解析 config.json、把配置映射为 pydantic 模型，以及统一的日志系统初始化。

主要功能:
- `resolve_config_path`: 环境变量 HERMIT_CONFIG_PATH 优先，否则回退到项目根目录的 config.json。
- `load_config`: 读取并校验配置，`*_comment` 键自动忽略。
- `setup_logging`: 按配置的级别重新配置根日志器。
- `resolve_seed`: 随机种子的解析顺序为 --seed > HERMIT_SEED > 配置默认值。
"""

import json
import logging
import os
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from hermitian.errors import ParameterError

# 获取项目根目录
# __file__ -> hermitian/settings.py
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DEFAULT_CONFIG_PATH = os.path.join(project_root, 'config.json')
CONFIG_PATH_ENV_VAR = 'HERMIT_CONFIG_PATH'
SEED_ENV_VAR = 'HERMIT_SEED'

LOG_FORMAT = '%(asctime)s - %(levelname)s - [%(module)s:%(lineno)d] - %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'


# =============================================================================
# 数据模型 (Pydantic)
# =============================================================================
class _Section(BaseModel):
    model_config = ConfigDict(extra="ignore")


class LoggingConfig(_Section):
    level: str = "INFO"


class CampaignConfig(_Section):
    default_seed: int = 7
    syndrome_arrays: int = Field(1000, ge=1)
    encode_infos: int = Field(1000, ge=1)
    oracle_infos: int = Field(200, ge=1)
    solve_mixed_trials: int = Field(1000, ge=1)
    corruption_trials: int = Field(100, ge=1)
    simulate_infos: int = Field(20, ge=1)
    row_code_infos: int = Field(250, ge=1)
    # 未指定 --s/--m 时 selftest 依次运行的 (s, m)
    suite: list[tuple[int, int]] = Field(default_factory=lambda: [(1, 4), (2, 16), (2, 19), (2, 23)])


class PresetConfig(_Section):
    # "q" 表示取当前域的 q
    column_initiation_interval: int | Literal["q"]
    moduleC_rate_divisor: int | Literal["q"]


class ArchitectureConfig(_Section):
    resource_bound_constant: int = Field(6, gt=0)
    model_feedback_hazard: bool = False
    presets: dict[str, PresetConfig] = Field(default_factory=lambda: {
        "paper": PresetConfig(column_initiation_interval=1, moduleC_rate_divisor=1),
        "serial": PresetConfig(column_initiation_interval="q", moduleC_rate_divisor="q"),
    })


class AppConfig(_Section):
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    campaign_parameters: CampaignConfig = Field(default_factory=CampaignConfig)
    architecture_parameters: ArchitectureConfig = Field(default_factory=ArchitectureConfig)


# =============================================================================
# 配置加载
# =============================================================================
def resolve_config_path() -> str:
    """
    解析当前应使用的配置文件路径。
    若环境变量 HERMIT_CONFIG_PATH 存在，则优先使用该路径；否则回退到默认 config.json。
    """
    return os.environ.get(CONFIG_PATH_ENV_VAR, DEFAULT_CONFIG_PATH)


def load_config(path: str | None = None) -> AppConfig:
    """
    读取配置文件并返回校验后的配置对象。

    参数:
        path (str | None): 显式指定的配置路径；为 None 时按 `resolve_config_path` 解析。

    返回:
        AppConfig: 配置对象。文件不存在时返回全部默认值。
    """
    config_path = path or resolve_config_path()
    if not os.path.exists(config_path):
        logging.warning(f"配置文件不存在: {config_path}，使用默认配置。")
        return AppConfig()
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            raw = json.load(f)
        config = AppConfig.model_validate(raw)
    except (json.JSONDecodeError, ValidationError) as e:
        logging.error(f"加载配置文件失败: {e}", exc_info=True)
        raise ParameterError(f"配置文件无效: {config_path}: {e}") from e
    logging.info(f"成功加载配置文件: {config_path}")
    return config


def resolve_seed(cli_seed: int | None, config: AppConfig | None = None) -> int:
    """--seed 优先，其次环境变量 HERMIT_SEED，最后是配置中的默认种子。"""
    if cli_seed is not None:
        return cli_seed
    env_seed = os.environ.get(SEED_ENV_VAR)
    if env_seed is not None:
        try:
            return int(env_seed, 0)
        except ValueError as e:
            raise ParameterError(f"环境变量 {SEED_ENV_VAR} 不是整数: {env_seed!r}") from e
    return (config or AppConfig()).campaign_parameters.default_seed


# =============================================================================
# 日志系统配置
# =============================================================================
def setup_logging(log_level_str: str):
    log_level = getattr(logging, log_level_str.upper(), logging.INFO)
    for handler in logging.root.handlers[:]:
        logging.root.removeHandler(handler)
    logging.basicConfig(
        level=log_level,
        format=LOG_FORMAT,
        datefmt=LOG_DATEFMT
    )
    logging.debug(f"日志系统已配置，级别为: {log_level_str}")
