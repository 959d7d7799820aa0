import json
import sys
from pathlib import Path

import numpy as np
import pytest


def _project_root() -> Path:
    return Path(__file__).resolve().parent.parent


def _ensure_syspath():
    root = str(_project_root())
    if root not in sys.path:
        sys.path.insert(0, root)


_ensure_syspath()

from hermitian.gf_core import build_field  # noqa: E402
from hermitian.hermitian_code import make_code  # noqa: E402


@pytest.fixture(scope="session")
def f2():
    return build_field(1)


@pytest.fixture(scope="session")
def f4():
    return build_field(2)


@pytest.fixture(scope="session")
def code_q2(f2):
    return make_code(f2, 4)


@pytest.fixture(scope="session")
def code_q4(f4):
    return make_code(f4, 19)


@pytest.fixture()
def rng():
    return np.random.default_rng(7)


@pytest.fixture()
def small_config(tmp_path, monkeypatch):
    """
    写一个试验次数很小的配置文件，并通过 HERMIT_CONFIG_PATH 指向它。
    """
    config = {
        "campaign_parameters": {
            "default_seed": 11,
            "syndrome_arrays": 5,
            "encode_infos": 10,
            "oracle_infos": 5,
            "solve_mixed_trials": 20,
            "corruption_trials": 5,
            "simulate_infos": 2,
            "row_code_infos": 5,
            "suite": [[1, 4]],
        },
        "logging": {"level": "WARNING"},
    }
    path = tmp_path / "config.json"
    path.write_text(json.dumps(config), encoding="utf-8")
    monkeypatch.setenv("HERMIT_CONFIG_PATH", str(path))
    monkeypatch.delenv("HERMIT_SEED", raising=False)
    return path
