# -*- coding: utf-8 -*-
"""命令行入口包: `python -m cli.main <verb> ...`。"""
