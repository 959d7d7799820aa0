# -*- coding: utf-8 -*-
"""
功能: 各子命令模块。每个模块提供 `register(subparsers)`，在其中登记参数与处理函数。
"""
