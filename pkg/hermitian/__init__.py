# -*- coding: utf-8 -*-
"""
功能: Hermitian 码系统编码库。
      提供 GF(q²) 塔域运算、Hermitian 码参数、列变换矩阵、扩展循环行码、
      系统编码器、暴力校验基准 (oracle) 以及编码器结构的周期级模型。
"""

__version__ = "1.0.0"
