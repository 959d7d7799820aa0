# -*- coding: utf-8 -*-
"""
功能: 统一的异常类型。
      参数错误 (用户可修正) 与内部不变量被破坏 (实现缺陷) 严格区分，
      命令行层据此决定退出码。
"""


class HermitianError(Exception):
    """本库所有异常的基类。"""


class ParameterError(HermitianError, ValueError):
    """参数越界、长度或形状不匹配。消息中应写明失败的边界条件。"""


class ScheduleConfigError(ParameterError):
    """结构模拟的时序配置彼此矛盾。"""


class ArrayFormatError(HermitianError, ValueError):
    """码字阵列或信息文件格式错误。"""


class InvariantViolation(HermitianError, RuntimeError):
    """闭式恒等式不成立、出现引理保证不会出现的奇异矩阵等内部错误。"""
