#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 09:40


"""
调试相关的基础功能，所有模块都从这里 import *

日志统一挂在 'pyxlpta' 这个logger下，每个模块用 get_logger(__name__) 拿子logger
日志级别默认读环境变量 PYXLPTA_LOGLEVEL，命令行 -v 会再调低
"""

import collections
import functools
import inspect
import itertools
import logging
import os
import re
import sys

from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple


____section_1_logging = """
日志
"""


LOGGER_NAME = 'pyxlpta'
LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


def get_logger(name=None):
    """获得包内的logger

    >>> get_logger('pyxlpta.automata.palib').name
    'pyxlpta.automata.palib'
    >>> get_logger('palib').name
    'pyxlpta.palib'
    >>> get_logger().name
    'pyxlpta'
    """
    if not name or name == LOGGER_NAME:
        return logging.getLogger(LOGGER_NAME)
    if not name.startswith(LOGGER_NAME + '.'):
        name = f'{LOGGER_NAME}.{name}'
    return logging.getLogger(name)


def config_logging(level=None, stream=None):
    """配置包logger的输出级别和位置（默认stderr）

    :param level: 'DEBUG'、'INFO'这类字符串，或logging里的整数值
        不输入时读环境变量 PYXLPTA_LOGLEVEL，再没有就是 WARNING
    """
    if level is None:
        level = os.environ.get('PYXLPTA_LOGLEVEL', 'WARNING')
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.WARNING)

    logger = get_logger()
    logger.setLevel(level)
    # 重复配置时不要叠加handler，否则每条日志会输出多遍
    if not logger.handlers:
        handler = logging.StreamHandler(stream or sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    else:
        for handler in logger.handlers:
            handler.setLevel(level)
    return logger


def typename(c):
    """简化输出的type类型

    >>> typename(123)
    'int'
    >>> typename((1, 2))
    'tuple'
    """
    return type(c).__name__


def dprint(*args, **kwargs):
    """在DEBUG级别输出调用位置和变量值

    一般在raise之前调用，把出错时的现场留到日志里
    """
    frame = inspect.currentframe().f_back
    where = f'{os.path.basename(frame.f_code.co_filename)}/{frame.f_lineno}'
    ls = [f'{x!r}<{typename(x)}>' for x in args]
    ls += [f'{k}={v!r}<{typename(v)}>' for k, v in kwargs.items()]
    get_logger().debug('[%s] %s', where, '  '.join(ls))


____section_2_errors = """
异常类型

统一继承 PtaError(ValueError)，命令行据此决定退出码
"""


class PtaError(ValueError):
    """本库所有输入、语义错误的基类"""


class PositionError(PtaError):
    """位置不在树里（position-out-of-range）"""


class ArityError(PtaError):
    """秩不匹配：树不满足字母表的秩、上下文变量个数不对等（arity-mismatch、ill-ranked-tree）"""


class PathError(PtaError):
    """不是合法的路径（invalid-path）"""


class DimensionError(PtaError):
    """向量维数不一致（dimension-mismatch）"""


class ShapeError(PtaError):
    """标注树、run和原树的形状对不上（shape-mismatch）"""


class NoDecompositionError(PtaError):
    """交换引理找不到分解，记录证明里的阈值l、p供诊断"""

    def __init__(self, message, l=None, p=None):
        super().__init__(message)
        self.l = l
        self.p = p


class InapplicableTransition(PtaError):
    """转移的源状态或秩跟当前配置不匹配"""


class LeafConstraintViolated(PtaError):
    """叶子转移要求计数器在C里，但不在"""


class NotLinearError(PtaError):
    """要求线性PTAR，但输入不是"""


class FormatError(PtaError):
    """文件或树文本格式错误

    :param lineno: 出错的行号，从1开始编号；None表示不是按行的输入
    """

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f'line {lineno}: {message}'
        super().__init__(message)
        self.lineno = lineno
