#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 10:05


"""
文本相关功能

readtext: 读取自动机描述文件，先试utf8，失败再用chardet猜编码
print_full_table: 把记录列表用pandas渲染成完整的表格字符串
dfs_base: 树形结构的缩进展示
"""

import pathlib

import chardet
import pandas as pd

from pyxlpta.util.debuglib import *


____section_1_ensure_content = """
从文件读取文本数据
"""


def get_encoding(bstr):
    """输入二进制字符串，返回字符编码

    >>> get_encoding('σ(α,α)'.encode('utf8'))
    'utf8'
    """
    try:
        bstr.decode('utf8')
        return 'utf8'
    except UnicodeDecodeError:
        pass
    encoding = chardet.detect(bstr)['encoding']
    # gb2312能识别的字符太少，统一放宽到gbk
    if encoding and encoding.lower() == 'gb2312':
        encoding = 'gbk'
    return encoding or 'utf8'


def readtext(filename, encoding=None):
    """读取普通的文本文件

    文件不存在、是目录或者没权限时抛出 OSError，由上层决定怎么报错
    """
    bstr = pathlib.Path(filename).read_bytes()
    if not encoding:
        encoding = get_encoding(bstr)
    s = bstr.decode(encoding=encoding, errors='replace')
    if s.startswith('\ufeff'):
        s = s[1:]
    if '\r' in s:
        s = s.replace('\r\n', '\n')
    return s


def ensure_content(ob, encoding=None):
    """
    :param ob:
        存在的文件名(str或Path)：读取文件的内容返回
        有read可调用成员方法：返回f.read()
        其他字符串：返回原值
    """
    if hasattr(ob, 'read'):
        return ob.read()
    elif isinstance(ob, pathlib.Path) or (isinstance(ob, str) and '\n' not in ob and pathlib.Path(ob).is_file()):
        return readtext(ob, encoding)
    else:
        return ob


____section_2_table = """
表格、树的文本展示
"""


def print_full_table(records, columns=None):
    """把记录渲染成不截断的表格文本

    >>> print(print_full_table([(0, 'q0'), (1, 'q0 q1')], columns=['i', 'U']))
       i      U
    0  0     q0
    1  1  q0 q1
    """
    df = records
    if isinstance(df, (list, tuple)):
        df = pd.DataFrame.from_records(df, columns=columns)
    if len(df) < 1:
        return ''
    with pd.option_context('display.max_rows', None,
                           'display.max_columns', None,
                           'display.width', None,
                           'display.max_colwidth', 10 ** 6,
                           'display.unicode.east_asian_width', True,
                           ):
        return df.to_string()


def dfs_base(node, *, child_generator, mystr=str, prefix='    '):
    """输入一个节点node，按dfs顺序缩进展示整棵树

    :param child_generator: 子节点生成函数，输入一个节点，返回子节点列表
    :param mystr: 单个节点的字符串化方法（不含缩进）
    :param prefix: 每层的缩进

    >>> tree = ('a', [('b', []), ('c', [('d', [])])])
    >>> print(dfs_base(tree, child_generator=lambda x: x[1], mystr=lambda x: x[0], prefix='  '))
    a
      b
      c
        d
    """
    ls = []

    def inner(x, depth):
        ls.append(prefix * depth + mystr(x))
        for y in child_generator(x):
            inner(y, depth + 1)

    inner(node, 0)
    return '\n'.join(ls)
