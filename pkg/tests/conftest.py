#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 19:00


import pytest
from hypothesis import settings

from pyxlpta.automata.filelib import load_fixture

# 判定过程要调scipy，单个样例可能比较慢，不设deadline
settings.register_profile('pyxlpta', max_examples=60, deadline=None)
settings.load_profile('pyxlpta')


@pytest.fixture
def fixture():
    """按文件名读取随包附带的样例自动机"""
    return load_fixture
