#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 09:31

"""
一些通用的底层组件

debuglib: 日志、dprint调试输出、异常类型
textlib: 读文件（自动识别编码）、表格化输出、树形缩进输出
mathlib: 向量、线性集、半线性集，以及非负整数线性方程组的求解
"""
