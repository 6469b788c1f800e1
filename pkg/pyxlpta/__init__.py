#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 09:30


"""
Parikh树自动机（PTA/PTAR/GPTA）工具库

注意为了避免循环嵌套引用，代码逻辑清晰，请尽量不要在此文件写代码

分层：
    util：日志、异常、文本读取、半线性集与非负整数求解
    automata：树项、Parikh串自动机、全局/非全局Parikh树自动机、线性PTAR判空、双计数器机编码
    tools：命令行入口
"""
