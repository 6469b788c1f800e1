#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17


"""
一些有用的小工具

cli: 命令行入口，pyxlpta validate/classify/member/empty/...
"""
