#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 11:00


"""
树项与各种Parikh自动机

treelib → palib / gptalib / ptarlib → linearlib / cmlib → filelib
"""
