#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 17:45


# palib和gptalib的member、run_valid等跟ptarlib重名，只按模块导入
from pyxlpta.automata import gptalib, palib
from pyxlpta.automata.filelib import *
from pyxlpta.automata.linearlib import *
