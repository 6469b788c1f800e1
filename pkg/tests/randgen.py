#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 19:00


"""
测试用的随机自动机，都用固定种子的random.Random生成，结果可复现
"""

import random

from pyxlpta.automata import palib
from pyxlpta.automata.cmlib import TwoCM
from pyxlpta.automata.gptalib import GPTA
from pyxlpta.automata.ptarlib import PTAR, RESET
from pyxlpta.util.mathlib import LinearSet, SemilinearSet

SIGMA = {'σ': 2, 'γ': 1, 'α': 0}


def rand_vector(rng, dim, hi):
    return tuple(rng.randint(0, hi) for _ in range(dim))


def rand_constraint(rng, dim, max_components=2, hi=3):
    comps = []
    for _ in range(rng.randint(0, max_components)):
        periods = [rand_vector(rng, dim, hi) for _ in range(rng.randint(0, 2))]
        comps.append(LinearSet(rand_vector(rng, dim, hi), periods))
    return SemilinearSet(comps, dim)


def rand_pa(rng):
    """≤3个状态、≤5条转移、维数≤2、向量分量≤2"""
    states = [f'p{i}' for i in range(rng.randint(1, 3))]
    dim = rng.randint(1, 2)
    ts = [(rng.choice(states), rng.choice('ab'), rand_vector(rng, dim, 2), rng.choice(states))
          for _ in range(rng.randint(0, 5))]
    finals = rng.sample(states, rng.randint(0, len(states)))
    return palib.PA(states, states[0], finals, ts, rand_constraint(rng, dim))


def rand_linear_ptar(rng, max_transitions=6):
    """≤3个状态、维数≤2、增量≤2的线性PTAR，字母表 σ:2 γ:1 α:0"""
    states = [f'q{i}' for i in range(rng.randint(1, 3))]
    dim = rng.randint(1, 2)
    ts = []
    for _ in range(rng.randint(1, max_transitions)):
        symbol = rng.choice(list(SIGMA))
        k = SIGMA[symbol]
        kids = [(rng.choice(states), RESET) for _ in range(k)]
        if k and rng.random() < 0.7:
            i = rng.randrange(k)
            kids[i] = (kids[i][0], rand_vector(rng, dim, 2))
        ts.append((rng.choice(states), symbol, tuple(kids)))
    return PTAR(states, SIGMA, states[0], ts, rand_constraint(rng, dim))


def rand_gpta(rng):
    """≤2个状态、|D|≤2、维数1"""
    states = [f'q{i}' for i in range(rng.randint(1, 2))]
    dvectors = list(dict.fromkeys(rand_vector(rng, 1, 2) for _ in range(rng.randint(1, 2))))
    ts = []
    for _ in range(rng.randint(1, 6)):
        symbol = rng.choice(list(SIGMA))
        kids = tuple(rng.choice(states) for _ in range(SIGMA[symbol]))
        ts.append((rng.choice(states), symbol, rng.choice(dvectors), kids))
    return GPTA(states, SIGMA, dvectors, states[0], ts, rand_constraint(rng, 1))


def rand_2cm(rng):
    states = [f'c{i}' for i in range(rng.randint(1, 3))]
    ts = [(rng.choice(states), rng.choice(['inc', 'dec', 'zero']), rng.randint(1, 2), rng.choice(states))
          for _ in range(rng.randint(1, 4))]
    return TwoCM(states, states[0], [rng.choice(states)], ts)


def corpus(make, n, seed=0):
    rng = random.Random(seed)
    return [make(rng) for _ in range(n)]
