#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 16:50


"""
两计数器机（2CM）以及把它编码成3维PTA的构造

2CM的计数器可以减，PTA的计数器只能加，所以PTA用三个计数器 (s1, s2, l) 表示 (s1-l, s2-l)，
每个 (j, j, j) 都代表 (0, 0)：
    inc_i      q → γ(q'(d))，d = (2,1,1) 或 (1,2,1)
    dec_i      q → σ(lt_i(d), q'(d))，d = (0,1,1) 或 (1,0,1)；左孩子检查 l ≤ s_i
    zero_i     q → σ(eq_i(0,0,0), q'(0,0,0))；左孩子检查 s_i = l
    终态       q_f → α
左孩子里的四个检查状态 lt1 lt2 eq1 eq2 只会读γ，最后读α时计数器必须落在 C = {(i,i,i)}
"""

from typing import NamedTuple

from pyxlpta.automata.ptarlib import *

logger = get_logger(__name__)

CM_OPS = ('inc', 'dec', 'zero')

# 检查状态的γ环
GADGETS = {
    'lt1': ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
    'lt2': ((1, 0, 0), (0, 0, 1), (0, 1, 1)),
    'eq1': ((1, 0, 1), (0, 1, 0)),
    'eq2': ((0, 1, 1), (1, 0, 0)),
}

CM_ALPHABET = RankedAlphabet({'σ': 2, 'γ': 1, 'α': 0})


def neg(i):
    """另一个计数器的编号

    >>> neg(1), neg(2)
    (2, 1)
    """
    return 3 - i


class CmTransition(NamedTuple):
    src: Hashable
    op: str
    counter: int
    dst: Hashable

    def __str__(self):
        return f'{self.src} {self.op}{self.counter} {self.dst}'


class CmConfig(NamedTuple):
    state: Hashable
    k1: int = 0
    k2: int = 0

    def counter(self, i):
        return self.k1 if i == 1 else self.k2

    def __str__(self):
        return f'({self.state},{self.k1},{self.k2})'


class TwoCM:
    __slots__ = ('states', 'init', 'finals', 'transitions')

    def __init__(self, states, init, finals, transitions):
        self.states = tuple(states)
        self.init = init
        self.finals = tuple(finals)
        self.transitions = tuple(CmTransition(*t) for t in transitions)
        self.validate()

    def validate(self):
        known = set(self.states)
        for q in (self.init,) + self.finals:
            if q not in known:
                dprint(q)
                raise PtaError(f'state {q!r} is not declared')
        for t in self.transitions:
            if t.src not in known or t.dst not in known:
                raise PtaError(f'transition {t} uses an undeclared state')
            if t.op not in CM_OPS or t.counter not in (1, 2):
                raise PtaError(f'unknown instruction {t.op}{t.counter}')

    def __repr__(self):
        return f'TwoCM(states={list(self.states)}, init={self.init!r}, finals={list(self.finals)}, ' \
               f'{len(self.transitions)} transitions)'


____section_2_semantics = """
2CM的语义
"""


def apply_cm(t, c):
    """t能在c上执行时返回后继配置，否则None"""
    if t.src != c.state:
        return None
    k = [c.k1, c.k2]
    i = t.counter - 1
    if t.op == 'inc':
        k[i] += 1
    elif t.op == 'dec':
        if k[i] == 0:
            return None
        k[i] -= 1
    elif k[i] != 0:
        return None
    return CmConfig(t.dst, *k)


def cm_step(m, c):
    """c的所有后继，按转移的声明顺序

    >>> m = TwoCM(['q', 'p'], 'q', ['p'], [('q', 'inc', 1, 'p'), ('q', 'dec', 1, 'p'), ('q', 'zero', 1, 'p')])
    >>> [str(x) for _, x in cm_step(m, CmConfig('q', 0, 3))]
    ['(p,1,3)', '(p,0,3)']
    """
    res = []
    for t in m.transitions:
        nxt = apply_cm(t, c)
        if nxt is not None:
            res.append((t, nxt))
    return res


def cm_accepting(m, c):
    return c.state in m.finals and c.k1 == 0 and c.k2 == 0


def cm_bounded_accepts(m, max_steps):
    """至多max_steps步的接受序列，广搜所以找到的是最短的

    >>> m = TwoCM(['q0', 'q1', 'qf'], 'q0', ['qf'], [('q0', 'inc', 1, 'q1'), ('q1', 'dec', 1, 'qf')])
    >>> [str(t) for t in cm_bounded_accepts(m, 2)]
    ['q0 inc1 q1', 'q1 dec1 qf']
    >>> cm_bounded_accepts(m, 1)
    """
    start = CmConfig(m.init)
    parent = {start: None}
    frontier = [start]
    for depth in range(max_steps + 1):
        for c in frontier:
            if cm_accepting(m, c):
                seq = []
                while parent[c] is not None:
                    c, t = parent[c]
                    seq.append(t)
                return seq[::-1]
        if depth == max_steps:
            break
        nxt = []
        for c in frontier:
            for t, d in cm_step(m, c):
                if d not in parent:
                    parent[d] = (c, t)
                    nxt.append(d)
        frontier = nxt
    return None


def cm_reachable(m, max_counter):
    """计数器不超过max_counter的可达配置

    :return: (配置集合, complete)，complete为True表示没有配置因为超过上限被丢掉，
        这时集合就是全部可达配置，可以用来证明不接受
    """
    start = CmConfig(m.init)
    seen, todo = {start}, [start]
    complete = True
    while todo:
        c = todo.pop()
        for _, d in cm_step(m, c):
            if max(d.k1, d.k2) > max_counter:
                complete = False
                continue
            if d not in seen:
                seen.add(d)
                todo.append(d)
    return seen, complete


____section_3_encode = """
编码成3维PTA
"""


def decode_counters(w):
    """PTA计数器 (s1, s2, l) 表示的2CM计数器

    >>> decode_counters((5, 3, 2))
    (3, 1)
    """
    s1, s2, l = w
    return s1 - l, s2 - l


def _encode_transition(t):
    i = t.counter
    if t.op == 'inc':
        d = (2, 1, 1) if i == 1 else (1, 2, 1)
        return PtarTransition(t.src, 'γ', ((t.dst, d),))
    if t.op == 'dec':
        d = (0, 1, 1) if i == 1 else (1, 0, 1)
        return PtarTransition(t.src, 'σ', ((f'lt{i}', d), (t.dst, d)))
    return PtarTransition(t.src, 'σ', ((f'eq{i}', (0, 0, 0)), (t.dst, (0, 0, 0))))


def encode(m):
    """2CM m 接受当且仅当 encode(m) 的语言非空

    meta['phi'] 记录每个2CM转移对应的PTA转移

    >>> m = TwoCM(['q0', 'q1', 'qf'], 'q0', ['qf'], [('q0', 'inc', 1, 'q1'), ('q1', 'dec', 1, 'qf')])
    >>> a = encode(m)
    >>> len(a.transitions), str(classify(a)), a.dim
    (17, 'PTA', 3)
    >>> member(a, parse_tree('γ(σ(α,α))', a.alphabet)) is not None
    True
    """
    clash = set(GADGETS) & set(m.states)
    if clash:
        dprint(clash)
        raise PtaError(f'state names {sorted(clash)} are reserved for the encoding')

    phi = {t: _encode_transition(t) for t in m.transitions}
    delta = list(phi.values())
    delta += [PtarTransition(q, 'α') for q in m.finals]
    for g, ds in GADGETS.items():
        delta += [PtarTransition(g, 'γ', ((g, d),)) for d in ds]
    delta += [PtarTransition(g, 'α') for g in GADGETS]

    constraint = SemilinearSet([LinearSet((0, 0, 0), [(1, 1, 1)])])
    states = list(m.states) + list(GADGETS)
    return PTAR(states, CM_ALPHABET, m.init, delta, constraint, meta={'phi': phi})


def gadget_search(a, state, counters, max_length):
    """从 (state, counters) 出发只用单子转移、最后读一个叶子的计算，γ最少的那个

    :return: 转移序列（最后一个是叶子转移）或None
    """
    start = (state, tuple(counters))
    parent = {start: None}
    frontier = [start]
    for depth in range(max_length + 1):
        for key in frontier:
            q, w = key
            if w not in a.constraint:
                continue
            for t in a.transitions_from(q):
                if not t.children:
                    seq = [t]
                    while parent[key] is not None:
                        key, s = parent[key]
                        seq.append(s)
                    return seq[::-1]
        if depth == max_length:
            break
        nxt = []
        for key in frontier:
            q, w = key
            for t in a.transitions_from(q):
                if t.rank != 1:
                    continue
                q1, act = t.children[0]
                child = (q1, apply_action(act, w))
                if child not in parent:
                    parent[child] = (key, t)
                    nxt.append(child)
        frontier = nxt
    return None


def _gadget_tree(a, state, w):
    seq = gadget_search(a, state, w, 2 * sum(w) + 2)
    if seq is None:
        dprint(state, w)
        raise PtaError(f'check state {state} cannot finish from ({vector_str(w)})')
    node = Tree(seq[-1].symbol)
    for t in reversed(seq[:-1]):
        node = Tree(t.symbol, [node])
    return node


def encode_run(m, sequence, a=None):
    """把2CM的接受序列翻译成 encode(m) 接受的树

    沿途断言PTA计数器解码后跟2CM配置一致
    """
    a = encode(m) if a is None else a
    phi = a.meta['phi']
    c, w = CmConfig(m.init), (0, 0, 0)
    steps = []
    for t in sequence:
        nxt = apply_cm(t, c)
        if nxt is None:
            dprint(str(c))
            raise InapplicableTransition(f'{t} cannot run in configuration {c}')
        pt = phi[t]
        _, act = pt.children[-1]
        w2 = apply_action(act, w)
        side = None
        if pt.symbol == 'σ':
            g, gact = pt.children[0]
            side = _gadget_tree(a, g, apply_action(gact, w))
        steps.append((pt.symbol, side))
        c, w = nxt, w2
        assert decode_counters(w) == (c.k1, c.k2), (w, c)
    if not cm_accepting(m, c):
        raise PtaError(f'sequence ends in {c}, which is not accepting')

    node = Tree('α')
    for symbol, side in reversed(steps):
        node = Tree(symbol, [node] if side is None else [side, node])
    return node
