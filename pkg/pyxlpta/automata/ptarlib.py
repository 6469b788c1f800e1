#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 14:00


"""
非全局Parikh树自动机（PTA）和带重置的版本（PTAR）

配置 (q, w) 是树的一个叶子，转移 q → σ(q_1(a_1), ..., q_n(a_n)) 把它展开：
    a_i 是向量d_i时孩子的计数器为 w + d_i，a_i 是reset时孩子的计数器清零
叶子转移 q → α 只有在 w ∈ C 时才能用
计数器沿着每条路径各自累加，不是全局求和
"""

import enum
from typing import NamedTuple

from pyxlpta.automata.treelib import *
from pyxlpta.util.mathlib import *

logger = get_logger(__name__)


class _Reset:
    """计数器动作里的重置记号 ↺"""
    __slots__ = ()

    def __repr__(self):
        return 'RESET'

    def __reduce__(self):
        return 'RESET'


RESET = _Reset()


def action_str(action):
    """
    >>> action_str((1, 0)), action_str(RESET)
    ('[1 0]', '[reset]')
    """
    return '[reset]' if action is RESET else f'[{vector_str(action)}]'


def apply_action(action, w):
    """
    >>> apply_action((1, 0), (2, 2)), apply_action(RESET, (2, 2))
    ((3, 2), (0, 0))
    """
    return vzero(len(w)) if action is RESET else vadd(w, action)


class Configuration(NamedTuple):
    state: Hashable
    counters: tuple

    def __str__(self):
        return f'{self.state}⟨{vector_str(self.counters)}⟩'


class PtarTransition(NamedTuple):
    """children是 ((q_1, a_1), ..., (q_n, a_n))，n等于symbol的秩"""
    src: Hashable
    symbol: str
    children: tuple = ()
    name: str = None

    @property
    def rank(self):
        return len(self.children)

    def adds(self):
        """非reset孩子的下标列表"""
        return [i for i, (_, a) in enumerate(self.children) if a is not RESET]

    def __str__(self):
        if not self.children:
            return f'{self.src} -> {self.symbol}'
        inner = ' , '.join(f'{q} {action_str(a)}' for q, a in self.children)
        return f'{self.src} -> {self.symbol} ( {inner} )'


class AutomatonClass(enum.Enum):
    PTA = 'PTA'
    PTAR = 'PTAR'
    LINEAR_PTAR = 'LINEAR-PTAR'

    def __str__(self):
        return self.value


class PTAR:
    """m维PTAR，PTA是不出现reset的特例

    :param meta: 附加信息，比如2CM编码时记录的 T → Δ 映射
    """
    __slots__ = ('states', 'alphabet', 'init', 'transitions', 'constraint', 'meta', '_index')

    def __init__(self, states, alphabet, init, transitions, constraint, meta=None):
        self.states = tuple(states)
        self.alphabet = alphabet if isinstance(alphabet, RankedAlphabet) else RankedAlphabet(alphabet)
        self.init = init
        self.transitions = tuple(self._normalize(t) for t in transitions)
        self.constraint = constraint
        self.meta = dict(meta or {})
        self.validate()
        index = collections.defaultdict(list)
        for t in self.transitions:
            index[(t.src, t.symbol)].append(t)
        self._index = dict(index)

    @staticmethod
    def _normalize(t):
        t = PtarTransition(*t)
        children = tuple((q, a if a is RESET else tuple(a)) for q, a in t.children)
        return t._replace(children=children)

    @property
    def dim(self):
        return self.constraint.dim

    def validate(self):
        known = set(self.states)
        if self.init not in known:
            dprint(self.init)
            raise PtaError(f'initial state {self.init!r} is not declared')
        for t in self.transitions:
            if t.src not in known:
                raise PtaError(f'transition {t} starts in an undeclared state')
            k = self.alphabet.rank(t.symbol)
            if k != t.rank:
                dprint(t, k)
                raise ArityError(f'transition {t} has {t.rank} successors but {t.symbol!r} has rank {k}')
            for q, a in t.children:
                if q not in known:
                    raise PtaError(f'transition {t} uses undeclared state {q!r}')
                if a is not RESET:
                    check_dim(a, self.dim, f'vector in {t}')
                    check_nonneg(a)

    def lookup(self, q, symbol):
        """声明顺序下，状态q读symbol的所有转移"""
        return self._index.get((q, symbol), [])

    def transitions_from(self, q):
        return [t for t in self.transitions if t.src == q]

    def __repr__(self):
        return f'PTAR(states={list(self.states)}, init={self.init!r}, {len(self.transitions)} transitions, ' \
               f'dim={self.dim})'


____section_2_classify = """
分类
"""


def is_reset_free(a):
    return all(x is not RESET for t in a.transitions for _, x in t.children)


def is_linear(a):
    """每个转移至多一个孩子不是reset"""
    return all(len(t.adds()) <= 1 for t in a.transitions)


def classify(a):
    """无reset的归为PTA；否则线性的归为LINEAR-PTAR，其余是PTAR

    PTA也可能同时是线性的（比如只有单子转移），需要时另外用is_linear判断
    """
    if is_reset_free(a):
        return AutomatonClass.PTA
    if is_linear(a):
        return AutomatonClass.LINEAR_PTAR
    return AutomatonClass.PTAR


____section_3_step = """
计算关系
"""


def initial_tree(a):
    return Tree(Configuration(a.init, vzero(a.dim)))


def step(a, partial, p, t):
    """在partial的位置p上应用转移t

    >>> from pyxlpta.automata.filelib import load_fixture
    >>> lab = load_fixture('lab.pta')
    >>> t1 = lab.transitions[0]
    >>> str(step(lab, initial_tree(lab), (), t1))
    'a(qa⟨1 0⟩,qa⟨1 0⟩)'
    """
    conf = subtree_at(partial, p).label
    if not isinstance(conf, Configuration):
        dprint(str(partial), p)
        raise InapplicableTransition(f'position {format_position(p)} holds {conf!r}, not a configuration')
    q, w = conf
    if t.src != q:
        raise InapplicableTransition(f'transition {t} does not start in {q!r}')
    if a.alphabet.rank(t.symbol) != t.rank:
        raise InapplicableTransition(f'transition {t} does not match the rank of {t.symbol!r}')
    if not t.children:
        if w not in a.constraint:
            raise LeafConstraintViolated(f'counters ({vector_str(w)}) of {q!r} at {format_position(p)} are not in C')
        return replace_at(partial, p, Tree(t.symbol))
    kids = [Tree(Configuration(qi, apply_action(ai, w))) for qi, ai in t.children]
    return replace_at(partial, p, Tree(t.symbol, kids))


class ComputationTrace:
    """计算序列：按位置字典序依次应用的 (转移, 位置)"""
    __slots__ = ('subject', 'steps')

    def __init__(self, subject, steps):
        self.subject = subject
        self.steps = tuple(steps)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other):
        return isinstance(other, ComputationTrace) and (self.subject, self.steps) == (other.subject, other.steps)

    def __repr__(self):
        return f'ComputationTrace({str(self.subject)!r}, {len(self.steps)} steps)'


def replay(a, trace, start=None):
    """从 (q0, 0) 依次应用trace的每一步，返回最终得到的树（可能还含配置）

    出错时抛出 step 的异常；
    同时按位置记一份自上次reset以来的Add向量之和，每步断言新配置的计数器正好等于它
    """
    cur = start if start is not None else initial_tree(a)
    segment = {p: label_at(cur, p).counters for p in iter_positions(cur)
               if isinstance(label_at(cur, p), Configuration)}
    for t, p in trace.steps:
        cur = step(a, cur, p, t)
        base = segment.pop(p)
        for i, (_, action) in enumerate(t.children, start=1):
            child = p + (i,)
            segment[child] = vzero(a.dim) if action is RESET else vadd(base, action)
            assert label_at(cur, child).counters == segment[child], (str(t), child, segment[child])
    return cur


def trace_valid(a, xi, trace):
    """
    >>> from pyxlpta.automata.filelib import load_fixture
    >>> lab = load_fixture('lab.pta')
    >>> xi = parse_tree('a(b(#,#),b(#,#))', lab.alphabet)
    >>> trace_valid(lab, xi, member(lab, xi))
    True
    """
    if len(trace) != xi.size:
        return False
    try:
        return replay(a, trace) == xi
    except PtaError:
        return False


def trace_table(a, trace):
    """trace的表格记录：步骤、位置、被展开的配置、所用转移"""
    rows = []
    cur = initial_tree(a)
    for i, (t, p) in enumerate(trace.steps, start=1):
        rows.append((i, format_position(p), str(subtree_at(cur, p).label), str(t)))
        cur = step(a, cur, p, t)
    return print_full_table(rows, columns=['step', 'position', 'configuration', 'transition'])


____section_4_member = """
成员判定与有界搜索
"""


def _prefixed(steps, i):
    return tuple((t, (i,) + p) for t, p in steps)


def member(a, xi):
    """ξ ∈ L(a)时返回一个计算序列，否则返回None

    自顶向下回溯：每个节点用声明顺序试每个匹配的转移，孩子之间互相独立
    按 (子树, 状态, 计数器) 记忆化，计数器每一维不超过 深度·最大增量，表是有限的

    >>> from pyxlpta.automata.filelib import load_fixture
    >>> lab = load_fixture('lab.pta')
    >>> len(member(lab, parse_tree('a(b(#,#),b(#,#))', lab.alphabet)))
    7
    >>> member(lab, parse_tree('#', lab.alphabet))
    """
    check_ranked(xi, a.alphabet)
    memo = {}

    def accept(node, q, w):
        key = (node, q, w)
        if key in memo:
            return memo[key]
        res = None
        for t in a.lookup(q, node.label):
            if not t.children:
                if w in a.constraint:
                    res = ((t, ()),)
                    break
                continue
            steps = [(t, ())]
            for i, ((qi, ai), child) in enumerate(zip(t.children, node.children), start=1):
                sub = accept(child, qi, apply_action(ai, w))
                if sub is None:
                    break
                steps.extend(_prefixed(sub, i))
            else:
                res = tuple(steps)
                break
        memo[key] = res
        return res

    steps = accept(xi, a.init, vzero(a.dim))
    logger.debug('member %s: %d memo entries', xi, len(memo))
    if steps is None:
        return None
    return ComputationTrace(xi, steps)


def bounded_witness(a, max_height, state=None, counters=None):
    """找一棵高度不超过max_height、从配置 (state, counters) 出发能被接受的树

    等价于把所有高度不超过界限的树逐个做成员判定，但按 (状态, 计数器, 剩余高度) 记忆化

    :return: ComputationTrace 或 None
    """
    q0 = a.init if state is None else state
    w0 = vzero(a.dim) if counters is None else tuple(counters)
    memo = {}

    def search(q, w, h):
        key = (q, w, h)
        if key in memo:
            return memo[key]
        res = None
        for t in a.transitions_from(q):
            if not t.children:
                if w in a.constraint:
                    res = (Tree(t.symbol), ((t, ()),))
                    break
                continue
            if h == 0:
                continue
            kids, steps = [], [(t, ())]
            for i, (qi, ai) in enumerate(t.children, start=1):
                sub = search(qi, apply_action(ai, w), h - 1)
                if sub is None:
                    break
                kids.append(sub[0])
                steps.extend(_prefixed(sub[1], i))
            else:
                res = (Tree(t.symbol, kids), tuple(steps))
                break
        memo[key] = res
        return res

    found = search(q0, w0, max_height)
    logger.debug('bounded witness height<=%d: %d memo entries', max_height, len(memo))
    if found is None:
        return None
    return ComputationTrace(found[0], found[1])
