#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 13:10


"""
Parikh串自动机（PA）

转移 (q, a, d, q')，run的向量和要落在半线性集C里
判空用的是"支撑集 + 流量方程"：
    对C的每个线性分量、每个终态f，枚举转移子集S（连通，含q0和f），
    解 出度-入度 守恒、x_τ ≥ 1、Σx_τ·d_τ = base + Σm_j·period_j 的非负整数解，
    有解就按欧拉路径把转移次数还原成一条run
子集枚举是转移数的指数级，只适合桌面规模
"""

from typing import NamedTuple

from pyxlpta.util.mathlib import *
from pyxlpta.util.textlib import *

logger = get_logger(__name__)


class PaTransition(NamedTuple):
    src: Hashable
    letter: str
    vector: tuple
    dst: Hashable
    # 由别的构造生成时，记录这条转移的来历，比如线性化时对应的PTAR转移
    tag: Hashable = None

    def __str__(self):
        return f'{self.src} -{self.letter}[{vector_str(self.vector)}]-> {self.dst}'


class PA:
    """s维Parikh串自动机"""
    __slots__ = ('states', 'alphabet', 'init', 'finals', 'transitions', 'constraint')

    def __init__(self, states, init, finals, transitions, constraint, alphabet=None):
        self.states = tuple(states)
        self.init = init
        self.finals = tuple(finals)
        self.transitions = tuple(PaTransition(*t) for t in transitions)
        self.constraint = constraint
        if alphabet is None:
            alphabet = list(dict.fromkeys(t.letter for t in self.transitions))
        self.alphabet = tuple(alphabet)
        self.validate()

    @property
    def dim(self):
        return self.constraint.dim

    def validate(self):
        known = set(self.states)
        for q in (self.init,) + self.finals:
            if q not in known:
                dprint(q)
                raise PtaError(f'state {q!r} is not declared')
        for t in self.transitions:
            if t.src not in known or t.dst not in known:
                raise PtaError(f'transition {t} uses an undeclared state')
            if t.letter not in self.alphabet:
                raise PtaError(f'transition {t} uses an undeclared letter')
            check_dim(t.vector, self.dim, f'vector of {t}')
            check_nonneg(t.vector)

    def outgoing(self, q):
        return [t for t in self.transitions if t.src == q]

    def __repr__(self):
        return f'PA(states={list(self.states)}, init={self.init!r}, finals={list(self.finals)}, ' \
               f'{len(self.transitions)} transitions, dim={self.dim})'


class PaRun:
    """转移序列；dim用来给空run求和"""
    __slots__ = ('transitions', 'dim')

    def __init__(self, transitions, dim):
        self.transitions = tuple(transitions)
        self.dim = dim

    @property
    def word(self):
        return tuple(t.letter for t in self.transitions)

    @property
    def total(self):
        return vsum((t.vector for t in self.transitions), self.dim)

    def states(self, init):
        """途经的状态序列，包括起点"""
        return [init] + [t.dst for t in self.transitions]

    def __len__(self):
        return len(self.transitions)

    def __eq__(self, other):
        return isinstance(other, PaRun) and self.transitions == other.transitions

    def __hash__(self):
        return hash(self.transitions)

    def __str__(self):
        if not self.transitions:
            return 'ε'
        return ' ; '.join(map(str, self.transitions))

    def __repr__(self):
        return f'PaRun({str(self)!r})'


class PaResult(NamedTuple):
    """判空结果，empty为False时witness是一条合法run"""
    empty: bool
    witness: Optional[PaRun] = None

    def __str__(self):
        if self.empty:
            return 'EMPTY'
        return f'NONEMPTY\n{self.witness}'


def run_valid(pa, run):
    """run从q0出发、首尾相接、停在终态、向量和属于C

    >>> pa = PA(['q', 'f'], 'q', ['f'], [('q', 'a', (1,), 'f')], SemilinearSet([LinearSet((1,))]))
    >>> run_valid(pa, PaRun(pa.transitions, 1)), run_valid(pa, PaRun([], 1))
    (True, False)
    """
    cur = pa.init
    known = set(pa.transitions)
    for t in run.transitions:
        if t not in known or t.src != cur:
            return False
        cur = t.dst
    return cur in pa.finals and run.total in pa.constraint


def pa_member(pa, word):
    """判断单词是否被接受，接受时返回一条run

    按位置推进 (状态, 向量和) 集合，并记下每个配置的来源
    """
    frontier = {(pa.init, vzero(pa.dim)): None}
    layers = [frontier]
    for a in word:
        nxt = {}
        for (q, v) in frontier:
            for t in pa.transitions:
                if t.src == q and t.letter == a:
                    key = (t.dst, vadd(v, t.vector))
                    if key not in nxt:
                        nxt[key] = ((q, v), t)
        frontier = nxt
        layers.append(frontier)

    for key in frontier:
        q, v = key
        if q in pa.finals and v in pa.constraint:
            ts = []
            for layer in reversed(layers[1:]):
                key, t = layer[key]
                ts.append(t)
            return PaRun(reversed(ts), pa.dim)
    return None


def brute_force_nonempty(pa, max_len):
    """长度不超过max_len的run里广搜一条合法的，找到的是最短的

    相同 (状态, 向量和) 只保留最先到达的，后到的剩余步数更少，不会更好

    >>> pa = PA(['q'], 'q', ['q'], [('q', 'a', (1, 0), 'q'), ('q', 'b', (0, 1), 'q')],
    ...         SemilinearSet([LinearSet((1, 1), [(1, 1)])]))
    >>> len(brute_force_nonempty(pa, 4))
    2
    >>> brute_force_nonempty(pa, 1)
    """
    start = (pa.init, vzero(pa.dim))
    parent = {start: None}
    frontier = [start]
    for depth in range(max_len + 1):
        for key in frontier:
            q, v = key
            if q in pa.finals and v in pa.constraint:
                ts = []
                while parent[key] is not None:
                    key, t = parent[key]
                    ts.append(t)
                return PaRun(reversed(ts), pa.dim)
        if depth == max_len:
            break
        nxt = []
        for key in frontier:
            q, v = key
            for t in pa.transitions:
                if t.src == q:
                    child = (t.dst, vadd(v, t.vector))
                    if child not in parent:
                        parent[child] = (key, t)
                        nxt.append(child)
        frontier = nxt
    return None


____section_2_emptiness = """
判空
"""


def _reachable(pa, start, forward=True):
    seen, todo = {start}, [start]
    while todo:
        q = todo.pop()
        for t in pa.transitions:
            a, b = (t.src, t.dst) if forward else (t.dst, t.src)
            if a == q and b not in seen:
                seen.add(b)
                todo.append(b)
    return seen


def _support_ok(support, init, final):
    """支撑集的图结构必要条件：含q0和f、度数条件可能满足、弱连通"""
    ins, outs, nodes = set(), set(), set()
    for t in support:
        outs.add(t.src)
        ins.add(t.dst)
        nodes.update((t.src, t.dst))
    if init not in nodes or final not in nodes:
        return False
    for v in nodes:
        if v != init and v not in ins:
            return False
        if v != final and v not in outs:
            return False

    # 弱连通
    adj = collections.defaultdict(set)
    for t in support:
        adj[t.src].add(t.dst)
        adj[t.dst].add(t.src)
    seen, todo = {init}, [init]
    while todo:
        v = todo.pop()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    return seen == nodes


def _flow_system(pa, support, component, final, whole_support=True):
    """变量：支撑集里每条转移的次数x_τ，加上分量每个周期的系数m_j

    whole_support为False时构造的是不限定支撑集的松弛：x_τ ≥ 0
    """
    k, periods = len(support), component.periods
    n = k + len(periods)
    nodes = list(dict.fromkeys([pa.init, final] + [q for t in support for q in (t.src, t.dst)]))
    eqs = []
    for v in nodes:
        row = [0] * n
        for i, t in enumerate(support):
            if t.src == v:
                row[i] += 1
            if t.dst == v:
                row[i] -= 1
        eqs.append((row, int(v == pa.init) - int(v == final)))
    for c in range(pa.dim):
        row = [t.vector[c] for t in support] + [-p[c] for p in periods]
        eqs.append((row, component.base[c]))
    lows = [1 if whole_support else 0] * k + [0] * len(periods)
    return LinearSystem(n, eqs, lows)


def _euler_path(init, counts):
    """Hierholzer拼环法：counts是 (转移, 次数) 列表，返回从init出发用完所有边的转移序列"""
    adj = collections.defaultdict(list)
    for t, k in counts:
        adj[t.src].extend([t] * k)
    ptr = collections.Counter()
    stack, path = [(init, None)], []
    while stack:
        v, e = stack[-1]
        if ptr[v] < len(adj[v]):
            t = adj[v][ptr[v]]
            ptr[v] += 1
            stack.append((t.dst, t))
        else:
            stack.pop()
            if e is not None:
                path.append(e)
    path.reverse()
    assert len(path) == sum(k for _, k in counts), 'flow solution is not an Euler path'
    return path


def find_run(pa):
    """判空的主体，返回一条合法run或None"""
    # 1、空run
    if pa.init in pa.finals and vzero(pa.dim) in pa.constraint:
        return PaRun([], pa.dim)

    forward = _reachable(pa, pa.init)
    for ci, component in enumerate(pa.constraint.components):
        for final in pa.finals:
            if final not in forward:
                continue
            # 2、只保留从q0可达、且能到final的转移
            backward = _reachable(pa, final, forward=False)
            useful = [t for t in pa.transitions if t.src in forward and t.dst in backward]
            if not useful:
                continue
            if not lp_feasible(_flow_system(pa, useful, component, final, whole_support=False)):
                logger.debug('component %d final %r: relaxation infeasible', ci, final)
                continue

            # 3、按从小到大枚举支撑集
            for k in range(1, len(useful) + 1):
                for support in itertools.combinations(useful, k):
                    if not _support_ok(support, pa.init, final):
                        continue
                    sys_ = _flow_system(pa, support, component, final)
                    x = solve_nonneg(sys_, objective=[1] * k + [0] * len(component.periods))
                    if x is None:
                        continue
                    logger.debug('component %d final %r support %s: %s', ci, final,
                                 [str(t) for t in support], x)
                    return PaRun(_euler_path(pa.init, list(zip(support, x[:k]))), pa.dim)
    return None


def is_empty(pa):
    """L(pa)是否为空，非空时附带一条合法run

    >>> pa = PA(['q'], 'q', ['q'], [('q', 'a', (1, 0), 'q'), ('q', 'b', (0, 1), 'q')],
    ...         SemilinearSet([LinearSet((1, 1), [(1, 1)])]))
    >>> res = is_empty(pa)
    >>> res.empty, sorted(res.witness.word)
    (False, ['a', 'b'])
    >>> is_empty(PA(['q'], 'q', [], [], SemilinearSet.full(1))).empty
    True
    """
    run = find_run(pa)
    if run is None:
        return PaResult(True)
    assert run_valid(pa, run), run
    return PaResult(False, run)
