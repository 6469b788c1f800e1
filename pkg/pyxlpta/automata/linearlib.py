#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 15:20


"""
线性PTAR的判空

线性PTAR每个转移至多把计数器传给一个孩子，其余孩子都重置
所以一次计算可以拆成若干条"spine"：从 (q, 0) 出发一路跟着带计数器的孩子往下走，
直到叶子（要求计数器在C里）或者一个全部重置的转移为止；沿途挂出去的都是 (q', 0)
这些spine再递归地组成一棵spinal computation tree

判空的不动点：
    U_0 = ∅
    U_{i+1} = U_i ∪ {q | 有从q出发的spine，挂出去的状态都在U_i里}
后一个条件用 (U, q) 线性化PA 的非空来判定
一棵spinal树只有一个spine时高度记为0，所以
    q ∈ U_{j+1}  ⇔  存在从q出发、高度不超过j的spinal树

线性化PA在原维数后面多加一维：
    叶子结束的spine最后一维是0，检查 C×{0}
    全重置转移结束的spine走一条到汇点的转移，最后一维加1，检查 ℕ^m×{1}（前m维不受约束）
全重置结尾的spine不检查C
"""

from typing import NamedTuple

from pyxlpta.automata import palib
from pyxlpta.automata.ptarlib import *

logger = get_logger(__name__)

DEFAULT_SPINE_LENGTH = 12
DEFAULT_MAX_HEIGHT = 3


____section_1_hat = """
只能沿spine往下算的辅助自动机
"""


class Hat(NamedTuple):
    """q̂"""
    state: Hashable

    def __str__(self):
        return f'{self.state}^'


def require_linear(a):
    if not is_linear(a):
        dprint(a)
        raise NotLinearError('the automaton is not a linear PTAR: some transition passes counters to several children')


def hat_transition(t):
    """把Δ里的一条转移变成Δ'里对应的一条：源状态加帽，带计数器的那个孩子也加帽"""
    kids = tuple((Hat(q) if a is not RESET else q, a) for q, a in t.children)
    return PtarTransition(Hat(t.src), t.symbol, kids, t.name)


def hat_automaton(a):
    """只对加帽状态有转移的自动机，初始状态是 q̂0

    >>> from pyxlpta.automata.filelib import load_fixture
    >>> h = hat_automaton(load_fixture('spinal.ptar'))
    >>> print(h.transitions[0])
    q^ -> σ ( q [reset] , q^ [1] )
    """
    require_linear(a)
    states = list(a.states) + [Hat(q) for q in a.states]
    return PTAR(states, a.alphabet, Hat(a.init), [hat_transition(t) for t in a.transitions], a.constraint,
                meta={'source': a})


____section_2_spine = """
spine计算、spinal computation tree
"""


class SpineComputation:
    """从 (q̂, 0) 出发的一段spine计算

    :param transitions: 依次使用的Δ中的转移，除最后一个外都恰好有一个带计数器的孩子，
        最后一个是叶子转移或全重置转移
    """
    __slots__ = ('start', 'transitions', 'positions', 'counters', 'tree', 'statepos', 'stateseq')

    def __init__(self, a, start, transitions):
        transitions = tuple(transitions)
        if not transitions:
            raise PtaError('a spine computation has at least one step')

        # 1、沿spine往下走，检查链接关系并累加计数器
        cur, w, p = start, vzero(a.dim), ()
        positions, counters = [], []
        for k, t in enumerate(transitions):
            if t.src != cur:
                dprint(t, cur)
                raise InapplicableTransition(f'spine step {k + 1}: transition {t} does not start in {cur!r}')
            positions.append(p)
            counters.append(w)
            adds = t.adds()
            if k < len(transitions) - 1:
                if len(adds) != 1:
                    raise InapplicableTransition(f'spine step {k + 1}: transition {t} does not pass the counters on')
                i = adds[0]
                cur, action = t.children[i]
                w, p = vadd(w, action), p + (i + 1,)
            elif adds:
                raise InapplicableTransition(f'spine ends with {t}, which passes the counters on')
            elif not t.children and w not in a.constraint:
                raise LeafConstraintViolated(f'spine ends with {t} but counters ({vector_str(w)}) are not in C')

        # 2、自底向上搭出tree(s)
        node = None
        for t in reversed(transitions):
            kids = [Tree(Configuration(q, vzero(a.dim))) if x is RESET else node for q, x in t.children]
            node = Tree(t.symbol, kids)

        self.start = start
        self.transitions = transitions
        self.positions = tuple(positions)
        self.counters = tuple(counters)
        self.tree = node
        self.statepos = tuple(p for p in iter_positions(node) if isinstance(subtree_at(node, p).label, Configuration))
        self.stateseq = tuple(subtree_at(node, p).label.state for p in self.statepos)

    def hat_steps(self):
        """在辅助自动机上对应的 (转移, 位置) 序列"""
        return [(hat_transition(t), p) for t, p in zip(self.transitions, self.positions)]

    def __len__(self):
        return len(self.transitions)

    def __str__(self):
        return f'({self.start},0) ⇒* {self.tree}'

    def __repr__(self):
        return f'SpineComputation({str(self)!r})'


def spine_valid(a, s):
    """在辅助自动机上重放s，结果应恰好是tree(s)"""
    h = hat_automaton(a)
    try:
        res = replay(h, ComputationTrace(s.tree, s.hat_steps()), Tree(Configuration(Hat(s.start), vzero(a.dim))))
    except PtaError:
        return False
    return res == s.tree


class SpinalComputationTree:
    """节点是spine计算，第i个孩子从 stateseq[i] 出发"""
    __slots__ = ('node', 'children')

    def __init__(self, node, children=()):
        children = tuple(children)
        if len(children) != len(node.stateseq):
            raise ShapeError(f'spine {node} has {len(node.stateseq)} residual states, got {len(children)} children')
        for q, d in zip(node.stateseq, children):
            if d.node.start != q:
                raise ShapeError(f'child starting in {d.node.start!r} hangs at a {q!r} position')
        self.node = node
        self.children = children

    @property
    def height(self):
        return 1 + max(d.height for d in self.children) if self.children else 0

    @property
    def size(self):
        return 1 + sum(d.size for d in self.children)

    def render(self):
        return dfs_base(self, child_generator=lambda d: d.children, mystr=lambda d: str(d.node))

    def __repr__(self):
        return f'SpinalComputationTree({str(self.node)!r}, height={self.height})'


def spinal_tree_value(d):
    """tree(d)：把每个statepos位置换成对应孩子的值

    >>> from pyxlpta.automata.filelib import load_fixture
    >>> a = load_fixture('spinal.ptar')
    >>> t = parse_tree('σ(σ(α,σ(α,α)),σ(α,σ(α,α)))', a.alphabet)
    >>> str(spinal_tree_value(spinal_parse(a, t)))
    'σ(σ(α,σ(α,α)),σ(α,σ(α,α)))'
    """
    res = d.node.tree
    for p, child in zip(d.node.statepos, d.children):
        res = replace_at(res, p, spinal_tree_value(child))
    return res


def _spine_endings(a, q, w, allowed):
    """状态q、计数器w时能结束spine的转移"""
    for t in a.transitions_from(q):
        if t.adds():
            continue
        if not t.children:
            if w in a.constraint:
                yield t
        elif allowed is None or all(qi in allowed for qi, _ in t.children):
            yield t


def iter_spines(a, q, max_length=DEFAULT_SPINE_LENGTH, allowed=None):
    """枚举从q出发、长度不超过max_length的所有spine计算（按转移的声明顺序深度优先）

    :param allowed: 给出时只要挂出去的状态都在allowed里的spine
    """
    require_linear(a)

    def dfs(cur, w, prefix):
        for t in _spine_endings(a, cur, w, allowed):
            yield prefix + [t]
        if len(prefix) + 1 >= max_length:
            return
        for t in a.transitions_from(cur):
            adds = t.adds()
            if len(adds) != 1:
                continue
            if allowed is not None and any(qj not in allowed for j, (qj, _) in enumerate(t.children) if j != adds[0]):
                continue
            qi, di = t.children[adds[0]]
            yield from dfs(qi, vadd(w, di), prefix + [t])

    for ts in dfs(q, vzero(a.dim), []):
        yield SpineComputation(a, q, ts)


def find_spine(a, q, allowed, max_length=DEFAULT_SPINE_LENGTH):
    """广搜一条从q出发、挂出去的状态都在allowed里、长度不超过max_length的spine，找到的是最短的

    相同 (状态, 计数器) 只保留最先到达的
    """
    start = (q, vzero(a.dim))
    parent = {start: None}
    frontier = [start]
    for depth in range(max_length):
        for key in frontier:
            for t in _spine_endings(a, key[0], key[1], allowed):
                ts = [t]
                while parent[key] is not None:
                    key, tt = parent[key]
                    ts.append(tt)
                return SpineComputation(a, q, reversed(ts))
        nxt = []
        for key in frontier:
            cur, w = key
            for t in a.transitions_from(cur):
                adds = t.adds()
                if len(adds) != 1 or any(qj not in allowed for j, (qj, _) in enumerate(t.children) if j != adds[0]):
                    continue
                qi, di = t.children[adds[0]]
                child = (qi, vadd(w, di))
                if child not in parent:
                    parent[child] = (key, t)
                    nxt.append(child)
        frontier = nxt
    return None


def spinal_search(a, q, max_height=DEFAULT_MAX_HEIGHT, max_spine_length=DEFAULT_SPINE_LENGTH):
    """有界穷举：找一棵从q出发、高度不超过max_height的spinal树，spine长度不超过max_spine_length

    逐层计算：第h层记录每个状态能否找到高度不超过h的树
    """
    require_linear(a)
    found = {}
    for h in range(max_height + 1):
        nxt = dict(found)
        for p in a.states:
            if p in found:
                continue
            s = find_spine(a, p, set(found), max_spine_length)
            if s is not None:
                nxt[p] = SpinalComputationTree(s, [found[x] for x in s.stateseq])
        if len(nxt) == len(found):
            break
        found = nxt
    return found.get(q)


def spinal_parse(a, xi, q=None):
    """把ξ拆成一棵从q（默认初始状态）出发的spinal树，ξ不能由q从零计数器算出时返回None"""
    require_linear(a)
    check_ranked(xi, a.alphabet)
    memo = {}

    def spines(node, cur, w, p):
        for t in a.lookup(cur, node.label):
            if not t.children:
                if w in a.constraint:
                    yield [t], []
                continue
            adds = t.adds()
            hanging = [(p + (j + 1,), node.children[j], qj) for j, (qj, x) in enumerate(t.children) if x is RESET]
            if not adds:
                yield [t], hanging
                continue
            i = adds[0]
            qi, di = t.children[i]
            for ts, hang in spines(node.children[i], qi, vadd(w, di), p + (i + 1,)):
                yield [t] + ts, hanging + hang

    def parse(node, cur):
        key = (node, cur)
        if key in memo:
            return memo[key]
        res = None
        for ts, hanging in spines(node, cur, vzero(a.dim), ()):
            hanging.sort(key=lambda x: x[0])
            kids = []
            for _, sub, qj in hanging:
                d = parse(sub, qj)
                if d is None:
                    break
                kids.append(d)
            else:
                res = SpinalComputationTree(SpineComputation(a, cur, ts), kids)
                break
        memo[key] = res
        return res

    return parse(xi, a.init if q is None else q)


____section_3_linearization = """
(U, q) 线性化PA 与判空的不动点
"""


class _Sink:
    __slots__ = ()

    def __repr__(self):
        return 'SINK'

    def __str__(self):
        return '⊥'


SINK = _Sink()


def linearization_pa(a, U, q):
    """(U, q) 线性化PA，维数 m+1

    转移的tag记录来历：(PTAR转移, 带计数器孩子的下标)，全重置转移到汇点时下标为None
    """
    require_linear(a)
    U = set(U)
    m = a.dim
    ts = []
    for t in a.transitions:
        adds = t.adds()
        if len(adds) == 1:
            i = adds[0]
            if all(qj in U for j, (qj, _) in enumerate(t.children) if j != i):
                qi, di = t.children[i]
                ts.append(palib.PaTransition(t.src, t.symbol, di + (0,), qi, (t, i)))
        elif t.children and all(qj in U for qj, _ in t.children):
            ts.append(palib.PaTransition(t.src, t.symbol, unit_vector(m + 1, m), SINK, (t, None)))

    leaf_final = [p for p in a.states if any(not t.children for t in a.transitions_from(p))]
    sink_part = SemilinearSet([LinearSet(unit_vector(m + 1, m), [unit_vector(m + 1, i) for i in range(m)])])
    constraint = a.constraint.lift(0) | sink_part
    letters = list(a.alphabet)
    return palib.PA(list(a.states) + [SINK], q, leaf_final + [SINK], ts, constraint, alphabet=letters)


def spine_from_run(a, q, run):
    """把线性化PA的一条run还原成spine计算"""
    ts = [t.tag[0] for t in run.transitions]
    last = run.transitions[-1].dst if run.transitions else q
    if last is not SINK:
        w = vsum((t.vector[:a.dim] for t in run.transitions), a.dim)
        leaf_ts = [t for t in a.transitions_from(last) if not t.children]
        assert leaf_ts and w in a.constraint, (run, last)
        ts.append(leaf_ts[0])
    return SpineComputation(a, q, ts)


class EmptinessResult(NamedTuple):
    """chain是每轮迭代后的U（按加入顺序）"""
    empty: bool
    witness: Optional[Tree] = None
    spinal: Optional[SpinalComputationTree] = None
    chain: tuple = ()

    def chain_table(self):
        rows = [(i, ' '.join(map(str, u)) or '∅') for i, u in enumerate(self.chain)]
        return print_full_table(rows, columns=['i', 'U'])

    def __str__(self):
        if self.empty:
            return 'EMPTY'
        return f'NONEMPTY\n{self.witness}'


def is_empty_linear(a):
    """线性PTAR判空，非空时给出见证树和高度不超过|Q|的spinal树

    >>> from pyxlpta.automata.filelib import load_fixture
    >>> res = is_empty_linear(load_fixture('lin.ptar'))
    >>> res.empty, member(load_fixture('lin.ptar'), res.witness) is not None
    (False, True)
    """
    require_linear(a)
    U, chain, spines = [], [()], {}
    for i in range(len(a.states) + 1):
        new = list(U)
        for q in a.states:
            if q in U:
                continue
            res = palib.is_empty(linearization_pa(a, U, q))
            logger.debug('iteration %d: linearization for %s is %s', i, q, 'empty' if res.empty else 'nonempty')
            if not res.empty:
                new.append(q)
                spines[q] = spine_from_run(a, q, res.witness)
        chain.append(tuple(new))
        logger.info('iteration %d: U = {%s}', i + 1, ', '.join(map(str, new)))
        if len(new) == len(U):
            break
        U = new
    else:
        raise AssertionError('fixpoint did not stabilize within |Q|+1 iterations')

    if a.init not in spines:
        return EmptinessResult(True, chain=tuple(chain))

    built = {}

    def build(q):
        if q not in built:
            s = spines[q]
            built[q] = SpinalComputationTree(s, [build(x) for x in s.stateseq])
        return built[q]

    d = build(a.init)
    xi = spinal_tree_value(d)
    assert d.height <= len(a.states), d
    assert member(a, xi) is not None, str(xi)
    return EmptinessResult(False, xi, d, tuple(chain))
