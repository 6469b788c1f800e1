#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 16:05


"""
全局Parikh树自动机（GPTA）

GPTA先给树的每个节点猜一个向量 d ∈ D，得到 Σ×D 上的标注树ζ，
然后在ζ上跑普通的自顶向下树自动机；接受条件是 r(ε)=q0 且整棵树的向量和 Ψ(ζ) ∈ C
跟PTA/PTAR不同，计数是全局的：所有路径上的向量加在一起

交换引理的构造部分也在这里：
    在接受计算里找两条互相独立、读到同一个转移环的路径，把树拆成
        ξ = ζ1[ζ2[s..]·u1, ζ2[t..]·u2]
    再把其中一段spine挪到另一边，得到的树还是被接受，标注后的向量和不变
"""

import functools
import math
from typing import NamedTuple

from pyxlpta.automata.treelib import *
from pyxlpta.util.mathlib import *

logger = get_logger(__name__)


class GptaTransition(NamedTuple):
    """q → ⟨σ, d⟩(q_1, ..., q_n)"""
    src: Hashable
    symbol: str
    vector: tuple
    children: tuple = ()
    name: str = None

    @property
    def key(self):
        return self.src, self.symbol, self.vector, self.children

    def __str__(self):
        head = f'{self.src} -> {self.symbol} [{vector_str(self.vector)}]'
        if not self.children:
            return head
        return f'{head} ( {" , ".join(map(str, self.children))} )'


class Annotated(NamedTuple):
    """标注树的节点标签 ⟨σ, d⟩"""
    symbol: str
    vector: tuple

    def __str__(self):
        return f'{self.symbol}[{vector_str(self.vector)}]'


class GPTA:
    """m维GPTA

    :param dvectors: D，允许出现在标注里的向量
    """
    __slots__ = ('states', 'alphabet', 'dvectors', 'init', 'transitions', 'constraint', '_keys', '_index')

    def __init__(self, states, alphabet, dvectors, init, transitions, constraint):
        self.states = tuple(states)
        self.alphabet = alphabet if isinstance(alphabet, RankedAlphabet) else RankedAlphabet(alphabet)
        self.dvectors = tuple(dict.fromkeys(tuple(d) for d in dvectors))
        self.init = init
        self.transitions = tuple(self._normalize(t) for t in transitions)
        self.constraint = constraint
        self.validate()
        self._keys = {t.key: t for t in self.transitions}
        index = collections.defaultdict(list)
        for t in self.transitions:
            index[(t.src, t.symbol)].append(t)
        self._index = dict(index)

    @staticmethod
    def _normalize(t):
        t = GptaTransition(*t)
        return t._replace(vector=tuple(t.vector), children=tuple(t.children))

    @property
    def dim(self):
        return self.constraint.dim

    def validate(self):
        known = set(self.states)
        if self.init not in known:
            dprint(self.init)
            raise PtaError(f'initial state {self.init!r} is not declared')
        for d in self.dvectors:
            check_dim(d, self.dim, 'label vector')
            check_nonneg(d)
        dset = set(self.dvectors)
        for t in self.transitions:
            k = self.alphabet.rank(t.symbol)
            if k != len(t.children):
                dprint(t, k)
                raise ArityError(f'transition {t} has {len(t.children)} successors but {t.symbol!r} has rank {k}')
            if t.vector not in dset:
                raise PtaError(f'transition {t} uses a vector outside D')
            for q in (t.src,) + t.children:
                if q not in known:
                    raise PtaError(f'transition {t} uses undeclared state {q!r}')

    def lookup(self, q, symbol):
        return self._index.get((q, symbol), [])

    def find(self, src, symbol, vector, children):
        """按 (q, σ, d, 孩子状态) 找声明过的转移，没有时返回None"""
        return self._keys.get((src, symbol, tuple(vector), tuple(children)))

    def __repr__(self):
        return f'GPTA(states={list(self.states)}, init={self.init!r}, {len(self.transitions)} transitions, ' \
               f'dim={self.dim})'


class GptaRun:
    """run的两部分：每个位置的标注向量、每个位置的状态"""
    __slots__ = ('labeling', 'states')

    def __init__(self, labeling, states):
        self.labeling = dict(labeling)
        self.states = dict(states)

    def __eq__(self, other):
        return isinstance(other, GptaRun) and (self.labeling, self.states) == (other.labeling, other.states)

    def __repr__(self):
        return f'GptaRun({len(self.states)} positions)'


____section_2_run = """
标注树、run的合法性
"""


def annotate(xi, labeling):
    """ξ 按 labeling 标注成 Σ×D 上的树"""

    def build(node, p):
        kids = [build(c, p + (i,)) for i, c in enumerate(node.children, start=1)]
        return Tree(Annotated(node.label, tuple(labeling[p])), kids)

    return build(xi, ())


def strip(labeled):
    """标注树去掉向量，得到 (ζ)_Σ"""
    return Tree(labeled.label.symbol, [strip(c) for c in labeled.children])


def parikh(labeled):
    """扩展Parikh映射：所有节点向量的和

    >>> t = Tree(Annotated('σ', (0, 0)), [Tree(Annotated('γ', (1, 0)), [Tree(Annotated('#', (0, 0)))]),
    ...                                   Tree(Annotated('γ', (0, 1)), [Tree(Annotated('#', (0, 0)))])])
    >>> parikh(t)
    (1, 1)
    >>> parikh(Tree(Annotated('α', (0, 0))))
    (0, 0)
    """
    total = list(labeled.label.vector)
    for c in labeled.children:
        for i, x in enumerate(parikh(c)):
            total[i] += x
    return tuple(total)


def transition_at(g, labeled, run, p):
    """位置p上实际用到的转移（不一定在Δ里，名字取声明过的那个）"""
    node = subtree_at(labeled, p)
    kids = tuple(run.states[p + (i,)] for i in range(1, len(node.children) + 1))
    found = g.find(run.states[p], node.label.symbol, node.label.vector, kids)
    if found is not None:
        return found
    return GptaTransition(run.states[p], node.label.symbol, node.label.vector, kids)


def run_valid(g, labeled, run):
    """
    >>> from pyxlpta.automata.filelib import load_fixture
    >>> g = load_fixture('gammagamma.gpta')
    >>> xi = parse_tree('σ(γ#,γ#)', g.alphabet)
    >>> run = member(g, xi)
    >>> run_valid(g, annotate(xi, run.labeling), run)
    True
    >>> run.states[()] = 'q1'
    >>> run_valid(g, annotate(xi, run.labeling), run)
    False
    """
    pos = set(iter_positions(labeled))
    if set(run.states) != pos or set(run.labeling) != pos:
        dprint(len(pos), len(run.states), len(run.labeling))
        raise ShapeError('run and labeled tree have different positions')
    if run.states[()] != g.init:
        return False
    for p in pos:
        if tuple(run.labeling[p]) != subtree_at(labeled, p).label.vector:
            return False
        t = transition_at(g, labeled, run, p)
        if g.find(*t.key) is None:
            return False
    return parikh(labeled) in g.constraint


____section_3_member = """
成员判定
"""


def _state_bound(g, node):
    n = node.size
    return len(g.states) * math.prod(n * max((d[i] for d in g.dvectors), default=0) + 1 for i in range(g.dim))


def member(g, xi):
    """ξ ∈ L(g) 时返回一个GptaRun（标注 + 状态），否则None

    自底向上：每棵子树算出所有可达的 (状态, 子树向量和) 以及一个来源，
    相同的子树共用一张表；只在根上检查C

    >>> from pyxlpta.automata.filelib import load_fixture
    >>> g = load_fixture('gammagamma.gpta')
    >>> run = member(g, parse_tree('σ(γγ#,γγ#)', g.alphabet))
    >>> xi = parse_tree('σ(γγ#,γγ#)', g.alphabet)
    >>> parikh(annotate(xi, run.labeling))
    (2, 2)
    >>> member(g, parse_tree('σ(γ#,γγ#)', g.alphabet))
    >>> member(g, parse_tree('σ(#,#)', g.alphabet)) is not None
    True
    """
    check_ranked(xi, g.alphabet)

    @functools.lru_cache(maxsize=None)
    def table(node):
        # {state: {vector: (transition, 孩子的向量和)}}
        res = collections.defaultdict(dict)
        kid_tables = [table(c) for c in node.children]
        for t in g.transitions:
            if t.symbol != node.label:
                continue
            partial = {t.vector: ()}
            for q_i, kt in zip(t.children, kid_tables):
                nxt = {}
                for v, chosen in partial.items():
                    for v_i in kt.get(q_i, ()):
                        nxt.setdefault(vadd(v, v_i), chosen + (v_i,))
                partial = nxt
                if not partial:
                    break
            for v, chosen in partial.items():
                res[t.src].setdefault(v, (t, chosen))
        res = dict(res)
        count = sum(len(x) for x in res.values())
        assert count <= _state_bound(g, node), f'{count} entries at {node}'
        return res

    top = table(xi).get(g.init, {})
    logger.debug('member %s: %d root entries', xi, len(top))
    accepted = sorted(v for v in top if v in g.constraint)
    if not accepted:
        return None

    labeling, states = {}, {}

    def backtrack(node, p, q, v):
        t, chosen = table(node)[q][v]
        labeling[p] = t.vector
        states[p] = q
        for i, (c, q_i, v_i) in enumerate(zip(node.children, t.children, chosen), start=1):
            backtrack(c, p + (i,), q_i, v_i)

    backtrack(xi, (), g.init, accepted[0])
    return GptaRun(labeling, states)


def enumerate_runs(g, xi, state=None):
    """枚举ξ上所有符合Δ的 (标注, 状态) 对，不检查C

    :return: 生成器，每项是 GptaRun，位置相对于ξ
    """
    q0 = g.init if state is None else state

    def gen(node, q):
        for t in g.lookup(q, node.label):
            parts = [list(gen(c, q_i)) for c, q_i in zip(node.children, t.children)]
            for combo in itertools.product(*parts):
                labeling, states = {(): t.vector}, {(): q}
                for i, sub in enumerate(combo, start=1):
                    labeling.update({(i,) + p: d for p, d in sub.labeling.items()})
                    states.update({(i,) + p: s for p, s in sub.states.items()})
                yield GptaRun(labeling, states)

    yield from gen(xi, q0)


def brute_force_member(g, xi):
    """穷举所有run的成员判定，给测试当对照"""
    for run in enumerate_runs(g, xi):
        if parikh(annotate(xi, run.labeling)) in g.constraint:
            return run
    return None


____section_4_exchange = """
交换引理的分解与重排
"""


class ExchangeDecomposition:
    """ξ = ζ1[ζ2[s_1..x..s_k]·u1, ζ2[t_1..x..t_k]·u2]，x在第hole个变量处

    :param paths: 两条读同一个转移环的路径 ρ^1, ρ^2，u_i 是 ξ 在 ρ^i 末端的子树
    :param labeled: 标注树按同样位置得到的分解，用来检查向量和不变
    """
    __slots__ = ('zeta1', 'zeta2', 's', 't', 'u1', 'u2', 'hole', 'paths', 'p', 'labeled')

    def __init__(self, zeta1, zeta2, s, t, u1, u2, hole, paths=None, p=None, labeled=None):
        self.zeta1 = zeta1
        self.zeta2 = zeta2
        self.s = tuple(s)
        self.t = tuple(t)
        self.u1 = u1
        self.u2 = u2
        self.hole = hole
        self.paths = paths
        self.p = p
        self.labeled = labeled

    def __str__(self):
        return '\n'.join([f'ζ1 = {self.zeta1}', f'ζ2 = {self.zeta2}  (hole x{self.hole})',
                          's = ' + ' , '.join(map(str, self.s)), 't = ' + ' , '.join(map(str, self.t)),
                          f'u1 = {self.u1}', f'u2 = {self.u2}'])

    def __repr__(self):
        return f'ExchangeDecomposition(ζ1={str(self.zeta1)!r}, ζ2={str(self.zeta2)!r})'


def _decompose(tree, path1, path2, p=None):
    a, b = path1[0], path2[0]
    body = replace_at(replace_at(tree, a, Tree(Var(1))), b, Tree(Var(2)))
    _, z2, s, j = spine(tree, path1[:-1], hole=path1[-1])
    _, z2b, t, jb = spine(tree, path2[:-1], hole=path2[-1])
    if z2 != z2b or j != jb:
        dprint(str(z2), str(z2b), j, jb)
        raise ShapeError('the two spines differ')
    return ExchangeDecomposition(Context(body, 2), z2, s, t, subtree_at(tree, path1[-1]),
                                 subtree_at(tree, path2[-1]), j, (tuple(path1), tuple(path2)), p)


def _cycles(g, labeled, run, p):
    """所有长度1..p-1、首尾状态相同的向下路径，按起点字典序

    :return: 生成器，每项是 (转移环的字, 路径)；字里每个元素是 (转移, 孩子编号)
    """
    for start in iter_positions(labeled):
        q = run.states[start]
        todo = [((start,), ())]
        while todo:
            path, word = todo.pop()
            last = path[-1]
            if len(path) >= p:
                continue
            t = transition_at(g, labeled, run, last)
            nxt = []
            for mu in range(1, len(t.children) + 1):
                child = last + (mu,)
                w = word + ((t, mu),)
                if run.states[child] == q:
                    yield w, path + (child,)
                nxt.append((path + (child,), w))
            todo.extend(reversed(nxt))


def _tall_apart(labeled, a, b, p):
    """a、b所在的、在最长公共前缀下分叉的两棵子树高度都至少是p"""
    k = 0
    while a[k] == b[k]:
        k += 1
    return subtree_at(labeled, a[:k + 1]).height >= p and subtree_at(labeled, b[:k + 1]).height >= p


def cycle_count(g, max_length):
    """环图G里长度不超过max_length的简单环个数

    G的点是状态，(τ, i) 是从τ的源状态到第i个孩子状态的边；同一个环的不同起点分别计数
    """
    edges = collections.defaultdict(list)
    for t in g.transitions:
        for i, q in enumerate(t.children, start=1):
            edges[t.src].append(((t, i), q))

    total = 0
    for f0 in g.states:
        todo = [(f0, frozenset(), 0)]
        while todo:
            f, seen, n = todo.pop()
            if n == max_length:
                continue
            for _, q in edges[f]:
                if q == f0:
                    total += 1
                elif q not in seen:
                    todo.append((q, seen | {q}, n + 1))
    return total


def exchange_find(g, xi, run):
    """在接受计算run里找一对互相独立、读同一个转移环的路径，返回对应的分解

    p = |Q|+1，路径至多p个节点，两条路径分别落在最长公共前缀下分叉的两棵高度至少为p的子树里

    >>> g = GPTA(['q'], {'σ': 2, 'γ': 1, '#': 0}, [(0,)], 'q',
    ...          [('q', 'σ', (0,), ('q', 'q')), ('q', 'γ', (0,), ('q',)), ('q', '#', (0,))],
    ...          SemilinearSet.full(1))
    >>> xi = parse_tree('σ(γγγ#,γγγ#)', g.alphabet)
    >>> d = exchange_find(g, xi, member(g, xi))
    >>> str(d.zeta1), str(d.zeta2), str(d.u1)
    ('σ(x1,x2)', 'γ(x1)', 'γ(γ(#))')
    >>> str(exchange_reorder(d, 2))
    'σ(γ(γ(#)),γ(γ(γ(γ(#)))))'
    """
    labeled = annotate(xi, run.labeling)
    p = len(g.states) + 1
    seen = collections.defaultdict(list)
    for word, path in _cycles(g, labeled, run, p):
        for other in seen[word]:
            if independent(other[0], path[0]) and _tall_apart(labeled, other[0], path[0], p):
                d = _decompose(xi, other, path, p)
                d.labeled = _decompose(labeled, other, path, p)
                h = d.zeta2.body.height
                assert 0 < h < p, h
                logger.debug('exchange at %s and %s: ζ2 = %s', format_position(other[0]),
                             format_position(path[0]), d.zeta2)
                return d
        seen[word].append(path)

    l = cycle_count(g, p) + 1
    dprint(str(xi), l, p)
    raise NoDecompositionError(f'no pair of independent equal cycles in {xi} (l={l}, p={p})', l=l, p=p)


def exchange_reorder(d, variant):
    """按引理的三种形式重新拼树

    variant=1 是原树，2 把ζ2[s]挪到右边的u2上面，3 把ζ2[t]挪到左边的u1上面
    """
    z2, j = d.zeta2, d.hole
    if variant == 1:
        pair = [compose_with_hole(z2, d.s, j, d.u1), compose_with_hole(z2, d.t, j, d.u2)]
    elif variant == 2:
        pair = [d.u1, compose_with_hole(z2, d.s, j, compose_with_hole(z2, d.t, j, d.u2))]
    elif variant == 3:
        pair = [compose_with_hole(z2, d.s, j, compose_with_hole(z2, d.t, j, d.u1)), d.u2]
    else:
        raise ValueError(f'variant must be 1, 2 or 3, got {variant!r}')
    return compose(d.zeta1, pair)
