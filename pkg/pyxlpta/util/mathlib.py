#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 10:30


"""
数学相关功能库
目前主要是 ℕ^s 上的向量、线性集、半线性集，以及一个非负整数线性方程组求解器

向量统一用python的int元组表示，精确计算，不会溢出
"""

import math
from queue import LifoQueue

import numpy as np
from scipy.optimize import linprog

from pyxlpta.util.debuglib import *

logger = get_logger(__name__)


____section_1_vector = """
向量的基本运算

都是很简单的函数，但整个库到处在用，统一放在这里
"""


def vzero(n):
    """
    >>> vzero(3)
    (0, 0, 0)
    """
    return (0,) * n


def unit_vector(n, i):
    """第i个（从0开始）单位向量

    >>> unit_vector(3, 2)
    (0, 0, 1)
    """
    return tuple(int(j == i) for j in range(n))


def vadd(a, b):
    """
    >>> vadd((1, 2), (3, 4))
    (4, 6)
    """
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(k, a):
    return tuple(k * x for x in a)


def vsum(vectors, n):
    """多个向量求和，vectors为空时返回n维零向量

    >>> vsum([(1, 0), (0, 2), (1, 1)], 2)
    (2, 3)
    >>> vsum([], 2)
    (0, 0)
    """
    res = vzero(n)
    for v in vectors:
        res = vadd(res, v)
    return res


def vector_str(v):
    """向量的文本格式：空格分隔的十进制整数

    >>> vector_str((1, 0, 12))
    '1 0 12'
    """
    return ' '.join(map(str, v))


def parse_vector(s):
    """
    >>> parse_vector(' 1 0  12 ')
    (1, 0, 12)
    """
    try:
        return tuple(int(x) for x in s.split())
    except ValueError:
        dprint(s)
        raise FormatError(f'not a vector: {s!r}')


def check_dim(v, n, what='vector'):
    """检查向量维数，不对就抛 DimensionError"""
    if len(v) != n:
        dprint(v, n)
        raise DimensionError(f'{what} {vector_str(v)!r} has dimension {len(v)}, expected {n}')
    return v


def check_nonneg(v, what='vector'):
    if any((not isinstance(x, int)) or x < 0 for x in v):
        dprint(v)
        raise PtaError(f'{what} {v!r} must consist of nonnegative integers')
    return v


____section_2_linear_set = """
线性集、半线性集

线性集 {d0 + Σ m_i·d_i | m_i ∈ ℕ}，半线性集是有限个线性集的并
因为周期向量都非负，成员判定只要对系数做dfs，不需要通用求解器
"""


class LinearSet:
    """线性集

    >>> c = LinearSet((1, 1), [(1, 1)])
    >>> c.member((3, 3)), c.member((0, 0)), c.member((2, 3))
    (True, False, False)
    >>> c.witness((3, 3))
    (2,)

    全零的周期向量不改变集合，构造时直接去掉
    >>> LinearSet((0,), [(0,), (2,)]).periods
    ((2,),)
    """
    __slots__ = ('base', 'periods', '_cache')

    def __init__(self, base, periods=()):
        base = tuple(base)
        check_nonneg(base, 'base')
        ls = []
        for p in periods:
            p = tuple(p)
            check_dim(p, len(base), 'period')
            check_nonneg(p, 'period')
            if any(p):
                ls.append(p)
        self.base = base
        self.periods = tuple(ls)
        self._cache = {}

    @property
    def dim(self):
        return len(self.base)

    def witness(self, d):
        """返回系数 (m_1, ..., m_l)，使得 base + Σ m_i·period_i = d；不存在则返回None

        每个系数不会超过余量的最大分量，因为周期向量非零非负，再多一份就一定超出d
        """
        d = tuple(d)
        check_dim(d, self.dim)
        if d in self._cache:
            return self._cache[d]

        residual = vsub(d, self.base)
        if min(residual, default=0) < 0:
            res = None
        else:
            res = self._search(residual)
        self._cache[d] = res
        return res

    def _search(self, residual):
        periods = self.periods
        memo = {}

        def dfs(i, r):
            if not any(r):
                return (0,) * (len(periods) - i)
            if i == len(periods):
                return None
            key = (i, r)
            if key in memo:
                return memo[key]
            res, m, cur, p = None, 0, r, periods[i]
            for m in range(max(r) + 1):
                sub = dfs(i + 1, cur)
                if sub is not None:
                    res = (m,) + sub
                    break
                cur = vsub(cur, p)
                # 剪枝：某一维已经减成负数，m再大也没用
                if min(cur) < 0:
                    break
            memo[key] = res
            return res

        return dfs(0, residual)

    def member(self, d):
        return self.witness(d) is not None

    def __contains__(self, d):
        return self.member(d)

    def lift(self, value=0):
        """在末尾加一维：基向量的新分量是value，周期向量的新分量是0"""
        return LinearSet(self.base + (value,), [p + (0,) for p in self.periods])

    def to_line(self):
        """
        >>> LinearSet((1, 1), [(1, 1), (0, 2)]).to_line()
        'linear 1 1 | 1 1 | 0 2'
        """
        return ' | '.join(['linear ' + vector_str(self.base)] + [vector_str(p) for p in self.periods])

    def __eq__(self, other):
        return isinstance(other, LinearSet) and (self.base, self.periods) == (other.base, other.periods)

    def __hash__(self):
        return hash((self.base, self.periods))

    def __repr__(self):
        return f'LinearSet({self.base}, {list(self.periods)})'


class SemilinearSet:
    """有限个线性集的并，零个分量表示空集

    >>> c = SemilinearSet([LinearSet((1, 1), [(1, 1)])])
    >>> (2, 2) in c, (0, 0) in c
    (True, False)
    >>> (0, 0) in SemilinearSet.empty(2)
    False
    >>> (5, 0, 7) in SemilinearSet.full(3)
    True
    """
    __slots__ = ('components', 'dim')

    def __init__(self, components=(), dim=None):
        components = tuple(components)
        if dim is None:
            if not components:
                raise DimensionError('the empty semilinear set needs an explicit dimension')
            dim = components[0].dim
        for c in components:
            if c.dim != dim:
                dprint(c, dim)
                raise DimensionError(f'component {c.to_line()!r} has dimension {c.dim}, expected {dim}')
        self.components = components
        self.dim = dim

    @classmethod
    def empty(cls, dim):
        return cls((), dim)

    @classmethod
    def full(cls, dim):
        """ℕ^dim"""
        return cls([LinearSet(vzero(dim), [unit_vector(dim, i) for i in range(dim)])], dim)

    def membership_witness(self, d):
        """返回 (分量下标, 系数)，不属于该集合则返回None"""
        d = tuple(d)
        check_dim(d, self.dim)
        if min(d, default=0) < 0:
            return None
        for i, c in enumerate(self.components):
            m = c.witness(d)
            if m is not None:
                return i, m
        return None

    def member(self, d):
        return self.membership_witness(d) is not None

    def __contains__(self, d):
        return self.member(d)

    def __or__(self, other):
        if self.dim != other.dim:
            raise DimensionError(f'union of dimension {self.dim} and {other.dim}')
        return SemilinearSet(self.components + other.components, self.dim)

    def lift(self, value=0):
        """C × {value}

        >>> c = SemilinearSet([LinearSet((1,), [(1,)])]).lift(0)
        >>> (3, 0) in c, (3, 1) in c
        (True, False)
        """
        return SemilinearSet([c.lift(value) for c in self.components], self.dim + 1)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __eq__(self, other):
        return isinstance(other, SemilinearSet) and (self.dim, self.components) == (other.dim, other.components)

    def __hash__(self):
        return hash((self.dim, self.components))

    def __repr__(self):
        return f'SemilinearSet({list(self.components)}, dim={self.dim})'


def member(c, d):
    """d ∈ C

    >>> member(SemilinearSet([LinearSet((1, 1), [(1, 1)])]), (1, 1))
    True
    """
    return c.member(d)


def membership_witness(c, d):
    """
    >>> membership_witness(SemilinearSet([LinearSet((1, 1), [(1, 1)])]), (3, 3))
    (0, (2,))
    >>> membership_witness(SemilinearSet([LinearSet((1, 1), [(1, 1)])]), (0, 3))
    """
    return c.membership_witness(d)


____section_3_linear_system = """
非负整数线性方程组

PA判空要解带负系数的流量守恒方程，所以这里要一个完整（不会漏解）的求解器
做法：
    1、用下界做平移 x = l + y，变成 y ≥ 0
    2、先在整数格上判一次可解性（列变换化Hermite形），奇偶性这类无解直接排除
    3、再在 [0, B] 的盒子里用LP松弛做分支定界
"""


class LinearSystem:
    """n个变量，若干条等式 coeffs·x = rhs，每个变量有非负整数下界

    >>> LinearSystem(2, [((1, 2), 5)], [1, 0]).equations
    (((1, 2), 5),)
    """
    __slots__ = ('n', 'equations', 'lower_bounds')

    def __init__(self, n, equations=(), lower_bounds=None):
        self.n = n
        eqs = []
        for coeffs, rhs in equations:
            coeffs = tuple(int(x) for x in coeffs)
            check_dim(coeffs, n, 'coefficient row')
            eqs.append((coeffs, int(rhs)))
        self.equations = tuple(eqs)
        if lower_bounds is None:
            lower_bounds = vzero(n)
        self.lower_bounds = check_nonneg(tuple(check_dim(tuple(lower_bounds), n, 'lower bounds')), 'lower bounds')

    def satisfied(self, x):
        """精确整数验证"""
        if len(x) != self.n or any(v < lo for v, lo in zip(x, self.lower_bounds)):
            return False
        return all(sum(a * v for a, v in zip(coeffs, x)) == rhs for coeffs, rhs in self.equations)

    def __repr__(self):
        return f'LinearSystem({self.n}, {list(self.equations)}, {list(self.lower_bounds)})'


def lattice_solvable(rows, rhs):
    """判断 A·x = b 是否有整数解（不要求非负）

    对A做幺模列变换化成下三角，再前代求解，每一步要求整除

    >>> lattice_solvable([[2, 0]], [3])
    False
    >>> lattice_solvable([[2, 3]], [1])
    True
    >>> lattice_solvable([[2, -2], [1, 1]], [2, 2])
    False
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    ys = []
    col = 0
    for i in range(m):
        # 1、辗转相除，把第i行在col之后的非零元压成一个
        while True:
            nz = [j for j in range(col, n) if a[i][j]]
            if len(nz) <= 1:
                break
            k = min(nz, key=lambda j: abs(a[i][j]))
            for j in nz:
                if j != k:
                    q = a[i][j] // a[i][k]
                    for r in range(m):
                        a[r][j] -= q * a[r][k]

        # 2、前代
        residual = rhs[i] - sum(a[i][j] * ys[j] for j in range(col))
        if not nz:
            if residual:
                return False
            continue
        k = nz[0]
        for r in range(m):
            a[r][k], a[r][col] = a[r][col], a[r][k]
        if residual % a[i][col]:
            return False
        ys.append(residual // a[i][col])
        col += 1
    return True


def search_bound(rows, rhs):
    """非负整数解的搜索上界

    若 A·x = b（A为m×n）有非负整数解，则必有一个解的每个分量都不超过
        n · (m·a)^(2m+1)
    其中a是A和b所有元素绝对值的最大值（Papadimitriou 1981的整数规划解规模界）

    >>> search_bound([[1, 2]], [5])
    250
    """
    m, n = len(rows), len(rows[0])
    a = max([abs(x) for r in rows for x in r] + [abs(x) for x in rhs] + [1])
    return n * (m * a) ** (2 * m + 1)


def solve_nonneg(sys, objective=None):
    """求 sys 的一个非负整数解，无解返回None

    :param objective: 可选的线性目标（长度n，非负系数），给出时返回盒内目标值最小的解

    >>> solve_nonneg(LinearSystem(2, [((1, 0), 2), ((0, 1), 3)]))
    (2, 3)
    >>> solve_nonneg(LinearSystem(1, [((2,), 3)]))
    >>> x = solve_nonneg(LinearSystem(2, [((1, 2), 5)], [1, 0]))
    >>> x[0] + 2 * x[1] == 5 and x[0] >= 1
    True
    """
    n, lows = sys.n, sys.lower_bounds

    # 1、平移下界
    rows = [list(coeffs) for coeffs, _ in sys.equations]
    rhs = [r - sum(a * lo for a, lo in zip(coeffs, lows)) for coeffs, r in sys.equations]
    if not rows:
        return tuple(lows)
    if n == 0:
        return () if not any(rhs) else None

    # 2、整数格可解性
    if not lattice_solvable(rows, rhs):
        logger.debug('lattice infeasible: %s', sys)
        return None

    # 3、分支定界
    bound = search_bound(rows, rhs)
    y = _branch_and_bound(rows, rhs, bound, objective)
    if y is None:
        return None
    x = tuple(lo + v for lo, v in zip(lows, y))
    assert sys.satisfied(x), (sys, x)
    return x


def _branch_and_bound(rows, rhs, bound, objective=None, eps=1e-6):
    """在 0 ≤ y ≤ bound 内深度优先分支定界

    LP的上界用None表示没被分支收紧过，避免把巨大的bound交给浮点求解器

    LP松弛无界时，上取整的分支会沿核里的方向一格格往上爬，直到bound；
    所以一个盒子如果是某个祖先沿非负核向量平移上去的，就剪掉（见 _shifted_ancestor）
    """
    n = len(rows[0])
    A = np.array(rows, dtype=float)
    b = np.array(rhs, dtype=float)
    c = np.array(objective, dtype=float) if objective is not None else np.zeros(n)

    def verified(y):
        return all(sum(a * v for a, v in zip(r, y)) == t for r, t in zip(rows, rhs))

    best, best_value = None, math.inf
    q = LifoQueue()
    q.put((tuple((0, None) for _ in range(n)), ()))
    nodes = pruned = 0

    def push(child, path):
        nonlocal pruned
        if not child:
            return
        if _shifted_ancestor(rows, path, child):
            pruned += 1
        else:
            q.put((child, path))

    while not q.empty():
        box, path = q.get()
        path = path + (box,)
        nodes += 1
        res = linprog(c, A_eq=A, b_eq=b, bounds=box, method='highs')
        if res.status != 0:
            continue
        if objective is not None and math.ceil(res.fun - eps) >= best_value:
            continue

        x = res.x
        frac = np.abs(x - np.round(x))
        j = int(np.argmax(frac))
        if frac[j] <= eps:
            y = tuple(int(round(v)) for v in x)
            if verified(y) and all(lo <= v <= (bound if hi is None else hi) for v, (lo, hi) in zip(y, box)):
                value = sum(int(k) * v for k, v in zip(objective or (), y))
                if objective is None:
                    logger.debug('branch and bound: %d nodes', nodes)
                    return y
                if value < best_value:
                    best, best_value = y, value
                continue
            # 浮点舍入后没通过精确验证，在某个还能动的变量上三路分支
            free = [i for i, (lo, hi) in enumerate(box) if (bound if hi is None else hi) > lo]
            if not free:
                continue
            j = free[0]
            v = min(max(y[j], box[j][0]), bound if box[j][1] is None else box[j][1])
            for lo, hi in ((v + 1, box[j][1]), (box[j][0], v - 1), (v, v)):
                push(_narrow(box, j, lo, hi, bound), path)
            continue

        # 在分数部分最大的变量上分支，先走下取整的一侧
        v = x[j]
        for lo, hi in ((math.ceil(v), box[j][1]), (box[j][0], math.floor(v))):
            push(_narrow(box, j, lo, hi, bound), path)

    logger.debug('branch and bound: %d nodes, %d shifted boxes pruned, best %s', nodes, pruned, best)
    return best


def _shifted_ancestor(rows, path, box):
    """box是不是path里某个祖先的下界加上一个非负核向量d（A·d = 0）、上界不变

    这时box里的解y减去d还是祖先里的解，目标值不增、分量和变小；
    按分量和取最小的那个解不会落进这样的box，所以剪掉不丢解

    >>> rows = [[1, -1]]
    >>> _shifted_ancestor(rows, [((0, None), (0, None))], ((2, None), (2, None)))
    True
    >>> _shifted_ancestor(rows, [((0, None), (0, None))], ((2, None), (1, None)))
    False
    >>> _shifted_ancestor(rows, [((0, None), (0, 5))], ((2, None), (2, None)))
    False
    """
    for anc in path:
        if any(h1 != h2 for (_, h1), (_, h2) in zip(anc, box)):
            continue
        d = [l2 - l1 for (l1, _), (l2, _) in zip(anc, box)]
        if min(d) < 0 or not any(d):
            continue
        if all(sum(a * v for a, v in zip(r, d)) == 0 for r in rows):
            return True
    return False


def _narrow(box, j, lo, hi, bound):
    """收紧第j个变量的区间，空区间返回None"""
    hi_value = bound if hi is None else min(hi, bound)
    if lo > hi_value:
        return None
    box = list(box)
    box[j] = (lo, hi if hi is None else hi_value)
    return tuple(box)


def lp_feasible(sys):
    """只看LP松弛（实数解）是否可行，作为整数求解前的廉价剪枝

    >>> lp_feasible(LinearSystem(2, [((1, 1), -1)]))
    False
    >>> lp_feasible(LinearSystem(1, [((2,), 3)]))
    True
    """
    if not sys.equations:
        return True
    A = np.array([coeffs for coeffs, _ in sys.equations], dtype=float)
    b = np.array([rhs for _, rhs in sys.equations], dtype=float)
    res = linprog(np.zeros(sys.n), A_eq=A, b_eq=b, bounds=[(lo, None) for lo in sys.lower_bounds], method='highs')
    return res.status == 0
