#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 19:10


import itertools
import random
import time

import pytest
from hypothesis import given, strategies as st

from pyxlpta.util.mathlib import *

DIAG = SemilinearSet([LinearSet((1, 1), [(1, 1)])])


def test_member_examples():
    assert member(DIAG, (1, 1))
    assert not member(DIAG, (0, 0))
    assert not member(SemilinearSet.empty(2), (0, 0))
    with pytest.raises(DimensionError):
        member(DIAG, (1, 1, 1))


def test_membership_witness_examples():
    assert membership_witness(DIAG, (3, 3)) == (0, (2,))
    assert membership_witness(DIAG, (1, 1)) == (0, (0,))
    assert membership_witness(DIAG, (0, 4)) is None


def test_union_and_lift():
    c = DIAG | SemilinearSet([LinearSet((0, 5))])
    assert (0, 5) in c and (2, 2) in c and (0, 4) not in c
    lifted = c.lift(1)
    assert lifted.dim == 3
    assert (2, 2, 1) in lifted and (2, 2, 0) not in lifted
    with pytest.raises(DimensionError):
        DIAG | SemilinearSet.full(3)


vectors = st.integers(1, 2).flatmap(
    lambda n: st.tuples(st.tuples(*[st.integers(0, 3)] * n),
                        st.lists(st.tuples(*[st.integers(0, 2)] * n), max_size=3),
                        st.tuples(*[st.integers(0, 6)] * n)))


@given(vectors)
def test_linear_member_matches_enumeration(case):
    base, periods, d = case
    c = LinearSet(base, periods)
    nonzero = [p for p in periods if any(p)]
    expected = any(vadd(base, vsum([vscale(k, p) for k, p in zip(ms, nonzero)], len(d))) == d
                   for ms in itertools.product(range(max(d) + 1), repeat=len(nonzero)))
    assert c.member(d) == expected

    # 去掉全零周期向量不改变集合
    assert LinearSet(base, nonzero) == c

    m = c.witness(d)
    if m is not None:
        assert vadd(base, vsum([vscale(k, p) for k, p in zip(m, c.periods)], len(d))) == d


def test_solve_nonneg_examples():
    assert solve_nonneg(LinearSystem(2, [((1, 0), 2), ((0, 1), 3)])) == (2, 3)
    assert solve_nonneg(LinearSystem(1, [((2,), 3)])) is None
    x = solve_nonneg(LinearSystem(2, [((1, 2), 5)], [1, 0]))
    assert x[0] >= 1 and x[0] + 2 * x[1] == 5


def test_solve_nonneg_negative_coefficients():
    # 流量守恒这类带负系数的方程
    sys_ = LinearSystem(3, [((1, -1, 0), 0), ((0, 1, -1), 0), ((1, 1, 1), 6)])
    assert solve_nonneg(sys_) == (2, 2, 2)
    assert solve_nonneg(LinearSystem(2, [((1, -1), 0), ((1, 1), 3)])) is None


def test_solve_nonneg_objective():
    sys_ = LinearSystem(2, [((1, -1), 0)], [1, 1])
    assert solve_nonneg(sys_, objective=[1, 1]) == (1, 1)


@pytest.mark.parametrize('eqs, solvable', [
    ([((3, -3, -1, 0), 1), ((0, 0, 1, 1), 1)], False),
    ([((3, -3, -1, 0), 2), ((0, 0, 1, 1), 0)], False),
    ([((3, -3, -1, 0), 1), ((0, 0, 1, 1), 2)], True),
])
def test_solve_nonneg_unbounded_relaxation(eqs, solvable):
    # LP松弛沿 (1,1,0,0) 无界，分支不能一路爬到search_bound
    start = time.perf_counter()
    sys_ = LinearSystem(4, eqs)
    x = solve_nonneg(sys_)
    assert (x is not None) == solvable
    if solvable:
        assert sys_.satisfied(x) and x[2] == 2
    assert time.perf_counter() - start < 10


def _exhaustive(sys_, hi):
    for x in itertools.product(range(hi + 1), repeat=sys_.n):
        if sys_.satisfied(x):
            return x
    return None


def test_solve_nonneg_against_exhaustive_search():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(1, 3)
        eqs = [(tuple(rng.randint(-2, 2) for _ in range(n)), rng.randint(-10, 10))
               for _ in range(rng.randint(1, 2))]
        sys_ = LinearSystem(n, eqs, [rng.randint(0, 1) for _ in range(n)])
        x = solve_nonneg(sys_)
        if x is not None:
            assert sys_.satisfied(x)
        elif _exhaustive(sys_, 15) is not None:
            pytest.fail(f'solver missed a solution of {sys_}')


def test_search_bound():
    assert search_bound([[1, 2]], [5]) == 250
    assert search_bound([[0]], [0]) == 1


def test_lattice_solvable():
    assert not lattice_solvable([[2, 4]], [3])
    assert lattice_solvable([[2, 3]], [1])
    assert lattice_solvable([[1, -1], [1, 1]], [0, 4])
    assert not lattice_solvable([[0, 0]], [1])
    assert lattice_solvable([[0, 0]], [0])


def test_lp_feasible():
    assert lp_feasible(LinearSystem(1, [((2,), 3)]))
    assert not lp_feasible(LinearSystem(2, [((1, 1), -1)]))
    assert lp_feasible(LinearSystem(2))


def test_vector_helpers():
    assert vector_str((1, 0, 2)) == '1 0 2'
    assert parse_vector(' 1 0  2 ') == (1, 0, 2)
    assert unit_vector(3, 1) == (0, 1, 0)
    with pytest.raises(DimensionError):
        check_dim((1, 2), 3)
