#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 19:40


import random

import pytest

from pyxlpta.automata.filelib import load_fixture
from pyxlpta.automata.ptarlib import *

FIXTURES = ['lab.pta', 'l3.pta', 'lin.ptar', 'reset.ptar', 'spinal.ptar']


def test_step_examples(fixture):
    lab = fixture('lab.pta')
    qa_a, qa_b, qb_b, qb_leaf = lab.transitions
    assert str(step(lab, initial_tree(lab), (), qa_a)) == 'a(qa⟨1 0⟩,qa⟨1 0⟩)'
    assert str(step(lab, Tree(Configuration('qb', (1, 1))), (), qb_leaf)) == '#'
    with pytest.raises(LeafConstraintViolated):
        step(lab, Tree(Configuration('qb', (1, 0))), (), qb_leaf)
    with pytest.raises(InapplicableTransition):
        step(lab, initial_tree(lab), (), qb_b)


def test_member_examples(fixture):
    lab = fixture('lab.pta')
    xi = parse_tree('a(b(#,#),b(#,#))', lab.alphabet)
    trace = member(lab, xi)
    assert trace is not None and len(trace) == xi.size
    assert trace_valid(lab, xi, trace)
    assert member(lab, parse_tree('#', lab.alphabet)) is None

    l3 = fixture('l3.pta')
    assert member(l3, parse_tree('γ(σ(γ#,γ#))', l3.alphabet)) is not None
    assert member(l3, parse_tree('γ(σ(γ#,γγ#))', l3.alphabet)) is None


def test_member_rejects_ill_ranked_tree(fixture):
    lab = fixture('lab.pta')
    with pytest.raises(ArityError):
        member(lab, Tree('a', [Tree('#')]))


def test_classify(fixture):
    assert classify(fixture('lin.ptar')) == AutomatonClass.LINEAR_PTAR
    assert classify(fixture('lab.pta')) == AutomatonClass.PTA
    assert classify(fixture('spinal.ptar')) == AutomatonClass.LINEAR_PTAR
    assert classify(fixture('reset.ptar')) == AutomatonClass.PTAR
    l3 = fixture('l3.pta')
    assert classify(l3) == AutomatonClass.PTA and not is_linear(l3)
    assert str(AutomatonClass.LINEAR_PTAR) == 'LINEAR-PTAR'


def test_trace_valid_variants(fixture):
    lab = fixture('lab.pta')
    xi = parse_tree('a(b(#,#),b(#,#))', lab.alphabet)
    steps = list(member(lab, xi))

    # 独立位置上的改写可以交换顺序
    right_first = [s for s in steps if s[1][:1] in ((), (2,))] + [s for s in steps if s[1][:1] == (1,)]
    assert trace_valid(lab, xi, ComputationTrace(xi, right_first))

    bad = list(steps)
    bad[1] = (lab.transitions[2], bad[1][1])
    assert not trace_valid(lab, xi, ComputationTrace(xi, bad))
    assert not trace_valid(lab, xi, ComputationTrace(xi, steps[:-1]))


def _ab_word(w):
    n = w.count('a')
    return n >= 1 and ''.join(w) == 'a' * n + 'b' * n + '#'


def _rand_ab_tree(rng, max_n):
    """每条路径都是 a^n b^n #，n各自随机"""

    def gen(i, j):
        if j == 0 and i < max_n and (i == 0 or rng.random() < 0.5):
            return Tree('a', [gen(i + 1, 0), gen(i + 1, 0)])
        if j < i:
            return Tree('b', [gen(i, j + 1), gen(i, j + 1)])
        return Tree('#')

    return gen(0, 0)


def test_lab_against_path_words(fixture):
    lab = fixture('lab.pta')
    rng = random.Random(3)
    checked = 0
    for _ in range(150):
        xi = _rand_ab_tree(rng, 4)
        assert height(xi) <= 8
        assert all(_ab_word(w) for _, w in complete_paths(xi))
        assert member(lab, xi) is not None

        inner = [p for p in positions(xi) if subtree_at(xi, p).children]
        for p in rng.sample(inner, min(8, len(inner))):
            flipped = relabel_at(xi, p, 'b' if label_at(xi, p) == 'a' else 'a')
            ok = all(_ab_word(w) for _, w in complete_paths(flipped))
            assert not ok
            assert (member(lab, flipped) is not None) == ok
            checked += 1
        checked += 1
    assert checked >= 500


def _exhaustive_member(a, xi):
    """按字典序逐个展开最左的配置，试遍所有转移"""

    def search(cur):
        todo = [p for p in iter_positions(cur) if isinstance(label_at(cur, p), Configuration)]
        if not todo:
            return cur == xi
        p = todo[0]
        if p not in known:
            return False
        q = label_at(cur, p).state
        for t in a.transitions_from(q):
            if t.symbol != label_at(xi, p):
                continue
            try:
                nxt = step(a, cur, p, t)
            except LeafConstraintViolated:
                continue
            if search(nxt):
                return True
        return False

    known = set(iter_positions(xi))
    return search(initial_tree(a))


@pytest.mark.parametrize('name', FIXTURES)
def test_member_against_exhaustive_search(name):
    a = load_fixture(name)
    for xi in iter_trees(a.alphabet, max_size=7):
        trace = member(a, xi)
        assert (trace is not None) == _exhaustive_member(a, xi), str(xi)
        if trace is not None:
            assert trace_valid(a, xi, trace)


def test_counters_follow_last_reset(fixture):
    a = fixture('lin.ptar')
    xi = parse_tree('a(cd#,b(cd#,#))', a.alphabet)
    trace = member(a, xi)
    assert trace is not None
    used = {p: t for t, p in trace}
    cur = initial_tree(a)
    for t, p in trace:
        w = vzero(a.dim)
        for k in range(len(p)):
            act = used[p[:k]].children[p[k] - 1][1]
            w = apply_action(act, w)
        assert label_at(cur, p).counters == w
        cur = step(a, cur, p, t)
    assert cur == xi


def test_replay_checks_segment_sums(fixture, monkeypatch):
    a = fixture('lin.ptar')
    xi = parse_tree('a(cd#,b(cd#,#))', a.alphabet)
    trace = member(a, xi)
    assert replay(a, trace) == xi

    # reset当成什么都不做：位置21上的qc会带着 (1 0) 出生
    monkeypatch.setattr('pyxlpta.automata.ptarlib.apply_action',
                        lambda action, w: w if action is RESET else vadd(w, action))
    with pytest.raises(AssertionError):
        replay(a, trace)


def test_bounded_witness(fixture):
    lab = fixture('lab.pta')
    assert bounded_witness(lab, 1) is None
    trace = bounded_witness(lab, 2)
    assert str(trace.subject) == 'a(b(#,#),b(#,#))'
    assert trace_valid(lab, trace.subject, trace)

    labc = fixture('labc.pta')
    trace = bounded_witness(labc, 3)
    assert trace is not None and member(labc, trace.subject) is not None
    assert bounded_witness(labc, 2) is None


def test_invalid_automaton():
    c = SemilinearSet.full(1)
    with pytest.raises(ArityError):
        PTAR(['q'], {'σ': 2, 'α': 0}, 'q', [('q', 'σ', (('q', (1,)),))], c)
    with pytest.raises(DimensionError):
        PTAR(['q'], {'γ': 1, 'α': 0}, 'q', [('q', 'γ', (('q', (1, 0)),))], c)
    with pytest.raises(PtaError):
        PTAR(['q'], {'γ': 1, 'α': 0}, 'q', [('q', 'γ', (('p', (1,)),))], c)
