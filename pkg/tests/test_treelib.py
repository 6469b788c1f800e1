#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 19:20


import pytest
from hypothesis import given, strategies as st

from pyxlpta.automata.treelib import *

SIGMA = RankedAlphabet({'σ': 2, 'γ': 1, 'α': 0, 'β': 0})
XI = parse_tree('σ(σ(γ(α),α),γ(γ(u)))')


def trees():
    leaves = st.sampled_from(['α', 'β']).map(Tree)
    return st.recursive(leaves, lambda kids: st.one_of(kids.map(lambda c: Tree('γ', [c])),
                                                       st.tuples(kids, kids).map(lambda cs: Tree('σ', cs))),
                        max_leaves=8)


def test_positions_example():
    ps = positions(XI)
    assert [format_position(p) for p in ps] == ['ε', '1', '11', '111', '12', '2', '21', '211']
    assert len(ps) == XI.size == 8
    assert positions(leaf('α')) == [()]
    assert positions(parse_tree('σ(α,α)')) == [(), (1,), (2,)]


def test_access_and_replace():
    assert label_at(XI, (2, 1)) == 'γ'
    assert str(subtree_at(XI, (2,))) == 'γ(γ(u))'
    z = parse_tree('σ(β,β)')
    assert replace_at(XI, (), z) is z
    with pytest.raises(PositionError):
        subtree_at(XI, (3,))
    with pytest.raises(PositionError):
        replace_at(XI, (1, 1, 2), z)


def test_height_size_independent():
    assert (height(leaf('α')), size(leaf('α'))) == (0, 1)
    assert independent((1,), (2,))
    assert not independent((1,), (1, 1))
    assert XI.height == 3


def test_complete_paths():
    paths = complete_paths(parse_tree('a(b(#,#),b(#,#))'))
    assert len(paths) == 4
    assert all(''.join(w) == 'ab#' for _, w in paths)
    assert [''.join(w) for _, w in complete_paths(leaf('α'))] == ['α']
    assert [''.join(w) for _, w in complete_paths(parse_tree('σ(γ(#),#)'))] == ['σγ#', 'σ#']


def test_compose():
    c = Context(parse_context('σ(γ(x1),x2)'))
    assert str(compose(c, [leaf('α'), leaf('α')])) == 'σ(γ(α),α)'
    t = parse_tree('σ(α,β)')
    assert compose(Context(parse_context('x1')), [t]) == t
    assert str(compose(Context(parse_context('σ(x1,x2)')), [leaf('α'), leaf('β')])) == 'σ(α,β)'
    with pytest.raises(ArityError):
        compose(c, [leaf('α')])


def test_context_variable_order():
    with pytest.raises(ArityError):
        Context(parse_context('σ(x2,x1)'))
    with pytest.raises(ArityError):
        Context(parse_context('σ(x1,x1)'))


def test_spine_examples():
    outer, ctx, fillers, j = spine(XI, [(1,), (1, 1)])
    assert str(ctx) == 'σ(γ(x1),x2)'
    assert j is None

    outer, ctx, fillers, _ = spine(parse_tree('σ(α,α)'), [()])
    assert (str(outer), str(ctx)) == ('x1', 'σ(x1,x2)')

    assert str(spine(parse_tree('σ(α,γ(α))'), [(), (2,)])[1]) == 'σ(x1,γ(x2))'

    with pytest.raises(PathError):
        spine(XI, [(), (1, 1)])
    with pytest.raises(PathError):
        spine(XI, [(1,), (1, 1)], hole=(2,))


def test_lex_compare():
    assert lex_compare((1,), (1, 1)) == -1
    assert lex_compare((1, 2), (2,)) == -1
    assert lex_compare((), ()) == 0
    assert lex_compare((2,), (1, 5)) == 1


def test_parse_tree():
    assert parse_tree('σ(γγα,α)', SIGMA) == parse_tree('σ(γ(γ(α)),α)', SIGMA)
    with pytest.raises(ArityError):
        parse_tree('σ(α)', SIGMA)
    with pytest.raises(FormatError):
        parse_tree('σ(α,', SIGMA)
    with pytest.raises(FormatError):
        parse_tree('δ', SIGMA)


def test_iter_trees():
    ts = list(iter_trees(SIGMA, max_size=3))
    assert len(ts) == len(set(ts))
    assert all(t.size <= 3 for t in ts)
    # 规模1：α β；规模2：γα γβ；规模3：γγα γγβ σ(α,α) σ(α,β) σ(β,α) σ(β,β)
    assert len(ts) == 10
    assert all(t.height <= 1 for t in iter_trees(SIGMA, max_height=1))


@given(trees())
def test_positions_are_preorder(t):
    ps = positions(t)
    assert len(ps) == t.size
    assert ps == sorted(ps)
    assert t.size == 1 + sum(c.size for c in t.children)
    assert t.height == (1 + max(c.height for c in t.children) if t.children else 0)


@given(trees())
def test_replace_with_own_subtree(t):
    for p in positions(t):
        assert replace_at(t, p, subtree_at(t, p)) == t


@given(trees())
def test_text_form(t):
    assert parse_tree(str(t), SIGMA) == t


@given(trees(), st.data())
def test_compose_keeps_context_positions(t, data):
    leaves = [p for p in positions(t) if not subtree_at(t, p).children]
    chosen = sorted(data.draw(st.sets(st.sampled_from(leaves))))
    body = t
    for i, p in enumerate(chosen, start=1):
        body = replace_at(body, p, Tree(Var(i)))
    c = Context(body)
    fillers = data.draw(st.lists(trees(), min_size=c.arity, max_size=c.arity))

    composed = compose(c, fillers)
    outside = [p for p in positions(composed) if not any(is_prefix(v, p) for v in c.var_positions)]
    assert outside == [p for p in positions(c.body) if not isinstance(label_at(c.body, p), Var)]
    assert all(label_at(composed, p) == label_at(c.body, p) for p in outside)
    for v, z in zip(c.var_positions, fillers):
        assert subtree_at(composed, v) == z
        assert [p for p in positions(composed) if is_prefix(v, p)] == [v + q for q in positions(z)]


@given(trees(), st.data())
def test_spine_reconstructs_tree(t, data):
    end = data.draw(st.sampled_from(positions(t)))
    k = data.draw(st.integers(0, len(end)))
    path = [end[:i] for i in range(k, len(end) + 1)]

    outer, ctx, fillers, j = spine(t, path)
    assert j is None
    assert compose(outer, [compose(ctx, fillers)]) == t
    assert ctx.body.size - ctx.arity == len(path)

    node = subtree_at(t, end)
    if node.children:
        hole = end + (data.draw(st.integers(1, len(node.children))),)
        outer, ctx, fillers, j = spine(t, path, hole=hole)
        assert compose(outer, [compose_with_hole(ctx, fillers, j, subtree_at(t, hole))]) == t
