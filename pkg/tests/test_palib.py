#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 19:30


import pytest

from pyxlpta.automata.palib import *

from randgen import corpus, rand_pa

AB = PA(['q'], 'q', ['q'], [('q', 'a', (1, 0), 'q'), ('q', 'b', (0, 1), 'q')],
        SemilinearSet([LinearSet((1, 1), [(1, 1)])]))


def test_run_valid():
    pa = PA(['q', 'f'], 'q', ['q', 'f'], [('q', 'a', (1,), 'f')], SemilinearSet([LinearSet((0,), [(1,)])]))
    assert run_valid(pa, PaRun([], 1))
    one = PA(['q', 'f'], 'q', ['f'], [('q', 'a', (1,), 'f')], SemilinearSet([LinearSet((1,))]))
    assert run_valid(one, PaRun(one.transitions, 1))
    two = PA(['q', 'f'], 'q', ['f'], [('q', 'a', (1,), 'f')], SemilinearSet([LinearSet((2,))]))
    assert not run_valid(two, PaRun(two.transitions, 1))
    # 不在Δ里的转移
    assert not run_valid(one, PaRun([PaTransition('q', 'b', (1,), 'f')], 1))


def test_is_empty_examples(fixture):
    assert is_empty(fixture('nofinal.pa')).empty

    pa = PA(['q'], 'q', ['q'], [], SemilinearSet.full(1))
    res = is_empty(pa)
    assert not res.empty and len(res.witness) == 0

    res = is_empty(AB)
    assert not res.empty
    assert len(res.witness) == 2
    assert run_valid(AB, res.witness)


def test_empty_constraint():
    pa = PA(['q'], 'q', ['q'], [('q', 'a', (1,), 'q')], SemilinearSet.empty(1))
    assert is_empty(pa).empty


def test_unreachable_final():
    pa = PA(['q', 'f'], 'q', ['f'], [('q', 'a', (1,), 'q')], SemilinearSet.full(1))
    assert is_empty(pa).empty
    assert brute_force_nonempty(pa, 6) is None


def test_witness_needs_repeated_cycle():
    # 要走三次a环才能凑到3，再用b离开
    pa = PA(['q', 'f'], 'q', ['f'], [('q', 'a', (1,), 'q'), ('q', 'b', (0,), 'f')],
            SemilinearSet([LinearSet((3,), [(5,)])]))
    res = is_empty(pa)
    assert not res.empty
    assert res.witness.word == ('a', 'a', 'a', 'b')


def test_pa_member(fixture):
    ab = fixture('ab.pa')
    assert pa_member(ab, ['a', 'b', 'b', 'a']) is not None
    assert pa_member(ab, ['a', 'b', 'b']) is None
    assert pa_member(ab, []) is None


def test_brute_force_nonempty():
    assert len(brute_force_nonempty(AB, 4)) == 2
    assert brute_force_nonempty(AB, 1) is None


def test_renaming_letters_keeps_decision():
    renamed = PA(['q'], 'q', ['q'], [('q', 'x', (1, 0), 'q'), ('q', 'y', (0, 1), 'q')], AB.constraint)
    assert is_empty(renamed).empty == is_empty(AB).empty


def test_random_corpus_against_brute_force():
    for pa in corpus(rand_pa, 200, seed=1):
        res = is_empty(pa)
        if res.empty:
            assert brute_force_nonempty(pa, 12) is None, pa
        else:
            assert len(res.witness) <= 12, pa
            assert run_valid(pa, res.witness)
            assert brute_force_nonempty(pa, 12) is not None


def test_undeclared_state():
    with pytest.raises(PtaError):
        PA(['q'], 'q', ['f'], [], SemilinearSet.full(1))
