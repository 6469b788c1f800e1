#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 20:40


import pytest

from pyxlpta.automata.filelib import *

ALL_FIXTURES = sorted(p.name for p in FIXTURE_DIR.iterdir() if p.suffix in ('.pta', '.ptar', '.gpta', '.pa', '.2cm'))

PTA_HEAD = """\
kind {kind}
dim 1
alphabet γ:1 α:0
states q
init q
linear 0 | 1
"""


@pytest.mark.parametrize('name', ALL_FIXTURES)
def test_fixture_round_trip(name):
    a = load_fixture(name)
    b = parse_automaton(dump_automaton(a))
    assert structure(b) == structure(a)
    assert automaton_kind(b) == name.rsplit('.', 1)[1]


def test_encoded_machine_round_trip(fixture):
    a = encode(fixture('incdec.2cm'))
    b = parse_automaton(dump_automaton(a))
    assert structure(b) == structure(a)
    assert automaton_kind(b) == 'pta'


def test_fixture_kinds(fixture):
    assert isinstance(fixture('lab.pta'), PTAR)
    assert isinstance(fixture('universal.gpta'), GPTA)
    assert isinstance(fixture('ab.pa'), PA)
    assert isinstance(fixture('incdec.2cm'), TwoCM)
    assert [t.name for t in fixture('spinal.ptar').transitions] == ['t1', 't2', 't3', 't4']
    assert fixture('ab.pa').alphabet == ('a', 'b')


def test_comments_and_blank_lines():
    a = parse_automaton('\n; 注释\n' + PTA_HEAD.format(kind='pta') + '\ntrans q -> α   ; 叶子\n')
    assert len(a.transitions) == 1
    assert a.constraint == SemilinearSet([LinearSet((0,), [(1,)])])


def test_missing_linear_means_empty_constraint():
    text = 'kind pa\ndim 1\nstates q\ninit q\nfinal q\n'
    a = parse_automaton(text)
    assert a.constraint == SemilinearSet.empty(1)


def test_reset_only_in_ptar_files():
    body = 'trans q -> γ ( q [reset] )\ntrans q -> α\n'
    a = parse_automaton(PTA_HEAD.format(kind='ptar') + body)
    assert a.transitions[0].children[0][1] is RESET
    with pytest.raises(FormatError, match=r'^line 7: a pta file cannot use reset'):
        parse_automaton(PTA_HEAD.format(kind='pta') + body)


@pytest.mark.parametrize('text, lineno', [
    ('kind pa\nfoo bar\n', 2),
    ('kind foo\n', 1),
    (PTA_HEAD.format(kind='pta') + 'trans q -> γ ( p [1] )\n', 7),
    (PTA_HEAD.format(kind='pta') + 'trans q -> γ ( q [1] , q [1] )\n', 7),
    (PTA_HEAD.format(kind='pta') + 'trans q -> β\n', 7),
    (PTA_HEAD.format(kind='pta') + 'trans q -> γ ( q [1 1] )\n', 7),
    (PTA_HEAD.format(kind='pta') + 'trans q -> γ ( q [1]\n', 7),
    ('kind pta\ndim x\n', 2),
    ('kind pa\ndim 0\nstates q\ninit q\n', 2),
    ('kind pa\ndim 1\nstates q q\ninit q\n', 3),
    ('kind pa\ndim 1\nstates q\ninit p\n', 4),
    ('kind pa\ndim 1\nstates q\ninit q\ninit q\n', 5),
    ('kind pa\ndim 1\nstates q\ninit q\nfinal f\n', 5),
    ('kind pa\ndim 1\nstates q\ninit q\nletters a\ntrans q -b[1]-> q\n', 6),
    ('kind pa\ndim 2\nstates q\ninit q\nlinear 1 | 1 1\n', 5),
    ('kind 2cm\nstates q\ninit q\ntrans q inc3 q\n', 4),
    ('kind gpta\ndim 1\nalphabet α:0\ndvectors 0\nstates q\ninit q\ntrans q -> α [1]\n', 7),
])
def test_errors_carry_line_numbers(text, lineno):
    with pytest.raises(FormatError) as e:
        parse_automaton(text)
    assert e.value.lineno == lineno
    assert str(e.value).startswith(f'line {lineno}: ')


def test_errors_without_line_numbers():
    with pytest.raises(FormatError) as e:
        parse_automaton('dim 1\n')
    assert e.value.lineno is None and 'missing kind' in str(e.value)

    with pytest.raises(FormatError, match='missing states'):
        parse_automaton('kind 2cm\ninit q\n')


def test_load_automaton_from_disk(tmp_path):
    text = PTA_HEAD.format(kind='pta') + 'trans q -> α\n'
    p = tmp_path / 'crlf.pta'
    p.write_bytes(('\ufeff' + text.replace('\n', '\r\n')).encode('utf8'))
    a = load_automaton(p)
    assert a.alphabet.to_line() == 'alphabet γ:1 α:0'
    assert member(a, parse_tree('γγα', a.alphabet)) is not None

    with pytest.raises(FileNotFoundError):
        load_automaton(tmp_path / 'missing.pta')


def test_dump_keeps_names_and_letters(fixture):
    text = dump_automaton(fixture('spinal.ptar'))
    assert 'trans t1: q -> σ ( q [reset] , q [1] )' in text.splitlines()
    assert 'letters a b' in dump_automaton(fixture('ab.pa')).splitlines()
    assert 'dvectors 1 0' in dump_automaton(fixture('gammagamma.gpta')).splitlines()
