#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 17:30


"""
自动机文件的读写

每行一个声明，`;` 到行末是注释，第一个词是关键字：
    kind      pta | ptar | gpta | pa | 2cm
    dim       计数器/向量维数（2cm不用）
    alphabet  σ:2 γ:1 α:0（pta/ptar/gpta）
    letters   a b（pa可选，默认取转移里出现的字母）
    dvectors  1 0（gpta，每行一个D里的向量）
    states    q0 q1 ...
    init      q0
    final     qf ...（pa/2cm）
    linear    base | period | period ...（一行一个线性分量，没有这种行表示空集）
    trans     见下，可以重复

各类转移的写法：
    pta/ptar  trans q -> σ ( q1 [1 0] , q2 [reset] )     trans q -> α
    gpta      trans q -> σ [1 0] ( q1 , q2 )              trans q -> # [0 0]
    pa        trans q -a[1 0]-> p
    2cm       trans q inc1 p | dec2 | zero1 ...
pta/ptar/gpta的转移前面可以加 `名字:` 给转移起名
"""

import io
import pathlib

import jinja2
import pyparsing as pp

from pyxlpta.automata.cmlib import *
from pyxlpta.automata.gptalib import GPTA, GptaTransition
from pyxlpta.automata.palib import PA, PaTransition

logger = get_logger(__name__)

KINDS = ('pta', 'ptar', 'gpta', 'pa', '2cm')
KEYWORDS = ('kind', 'dim', 'alphabet', 'letters', 'dvectors', 'states', 'init', 'final', 'linear', 'trans')
FIXTURE_DIR = pathlib.Path(__file__).parent / 'fixtures'

____section_1_grammar = """
每种行的语法
"""

_IDENT = pp.Regex(r'[\w#]+')
_INT = pp.Regex(r'\d+').setParseAction(lambda toks: int(toks[0]))
_VECTOR = pp.Group(pp.Suppress('[') + pp.ZeroOrMore(_INT) + pp.Suppress(']'))
_NAME = pp.Optional(pp.Regex(r'[\w#]+(?=\s*:)')('name') + pp.Suppress(':'))

_ACTION = pp.Suppress('[') + (pp.Keyword('reset').setParseAction(lambda: RESET)
                              | pp.Group(pp.ZeroOrMore(_INT))) + pp.Suppress(']')
_PTAR_CHILD = pp.Group(_IDENT + _ACTION)
_PTAR_TRANS = _NAME + _IDENT('src') + pp.Suppress('->') + _IDENT('symbol') \
              + pp.Optional(pp.Suppress('(') + pp.Group(pp.delimitedList(_PTAR_CHILD))('children') + pp.Suppress(')'))

_GPTA_TRANS = _NAME + _IDENT('src') + pp.Suppress('->') + _IDENT('symbol') + _VECTOR('vector') \
              + pp.Optional(pp.Suppress('(') + pp.Group(pp.delimitedList(_IDENT))('children') + pp.Suppress(')'))

_PA_TRANS = _IDENT('src') + pp.Suppress('-') + _IDENT('letter') + _VECTOR('vector') + pp.Suppress('->') \
            + _IDENT('dst')

_CM_TRANS = _IDENT('src') + pp.Regex(r'(inc|dec|zero)[12]\b')('op') + _IDENT('dst')

_RANK = pp.Group(pp.Regex(r'[\w#]+(?=:)') + pp.Suppress(':') + _INT)
_ALPHABET = pp.OneOrMore(_RANK)
_IDENTS = pp.ZeroOrMore(_IDENT)
_INTS = pp.ZeroOrMore(_INT)


def _parse_line(element, text, lineno):
    try:
        return element.parseString(text, parseAll=True)
    except pp.ParseException as e:
        dprint(text, e)
        raise FormatError(f'cannot parse {text!r}: {e.msg} (at column {e.col})', lineno)


def _strip_comment(line):
    i = line.find(';')
    return (line if i < 0 else line[:i]).strip()


class _Lines:
    """按关键字归类的行：关键字 -> [(行号, 剩下的文本)]"""

    def __init__(self, text):
        self.groups = collections.defaultdict(list)
        for lineno, line in enumerate(io.StringIO(text), start=1):
            line = _strip_comment(line)
            if not line:
                continue
            key, _, rest = line.partition(' ')
            if key not in KEYWORDS:
                dprint(lineno, line)
                raise FormatError(f'unknown declaration {key!r}', lineno)
            self.groups[key].append((lineno, rest.strip()))

    def one(self, key, required=True):
        items = self.groups.get(key, [])
        if len(items) > 1:
            raise FormatError(f'{key} declared more than once', items[1][0])
        if not items:
            if required:
                raise FormatError(f'missing {key} declaration')
            return None, None
        return items[0]

    def many(self, key):
        return self.groups.get(key, [])


____section_2_parse = """
解析
"""


def _parse_dim(lines):
    lineno, text = lines.one('dim')
    if not re.fullmatch(r'\d+', text) or int(text) < 1:
        raise FormatError(f'dim must be a positive integer, got {text!r}', lineno)
    return int(text)


def _check_vector(v, dim, lineno, what='vector'):
    if len(v) != dim:
        dprint(v, dim)
        raise FormatError(f'{what} ({vector_str(v)}) has {len(v)} entries but dim is {dim}', lineno)
    return tuple(v)


def _parse_states(lines):
    lineno, text = lines.one('states')
    states = list(_parse_line(_IDENTS, text, lineno))
    dup = [q for q, k in collections.Counter(states).items() if k > 1]
    if dup:
        raise FormatError(f'state {dup[0]!r} declared twice', lineno)
    return states, set(states)


def _parse_init(lines, known):
    lineno, text = lines.one('init')
    q = text.strip()
    if q not in known:
        raise FormatError(f'initial state {q!r} is not declared', lineno)
    return q


def _parse_finals(lines, known):
    finals = []
    for lineno, text in lines.many('final'):
        for q in _parse_line(_IDENTS, text, lineno):
            if q not in known:
                raise FormatError(f'final state {q!r} is not declared', lineno)
            finals.append(q)
    return finals


def _parse_alphabet(lines):
    lineno, text = lines.one('alphabet')
    pairs = [(x, k) for x, k in _parse_line(_ALPHABET, text, lineno)]
    try:
        return RankedAlphabet(pairs)
    except PtaError as e:
        raise FormatError(str(e), lineno)


def parse_constraint(lines, dim):
    """所有linear行的并"""
    comps = []
    for lineno, text in lines.many('linear'):
        parts = [tuple(_parse_line(_INTS, x, lineno)) for x in text.split('|')]
        base = _check_vector(parts[0], dim, lineno, 'base')
        periods = [_check_vector(p, dim, lineno, 'period') for p in parts[1:]]
        comps.append(LinearSet(base, periods))
    return SemilinearSet(comps, dim)


def _check_symbol(alphabet, symbol, n, lineno):
    if symbol not in alphabet:
        raise FormatError(f'symbol {symbol!r} is not in the alphabet', lineno)
    k = alphabet.rank(symbol)
    if k != n:
        raise FormatError(f'symbol {symbol!r} has rank {k} but the transition has {n} successors', lineno)


def _check_state(q, known, lineno):
    if q not in known:
        raise FormatError(f'state {q!r} is not declared', lineno)


def _parse_ptar(lines, kind):
    dim = _parse_dim(lines)
    alphabet = _parse_alphabet(lines)
    states, known = _parse_states(lines)
    init = _parse_init(lines, known)
    constraint = parse_constraint(lines, dim)
    transitions = []
    for lineno, text in lines.many('trans'):
        r = _parse_line(_PTAR_TRANS, text, lineno)
        children = []
        for q, act in (r.children if 'children' in r else []):
            _check_state(q, known, lineno)
            if act is RESET:
                if kind == 'pta':
                    raise FormatError('a pta file cannot use reset', lineno)
            else:
                act = _check_vector(list(act), dim, lineno)
            children.append((q, act))
        _check_state(r.src, known, lineno)
        _check_symbol(alphabet, r.symbol, len(children), lineno)
        transitions.append(PtarTransition(r.src, r.symbol, tuple(children), r.get('name') or None))
    return PTAR(states, alphabet, init, transitions, constraint, meta={'kind': kind})


def _parse_gpta(lines):
    dim = _parse_dim(lines)
    alphabet = _parse_alphabet(lines)
    dvectors = [_check_vector(tuple(_parse_line(_INTS, text, lineno)), dim, lineno)
                for lineno, text in lines.many('dvectors')]
    states, known = _parse_states(lines)
    init = _parse_init(lines, known)
    constraint = parse_constraint(lines, dim)
    dset = set(dvectors)
    transitions = []
    for lineno, text in lines.many('trans'):
        r = _parse_line(_GPTA_TRANS, text, lineno)
        children = tuple(r.children) if 'children' in r else ()
        for q in (r.src,) + children:
            _check_state(q, known, lineno)
        _check_symbol(alphabet, r.symbol, len(children), lineno)
        d = _check_vector(list(r.vector), dim, lineno)
        if d not in dset:
            raise FormatError(f'vector ({vector_str(d)}) is not declared in dvectors', lineno)
        transitions.append(GptaTransition(r.src, r.symbol, d, children, r.get('name') or None))
    return GPTA(states, alphabet, dvectors, init, transitions, constraint)


def _parse_pa(lines):
    dim = _parse_dim(lines)
    states, known = _parse_states(lines)
    init = _parse_init(lines, known)
    finals = _parse_finals(lines, known)
    constraint = parse_constraint(lines, dim)
    letters = None
    if lines.many('letters'):
        lineno, text = lines.one('letters')
        letters = list(_parse_line(_IDENTS, text, lineno))
    transitions = []
    for lineno, text in lines.many('trans'):
        r = _parse_line(_PA_TRANS, text, lineno)
        _check_state(r.src, known, lineno)
        _check_state(r.dst, known, lineno)
        if letters is not None and r.letter not in letters:
            raise FormatError(f'letter {r.letter!r} is not declared', lineno)
        transitions.append(PaTransition(r.src, r.letter, _check_vector(list(r.vector), dim, lineno), r.dst))
    return PA(states, init, finals, transitions, constraint, alphabet=letters)


def _parse_2cm(lines):
    states, known = _parse_states(lines)
    init = _parse_init(lines, known)
    finals = _parse_finals(lines, known)
    transitions = []
    for lineno, text in lines.many('trans'):
        r = _parse_line(_CM_TRANS, text, lineno)
        _check_state(r.src, known, lineno)
        _check_state(r.dst, known, lineno)
        transitions.append(CmTransition(r.src, r.op[:-1], int(r.op[-1]), r.dst))
    return TwoCM(states, init, finals, transitions)


def parse_automaton(text):
    """解析自动机文件的文本

    :return: PTAR | GPTA | PA | TwoCM，PTAR的meta['kind']记录是pta还是ptar

    >>> a = parse_automaton('''
    ... kind pa     ; 只有一个状态
    ... dim 1
    ... states q
    ... init q
    ... final q
    ... linear 2 | 2
    ... trans q -a[1]-> q
    ... ''')
    >>> a
    PA(states=['q'], init='q', finals=['q'], 1 transitions, dim=1)
    >>> parse_automaton('kind pa\\ndim 1\\nstates q\\ninit q\\ntrans q -a[1 0]-> q')
    Traceback (most recent call last):
    pyxlpta.util.debuglib.FormatError: line 5: vector (1 0) has 2 entries but dim is 1
    """
    lines = _Lines(text)
    lineno, kind = lines.one('kind')
    if kind not in KINDS:
        raise FormatError(f'unknown kind {kind!r}, expected one of {" ".join(KINDS)}', lineno)
    try:
        if kind in ('pta', 'ptar'):
            return _parse_ptar(lines, kind)
        if kind == 'gpta':
            return _parse_gpta(lines)
        if kind == 'pa':
            return _parse_pa(lines)
        return _parse_2cm(lines)
    except FormatError:
        raise
    except PtaError as e:
        # 逐行检查漏掉的整体约束
        raise FormatError(str(e)) from e


def load_automaton(path, encoding=None):
    return parse_automaton(readtext(path, encoding))


def fixture_path(name):
    return FIXTURE_DIR / name


def load_fixture(name):
    """读取随包附带的样例自动机

    >>> load_fixture('lin.ptar').meta['kind']
    'ptar'
    """
    return load_automaton(fixture_path(name))


def automaton_kind(a):
    if isinstance(a, PTAR):
        return a.meta.get('kind') or ('pta' if is_reset_free(a) else 'ptar')
    if isinstance(a, GPTA):
        return 'gpta'
    if isinstance(a, PA):
        return 'pa'
    if isinstance(a, TwoCM):
        return '2cm'
    raise TypeError(f'not an automaton: {typename(a)}')


____section_3_dump = """
序列化
"""

_ENV = jinja2.Environment(trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True,
                          undefined=jinja2.StrictUndefined)

_TEMPLATE = _ENV.from_string("""\
kind {{ kind }}
{% if kind != '2cm' %}
dim {{ a.dim }}
{% endif %}
{% if alphabet %}
{{ alphabet }}
{% endif %}
{% if letters %}
letters {{ letters }}
{% endif %}
{% for d in dvectors %}
dvectors {{ d }}
{% endfor %}
states {{ states }}
init {{ a.init }}
{% if finals %}
final {{ finals }}
{% endif %}
{% for c in components %}
{{ c.to_line() }}
{% endfor %}
{% for name, t in transitions %}
trans {% if name %}{{ name }}: {% endif %}{{ t }}
{% endfor %}
""")


def dump_automaton(a):
    """自动机写回文件文本，parse_automaton(dump_automaton(a)) 跟a结构相同

    >>> print(dump_automaton(TwoCM(['q0', 'qf'], 'q0', ['qf'], [('q0', 'inc', 1, 'qf')])), end='')
    kind 2cm
    states q0 qf
    init q0
    final qf
    trans q0 inc1 qf
    """
    kind = automaton_kind(a)
    names = [getattr(t, 'name', None) for t in a.transitions]
    return _TEMPLATE.render(
        kind=kind,
        a=a,
        alphabet=a.alphabet.to_line() if isinstance(a, (PTAR, GPTA)) else '',
        letters=' '.join(a.alphabet) if isinstance(a, PA) else '',
        dvectors=[vector_str(d) for d in getattr(a, 'dvectors', ())],
        states=' '.join(map(str, a.states)),
        finals=' '.join(map(str, getattr(a, 'finals', ()))),
        components=a.constraint.components if kind != '2cm' else (),
        transitions=list(zip(names, a.transitions)),
    )


def structure(a):
    """比较用的结构签名：类别、状态、字母表、初态、终态、约束、转移"""
    kind = automaton_kind(a)
    if kind == '2cm':
        return kind, a.states, a.init, a.finals, a.transitions
    alphabet = tuple(a.alphabet.items()) if not isinstance(a, PA) else a.alphabet
    return (kind, a.states, alphabet, a.init, getattr(a, 'finals', None), getattr(a, 'dvectors', None),
            a.constraint, a.transitions)
