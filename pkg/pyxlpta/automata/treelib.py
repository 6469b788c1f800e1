#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 11:20


"""
有秩字母表上的树（项）、位置、路径、上下文、spine和复合

位置用从1开始编号的int元组表示，根是空元组()
python元组自带的比较正好就是位置上的字典序：前缀更小，否则比第一个不同的下标

所有对象构造后不可变，replace_at等操作返回新树并共享没变的子树
"""

import pyparsing as pp

from pyxlpta.util.textlib import *

logger = get_logger(__name__)

____section_1_alphabet = """
有秩字母表
"""


class RankedAlphabet:
    """符号名 -> 秩

    >>> sigma = RankedAlphabet({'σ': 2, 'γ': 1, 'α': 0})
    >>> sigma.rank('σ'), 'γ' in sigma, list(sigma.leaves())
    (2, True, ['α'])
    >>> sigma.to_line()
    'alphabet σ:2 γ:1 α:0'
    """
    __slots__ = ('ranks',)

    def __init__(self, ranks):
        if isinstance(ranks, dict):
            ranks = ranks.items()
        d = {}
        for name, k in ranks:
            if name in d:
                dprint(name)
                raise FormatError(f'symbol {name!r} declared twice')
            if not isinstance(k, int) or k < 0:
                raise ArityError(f'rank of {name!r} must be a nonnegative integer, got {k!r}')
            d[name] = k
        self.ranks = d
        if d and not any(k == 0 for k in d.values()):
            logger.warning('alphabet %s has no rank-0 symbol, its tree language is empty', self.to_line())

    def rank(self, name):
        try:
            return self.ranks[name]
        except KeyError:
            dprint(name)
            raise ArityError(f'symbol {name!r} is not in the alphabet')

    def leaves(self):
        return (x for x, k in self.ranks.items() if k == 0)

    def __contains__(self, name):
        return name in self.ranks

    def __iter__(self):
        return iter(self.ranks)

    def __len__(self):
        return len(self.ranks)

    def items(self):
        return self.ranks.items()

    def max_rank(self):
        return max(self.ranks.values(), default=0)

    def to_line(self):
        return 'alphabet ' + ' '.join(f'{x}:{k}' for x, k in self.ranks.items())

    def __eq__(self, other):
        return isinstance(other, RankedAlphabet) and list(self.ranks.items()) == list(other.ranks.items())

    def __hash__(self):
        return hash(tuple(self.ranks.items()))

    def __repr__(self):
        return f'RankedAlphabet({self.ranks})'


____section_2_tree = """
树
"""


class Var:
    """上下文里的变量 x_i，i从1开始

    >>> str(Var(2)), Var(2) == Var(2), Var(1) == 'x1'
    ('x2', True, False)
    """
    __slots__ = ('index',)

    def __init__(self, index):
        self.index = index

    def __eq__(self, other):
        return isinstance(other, Var) and other.index == self.index

    def __hash__(self):
        return hash(('Var', self.index))

    def __str__(self):
        return f'x{self.index}'

    def __repr__(self):
        return f'Var({self.index})'


class Tree:
    """不可变的树，label一般是符号名，也可以是任何可hash的值（配置、变量、带向量的标注等）

    >>> t = Tree('σ', [Tree('γ', [Tree('α')]), Tree('α')])
    >>> str(t), t.size, t.height
    ('σ(γ(α),α)', 4, 2)
    """
    __slots__ = ('label', 'children', 'size', 'height', '_hash')

    def __init__(self, label, children=()):
        self.label = label
        self.children = tuple(children)
        self.size = 1 + sum(c.size for c in self.children)
        self.height = 1 + max(c.height for c in self.children) if self.children else 0
        self._hash = hash((label, self.children))

    @property
    def rank(self):
        return len(self.children)

    def is_leaf(self):
        return not self.children

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree) or self._hash != other._hash or self.size != other.size:
            return False
        return self.label == other.label and self.children == other.children

    def __hash__(self):
        return self._hash

    def __str__(self):
        if self.children:
            return f'{self.label}(' + ','.join(map(str, self.children)) + ')'
        return str(self.label)

    def __repr__(self):
        return f'Tree({str(self)!r})'


def leaf(label):
    return Tree(label)


def iter_positions(t, prefix=()):
    """前序遍历位置，顺序就是字典序"""
    yield prefix
    for i, c in enumerate(t.children, start=1):
        yield from iter_positions(c, prefix + (i,))


def positions(t):
    """pos(t)，按字典序排列

    >>> t = parse_tree('σ(σ(γ(α),α),γ(γ(u)))')
    >>> [''.join(map(str, p)) or 'ε' for p in positions(t)]
    ['ε', '1', '11', '111', '12', '2', '21', '211']
    """
    return list(iter_positions(t))


def subtree_at(t, p):
    """t|p

    >>> str(subtree_at(parse_tree('σ(σ(γ(α),α),γ(γ(u)))'), (2,)))
    'γ(γ(u))'
    """
    cur = t
    for k, i in enumerate(p):
        if not 1 <= i <= len(cur.children):
            dprint(str(t), p)
            raise PositionError(f'position {format_position(p)} is not in {t} (fails at depth {k})')
        cur = cur.children[i - 1]
    return cur


def label_at(t, p):
    """t(p)

    >>> label_at(parse_tree('σ(σ(γ(α),α),γ(γ(u)))'), (2, 1))
    'γ'
    """
    return subtree_at(t, p).label


def replace_at(t, p, z):
    """t[z]_p，只重建从根到p的这一条链

    >>> str(replace_at(parse_tree('σ(α,γ(α))'), (2, 1), parse_tree('β')))
    'σ(α,γ(β))'
    """
    if not p:
        return z
    i = p[0]
    if not 1 <= i <= len(t.children):
        dprint(str(t), p)
        raise PositionError(f'position {format_position(p)} is not in {t}')
    children = list(t.children)
    children[i - 1] = replace_at(children[i - 1], p[1:], z)
    return Tree(t.label, children)


def relabel_at(t, p, label):
    """只换位置p的标签，子树不变"""
    s = subtree_at(t, p)
    return replace_at(t, p, Tree(label, s.children))


def height(t):
    return t.height


def size(t):
    return t.size


def format_position(p):
    """
    >>> format_position(()), format_position((1, 2)), format_position((1, 12))
    ('ε', '12', '1.12')
    """
    if not p:
        return 'ε'
    if all(i < 10 for i in p):
        return ''.join(map(str, p))
    return '.'.join(map(str, p))


def is_prefix(u, v):
    """u ⊑ v

    >>> is_prefix((1,), (1, 1)), is_prefix((), (2,)), is_prefix((2,), (1, 2))
    (True, True, False)
    """
    return len(u) <= len(v) and tuple(v[:len(u)]) == tuple(u)


def independent(u, v):
    """两个位置互不为前缀

    >>> independent((1,), (2,)), independent((1,), (1, 1))
    (True, False)
    """
    return not is_prefix(u, v) and not is_prefix(v, u)


def lex_compare(u, v):
    """字典序比较，返回 -1、0、1

    >>> lex_compare((1,), (1, 1)), lex_compare((1, 2), (2,)), lex_compare((), ())
    (-1, -1, 0)
    """
    u, v = tuple(u), tuple(v)
    return (u > v) - (u < v)


def complete_paths(t):
    """所有完整路径（根到叶子）及其路径词，按叶子位置的字典序

    >>> [''.join(w) for _, w in complete_paths(parse_tree('σ(γ(#),#)'))]
    ['σγ#', 'σ#']
    """
    res = []

    def dfs(node, p, path, word):
        path, word = path + (p,), word + (node.label,)
        if not node.children:
            res.append((path, word))
        for i, c in enumerate(node.children, start=1):
            dfs(c, p + (i,), path, word)

    dfs(t, (), (), ())
    return res


def subtrees(t):
    """sub(t)：所有不同的子树，按首次出现的前序位置排列"""
    seen, res = set(), []
    for p in iter_positions(t):
        s = subtree_at(t, p)
        if s not in seen:
            seen.add(s)
            res.append(s)
    return res


def check_ranked(t, alphabet, allow_vars=False):
    """检查t的每个节点孩子数等于符号的秩，不满足抛 ArityError"""
    for p in iter_positions(t):
        s = subtree_at(t, p)
        if isinstance(s.label, Var):
            if not allow_vars or s.children:
                raise ArityError(f'unexpected variable {s.label} at {format_position(p)}')
            continue
        k = alphabet.rank(s.label)
        if k != len(s.children):
            dprint(str(t), p)
            raise ArityError(f'symbol {s.label!r} at {format_position(p)} has rank {k}'
                             f' but {len(s.children)} children')
    return t


def iter_trees(alphabet, max_height=None, max_size=None):
    """枚举字母表上所有高度、规模不超过界限的树（测试用的暴力枚举）

    >>> sigma = RankedAlphabet({'σ': 2, 'α': 0})
    >>> [str(t) for t in iter_trees(sigma, max_height=1)]
    ['σ(α,α)', 'α']
    >>> len(list(iter_trees(sigma, max_size=5)))
    4
    """
    if max_height is None and max_size is None:
        raise ValueError('iter_trees needs max_height or max_size')
    if max_size is None:
        yield from _trees_upto_height(alphabet, max_height)
        return
    for n in range(1, max_size + 1):
        for t in _trees_of_size(alphabet, n, {}):
            if max_height is None or t.height <= max_height:
                yield t


def _trees_upto_height(alphabet, h):
    if h < 0:
        return []
    if h == 0:
        return [Tree(x) for x in alphabet.leaves()]
    sub = _trees_upto_height(alphabet, h - 1)
    res = []
    for x, k in alphabet.items():
        if k == 0:
            res.append(Tree(x))
        else:
            res.extend(Tree(x, cs) for cs in itertools.product(sub, repeat=k))
    return res


def _compositions(n, k):
    """把n拆成k个正整数之和的所有方式"""
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _trees_of_size(alphabet, n, memo):
    if n in memo:
        return memo[n]
    res = []
    for x, k in alphabet.items():
        if k == 0:
            if n == 1:
                res.append(Tree(x))
        elif n - 1 >= k:
            for sizes in _compositions(n - 1, k):
                for cs in itertools.product(*[_trees_of_size(alphabet, m, memo) for m in sizes]):
                    res.append(Tree(x, cs))
    memo[n] = res
    return res


def render_tree(t, mystr=None):
    """缩进展示，trace里用

    >>> print(render_tree(parse_tree('σ(γ(α),α)')))
    σ
        γ
            α
        α
    """
    return dfs_base(t, child_generator=lambda x: x.children, mystr=mystr or (lambda x: str(x.label)))


____section_3_context = """
上下文、复合、spine
"""


class Context:
    """带变量 x_1..x_k 的树，每个变量恰好出现一次，且按字典序依次出现

    >>> c = Context(parse_context('σ(γ(x1),x2)'))
    >>> c.arity, [format_position(p) for p in c.var_positions]
    (2, ['11', '2'])
    >>> Context(parse_context('σ(x2,x1)'))
    Traceback (most recent call last):
    pyxlpta.util.debuglib.ArityError: variables must occur as x1..xk in lexicographic order, got x2 x1
    """
    __slots__ = ('body', 'arity', 'var_positions')

    def __init__(self, body, arity=None):
        found = [(p, subtree_at(body, p).label) for p in iter_positions(body)
                 if isinstance(subtree_at(body, p).label, Var)]
        names = [v.index for _, v in found]
        if arity is None:
            arity = len(found)
        if names != list(range(1, arity + 1)):
            dprint(str(body), arity)
            raise ArityError('variables must occur as x1..xk in lexicographic order, got '
                             + ' '.join(f'x{i}' for i in names))
        for p, _ in found:
            if subtree_at(body, p).children:
                raise ArityError(f'variable at {format_position(p)} must be a leaf')
        self.body = body
        self.arity = arity
        self.var_positions = tuple(p for p, _ in found)

    def __eq__(self, other):
        return isinstance(other, Context) and self.body == other.body

    def __hash__(self):
        return hash(self.body)

    def __str__(self):
        return str(self.body)

    def __repr__(self):
        return f'Context({str(self)!r})'


def _substitute(t, mapping):
    if isinstance(t.label, Var):
        return mapping[t.label.index]
    if not t.children:
        return t
    return Tree(t.label, [_substitute(c, mapping) for c in t.children])


def compose(c, fillers):
    """c[t_1, ..., t_k]

    >>> str(compose(Context(parse_context('σ(γ(x1),x2)')), [leaf('α'), leaf('α')]))
    'σ(γ(α),α)'
    >>> str(compose(Context(parse_context('x1')), [parse_tree('σ(α,β)')]))
    'σ(α,β)'
    """
    fillers = list(fillers)
    if len(fillers) != c.arity:
        dprint(str(c), len(fillers))
        raise ArityError(f'context {c} has arity {c.arity}, got {len(fillers)} fillers')
    return _substitute(c.body, {i: t for i, t in enumerate(fillers, start=1)})


def compose_with_hole(c, fillers, hole_index, z):
    """把z填到第hole_index个变量，其余变量依次用fillers填"""
    fillers = list(fillers)
    fillers.insert(hole_index - 1, z)
    return compose(c, fillers)


def check_path(t, path):
    """路径：非空、相邻位置是父子关系、都在t里"""
    path = [tuple(p) for p in path]
    if not path:
        raise PathError('empty path')
    for a, b in zip(path, path[1:]):
        if len(b) != len(a) + 1 or b[:len(a)] != a:
            dprint(path)
            raise PathError(f'{format_position(b)} is not a child of {format_position(a)}')
    try:
        subtree_at(t, path[-1])
    except PositionError as e:
        raise PathError(str(e))
    return path


def spine(t, path, hole=None):
    """沿path切出spine

    :return: (outer, spine_ctx, fillers, hole_index)
        outer: t把path起点的子树换成x1得到的1元上下文
        spine_ctx: 恰好包含path上的节点，挂在外面的子树（按字典序）都变成变量
        fillers: 挂出去的子树
        hole_index: 给了hole（path上某节点的、不在path上的孩子位置）时，它对应的变量编号，
            这时fillers里不含hole处的子树；不给时为None
    满足 compose(outer, [compose_with_hole(spine_ctx, fillers, hole_index, t|hole)]) == t

    >>> t = parse_tree('σ(σ(γ(α),α),γ(γ(u)))')
    >>> outer, ctx, fillers, j = spine(t, [(1,), (1, 1)])
    >>> str(outer), str(ctx), [str(x) for x in fillers], j
    ('σ(x1,γ(γ(u)))', 'σ(γ(x1),x2)', ['α', 'α'], None)
    >>> str(spine(parse_tree('σ(α,γ(α))'), [(), (2,)])[1])
    'σ(x1,γ(x2))'
    """
    path = check_path(t, path)
    on_path = set(path)
    start = path[0]
    base = subtree_at(t, start)

    hanging = []

    def build(node, p):
        # p是相对于t的绝对位置
        if p not in on_path:
            hanging.append(p)
            return Tree(Var(len(hanging)))
        return Tree(node.label, [build(c, p + (i,)) for i, c in enumerate(node.children, start=1)])

    body = build(base, start)
    ctx = Context(body, len(hanging))
    outer = Context(replace_at(t, start, Tree(Var(1))), 1)
    fillers = [subtree_at(t, p) for p in hanging]

    hole_index = None
    if hole is not None:
        hole = tuple(hole)
        if hole not in hanging:
            dprint(path, hole)
            raise PathError(f'hole {format_position(hole)} does not hang off the path')
        hole_index = hanging.index(hole) + 1
        del fillers[hole_index - 1]
    return outer, ctx, fillers, hole_index


____section_4_parse = """
树的文本格式

    tree := SYMBOL | SYMBOL "(" tree ("," tree)* ")"
SYMBOL是unicode单词字符和#组成的串；给了字母表时，不在字母表里的SYMBOL按单子词简写展开，
比如 γγ# 是 γ(γ(#))：除最后一个外都必须是1元符号，最后一个符号接管括号里的孩子
"""


class _RawNode:
    __slots__ = ('label', 'children', 'loc')

    def __init__(self, label, children, loc):
        self.label = label
        self.children = children
        self.loc = loc


def _make_grammar():
    symbol = pp.Regex(r'[\w#]+')
    tree = pp.Forward()
    node = pp.Group(symbol + pp.Optional(pp.Suppress('(') + tree + pp.ZeroOrMore(pp.Suppress(',') + tree)
                                         + pp.Suppress(')')))
    node.setParseAction(lambda s, loc, toks: _RawNode(toks[0][0], list(toks[0][1:]), loc))
    tree <<= node
    return tree


TREE_GRAMMAR = _make_grammar()


def split_monadic(token, alphabet):
    """把单子词简写拆成符号序列，拆不开返回None

    >>> split_monadic('γγ#', RankedAlphabet({'σ': 2, 'γ': 1, '#': 0}))
    ['γ', 'γ', '#']
    >>> split_monadic('ab#', RankedAlphabet({'a': 2, 'b': 2, '#': 0}))
    """
    if token in alphabet:
        return [token]
    # 优先尝试较长的符号名
    for i in range(len(token) - 1, 0, -1):
        head = token[:i]
        if head in alphabet and alphabet.ranks[head] == 1:
            rest = split_monadic(token[i:], alphabet)
            if rest is not None:
                return [head] + rest
    return None


def _build(raw, alphabet, variables):
    children = [_build(c, alphabet, variables) for c in raw.children]
    label = raw.label
    m = re.fullmatch(r'x(\d+)', label) if variables else None
    if m and (alphabet is None or label not in alphabet):
        if children:
            raise FormatError(f'variable {label} cannot have children (at column {raw.loc + 1})')
        return Tree(Var(int(m.group(1))))
    if alphabet is None:
        return Tree(label, children)

    names = split_monadic(label, alphabet)
    if names is None:
        dprint(label)
        raise FormatError(f'unknown symbol {label!r} (at column {raw.loc + 1})')
    k = alphabet.ranks[names[-1]]
    if k != len(children):
        raise ArityError(f'symbol {names[-1]!r} has rank {k} but {len(children)} children (at column {raw.loc + 1})')
    t = Tree(names[-1], children)
    for x in reversed(names[:-1]):
        t = Tree(x, [t])
    return t


def parse_tree(text, alphabet=None, variables=False):
    """解析树的文本，给了alphabet时同时检查秩

    >>> str(parse_tree(' σ ( γγα , α ) ', RankedAlphabet({'σ': 2, 'γ': 1, 'α': 0})))
    'σ(γ(γ(α)),α)'
    >>> parse_tree('σ(α)', RankedAlphabet({'σ': 2, 'α': 0}))
    Traceback (most recent call last):
    pyxlpta.util.debuglib.ArityError: symbol 'σ' has rank 2 but 1 children (at column 1)
    """
    try:
        raw = TREE_GRAMMAR.parseString(text, parseAll=True)[0]
    except pp.ParseException as e:
        dprint(text)
        raise FormatError(f'cannot parse tree {text!r}: {e.msg} (at column {e.col})')
    return _build(raw, alphabet, variables)


def parse_context(text, alphabet=None):
    """同parse_tree，但 x1、x2 这些记号是变量；返回的是树体，再用Context包装校验"""
    return parse_tree(text, alphabet, variables=True)
