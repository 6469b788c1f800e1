#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 18:10


"""
命令行入口

    pyxlpta validate PATH
    pyxlpta classify PATH
    pyxlpta member PATH TREE [--trace]
    pyxlpta empty PATH
    pyxlpta encode-2cm MACHINE OUT
    pyxlpta cm-run MACHINE [--max-steps N]
    pyxlpta witness PATH [--max-height N]
    pyxlpta spinal PATH TREE

判定结果写到stdout，诊断信息写到stderr
退出码：0 算出了判定（不论结果），2 输入有误，3 不支持的操作
"""

import functools
import pathlib
import sys

import click

from pyxlpta.automata import ptarlib
from pyxlpta.automata.all import *

EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
UNDECIDABLE = 'emptiness is undecidable for non-linear PTA/PTAR of dimension ≥ 3'

logger = get_logger(__name__)


class Unsupported(Exception):
    pass


def _fail(message, code):
    click.echo(message, err=True)
    sys.exit(code)


def handle_errors(func):
    """把库里的异常翻译成退出码"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except NotLinearError as e:
            _fail(f'unsupported: {e}; {UNDECIDABLE}', EXIT_UNSUPPORTED)
        except Unsupported as e:
            _fail(f'unsupported: {e}', EXIT_UNSUPPORTED)
        except OSError as e:
            _fail(f'error: {e}', EXIT_INPUT)
        except PtaError as e:
            _fail(f'error: {e}', EXIT_INPUT)

    return wrapper


def _load(path, kinds=None):
    a = load_automaton(path)
    kind = automaton_kind(a)
    if kinds is not None and kind not in kinds:
        raise Unsupported(f'{path} is a {kind} file, this command needs {" or ".join(kinds)}')
    return a, kind


@click.group()
@click.option('-v', '--verbose', count=True, help='-v 输出INFO日志，-vv 输出DEBUG日志')
def cli(verbose):
    """Parikh树自动机工具"""
    level = {0: None, 1: 'INFO'}.get(verbose, 'DEBUG')
    config_logging(level)


@cli.command()
@click.argument('path', type=click.Path())
@handle_errors
def validate(path):
    """检查文件格式，输出概要"""
    a, kind = _load(path)
    rows = [('kind', kind), ('states', len(a.states)), ('transitions', len(a.transitions))]
    if kind != '2cm':
        rows += [('dim', a.dim), ('components', len(a.constraint.components))]
    if kind in ('pta', 'ptar'):
        rows.append(('class', str(classify(a))))
    click.echo('VALID')
    click.echo(print_full_table(rows, columns=['item', 'value']))


@cli.command('classify')
@click.argument('path', type=click.Path())
@handle_errors
def classify_cmd(path):
    """PTA / LINEAR-PTAR / PTAR，其他类型原样输出"""
    a, kind = _load(path)
    if kind in ('pta', 'ptar'):
        click.echo(str(classify(a)))
    else:
        click.echo(kind.upper())


def _gpta_trace(xi, run):
    rows = [(format_position(p), subtree_at(xi, p).label, vector_str(run.labeling[p]), str(run.states[p]))
            for p in iter_positions(xi)]
    return print_full_table(rows, columns=['position', 'symbol', 'vector', 'state'])


@cli.command()
@click.argument('path', type=click.Path())
@click.argument('tree')
@click.option('--trace', is_flag=True, help='同时输出计算过程')
@handle_errors
def member(path, tree, trace):
    """判断TREE是否被接受；PA文件时TREE是空格分隔的字母序列"""
    a, kind = _load(path, ('pta', 'ptar', 'gpta', 'pa'))
    if kind == 'pa':
        run = palib.pa_member(a, tree.split())
        click.echo('NONMEMBER' if run is None else 'MEMBER')
        if run is not None and trace:
            click.echo(str(run))
        return

    xi = parse_tree(tree, a.alphabet)
    if kind == 'gpta':
        run = gptalib.member(a, xi)
        click.echo('NONMEMBER' if run is None else 'MEMBER')
        if run is not None and trace:
            click.echo(_gpta_trace(xi, run))
        return

    res = ptarlib.member(a, xi)
    click.echo('NONMEMBER' if res is None else 'MEMBER')
    if res is not None and trace:
        click.echo(trace_table(a, res))


@cli.command()
@click.argument('path', type=click.Path())
@click.pass_context
@handle_errors
def empty(ctx, path):
    """判空：PA，或者线性PTA/PTAR"""
    a, kind = _load(path, ('pta', 'ptar', 'pa'))
    if kind == 'pa':
        res = palib.is_empty(a)
        click.echo(str(res))
        return

    res = is_empty_linear(a)
    if ctx.parent.params.get('verbose'):
        click.echo(res.chain_table(), err=True)
    click.echo(str(res))


@cli.command('encode-2cm')
@click.argument('machine', type=click.Path())
@click.argument('out', type=click.Path(allow_dash=True))
@handle_errors
def encode_2cm(machine, out):
    """把2CM编码成3维PTA，写到OUT（- 表示stdout）"""
    m, _ = _load(machine, ('2cm',))
    text = dump_automaton(encode(m))
    if out == '-':
        click.echo(text, nl=False)
    else:
        pathlib.Path(out).write_text(text, encoding='utf8')
        logger.info('wrote %s', out)


@cli.command('cm-run')
@click.argument('machine', type=click.Path())
@click.option('--max-steps', default=20, show_default=True, type=click.IntRange(min=0))
@handle_errors
def cm_run(machine, max_steps):
    """有界搜索2CM的接受序列"""
    m, _ = _load(machine, ('2cm',))
    seq = cm_bounded_accepts(m, max_steps)
    if seq is None:
        click.echo('NOT-FOUND-WITHIN-BOUND')
        return
    click.echo('ACCEPTS')
    c = CmConfig(m.init)
    rows = []
    for i, t in enumerate(seq, start=1):
        c = apply_cm(t, c)
        rows.append((i, str(t), str(c)))
    if rows:
        click.echo(print_full_table(rows, columns=['step', 'transition', 'configuration']))


@cli.command()
@click.argument('path', type=click.Path())
@click.option('--max-height', default=DEFAULT_MAX_HEIGHT, show_default=True, type=click.IntRange(min=0))
@handle_errors
def witness(path, max_height):
    """找一棵高度不超过max-height的被接受的树"""
    a, _ = _load(path, ('pta', 'ptar'))
    trace = bounded_witness(a, max_height)
    if trace is None:
        click.echo('NOT-FOUND-WITHIN-BOUND')
    else:
        click.echo(str(trace.subject))


@cli.command()
@click.argument('path', type=click.Path())
@click.argument('tree')
@handle_errors
def spinal(path, tree):
    """输出TREE的spinal computation tree（只支持线性PTAR）"""
    a, _ = _load(path, ('pta', 'ptar'))
    require_linear(a)
    d = spinal_parse(a, parse_tree(tree, a.alphabet))
    if d is None:
        click.echo('NONMEMBER')
    else:
        click.echo(d.render())


main = cli

if __name__ == '__main__':
    cli()
