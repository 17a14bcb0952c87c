"""
``gauge-graph`` command line.

Every subcommand loads one model file (a path or the name of a bundled
example), writes its result to stdout or ``--out`` and returns an exit status:
0 on success, 2 on a usage error, 3 on a model error, 4 when verification
fails. Errors are reported on stderr as JSON.
"""
import sys
import argparse
import logging

import numpy as np
from termcolor import colored

from ..__version__ import __version__
from ..utils import LOGGER, GaugeGraphError, dumps_json, write, write_csv_rows, STANDARD_GRID_POINTS, EVAL_DIGITS
from ..models import pairwise_marginal, marginal_gauge, sample_level_set, write_points_csv
from ..coefficients import alpha_path, alpha_path_signed, edge_alpha, beta_path, edge_beta, parse_sign
from ..extremes import enumerate_directions, directions_from_alphas
from .model_file import load_model_source, list_examples
from .svg import render_level_set_svg
from .verify import run_verification

__all__ = ['EXIT_OK', 'EXIT_USAGE', 'EXIT_MODEL', 'EXIT_VERIFY', 'UsageError', 'build_parser', 'main']

EXIT_OK, EXIT_USAGE, EXIT_MODEL, EXIT_VERIFY = 0, 2, 3, 4
RECURRENCE, NUMERIC, BOTH = 'recurrence', 'numeric', 'both'
ENUMERATE, ALPHAS = 'enumerate', 'alphas'


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        _report_error({'error': 'UsageError', 'message': message, 'details': {'prog': self.prog}})
        raise SystemExit(EXIT_USAGE)


def _report_error(data):
    sys.stderr.write(dumps_json(data))

def _emit(text, path=None):
    if path is None:
        sys.stdout.write(text)
    else:
        write(path, text)

def _vertex(parsed, label):
    if label not in parsed.labels:
        raise UsageError('unknown vertex label {!r}, the model has {}'.format(label, list(parsed.labels)))
    return parsed.labels.index(label)

def _vertex_list(parsed, text):
    return [_vertex(parsed, label.strip()) for label in text.split(',') if label.strip()]

def _point(text):
    try:
        return [float(v) for v in text.split(',')]
    except ValueError:
        raise UsageError('point {!r} is not a comma separated list of numbers'.format(text))

#######################################

def cmd_validate(args, parsed):
    model, labels = parsed
    graph = model.graph
    name = lambda vertices: '{' + ','.join(labels[v] for v in vertices) + '}'
    lines = [colored('valid', 'green') + ' {} model with {} vertices'.format(model.margin.value, model.dimension)]
    lines.append('cliques:')
    for clique in graph.cliques:
        gauge = model.clique_gauges[clique]
        params = ', '.join('{}={}'.format(k, v) for k, v in sorted(gauge.params.items()))
        lines.append('  {} {}({})'.format(name(clique), gauge.family, params))
    lines.append('separators: {}'.format(' '.join(labels[v] for v in graph.separators) or '-'))
    lines.append('paths:')
    for k, i in enumerate(graph.vertices):
        for j in graph.vertices[k + 1:]:
            lines.append('  {} -> {}: {}'.format(labels[i], labels[j],
                                                 ' '.join(labels[v] for v in graph.shortest_path(i, j).vertices)))
    _emit('\n'.join(lines) + '\n')
    return EXIT_OK

def cmd_eval(args, parsed):
    value = parsed.model.eval_joint(_point(args.point))
    _emit('{:.{}f}\n'.format(value, EVAL_DIGITS))
    return EXIT_OK

def cmd_marginal(args, parsed):
    model, labels = parsed
    kept = _vertex_list(parsed, args.keep)
    if not kept:
        raise UsageError('--keep needs at least one vertex label')
    if args.grid < 2:
        raise UsageError('--grid needs at least two points')
    gauge = pairwise_marginal(model, *kept) if len(kept) == 2 else marginal_gauge(model, kept)
    axis = np.linspace(*model.margin.unit_interval(), args.grid)
    if len(kept) == 1:
        points = axis[:, None]
    else:
        u, v = np.meshgrid(axis, axis, indexing='ij')
        # kept vertices past the first two are pinned at one
        points = np.ones((u.size, len(kept)))
        points[:, 0], points[:, 1] = u.ravel(), v.ravel()
    values = np.atleast_1d(gauge(points))
    header = ['x_{}'.format(labels[v]) for v in kept[:2]] + ['g']
    rows = np.column_stack([points[:, :2], values]).tolist()
    _emit(write_csv_rows(header, rows), args.out)
    return EXIT_OK

def _alpha(model, i, j, method, sign):
    if method == RECURRENCE:
        if model.margin.is_exponential and parse_sign(sign) > 0:
            return alpha_path(model, i, j)
        return alpha_path_signed(model, i, j, sign)
    return edge_alpha(pairwise_marginal(model, i, j), sign)

def _compare(results, method):
    if method != BOTH:
        return results[method]._asdict()
    report = {m: r._asdict() for m, r in results.items()}
    report['discrepancy'] = abs(results[RECURRENCE].value - results[NUMERIC].value)
    return report

def _methods(method):
    return [RECURRENCE, NUMERIC] if method == BOTH else [method]

def cmd_alpha(args, parsed):
    i, j = _vertex(parsed, args.source), _vertex(parsed, args.target)
    results = {m: _alpha(parsed.model, i, j, m, args.sign) for m in _methods(args.method)}
    _emit(dumps_json(_compare(results, args.method)), args.out)
    return EXIT_OK

def _beta(model, i, j, method):
    if method == RECURRENCE:
        return beta_path(model, i, j)
    # fit at the recurrence contact: a numeric alpha overshoots flat contacts by more than the fit window
    return edge_beta(pairwise_marginal(model, i, j), alpha_path(model, i, j).value)

def cmd_beta(args, parsed):
    i, j = _vertex(parsed, args.source), _vertex(parsed, args.target)
    results = {m: _beta(parsed.model, i, j, m) for m in _methods(args.method)}
    _emit(dumps_json(_compare(results, args.method)), args.out)
    return EXIT_OK

def cmd_directions(args, parsed):
    model, labels = parsed
    report = {}
    if args.method in (ENUMERATE, BOTH):
        report[ENUMERATE] = [{'A': [labels[v] for v in d.A], 'witness': list(d.witness), 'gap': d.gap}
                             for d in enumerate_directions(model)]
    if args.method in (ALPHAS, BOTH):
        candidates = directions_from_alphas(model)
        report[ALPHAS] = {'sets': [[labels[v] for v in A] for A in candidates.sets],
                          'possibly_incomplete': candidates.possibly_incomplete}
    if args.method == BOTH:
        report['agree'] = sorted(d['A'] for d in report[ENUMERATE]) == sorted(report[ALPHAS]['sets'])
    else:
        report = report[args.method]
    _emit(dumps_json(report), args.out)
    return EXIT_OK

def cmd_levelset(args, parsed):
    model, labels = parsed
    if args.n < 1:
        raise UsageError('--n needs a positive number of points')
    gauge = model.as_gauge()
    if args.keep is not None:
        kept = _vertex_list(parsed, args.keep)
        if len(kept) != 2:
            raise UsageError('--keep takes exactly two vertex labels')
        gauge = pairwise_marginal(model, *kept)
    points = sample_level_set(gauge, args.n, seed=args.seed)
    _emit(write_points_csv(points), args.out)
    if args.svg is not None:
        if gauge.dimension != 2:
            LOGGER.warning('no SVG for a {}-dimensional level set, CSV only'.format(gauge.dimension))
            return EXIT_OK
        contact = None
        try:
            contact = (1., edge_alpha(gauge).value)
        except GaugeGraphError as e:
            LOGGER.warning('no contact point marked: {}'.format(e.message))
        write(args.svg, render_level_set_svg(points, contact, laplace=not model.margin.is_exponential))
    return EXIT_OK

def cmd_verify(args, parsed):
    checks = run_verification(parsed.model, parsed.labels, full=args.full)
    lines = []
    for check in checks:
        tag = colored('PASS', 'green') if check.passed else colored('FAIL', 'red')
        lines.append('[{}] {}: {}'.format(tag, check.name, check.detail))
    _emit('\n'.join(lines) + '\n')
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY

#######################################

def build_parser():
    parser = _Parser(prog='gauge-graph', description='Geometric extremal graphical models on block graphs.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--debug', action='store_true', help='debug logging on stderr')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    model_help = 'model file, or one of the bundled examples: {}'.format(', '.join(list_examples()))

    def add(name, fn, help):
        command = commands.add_parser(name, help=help)
        command.add_argument('model', help=model_help)
        command.set_defaults(func=fn)
        return command

    add('validate', cmd_validate, 'check a model file and summarise its graph')
    command = add('eval', cmd_eval, 'joint gauge at a point')
    command.add_argument('--point', required=True, help='comma separated coordinates in label order')

    command = add('marginal', cmd_marginal, 'marginal gauge on the standard grid, as CSV')
    command.add_argument('--keep', required=True, help='comma separated vertex labels')
    command.add_argument('--grid', type=int, default=STANDARD_GRID_POINTS, help='grid points per axis')
    command.add_argument('--out', help='CSV file instead of stdout')

    for name, fn, help in [('alpha', cmd_alpha, 'location coefficient alpha_{j|i}'),
                           ('beta', cmd_beta, 'scale coefficient beta_{j|i}')]:
        command = add(name, fn, help)
        command.add_argument('--from', dest='source', required=True, help='conditioning vertex i')
        command.add_argument('--to', dest='target', required=True, help='vertex j')
        command.add_argument('--method', choices=[RECURRENCE, NUMERIC, BOTH], default=RECURRENCE)
        command.add_argument('--out', help='JSON file instead of stdout')
        if name == 'alpha':
            command.add_argument('--sign', choices=['+', '-'], default='+', help='sign of the conditioning extreme')

    command = add('directions', cmd_directions, 'geometric extreme directions, as JSON')
    command.add_argument('--method', choices=[ENUMERATE, ALPHAS, BOTH], default=ENUMERATE)
    command.add_argument('--out', help='JSON file instead of stdout')

    command = add('levelset', cmd_levelset, 'points of the unit level set, as CSV')
    command.add_argument('--n', type=int, required=True, help='number of points')
    command.add_argument('--keep', help='two vertex labels: sample their pairwise marginal instead')
    command.add_argument('--seed', type=int, default=0, help='direction sampler seed')
    command.add_argument('--out', help='CSV file instead of stdout')
    command.add_argument('--svg', help='also draw a 2-d level set to this SVG file')

    command = add('verify', cmd_verify, 'run the invariant checks on a model')
    command.add_argument('--full', action='store_true', help='run direction checks in any dimension')
    return parser

def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.debug:
        LOGGER.setLevel(logging.DEBUG)
    try:
        parsed = load_model_source(args.model)
        return args.func(args, parsed)
    except UsageError as e:
        _report_error({'error': 'UsageError', 'message': str(e), 'details': {'command': args.command}})
        return EXIT_USAGE
    except GaugeGraphError as e:
        _report_error(e.to_dict())
        return EXIT_MODEL
    except (IOError, OSError) as e:
        _report_error({'error': e.__class__.__name__, 'message': str(e), 'details': {'command': args.command}})
        return EXIT_USAGE
