#!/usr/bin/env python3

'''
  Command line front end for the advection experiments: run a configured
  simulation, classify a saved state, run the property suites or regenerate
  the data behind a figure.

  Exit status is 0 on success, 1 on a property violation or a failed run
  and 2 on a usage error.
'''

import json
import os
import sys

from argparse import ArgumentParser
from argparse import RawDescriptionHelpFormatter

from ..analysis.classifiers import (
    classify_extremities, classify_H_alpha, is_discrete_heaviside)
from ..analysis.fiveconfig import check_five_config_conditions
from ..analysis.metrics import plateau_metric_I
from ..analysis.staircase import check_Hprime
from ..configuration import experimentConfiguration
from ..lib.field import get_arithmetic, parse_ratio
from ..state import Kind, from_json, is_nondecreasing, total_variation
from ..version import VERSION
from .figures import figure_names, run_figure
from .runner import format_csv, run_experiment
from .verify import run_verify, summary_table

PROGRAM_NAME = 'antidiffusive'

class CLIError(Exception):
    '''Generic exception to raise and log different fatal errors.'''
    def __init__(self, msg):
        super().__init__(msg)
        self.msg = "E: %s" % msg
    def __str__(self):
        return self.msg

def _flag(parser, *names, **kwargs):
    kwargs.setdefault('default', None)
    parser.add_argument(*names, **kwargs)

def build_parser():
    program_version_message = '%%(prog)s v%s' % VERSION
    parser = ArgumentParser(
        prog=PROGRAM_NAME,
        description=__doc__, formatter_class=RawDescriptionHelpFormatter)
    parser.add_argument('-V', '--version', action='version',
                        version=program_version_message)
    commands = parser.add_subparsers(dest='command')

    simulate = commands.add_parser('simulate', help='Run one configured experiment')
    _flag(simulate, '-c', '--config', dest='config',
          help='JSON configuration file (default: ~/.antidiffusive/configuration)')
    _flag(simulate, '--scheme', dest='scheme',
          help='upwind, lax_wendroff, dl_fixed or dl_shifted')
    _flag(simulate, '--lambda', dest='lam', help='Courant number as p/q or decimal')
    _flag(simulate, '--arith', dest='arithmetic', help='rational or binary64')
    _flag(simulate, '--steps', dest='n_steps', type=int, help='Number of time steps')
    _flag(simulate, '--periods', dest='periods',
          help='Number of periods to advect, instead of --steps')
    _flag(simulate, '-M', '--cells', dest='M', type=int, help='Cells per period')
    _flag(simulate, '--initial', dest='initial',
          help='Preset name, JSON text or path to a JSON file')
    _flag(simulate, '--init', dest='init', help='average or pointwise cell initialization')
    _flag(simulate, '--metrics', dest='metrics', help='Comma separated metric names')
    _flag(simulate, '--out', dest='output', help='Output CSV path or directory')
    _flag(simulate, '--stride', dest='stride', type=int, help='Sample every stride steps')
    _flag(simulate, '--seed', dest='seed', type=int, help='Recorded in the output header')
    _flag(simulate, '--dump-reconstruction', dest='dump_reconstruction',
          action='store_const', const=True, help='Also write the final reconstruction')
    _flag(simulate, '--exact-columns', dest='exact_columns',
          action='store_const', const=True, help='Add exact p/q columns in rational mode')
    _flag(simulate, '-v', '--verbose', dest='verbose',
          action='store_const', const=True, help='Print progress')
    simulate.set_defaults(handler=simulate_command)

    classify = commands.add_parser('classify', help='Print every report that applies to a state')
    classify.add_argument('state', help='State JSON file')
    classify.add_argument('--alpha', dest='alpha', default='0',
                          help='Threshold for the inner jumps (default: 0)')
    _flag(classify, '--lambda', dest='lam',
          help='Courant number for the 5-configuration limits (default: the state\'s)')
    _flag(classify, '--arith', dest='arithmetic',
          help='Read the state in this arithmetic instead of its own')
    classify.set_defaults(handler=classify_command)

    verify = commands.add_parser('verify', help='Run the built-in property suites')
    verify.add_argument('--seed', dest='seed', type=int, default=0)
    _flag(verify, '--cases', dest='cases', type=int, help='Cases per suite')
    verify.add_argument('--suite', dest='suites', action='append',
                        help='Restrict to this suite; repeatable')
    verify.add_argument('-v', '--verbose', dest='verbose', action='store_true')
    verify.set_defaults(handler=verify_command)

    figures = commands.add_parser('figures', help='Write the series behind a figure')
    figures.add_argument('name', choices=figure_names())
    figures.add_argument('--out', dest='out', default='.', help='Output directory')
    _flag(figures, '-M', '--cells', dest='M', type=int, help='Override the cell count')
    figures.add_argument('-v', '--verbose', dest='verbose', action='store_true')
    figures.set_defaults(handler=figures_command)
    return parser

def _read_json(text, what):
    try:
        if text.lstrip().startswith('{'):
            return json.loads(text)
        with open(text, 'r', encoding='utf-8') as f:
            return json.load(f)
    except OSError as e:
        raise CLIError("Unable to open {0} '{1}' for reading. {2}".format(what, text, e))
    except ValueError as e:
        raise CLIError("Unable to parse {0} '{1}'. {2}".format(what, text, e))

def _initial(value):
    if value.lstrip().startswith('{') or os.path.isfile(value):
        return _read_json(value, 'initial')
    return value

def simulate_settings(args):
    """Configuration dictionary holding the flags given on the command line"""
    settings = {}
    for key in ('scheme', 'arithmetic', 'n_steps', 'periods', 'M', 'init', 'metrics',
                'output', 'stride', 'seed', 'dump_reconstruction', 'exact_columns'):
        value = getattr(args, key)
        if value is not None:
            settings[key] = value
    if args.lam is not None:
        settings['lambda'] = args.lam
    if args.n_steps is not None:
        settings['periods'] = None
    elif args.periods is not None:
        settings['n_steps'] = None
    if args.initial is not None:
        settings['initial'] = _initial(args.initial)
    if args.verbose:
        settings['logging'] = {'verbose': True}
    return settings

def simulate_command(args):
    if args.config is not None and not os.path.isfile(args.config):
        raise CLIError("Unable to open configuration file '{0}'.".format(args.config))
    config = experimentConfiguration(config_file=args.config, config_dict=simulate_settings(args))
    series = run_experiment(config)
    if series.csv_path:
        print(series.csv_path)
    else:
        sys.stdout.write(format_csv(series))
    return 0

def _scalar(f, value):
    if value is None:
        return 'none'
    return f.format_exact(value)

def classify_report(state, alpha='0', lam=None):
    """Lines describing the state and every classification that applies to it"""
    f = state.field
    tv = total_variation(state)
    lines = [
        'kind: ' + state.kind.name.lower(),
        'arithmetic: ' + state.arithmetic.name.lower(),
        'phase: ' + state.phase.name.lower(),
        'window: [%d, %d]' % (state.window_start, state.window_end),
        'total variation: ' + ('infinite' if tv.infinite else _scalar(f, tv.value)),
    ]
    if state.kind == Kind.PERIODIC:
        lines.append('plateau I: ' + _scalar(f, plateau_metric_I(state)))
        return lines

    lines.append('nondecreasing: ' + str(is_nondecreasing(state)).lower())
    j = is_discrete_heaviside(state)
    lines.append('j_inf: ' + ('none' if j is None else str(j)))

    report = classify_H_alpha(state, alpha)
    if report is None:
        lines.append('H_alpha: no')
    else:
        lines.append('H_alpha: M=%d j0=%d first_position=%s alpha=%s satisfied=%s' % (
            report.M, report.j0, _scalar(f, report.first_position),
            _scalar(f, report.alpha), str(report.alpha_satisfied).lower()))
        lines.append('jumps: ' + ' '.join(_scalar(f, s) for s in report.jumps))
        lines.append('extremity: ' + classify_extremities(state).value)
        lines.append('plateau I: ' + _scalar(f, plateau_metric_I(state)))

    staircase = check_Hprime(state)
    if staircase.satisfies_Hprime:
        lines.append('staircase: case %s origin=%s front_sum=%s' % (
            staircase.case, _scalar(f, staircase.origin_position),
            _scalar(f, staircase.front_sum)))
    else:
        lines.append('staircase: no (' + staircase.reason + ')')

    try:
        five = check_five_config_conditions(state, state.lam if lam is None else lam)
    except RuntimeError as e:
        lines.append('fiveconfig: no (' + str(e) + ')')
    else:
        lines.append('fiveconfig: epsilon=%s conditions=%s' % (
            _scalar(f, five.epsilon),
            ''.join('1' if c else '0' for c in five.conditions)))
        lines.append('limits: ' + ' '.join(_scalar(f, x) for x in five.limits))
    return lines

def classify_command(args):
    data = _read_json(args.state, 'state')
    if 'state' in data:
        data = data['state']
    if args.arithmetic is not None:
        data = dict(data)
        data['arithmetic'] = get_arithmetic(args.arithmetic).name.lower()
    state = from_json(data)
    lam = None if args.lam is None else parse_ratio(args.lam)
    for line in classify_report(state, args.alpha, lam):
        print(line)
    return 0

def verify_command(args):
    if args.cases is not None and args.cases < 1:
        raise CLIError('--cases must be at least 1')
    results = run_verify(seed=args.seed, cases=args.cases, suites=args.suites,
                         verbose=args.verbose)
    print(summary_table(results))
    return 0 if all(r.passed for r in results) else 1

def figures_command(args):
    for series in run_figure(args.name, args.out, M=args.M, verbose=args.verbose):
        print(series.csv_path)
    return 0

def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2

    try:
        return args.handler(args)
    except CLIError as e:
        sys.stderr.write(str(e) + '\n')
        sys.stderr.write(len(PROGRAM_NAME) * ' ' + '  For help use --help\n')
        return 2
    except KeyboardInterrupt:
        return 1
    except RuntimeError as e:
        sys.stderr.write(PROGRAM_NAME + ": {0}\n".format(e))
        return 1

if __name__ == "__main__":
    sys.exit(main())
