#!/usr/bin/env python3

import csv
import os

from ..analysis.metrics import convergence_rates
from ..configuration import experimentConfiguration
from ..lib.field import parse_ratio
from .runner import run_experiment

#
# end-to-end presets. every figure writes its series under one output
# directory and returns them in the order written.
#

FSIN_LAMBDAS = ('0.47', '0.48', '0.49', '0.5')
CASTEST1_SCHEMES = ('upwind', 'lax_wendroff', 'dl_fixed')
CONVERGENCE_CELLS = (800, 1600, 3200)

def lambda_tag(lam):
    """0.47 -> '047', 1/2 -> '050'"""
    return '%03d' % round(parse_ratio(lam) * 100)

def _run(out_dir, filename, settings, verbose):
    settings = dict(settings)
    settings.setdefault('n_steps', None)
    settings.setdefault('periods', None)
    settings['output'] = os.path.join(out_dir, filename) if out_dir else None
    settings['logging'] = {'verbose': verbose}
    return run_experiment(experimentConfiguration(config_dict=settings))

def castest1(out_dir, M=None, verbose=False):
    """id1 after 10 periods with the three fixed-grid schemes"""
    M = M or 100
    return [_run(out_dir, 'castest1_%s_M%d.csv' % (scheme, M), {
        'scheme': scheme,
        'lambda': '2/5',
        'arithmetic': 'binary64',
        'initial': 'id1',
        'M': M,
        'periods': 10,
        'init': 'average',
        'metrics': ['linf', 'l1'],
    }, verbose) for scheme in CASTEST1_SCHEMES]

def _plateau_series(out_dir, prefix, scheme, M, verbose):
    return [_run(out_dir, '%s_lam%s.csv' % (prefix, lambda_tag(lam)), {
        'scheme': scheme,
        'lambda': lam,
        'arithmetic': 'binary64',
        'initial': 'id2',
        'M': M or 100,
        'periods': 15,
        'init': 'average',
        'metrics': ['plateau', 'linf'],
    }, verbose) for lam in FSIN_LAMBDAS]

def fsin(out_dir, M=None, verbose=False):
    """Plateau metric on id2 with the fixed-grid scheme near lambda = 1/2"""
    return _plateau_series(out_dir, 'fsin', 'dl_fixed', M, verbose)

def fsinstag(out_dir, M=None, verbose=False):
    """Plateau metric on id2 with the alternating shifted grids"""
    return _plateau_series(out_dir, 'fsinstag', 'dl_shifted', M, verbose)

def staircase(out_dir, M=None, verbose=False):
    return [_run(out_dir, 'staircase.csv', {
        'scheme': 'dl_shifted',
        'lambda': '1/2',
        'arithmetic': 'rational',
        'initial': {'preset': 'staircase', 'params': {'s_half': '1/2', 's_three_half': '3/2'}},
        'n_steps': 800,
        'metrics': ['staircase'],
    }, verbose)]

def fiveconfig(out_dir, M=None, verbose=False):
    return [_run(out_dir, 'fiveconfig.csv', {
        'scheme': 'dl_shifted',
        'lambda': '2/5',
        'arithmetic': 'rational',
        'initial': {'preset': 'fiveconfig',
                    'params': {'u': ['7/20', '49/100', '51/100', '17/20']}},
        'n_steps': 80,
        'metrics': ['fiveconfig', 'halpha'],
        'exact_columns': True,
    }, verbose)]

def convergence(out_dir, M=None, verbose=False):
    """Upwind mesh halving on id1 over one period, pointwise initialization

    Besides one series per mesh, writes convergence.csv with the final
    errors, their successive ratios and the observed orders.
    """
    cells = CONVERGENCE_CELLS if M is None else (M, 2 * M, 4 * M)
    series = [_run(out_dir, 'convergence_M%d.csv' % m, {
        'scheme': 'upwind',
        'lambda': '2/5',
        'arithmetic': 'binary64',
        'initial': 'id1',
        'M': m,
        'periods': 1,
        'init': 'pointwise',
        'metrics': ['linf'],
        'stride': 1000000,
    }, verbose) for m in cells]
    report = convergence_rates([s.rows[-1].linf_err for s in series])
    if out_dir:
        with open(os.path.join(out_dir, 'convergence.csv'), 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(('M', 'linf_err', 'ratio', 'order'))
            for i, m in enumerate(cells):
                ratio = repr(report.ratios[i - 1]) if i > 0 else ''
                order = repr(report.orders[i - 1]) if i > 0 else ''
                writer.writerow((m, repr(report.errors[i]), ratio, order))
    return series

_FIGURE = {
    'castest1': castest1,
    'fsin': fsin,
    'fsinstag': fsinstag,
    'staircase': staircase,
    'fiveconfig': fiveconfig,
    'convergence': convergence,
}

def figure_names():
    return list(_FIGURE)

def run_figure(name, out_dir, M=None, verbose=False):
    try:
        figure = _FIGURE[name]
    except KeyError:
        raise RuntimeError('figure (' + str(name) + ') not found')
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    if verbose:
        print('****** RUNNING FIGURE ----- ' + name)
    return figure(out_dir, M=M, verbose=verbose)
