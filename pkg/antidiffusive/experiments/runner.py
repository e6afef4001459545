#!/usr/bin/env python3

import csv
import io
import json
import math
import os
import typing
from dataclasses import dataclass

from ..analysis.classifiers import (
    ExtremityClass, classify_extremities, classify_H_alpha, is_discrete_heaviside)
from ..analysis.fiveconfig import epsilon_of
from ..analysis.metrics import (
    MetricsSample, comparison_time, l1_error_cell_averaged, linf_error_pointwise,
    plateau_metric_I)
from ..analysis.staircase import StaircaseTracker
from ..configuration import experimentConfiguration
from ..datum import init_periodic_state, sample_periodic_state
from ..lib.field import field
from ..lib.reconstruction import Convention
from ..schemes import SchemeParams, reconstruct, trajectory
from ..state import Kind, Phase, to_json
from .presets import build_initial, is_state

BASE_COLUMNS = ('step', 'linf_err', 'l1_err', 'plateau_I', 'M_count', 'extremity')
SCALAR_COLUMNS = ('linf_err', 'l1_err', 'plateau_I', 'front_sum', 'epsilon')
DEFAULT_CELLS = 100
DEFAULT_STEPS = 100

_DATUM_METRICS = ('linf', 'l1')
_INFINITE_METRICS = ('halpha', 'extremity', 'heaviside', 'staircase', 'fiveconfig')

@dataclass
class TimeSeries:
    """Sampled metrics of one run; the header is the resolved configuration"""
    header: dict
    columns: tuple
    rows: list
    final_state: typing.Any = None
    csv_path: typing.Optional[str] = None

    def column(self, name):
        return [_column_value(row, name) for row in self.rows]

def _column_value(row, name):
    if name in row.extra:
        return row.extra[name]
    return getattr(row, name)

def prepare(config):
    """(initial state, datum or None, resolved M, resolved step count)"""
    config.validate()
    initial = build_initial(config.initial, config.arithmetic, config.lam)
    if is_state(initial):
        datum = None
        state = initial
        M = state.M
    else:
        datum = initial
        if not datum.periodic:
            raise RuntimeError('initial datum must be periodic')
        M = config.M or datum.cell_count or DEFAULT_CELLS
        init = init_periodic_state if config.init == 'average' else sample_periodic_state
        state = init(datum, M, config.lam, config.arithmetic)

    metrics = config.metrics
    if datum is None and any(m in _DATUM_METRICS for m in metrics):
        raise RuntimeError('metrics linf and l1 need an initial datum')
    if state.kind == Kind.PERIODIC and any(m in _INFINITE_METRICS for m in metrics):
        raise RuntimeError('metrics ' + ', '.join(m for m in metrics if m in _INFINITE_METRICS)
                           + ' need an infinite initial state')

    if config.n_steps is not None:
        n_steps = config.n_steps
    elif config.periods is not None:
        if state.kind != Kind.PERIODIC:
            raise RuntimeError('periods needs a periodic initial state')
        n_steps = math.floor(config.periods * M / config.lam)
    elif state.kind == Kind.PERIODIC:
        n_steps = math.floor(M / config.lam)
    else:
        n_steps = DEFAULT_STEPS
    return state, datum, M, n_steps

def sample_metrics(state, n, datum, metrics, scheme=None, staircase=None):
    """MetricsSample of one snapshot; inapplicable entries stay None

    staircase is the StaircaseTracker of the run; it must see every step.
    """
    linf = l1 = plateau = M_count = extremity = None
    extra = {}
    t = comparison_time(scheme, state, n)
    if 'linf' in metrics:
        linf = linf_error_pointwise(state, datum, t)
    if 'l1' in metrics:
        l1 = l1_error_cell_averaged(state, datum, t)
    if 'plateau' in metrics:
        plateau = plateau_metric_I(state)
    if 'halpha' in metrics or 'extremity' in metrics:
        report = classify_H_alpha(state, 0)
        if report is not None:
            if 'halpha' in metrics:
                M_count = report.M
            if 'extremity' in metrics:
                extremity = classify_extremities(state)
    if 'heaviside' in metrics:
        extra['heaviside_j'] = is_discrete_heaviside(state)
    if 'staircase' in metrics:
        report = (staircase or StaircaseTracker(follow=False)).update(state)
        extra['front_sum'] = report.front_sum if report.satisfies_Hprime else None
        extra['staircase_case'] = report.case
    if 'fiveconfig' in metrics:
        try:
            extra['epsilon'] = epsilon_of(state)
        except RuntimeError:
            extra['epsilon'] = None
    return MetricsSample(n, linf, l1, plateau, M_count, extremity, extra)

def columns_for(config):
    metrics = config.metrics
    columns = list(BASE_COLUMNS)
    if 'heaviside' in metrics:
        columns.append('heaviside_j')
    if 'staircase' in metrics:
        columns += ['front_sum', 'staircase_case']
    if 'fiveconfig' in metrics:
        columns.append('epsilon')
    if config.exact_columns and field(config.arithmetic).exact:
        columns += [c + '_exact' for c in columns if c in SCALAR_COLUMNS]
    return tuple(columns)

def header_for(config, M, n_steps, from_datum=True):
    header = config.to_dict()
    header['M'] = M if from_datum else None
    header['n_steps'] = n_steps
    header['periods'] = None
    return header

def run_experiment(config):
    """Steps the configured scheme and samples metrics every stride steps

    Step 0 and the last step are always sampled. When an output path is set
    the CSV, the final state and optionally the final reconstruction are
    written next to each other.
    """
    state, datum, M, n_steps = prepare(config)
    params = SchemeParams(config.scheme, config.lam)
    header = header_for(config, M, n_steps, from_datum=datum is not None)

    if config.logging_verbose:
        print('****** RUNNING EXPERIMENT ----- %s %s lambda=%s steps=%d'
              % (config.scheme, json.dumps(config.initial, sort_keys=True),
                 header['lambda'], n_steps))

    rows = []
    final = state
    tracker = StaircaseTracker(follow=config.scheme == 'dl_shifted')
    for n, current in trajectory(state, params, n_steps):
        if n % config.stride == 0 or n == n_steps:
            rows.append(sample_metrics(current, n, datum, config.metrics, config.scheme, tracker))
        elif 'staircase' in config.metrics:
            tracker.update(current)
        final = current

    series = TimeSeries(header, columns_for(config), rows, final)
    if config.output:
        series.csv_path = write_outputs(series, config)
        if config.logging_verbose:
            print('Wrote ' + series.csv_path)
    return series

def _source(name):
    return name[:-len('_exact')] if name.endswith('_exact') else name

def _format(f, name, value):
    if value is None:
        return ''
    if isinstance(value, ExtremityClass):
        return value.value
    if name.endswith('_exact'):
        return f.format_exact(value)
    if name in SCALAR_COLUMNS:
        return f.format_decimal(value)
    return str(value)

def format_csv(series):
    f = field(series.header['arithmetic'])
    out = io.StringIO()
    out.write('# ' + json.dumps(series.header, sort_keys=True) + '\n')
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(series.columns)
    for row in series.rows:
        writer.writerow([
            _format(f, name, _column_value(row, _source(name)))
            for name in series.columns])
    return out.getvalue()

def _csv_path(output):
    if output.endswith(os.sep) or os.path.isdir(output):
        return os.path.join(output, 'series.csv')
    return output

def reconstruction_convention(scheme, state):
    """Reconstruction the scheme applies to state on its next step"""
    if scheme == 'dl_shifted' and state.phase == Phase.INTEGER:
        return Convention.FROM_RIGHT
    return Convention.FROM_LEFT

def write_outputs(series, config):
    path = _csv_path(config.output)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(format_csv(series))
    stem = os.path.splitext(path)[0]
    with open(stem + '.state.json', 'w', encoding='utf-8') as f:
        json.dump(to_json(series.final_state), f, indent=2, sort_keys=True)
    if config.dump_reconstruction:
        state = series.final_state
        profile = reconstruct(state, reconstruction_convention(config.scheme, state))
        with open(stem + '.reconstruction.json', 'w', encoding='utf-8') as f:
            json.dump(profile.to_json(state.field.to_json), f, indent=2)
    return path

def read_header(path):
    with open(path, 'r', encoding='utf-8') as f:
        line = f.readline()
    if not line.startswith('# '):
        raise RuntimeError('file (' + path + ') has no configuration header')
    return json.loads(line[2:])

def config_from_header(header):
    """Configuration that re-runs the series the header was written for"""
    if isinstance(header, str):
        header = read_header(header)
    return experimentConfiguration(config_dict=header)
