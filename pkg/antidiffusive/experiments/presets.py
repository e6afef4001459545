#!/usr/bin/env python3

import copy
import math
from dataclasses import replace
from fractions import Fraction

from ..datum import (
    Constant, CosSinProduct, PiecewiseDatum, Sine, datum_from_json)
from ..lib.field import field, get_arithmetic, parse_ratio
from ..state import GridState, from_json, infinite_state

#
# initial data by name. periodic presets are data (initialized on a grid
# later), the configuration presets used by the long-time analyses are
# states with their tails already attached.
#

def _id1(arithmetic, lam):
    return PiecewiseDatum(
        [(0, 1, CosSinProduct(2 * math.pi, 10 * math.pi))],
        period=1, name='id1')

def _id2(arithmetic, lam):
    return PiecewiseDatum(
        [(Fraction(-3, 10), 0, Constant(-1)),
         (0, 1, Sine(math.pi, -math.pi / 2)),
         (1, Fraction(6, 5), Constant(1))],
        period=Fraction(3, 2), origin=Fraction(-3, 10), name='id2')

def _heaviside(arithmetic, lam, left=0, right=1, window_start=0):
    return infinite_state([left, right], lam, arithmetic, window_start=window_start)

def _plateaus(arithmetic, lam, widths=(3, 4, 5, 3), heights=('0', '1', '1/2', '2')):
    """Piecewise constant periodic datum measured in cells, one cell per unit"""
    if len(widths) != len(heights) or len(widths) == 0:
        raise RuntimeError('plateaus needs as many widths as heights')
    pieces = []
    start = 0
    for w, h in zip(widths, heights):
        w = int(w)
        if w < 1:
            raise RuntimeError('plateau widths must be positive')
        pieces.append((start, start + w, Constant(h)))
        start += w
    return PiecewiseDatum(pieces, period=start, cell_count=start, name='plateaus')

def _cumulative(arithmetic, lam, jumps, window_start=0, right_step=0):
    f = field(arithmetic)
    values = [f.zero()]
    for s in jumps:
        values.append(values[-1] + f.coerce(s))
    return infinite_state(values, lam, arithmetic,
                          window_start=window_start, right_step=right_step)

def _halpha(arithmetic, lam, jumps=('1/2', '3/10', '7/10'), window_start=0):
    if any(parse_ratio(s) < 0 for s in jumps):
        raise RuntimeError('halpha jumps must be nonnegative')
    return _cumulative(arithmetic, lam, jumps, window_start)

def _staircase(arithmetic, lam, s_half='1/2', s_three_half='3/2', window_start=0):
    """Constant 0 on the left, jumps s_half and s_three_half, then unit steps"""
    return _cumulative(arithmetic, lam, (s_half, s_three_half), window_start, right_step=1)

def _fiveconfig(arithmetic, lam, u=('7/20', '49/100', '51/100', '17/20'), window_start=0):
    if len(u) != 4:
        raise RuntimeError('fiveconfig needs four intermediate values')
    f = field(arithmetic)
    values = [f.zero()] + [f.coerce(x) for x in u] + [f.one()]
    return infinite_state(values, lam, arithmetic, window_start=window_start)

_PRESET = {
    'id1': _id1,
    'id2': _id2,
    'heaviside': _heaviside,
    'plateaus': _plateaus,
    'halpha': _halpha,
    'staircase': _staircase,
    'fiveconfig': _fiveconfig,
}

def preset_names():
    return sorted(_PRESET)

def _check_arithmetic(datum, arithmetic, name):
    if field(arithmetic).exact and not datum.exact:
        raise RuntimeError('preset (' + str(name) + ') requires binary64 arithmetic')
    return datum

def build_initial(preset, arithmetic, lam):
    """PiecewiseDatum or GridState described by a preset

    preset is a name, {"preset": name, "params": {...}}, an inline
    {"datum": {...}} or an inline {"state": {...}}. Inline states take the
    run's lambda and arithmetic.
    """
    arithmetic = get_arithmetic(arithmetic)
    lam = parse_ratio(lam)
    if isinstance(preset, str):
        preset = {'preset': preset}
    if not isinstance(preset, dict):
        raise RuntimeError('initial (' + str(preset) + ') not understood')
    if 'datum' in preset:
        return _check_arithmetic(datum_from_json(preset['datum']), arithmetic, 'datum')
    if 'state' in preset:
        data = dict(copy.deepcopy(preset['state']))
        data['arithmetic'] = arithmetic.name.lower()
        return replace(from_json(data), lam=lam)
    name = str(preset.get('preset'))
    try:
        builder = _PRESET[name]
    except KeyError:
        raise RuntimeError('preset (' + name + ') not found')
    params = preset.get('params', {}) or {}
    if isinstance(params, (list, tuple)):
        result = builder(arithmetic, lam, *params)
    else:
        result = builder(arithmetic, lam, **params)
    if isinstance(result, PiecewiseDatum):
        return _check_arithmetic(result, arithmetic, name)
    return result

def is_state(initial):
    return isinstance(initial, GridState)
