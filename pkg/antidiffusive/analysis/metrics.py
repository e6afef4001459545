#!/usr/bin/env python3

import math
import typing
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..datum import cell_average
from ..lib import kernels
from ..lib.field import Arithmetic, parse_ratio
from ..state import Kind, cell_value, physical_center

@dataclass(frozen=True)
class MetricsSample:
    step: int
    linf_err: typing.Any = None
    l1_err: typing.Any = None
    plateau_I: typing.Any = None
    M_count: typing.Optional[int] = None
    extremity: typing.Any = None
    extra: dict = field(default_factory=dict)

def _check_period(state, datum):
    if state.kind != Kind.PERIODIC:
        raise RuntimeError('error norms need a periodic state')
    if not datum.periodic or datum.period != state.period:
        raise RuntimeError('period mismatch between state (%s) and datum (%s)'
                           % (state.period, datum.period))

def linf_error_pointwise(state, datum, t):
    """max_j |u_j - u0(x_j - t)| at the cell centres"""
    _check_period(state, datum)
    f = state.field
    if f.exact:
        t = parse_ratio(t)
        errors = (abs(u - datum.value(physical_center(state, j) - t))
                  for j, u in enumerate(state.values))
        return max(errors)
    centers = np.array([float(physical_center(state, j)) for j in range(state.M)])
    exact = datum.sample(centers - float(t))
    return float(np.max(np.abs(np.asarray(state.values) - exact)))

def l1_error_cell_averaged(state, datum, t):
    """dx * sum_j |u_j - average of the datum translated by t over cell j|"""
    _check_period(state, datum)
    f = state.field
    dx = state.dx
    t = parse_ratio(t) if f.exact else t
    total = f.zero()
    for j, u in enumerate(state.values):
        avg = cell_average(datum, physical_center(state, j) - t, dx, state.arithmetic)
        total += abs(u - avg)
    return f.coerce(dx) * total

def plateau_metric_I(state):
    """sum_j min(|u_{j-1} - u_j|, |u_j - u_{j+1}|, |u_{j+1} - u_{j+2}|)"""
    if state.kind == Kind.PERIODIC:
        if state.arithmetic == Arithmetic.BINARY64:
            return kernels.plateau_metric(np.asarray(state.values))
        cells = range(state.M)
    else:
        if not (state.left_tail.is_constant() and state.right_tail.is_constant()):
            raise RuntimeError('plateau metric needs constant tails')
        cells = range(state.window_start - 2, state.window_end + 2)
    u = lambda j: cell_value(state, j)
    return sum((min(abs(u(j - 1) - u(j)), abs(u(j) - u(j + 1)), abs(u(j + 1) - u(j + 2)))
                for j in cells), state.field.zero())

class ConvergenceReport(typing.NamedTuple):
    errors: tuple
    ratios: tuple
    orders: tuple

def convergence_rates(errors):
    """Successive error ratios and observed orders for mesh halving"""
    errors = tuple(float(e) for e in errors)
    ratios = tuple(a / b if b != 0 else math.inf for a, b in zip(errors, errors[1:]))
    orders = tuple(math.log2(r) if 0 < r < math.inf else math.nan for r in ratios)
    return ConvergenceReport(errors, ratios, orders)

def elapsed_time(state, n):
    """Physical time after n steps, lambda * dx per step"""
    return Fraction(n) * state.lam * state.dx

def comparison_time(scheme, state, n):
    """Time at which the exact solution is compared with a state after n steps

    The shifted-grid process moves its cells with the solution, so its states
    compare with the initial datum at every step.
    """
    if scheme == 'dl_shifted':
        return Fraction(0)
    return elapsed_time(state, n)
