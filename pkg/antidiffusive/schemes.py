#!/usr/bin/env python3

from dataclasses import replace
from fractions import Fraction

import numpy as np

from .lib import kernels
from .lib.field import Arithmetic, parse_ratio
from .lib.reconstruction import (
    Convention, ReconstructionProfile, get_convention, left_slice, right_slice)
from .state import Kind, Phase, cell_value, with_window

def reconstruct(state, convention):
    """Reconstruction profile of every cell of state (tails included)"""
    convention = get_convention(convention)
    if state.kind == Kind.PERIODIC:
        cells = range(state.M)
    else:
        cells = range(state.window_start - 1, state.window_end + 2)
    return ReconstructionProfile(
        lambda j: cell_value(state, j), state.offset, convention, cells)

def integrate_reconstruction(profile, a, b):
    return profile.integrate(parse_ratio(a), parse_ratio(b))

def _require_integer_phase(state, name):
    if state.phase != Phase.INTEGER:
        raise RuntimeError(name + ' requires an integer-grid state')

def _fast(state):
    return state.kind == Kind.PERIODIC and state.arithmetic == Arithmetic.BINARY64

def _cells(state):
    """Indices of the new window: all cells, or the old window grown by 2"""
    if state.kind == Kind.PERIODIC:
        return range(state.M)
    return range(state.window_start - 2, state.window_end + 3)

def _finish(state, params, values, cells, phase):
    return with_window(replace(state, lam=params.lam), values, cells.start, phase)

def upwind_step(state, params):
    _require_integer_phase(state, 'upwind')
    lam = state.field.coerce(params.lam)
    if _fast(state):
        u = kernels.upwind(np.asarray(state.values), float(lam))
        return _finish(state, params, u.tolist(), range(state.M), Phase.INTEGER)
    u = lambda j: cell_value(state, j)
    cells = _cells(state)
    values = [u(j) - lam * (u(j) - u(j - 1)) for j in cells]
    return _finish(state, params, values, cells, Phase.INTEGER)

def lax_wendroff_step(state, params):
    _require_integer_phase(state, 'lax_wendroff')
    lam = state.field.coerce(params.lam)
    if _fast(state):
        u = kernels.lax_wendroff(np.asarray(state.values), float(lam))
        return _finish(state, params, u.tolist(), range(state.M), Phase.INTEGER)
    u = lambda j: cell_value(state, j)
    half = state.field.coerce(Fraction(1, 2))
    cells = _cells(state)
    values = [u(j) - half * lam * (u(j + 1) - u(j - 1))
              + half * lam * lam * (u(j + 1) - 2 * u(j) + u(j - 1))
              for j in cells]
    return _finish(state, params, values, cells, Phase.INTEGER)

def _gather_from_left(state, lam, convention):
    """u_j + R(j - 1) - R(j), R the integral over the last lam of a cell"""
    u = lambda j: cell_value(state, j)
    cells = _cells(state)
    r = {k: right_slice(u(k - 1), u(k), u(k + 1), lam, convention)
         for k in range(cells.start - 1, cells.stop)}
    return [r[j - 1] + u(j) - r[j] for j in cells], cells

def _gather_from_right(state, lam, convention):
    """u_j - L(j) + L(j + 1), L the integral over the first lam of a cell"""
    u = lambda j: cell_value(state, j)
    cells = _cells(state)
    l = {k: left_slice(u(k - 1), u(k), u(k + 1), lam, convention)
         for k in range(cells.start, cells.stop + 1)}
    return [u(j) - l[j] + l[j + 1] for j in cells], cells

def dl_fixed_step(state, params):
    _require_integer_phase(state, 'dl_fixed')
    lam = state.field.coerce(params.lam)
    if _fast(state):
        u = kernels.gather_from_left(np.asarray(state.values), float(lam), from_right=False)
        return _finish(state, params, u.tolist(), range(state.M), Phase.INTEGER)
    values, cells = _gather_from_left(state, lam, Convention.FROM_LEFT)
    return _finish(state, params, values, cells, Phase.INTEGER)

def shifted_step(state, params):
    """One half of the alternating process

    An integer-grid state is reconstructed from the right interface and
    averaged on cells shifted left by lam; a shifted state is reconstructed
    from the left interface and averaged back on the integer grid.
    """
    if params.lam > Fraction(1, 2):
        raise RuntimeError('dl_shifted requires 0 < lambda <= 1/2')
    if state.phase == Phase.SHIFTED_LEFT and state.lam != params.lam:
        raise RuntimeError('shifted state was built with a different lambda')
    lam = state.field.coerce(params.lam)
    if state.phase == Phase.INTEGER:
        if _fast(state):
            u = kernels.gather_from_left(np.asarray(state.values), float(lam), from_right=True)
            return _finish(state, params, u.tolist(), range(state.M), Phase.SHIFTED_LEFT)
        values, cells = _gather_from_left(state, lam, Convention.FROM_RIGHT)
        return _finish(state, params, values, cells, Phase.SHIFTED_LEFT)
    if _fast(state):
        u = kernels.gather_from_right(np.asarray(state.values), float(lam), from_right=False)
        return _finish(state, params, u.tolist(), range(state.M), Phase.INTEGER)
    values, cells = _gather_from_right(state, lam, Convention.FROM_LEFT)
    return _finish(state, params, values, cells, Phase.INTEGER)

class SchemeParams:
    """A scheme and its CFL number

    Schemes are looked up by name or numeric id. Entries are in the format:
    (scheme-numeric-id, 'scheme-text-name'): (stepper, largest lambda)
    """

    _SCHEME = {
        (0, 'upwind'): (upwind_step, Fraction(1)),
        (1, 'lax_wendroff'): (lax_wendroff_step, Fraction(1)),
        (2, 'dl_fixed'): (dl_fixed_step, Fraction(1)),
        (3, 'dl_shifted'): (shifted_step, Fraction(1, 2)),
    }

    def __init__(self, scheme, lam):
        try:
            ((self.id, self.name), (self._stepper, self.max_lambda)) = next(
                (k, v) for k, v in self._SCHEME.items() if scheme in k)
        except StopIteration:
            raise RuntimeError('scheme (' + str(scheme) + ') not found')
        self.lam = parse_ratio(lam)
        if not (0 < self.lam <= self.max_lambda):
            if self.name == 'dl_shifted':
                raise RuntimeError('dl_shifted requires 0 < lambda <= 1/2')
            raise RuntimeError('lambda must lie in (0, 1]')

    @classmethod
    def names(cls):
        return [k[1] for k in cls._SCHEME]

    @property
    def scheme_kind(self):
        return self.name

    def step(self, state):
        return self._stepper(state, self)

    def __repr__(self):
        return 'SchemeParams(%s, %s)' % (self.name, self.lam)

def trajectory(state, params, n_steps):
    """Yields (step, state) for step = 0 .. n_steps"""
    yield 0, state
    for n in range(1, n_steps + 1):
        state = params.step(state)
        yield n, state

def run(state, params, n_steps, observer=None):
    if n_steps < 0:
        raise RuntimeError('step count must be nonnegative')
    for n, state in trajectory(state, params, n_steps):
        if observer is not None and n > 0:
            observer(n, state)
    return state
