#!/usr/bin/env python3

import typing
from dataclasses import dataclass
from fractions import Fraction

from ..lib.field import parse_ratio
from ..state import Kind, Phase, cell_value, infinite_state

@dataclass(frozen=True)
class FiveConfigReport:
    """Conditions (a) to (e) and the limit values of a 5-configuration

    Cells j0 + 1 .. j0 + 4 hold u1 .. u4 between the tails 0 and 1.
    """
    j0: int
    values: tuple
    conditions: tuple
    epsilon: typing.Any
    limits: tuple

    @property
    def all_conditions(self):
        return all(self.conditions)

def five_config_cells(state):
    """(j0, (u1, u2, u3, u4)) of a state with tails 0 and 1 and four inner cells"""
    if state.kind != Kind.INFINITE:
        raise RuntimeError('state is not in a 5-configuration')
    f = state.field
    if not (state.left_tail.is_constant() and state.right_tail.is_constant()
            and f.is_zero(state.left_tail.anchor_value)
            and f.equal(state.right_tail.anchor_value, f.one())):
        raise RuntimeError('state is not in a 5-configuration')
    j0 = state.window_start
    while j0 < state.window_end and f.is_zero(cell_value(state, j0 + 1)):
        j0 += 1
    u = tuple(cell_value(state, j0 + i) for i in range(1, 5))
    inside = all(0 < x < 1 and not f.is_zero(x) and not f.equal(x, f.one()) for x in u)
    ordered = all(a <= b or f.equal(a, b) for a, b in zip(u, u[1:]))
    rest = all(f.equal(cell_value(state, j), f.one())
               for j in range(j0 + 5, state.window_end + 1))
    if not (inside and ordered and rest):
        raise RuntimeError('state is not in a 5-configuration')
    return j0, u

def _lam(state, lam):
    f = state.field
    if parse_ratio(lam) == Fraction(1, 2):
        raise RuntimeError('5-configuration limits are undefined for lambda = 1/2')
    return f.coerce(lam)

def check_five_config_conditions(state, lam):
    j0, (u1, u2, u3, u4) = five_config_cells(state)
    f = state.field
    lam = _lam(state, lam)
    one = f.one()
    eps = u3 - u2
    denom = one - 4 * lam * lam
    u1_inf = u1 - (2 * lam - lam * lam) / denom * eps
    u23_inf = ((one + lam) * u2 + lam * u3) / (one + 2 * lam)
    u4_inf = u4 + (one - lam * lam) / denom * eps
    ge = lambda a, b: a >= b or f.equal(a, b)
    conditions = (
        ge(u2 - u1, 2 * eps),
        ge(u1_inf, lam * u23_inf),
        ge(lam * (u4 - u3), (one - lam) * eps),
        ge(u4 - u3, lam * (one - u3)),
        ge(one - u4_inf, (one - lam * lam) * eps),
    )
    return FiveConfigReport(
        j0=j0,
        values=(u1, u2, u3, u4),
        conditions=conditions,
        epsilon=eps,
        limits=(u1_inf, u23_inf, u23_inf, u4_inf))

def _configuration(state, j0, values, phase):
    f = state.field
    return infinite_state(
        (f.zero(),) + tuple(values) + (f.one(),),
        state.lam, state.arithmetic,
        window_start=j0,
        phase=phase)

def five_config_even_values(values, lam):
    """(u1 .. u4) two shifted steps later, valid while the configuration persists"""
    u1, u2, u3, u4 = values
    eps = u3 - u2
    return (
        u1 - (2 * lam - lam * lam) * eps,
        u2 + (lam - 2 * lam * lam) * eps,
        u3 - (1 - lam - 2 * lam * lam) * eps,
        u4 + (1 - lam * lam) * eps,
    )

def five_config_predicted_even_step(state, lam):
    """Configuration two shifted steps later"""
    report = check_five_config_conditions(state, lam)
    if not report.all_conditions:
        raise RuntimeError('5-configuration conditions do not all hold')
    if state.phase != Phase.INTEGER:
        raise RuntimeError('even step predictions start from an integer-grid state')
    values = five_config_even_values(report.values, state.field.coerce(lam))
    return _configuration(state, report.j0, values, Phase.INTEGER)

def five_config_predicted_odd_step(state, lam):
    """Shifted-grid configuration one step later; its epsilon is 2 lam epsilon"""
    report = check_five_config_conditions(state, lam)
    if not report.all_conditions:
        raise RuntimeError('5-configuration conditions do not all hold')
    if state.phase != Phase.INTEGER:
        raise RuntimeError('odd step predictions start from an integer-grid state')
    f = state.field
    lam = f.coerce(lam)
    u1, u2, u3, u4 = report.values
    eps = report.epsilon
    values = (
        u1 - lam * u2,
        u2 - lam * eps,
        u2 + lam * eps,
        u4 - lam * (f.one() - u2) + eps,
    )
    return _configuration(state, report.j0, values, Phase.SHIFTED_LEFT)

def epsilon_of(state):
    """u3 - u2 of a 5-configuration on either grid"""
    _, u = five_config_cells(state)
    return u[2] - u[1]
