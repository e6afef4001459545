#!/usr/bin/env python3

import typing
from dataclasses import dataclass
from enum import Enum

from ..state import Kind, cell_value, jumps, states_equal

@dataclass(frozen=True)
class HAlphaReport:
    """Jump pattern 0 ... 0, S_1 ... S_M, 0 ... 0 with S_1, S_M > 0

    j0 is the raw interface index of the first positive jump, that is the
    last cell still on the left tail value; positions follow the phase.
    """
    j0: int
    M: int
    jumps: tuple
    first_position: typing.Any
    min_inner_jump: typing.Any
    alpha: typing.Any
    alpha_satisfied: bool

    def position(self, i):
        """Position of the i-th positive jump, i = 0 .. M - 1"""
        return self.first_position + i

def classify_H_alpha(state, alpha):
    """H_alpha^M report, or None when the jump pattern does not match

    Tails must be two constants, left below right. alpha is compared with
    the inner jumps divided by the gap between the tails; the report keeps
    the raw jumps.
    """
    if state.kind != Kind.INFINITE:
        return None
    if not (state.left_tail.is_constant() and state.right_tail.is_constant()):
        return None
    f = state.field
    if not state.left_tail.anchor_value < state.right_tail.anchor_value:
        return None
    s = jumps(state)
    signs = [f.sign(x) for x in s.values]
    if any(x < 0 for x in signs):
        return None
    positive = [i for i, x in enumerate(signs) if x > 0]
    if not positive:
        return None
    first, last = positive[0], positive[-1]
    if any(x == 0 for x in signs[first:last + 1]):
        return None
    pattern = tuple(s.values[first:last + 1])
    inner = pattern[1:-1]
    alpha = f.coerce(alpha)
    min_inner = min(inner) if inner else None
    gap = state.right_tail.anchor_value - state.left_tail.anchor_value
    return HAlphaReport(
        j0=s.first_interface + first,
        M=len(pattern),
        jumps=pattern,
        first_position=s.position(s.first_interface + first),
        min_inner_jump=min_inner,
        alpha=alpha,
        alpha_satisfied=all(x / gap > alpha for x in inner))

def count_positive_jumps(state):
    report = classify_H_alpha(state, 0)
    if report is None:
        raise RuntimeError('state does not match an H_alpha jump pattern')
    return report.M

class ExtremityClass(Enum):
    LS_SL = 'LS/SL'
    SL_LS = 'SL/LS'
    SL_SL = 'SL/SL'
    LS_LS = 'LS/LS'
    NOT_APPLICABLE = 'n/a'

def classify_extremities(state):
    """Left part LS iff first jump > second, right part SL iff last > second to last"""
    report = classify_H_alpha(state, 0)
    if report is None:
        raise RuntimeError('state does not match an H_alpha jump pattern')
    if report.M < 3:
        return ExtremityClass.NOT_APPLICABLE
    s = report.jumps
    left = 'LS' if s[0] > s[1] else 'SL'
    right = 'SL' if s[-1] > s[-2] else 'LS'
    return ExtremityClass[left + '_' + right]

#
# edges of the extremity automaton with the change of the jump count
#
_AUTOMATON = {
    ExtremityClass.LS_SL: ({ExtremityClass.SL_LS}, 1),
    ExtremityClass.SL_LS: ({ExtremityClass.LS_SL, ExtremityClass.SL_LS,
                            ExtremityClass.SL_SL, ExtremityClass.LS_LS}, -1),
    ExtremityClass.SL_SL: ({ExtremityClass.LS_LS, ExtremityClass.SL_LS}, 0),
    ExtremityClass.LS_LS: ({ExtremityClass.SL_SL, ExtremityClass.SL_LS}, 0),
}

def automaton_allows(before, M_before, after, M_after):
    """True when the observed transition is an edge of the automaton

    A transition into not-applicable is accepted when the jump count drops
    to 2 or less as the edge requires.
    """
    if before == ExtremityClass.NOT_APPLICABLE:
        return True
    targets, change = _AUTOMATON[before]
    if M_after != M_before + change:
        return False
    if after == ExtremityClass.NOT_APPLICABLE:
        return M_after <= 2
    return after in targets

def is_discrete_heaviside(state):
    """Smallest j such that cells left of j are on the left tail and right of j on the right one

    The cell j itself must lie between the two tail values.
    """
    if state.kind != Kind.INFINITE:
        return None
    if not (state.left_tail.is_constant() and state.right_tail.is_constant()):
        return None
    f = state.field
    low = state.left_tail.anchor_value
    high = state.right_tail.anchor_value
    if not low < high:
        return None
    lo, hi = state.window_start, state.window_end
    candidates = range(lo, hi + 2)
    for j in candidates:
        u = cell_value(state, j)
        if (f.sign(u - low) >= 0 and f.sign(high - u) >= 0
                and all(f.equal(cell_value(state, i), low) for i in range(lo, j))
                and all(f.equal(cell_value(state, i), high) for i in range(j + 1, hi + 1))):
            return j
    return None

def two_periodicity_onset(state, params, horizon):
    """First n <= horizon - 2 with state(n + 2) = state(n) along the run

    The scheme is deterministic, so the first repetition is the onset.
    """
    a = state
    b = params.step(a)
    for n in range(0, horizon - 1):
        c = params.step(b)
        if states_equal(c, a):
            return n
        a, b = b, c
    return None

def detect_two_periodicity(trajectory, horizon):
    """Smallest p with state(n + 2) = state(n) for every p <= n <= horizon - 2"""
    states = [x[1] if isinstance(x, tuple) else x for x in trajectory][:horizon + 1]
    if len(states) < 3:
        return None
    last = len(states) - 3
    p = None
    for n in range(last, -1, -1):
        if states_equal(states[n + 2], states[n]):
            p = n
        else:
            break
    return p
