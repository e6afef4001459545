#!/usr/bin/env python3

import typing
from dataclasses import dataclass
from fractions import Fraction

from ..state import Kind, jumps

@dataclass(frozen=True)
class StaircaseReport:
    """Half infinite staircase test

    The staircase origin o is a raw interface index: jumps left of o are 0,
    jumps from o + 2 on are 1, S_half = S(o) >= 0 and S_three_half =
    S(o + 1) >= 1. Read afresh, the origin is the rightmost admissible one,
    so S_half is the first nonzero jump.
    """
    satisfies_Hprime: bool
    S_half: typing.Any = None
    S_three_half: typing.Any = None
    case: typing.Optional[str] = None
    front_sum: typing.Any = None
    origin: typing.Optional[int] = None
    origin_position: typing.Any = None
    reason: str = ''

def _fail(reason):
    return StaircaseReport(False, reason=reason)

def _read(f, s, o, window):
    one = f.one()
    if not all(f.is_zero(s.at(k)) for k in window if k < o):
        return _fail('nonzero jump left of the first step')
    if not all(f.equal(s.at(k), one) for k in window if k >= o + 2):
        return _fail('jumps past the second step are not all 1')
    first, second = s.at(o), s.at(o + 1)
    if not (second > one or f.equal(second, one)):
        return _fail('second jump is below 1')
    if first < 0 and not f.is_zero(first):
        return _fail('first jump is negative')
    return StaircaseReport(
        satisfies_Hprime=True,
        S_half=first,
        S_three_half=second,
        case='i' if first >= second or f.equal(first, second) else 'ii',
        front_sum=first + second,
        origin=o,
        origin_position=s.position(o))

def check_Hprime(state, origin_position=None):
    """Staircase report, read at origin_position when one is given"""
    if state.kind != Kind.INFINITE:
        return _fail('state is not infinite')
    f = state.field
    if not state.left_tail.is_constant():
        return _fail('left tail is not constant')
    if not f.equal(state.right_tail.step, f.one()):
        return _fail('right tail step is not 1')
    s = jumps(state)
    window = range(s.first_interface - 1, s.first_interface + len(s.values) + 1)
    if origin_position is not None:
        return _read(f, s, s.interface_at(origin_position), window)
    nonzero = [k for k in window if not f.is_zero(s.at(k))]
    if not nonzero:
        return _fail('no staircase origin')
    return _read(f, s, nonzero[0], window)

class StaircasePrediction(typing.NamedTuple):
    jumps: dict
    first_position: typing.Any
    last_position: typing.Any
    front_sum_change: typing.Any
    origin_position: typing.Any

def staircase_predicted_next(report, state):
    """Jumps of the next state by position, for lambda = 1/2

    Positions before first_position carry 0 and after last_position 1.
    """
    if not report.satisfies_Hprime:
        raise RuntimeError('state does not satisfy the staircase hypothesis')
    if state.lam != Fraction(1, 2):
        raise RuntimeError('staircase predictions need lambda = 1/2')
    f = state.field
    half = f.coerce(Fraction(1, 2))
    a, b = report.S_half, report.S_three_half
    p = report.origin_position
    one = f.one()
    if report.case == 'i':
        predicted = {
            p - Fraction(1, 2): (a - b) * half,
            p + Fraction(1, 2): (3 * b + a - one) * half,
            p + Fraction(3, 2): one,
        }
        change = -half
        origin = p - Fraction(1, 2)
    else:
        predicted = {
            p - Fraction(1, 2): f.zero(),
            p + Fraction(1, 2): (3 * a + b - one) * half,
            p + Fraction(3, 2): (b - a) * half + one,
            p + Fraction(5, 2): one,
        }
        change = half
        origin = p + Fraction(1, 2)
    return StaircasePrediction(predicted, min(predicted), max(predicted), change, origin)

def staircase_matches(prediction, state):
    """True when the state's jumps agree with the prediction everywhere"""
    f = state.field
    s = jumps(state)
    for position, value in prediction.jumps.items():
        if not f.equal(s.at_position(position), value):
            return False
    first = s.interface_at(prediction.first_position)
    last = s.interface_at(prediction.last_position)
    for k in range(s.first_interface - 1, s.first_interface + len(s.values) + 1):
        if k < first and not f.is_zero(s.at(k)):
            return False
        if k > last and not f.equal(s.at(k), f.one()):
            return False
    return True

class StaircaseTracker:
    """Follows the staircase origin along a shifted-grid run at lambda = 1/2

    The first state is read afresh; every later state is read at the origin
    predicted from the one before. With follow=False every state is read
    afresh.
    """

    def __init__(self, follow=True):
        self.__follow = follow
        self.__report = None
        self.__state = None

    def update(self, state):
        origin = None
        previous = self.__report
        if (self.__follow and previous is not None and previous.satisfies_Hprime
                and self.__state.lam == Fraction(1, 2)):
            origin = staircase_predicted_next(previous, self.__state).origin_position
        report = check_Hprime(state, origin)
        self.__report = report
        self.__state = state
        return report

def front_sum_series(states, follow=True):
    """Phase-normalised front sum of every state, None where the test fails"""
    tracker = StaircaseTracker(follow)
    out = []
    for state in states:
        report = tracker.update(state)
        out.append(report.front_sum if report.satisfies_Hprime else None)
    return out
