#!/usr/bin/env python3

import random
import time
import typing
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from ..analysis.classifiers import (
    automaton_allows, classify_extremities, classify_H_alpha, count_positive_jumps,
    is_discrete_heaviside, two_periodicity_onset)
from ..analysis.fiveconfig import (
    check_five_config_conditions, five_config_cells, five_config_even_values,
    five_config_predicted_even_step, five_config_predicted_odd_step)
from ..analysis.staircase import (
    check_Hprime, staircase_matches, staircase_predicted_next)
from ..lib.field import Arithmetic
from ..lib.reconstruction import Convention, half_cell_integrals, reconstruct_cell
from ..schemes import SchemeParams
from ..state import (
    Kind, Phase, add_states, affine_image, cell_value, infinite_state, is_nondecreasing,
    jumps, monotone_decomposition, periodic_state, states_equal)

HALF = Fraction(1, 2)
MASS_TOLERANCE = 1e-12
PERIODICITY_HORIZON = 10000
STAIRCASE_STEPS = 800
STAIRCASE_WINDOW = 500
STAIRCASE_GROWTH = 5
FIVECONFIG_DOUBLE_STEPS = 40
FIVECONFIG_LAMBDAS = (Fraction(1, 5), Fraction(3, 10), Fraction(2, 5), Fraction(9, 20))
SHIFTED_LAMBDAS = (Fraction(1, 5), Fraction(1, 4), Fraction(1, 3), Fraction(2, 5), Fraction(1, 2))
FIXED_LAMBDAS = SHIFTED_LAMBDAS + (Fraction(3, 5), Fraction(3, 4), Fraction(1))
MONOTONE_SCHEMES = ('upwind', 'dl_fixed', 'dl_shifted')

class Timer:
    """Wall clock laps in milliseconds; each lap runs from the previous one"""

    def __init__(self):
        self.laps = []
        self.__started = None

    def start(self):
        self.__started = time.perf_counter_ns()

    def lap(self):
        if self.__started is None:
            raise RuntimeError('Timer was not started.')
        now = time.perf_counter_ns()
        self.laps.append((now - self.__started) / 1e6)
        self.__started = now
        return self.laps[-1]

    def total(self):
        return sum(self.laps)

    def mean(self):
        return self.total() / len(self.laps) if self.laps else 0.0

    def longest(self):
        return max(self.laps, default=0.0)

@dataclass
class SuiteResult:
    name: str
    cases: int
    violations: int
    milliseconds: float
    failures: list = dataclass_field(default_factory=list)
    mean_case_milliseconds: float = 0.0
    max_case_milliseconds: float = 0.0

    @property
    def passed(self):
        return self.violations == 0

#
# generators. every draw stays inside the hypotheses of the property it
# feeds, so a violation is a defect of the scheme or of a classifier.
#

def _ratio(rng, lo, hi, denominator):
    return Fraction(rng.randint(lo * denominator, hi * denominator), denominator)

def random_halpha(rng, max_M=10, min_M=1):
    """(state, alpha) with M strictly positive jumps on the 1/64 lattice

    alpha is half the smallest inner jump relative to the tail gap.
    """
    M = rng.randint(min_M, max_M)
    steps = [Fraction(rng.randint(1, 64), 64) for _ in range(M)]
    values = [Fraction(0)]
    for s in steps:
        values.append(values[-1] + s)
    inner = steps[1:-1] if M >= 3 else steps
    alpha = min(inner) * HALF / values[-1]
    state = infinite_state(values, HALF, Arithmetic.RATIONAL, window_start=rng.randint(-3, 3))
    return state, alpha

def random_staircase(rng):
    s_half = _ratio(rng, 0, 4, 16)
    s_three_half = _ratio(rng, 1, 4, 16)
    return infinite_state(
        [0, s_half, s_half + s_three_half], HALF, Arithmetic.RATIONAL,
        window_start=rng.randint(-3, 3), right_step=1)

def _upper_ratio(rng, lam):
    """Ratio drawn in (lam + 1/20, 19/20)"""
    lo, hi = lam + Fraction(1, 20), Fraction(19, 20)
    return lo + (hi - lo) * Fraction(rng.randint(1, 99), 100)

def random_fiveconfig(rng, lam):
    """5-configuration near a width-2 plateau, shrunk until (a) to (e) hold"""
    while True:
        v2 = Fraction(rng.randint(8, 32), 40)
        r1, r4 = _upper_ratio(rng, lam), _upper_ratio(rng, lam)
        v1 = r1 * v2
        v4 = v2 + r4 * (1 - v2)
        eps = Fraction(rng.randint(1, 20), 1000)
        for _ in range(30):
            u = (v1, v2 - eps / 2, v2 + eps / 2, v4)
            state = infinite_state([0, *u, 1], lam, Arithmetic.RATIONAL,
                                   window_start=rng.randint(-3, 3))
            if check_five_config_conditions(state, lam).all_conditions:
                return state
            eps = eps / 2

def random_periodic(rng, lam, arithmetic=Arithmetic.RATIONAL):
    M = rng.randint(4, 12)
    values = [_ratio(rng, -2, 2, 16) for _ in range(M)]
    return periodic_state(values, lam, arithmetic)

def random_infinite(rng, lam, monotone=False, tails=False):
    size = rng.randint(2, 10)
    values = [_ratio(rng, -2, 2, 16)]
    for _ in range(size - 1):
        step = _ratio(rng, 0, 1, 16) if monotone else _ratio(rng, -1, 1, 16)
        values.append(values[-1] + step)
    left = right = 0
    if tails:
        left, right = _ratio(rng, -1, 1, 8), _ratio(rng, -1, 1, 8)
    return infinite_state(values, lam, Arithmetic.RATIONAL,
                          window_start=rng.randint(-3, 3), left_step=left, right_step=right)

def _params(rng, scheme):
    lams = SHIFTED_LAMBDAS if scheme == 'dl_shifted' else FIXED_LAMBDAS
    return SchemeParams(scheme, rng.choice(lams))

def _cells(state, margin=1):
    if state.kind == Kind.PERIODIC:
        return range(state.M)
    return range(state.window_start - margin, state.window_end + margin + 1)

#
# suites. each draws one case and returns None or a failure message.
#

def _case_half_cell(rng):
    a = _ratio(rng, -2, 2, 32)
    b = a + _ratio(rng, 0, 2, 32)
    c = b + _ratio(rng, 0, 2, 32)
    cell = reconstruct_cell(a, b, c, Convention.FROM_RIGHT)
    left, right = cell.integrate(0, HALF), cell.integrate(HALF, 1)
    if (left, right) != half_cell_integrals(a, b, c):
        return 'half cell integrals of (%s, %s, %s) are (%s, %s)' % (a, b, c, left, right)
    if not (a / 2 <= left <= b / 2 and b / 2 <= right <= c / 2):
        return 'half cell bounds fail for (%s, %s, %s)' % (a, b, c)
    return None

def _case_jump_bound(rng):
    params = SchemeParams('dl_shifted', HALF)
    state = random_infinite(rng, HALF, monotone=True)
    for _ in range(2):
        after = params.step(state)
        old, new = jumps(state), jumps(after)
        for k in range(new.first_interface - 2, new.last_interface + 3):
            p = new.position(k)
            bound = min(old.at_position(p - HALF), old.at_position(p + HALF))
            if new.at(k) < bound:
                return 'jump %s at %s below %s' % (new.at(k), p, bound)
        state = after
    return None

def _case_extremity(rng):
    params = SchemeParams('dl_shifted', HALF)
    state, _ = random_halpha(rng, min_M=2)
    report = classify_H_alpha(state, 0)
    s = report.jumps
    fp = report.first_position
    one = params.step(state)
    first = jumps(one)
    if s[0] <= s[1]:
        if first.at_position(fp - HALF) != 0:
            return 'first jump %s did not vanish for jumps %s' % (first.at_position(fp - HALF), s)
        return None
    if not (0 < first.at_position(fp - HALF) <= first.at_position(fp + HALF)):
        return 'left extremity not small/large after one step for jumps %s' % (s,)
    if report.M >= 4:
        alpha = min(s[1], s[2])
        second = jumps(params.step(one))
        if second.at_position(fp) > s[0] - alpha / 4:
            return 'first jump %s did not decay by alpha/4 for jumps %s' % (second.at_position(fp), s)
    return None

def _case_closure(rng):
    params = SchemeParams('dl_shifted', HALF)
    state, alpha = random_halpha(rng)
    M = count_positive_jumps(state)
    for _ in range(2):
        state = params.step(state)
        report = classify_H_alpha(state, alpha)
        if report is None or not report.alpha_satisfied:
            return 'state left H_alpha for alpha = %s' % alpha
        if abs(report.M - M) > 1:
            return 'jump count moved from %d to %d' % (M, report.M)
        M = report.M
    return None

def _case_automaton(rng):
    params = SchemeParams('dl_shifted', HALF)
    state, _ = random_halpha(rng, min_M=3)
    before, M_before = classify_extremities(state), count_positive_jumps(state)
    for n in range(400):
        if M_before <= 2:
            break
        state = params.step(state)
        after, M_after = classify_extremities(state), count_positive_jumps(state)
        if not automaton_allows(before, M_before, after, M_after):
            return 'step %d: %s (M=%d) -> %s (M=%d)' % (
                n + 1, before.value, M_before, after.value, M_after)
        before, M_before = after, M_after
    return None

def _case_overcompressive(rng):
    params = SchemeParams('dl_shifted', HALF)
    state, _ = random_halpha(rng)
    p = two_periodicity_onset(state, params, PERIODICITY_HORIZON)
    if p is None:
        return 'no 2-periodicity within %d steps' % PERIODICITY_HORIZON
    for _ in range(p):
        state = params.step(state)
    for _ in range(2):
        if is_discrete_heaviside(state) is None or count_positive_jumps(state) > 2:
            return 'state after onset %d is not a discrete Heaviside' % p
        state = params.step(state)
    return None

def _case_staircase(rng):
    params = SchemeParams('dl_shifted', HALF)
    state = random_staircase(rng)
    report = check_Hprime(state)
    initial = report.front_sum
    even = [initial]
    reached = False
    for n in range(STAIRCASE_STEPS):
        prediction = staircase_predicted_next(report, state)
        state = params.step(state)
        after = check_Hprime(state, prediction.origin_position)
        if not after.satisfies_Hprime:
            return 'step %d: staircase lost (%s)' % (n + 1, after.reason)
        if not staircase_matches(prediction, state):
            return 'step %d: jumps differ from the staircase prediction' % (n + 1)
        if after.front_sum != report.front_sum + prediction.front_sum_change:
            return 'step %d: front sum moved by %s' % (n + 1, after.front_sum - report.front_sum)
        if report.case == 'i' and after.case != 'ii':
            return 'step %d: case (i) followed by case (%s)' % (n + 1, after.case)
        if (n + 1) % 2 == 0:
            if after.front_sum < even[-1]:
                return 'step %d: even front sum decreased' % (n + 1)
            even.append(after.front_sum)
            if n + 1 <= STAIRCASE_WINDOW and after.front_sum >= initial + STAIRCASE_GROWTH:
                reached = True
        report = after
    if not reached:
        return 'front sum grew by less than %d within %d steps' % (STAIRCASE_GROWTH, STAIRCASE_WINDOW)
    return None

def _case_fiveconfig(rng, index):
    lam = FIVECONFIG_LAMBDAS[index % len(FIVECONFIG_LAMBDAS)]
    params = SchemeParams('dl_shifted', lam)
    state = random_fiveconfig(rng, lam)
    report = check_five_config_conditions(state, lam)
    j0, u0 = report.j0, report.values
    limits = report.limits
    eps0 = report.epsilon
    one = params.step(state)
    two = params.step(one)
    if not states_equal(one, five_config_predicted_odd_step(state, lam)):
        return 'lambda %s: odd step differs from the prediction' % lam
    if not states_equal(two, five_config_predicted_even_step(state, lam)):
        return 'lambda %s: even step differs from the prediction' % lam
    expected = u0
    for n in range(FIVECONFIG_DOUBLE_STEPS + 1):
        j, u = five_config_cells(state)
        if j != j0 or u != expected:
            return 'lambda %s, step %d: configuration differs from the recurrence' % (lam, 2 * n)
        if u[2] - u[1] != (4 * lam * lam) ** n * eps0:
            return 'lambda %s, step %d: epsilon off the geometric rate' % (lam, 2 * n)
        if not (limits[0] <= u[0] <= u0[0] and u0[1] <= u[1] <= limits[1]
                and limits[2] <= u[2] <= u0[2] and u0[3] <= u[3] <= limits[3]):
            return 'lambda %s, step %d: sandwich bounds fail' % (lam, 2 * n)
        expected = five_config_even_values(expected, lam)
        state = params.step(params.step(state))
    return None

def _case_mass(rng):
    scheme = rng.choice(SchemeParams.names())
    params = _params(rng, scheme)
    arithmetic = rng.choice((Arithmetic.RATIONAL, Arithmetic.BINARY64))
    state = random_periodic(rng, params.lam, arithmetic)
    f = state.field
    before = sum(state.values, f.zero())
    for _ in range(2):
        state = params.step(state)
    after = sum(state.values, f.zero())
    ok = before == after if f.exact else abs(before - after) <= MASS_TOLERANCE
    if not ok:
        return '%s lambda %s: mass %s -> %s' % (scheme, params.lam, before, after)
    return None

def _case_monotone(rng):
    scheme = rng.choice(MONOTONE_SCHEMES)
    params = _params(rng, scheme)
    state = random_infinite(rng, params.lam, monotone=True)
    for _ in range(2):
        after = params.step(state)
        if not is_nondecreasing(after):
            return '%s lambda %s: monotonicity lost' % (scheme, params.lam)
        if scheme == 'dl_shifted':
            # each new cell lies between the two old cells it overlaps
            for j in _cells(after, 2):
                lo, hi = (j - 1, j) if state.phase == Phase.INTEGER else (j, j + 1)
                if not cell_value(state, lo) <= cell_value(after, j) <= cell_value(state, hi):
                    return 'dl_shifted lambda %s: cell %d not bracketed' % (params.lam, j)
        state = after
    return None

def _case_decomposition(rng):
    params = SchemeParams('dl_shifted', rng.choice(SHIFTED_LAMBDAS))
    state = random_infinite(rng, params.lam)
    if rng.random() < 0.5:
        state = params.step(state)
    dec = monotone_decomposition(state)
    if not (is_nondecreasing(dec.v) and is_nondecreasing(affine_image(dec.w, -1, 0))):
        return 'decomposition parts are not monotone'
    if not states_equal(add_states(dec.v, dec.w, dec.offset), state):
        return 'decomposition does not add up to the state'
    stepped = add_states(params.step(dec.v), params.step(dec.w), dec.offset)
    if not states_equal(params.step(state), stepped):
        return 'lambda %s: one step does not commute with the decomposition' % params.lam
    return None

def _case_max_principle(rng):
    scheme = rng.choice(MONOTONE_SCHEMES)
    params = _params(rng, scheme)
    if rng.random() < 0.5:
        state = random_periodic(rng, params.lam)
    else:
        state = random_infinite(rng, params.lam)
    lo = min(cell_value(state, j) for j in _cells(state))
    hi = max(cell_value(state, j) for j in _cells(state))
    after = params.step(state)
    for j in _cells(after, 2):
        if not lo <= cell_value(after, j) <= hi:
            return '%s lambda %s: cell %d left [%s, %s]' % (scheme, params.lam, j, lo, hi)
    return None

def _case_tails(rng):
    scheme = rng.choice(SchemeParams.names())
    params = _params(rng, scheme)
    state = random_infinite(rng, params.lam, tails=True)
    after = params.step(state)
    if (after.left_tail.step != state.left_tail.step
            or after.right_tail.step != state.right_tail.step):
        return '%s lambda %s: tail steps changed' % (scheme, params.lam)
    for side in (range(state.window_end + 2, state.window_end + 6),
                 range(state.window_start - 5, state.window_start - 1)):
        shifts = {cell_value(after, j) - cell_value(state, j) for j in side}
        if len(shifts) != 1:
            return '%s lambda %s: tail is not translated' % (scheme, params.lam)
    return None

def _case_equivariance(rng):
    scheme = rng.choice(SchemeParams.names())
    params = _params(rng, scheme)
    if rng.random() < 0.5:
        state = random_periodic(rng, params.lam)
    else:
        state = random_infinite(rng, params.lam)
    scale = Fraction(rng.randint(1, 24), 8)
    shift = _ratio(rng, -2, 2, 8)
    lhs = params.step(affine_image(state, scale, shift))
    rhs = affine_image(params.step(state), scale, shift)
    if not states_equal(lhs, rhs):
        return '%s lambda %s: step does not commute with u -> %s u + %s' % (
            scheme, params.lam, scale, shift)
    return None

class _Suite(typing.NamedTuple):
    case: typing.Callable
    default_cases: int
    capped: bool = False
    indexed: bool = False

SUITES = {
    'half_cell': _Suite(_case_half_cell, 500),
    'jump_bound': _Suite(_case_jump_bound, 500),
    'extremity': _Suite(_case_extremity, 500),
    'closure': _Suite(_case_closure, 500),
    'automaton': _Suite(_case_automaton, 500),
    'overcompressive': _Suite(_case_overcompressive, 200, capped=True),
    'staircase': _Suite(_case_staircase, 50, capped=True),
    'fiveconfig': _Suite(_case_fiveconfig, 200, capped=True, indexed=True),
    'mass': _Suite(_case_mass, 500),
    'monotone': _Suite(_case_monotone, 500),
    'decomposition': _Suite(_case_decomposition, 500),
    'max_principle': _Suite(_case_max_principle, 500),
    'tails': _Suite(_case_tails, 500),
    'equivariance': _Suite(_case_equivariance, 500),
}

def run_suite(name, seed, cases=None, verbose=False):
    try:
        suite = SUITES[name]
    except KeyError:
        raise RuntimeError('verify suite (' + str(name) + ') not found')
    if cases is None:
        cases = suite.default_cases
    else:
        cases = min(cases, suite.default_cases) if suite.capped else cases
    if verbose:
        print('****** RUNNING SUITE ----- %s (%d cases)' % (name, cases))
    rng = random.Random('%s:%s' % (seed, name))
    timer = Timer()
    failures = []
    timer.start()
    for i in range(cases):
        message = suite.case(rng, i) if suite.indexed else suite.case(rng)
        timer.lap()
        if message is not None:
            failures.append(message)
    return SuiteResult(name, cases, len(failures), timer.total(), failures,
                       timer.mean(), timer.longest())

def run_verify(seed=0, cases=None, suites=None, verbose=False):
    names = list(SUITES) if not suites else list(suites)
    return [run_suite(name, seed, cases, verbose) for name in names]

def summary_table(results):
    lines = ['%-16s %7s %10s %12s %10s %10s' % (
        'suite', 'cases', 'violations', 'time (ms)', 'mean (ms)', 'max (ms)')]
    for r in results:
        lines.append('%-16s %7d %10d %12d %10.3f %10.3f' % (
            r.name, r.cases, r.violations, int(r.milliseconds),
            r.mean_case_milliseconds, r.max_case_milliseconds))
        for message in r.failures[:3]:
            lines.append('    ' + message)
    total = sum(r.violations for r in results)
    lines.append('%s: %d violations in %d suites' % ('PASSED' if total == 0 else 'FAILED', total, len(results)))
    return '\n'.join(lines)
