#!/usr/bin/env python3

import math
import typing
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .lib.field import Arithmetic, field, get_arithmetic, parse_ratio, ratio_to_string

class Kind(Enum):
    PERIODIC = 1
    INFINITE = 2

class Phase(Enum):
    INTEGER = 1
    SHIFTED_LEFT = 2

def get_kind(value):
    if isinstance(value, Kind):
        return value
    try:
        return Kind[str(value).upper()]
    except KeyError:
        raise RuntimeError('state kind (' + str(value) + ') not found')

def get_phase(value):
    if isinstance(value, Phase):
        return value
    try:
        return Phase[str(value).upper()]
    except KeyError:
        raise RuntimeError('grid phase (' + str(value) + ') not found')

@dataclass(frozen=True)
class TailSpec:
    """Arithmetic extension of a window boundary

    anchor_value is the boundary cell of the window, step the increment per
    cell moving away from it.
    """
    anchor_value: typing.Any
    step: typing.Any

    def is_constant(self):
        return self.step == 0

@dataclass(frozen=True)
class GridState:
    """Periodic or bi-infinite sequence of cell averages

    Cell j of an integer-phase state covers [j - 1/2, j + 1/2] in index
    units; a shifted-left state has every cell moved by -lam. Physical
    coordinates are origin + (index + 1/2) * dx.
    """
    kind: Kind
    values: tuple
    lam: Fraction
    arithmetic: Arithmetic
    window_start: int = 0
    phase: Phase = Phase.INTEGER
    left_tail: typing.Optional[TailSpec] = None
    right_tail: typing.Optional[TailSpec] = None
    domain_length: typing.Optional[Fraction] = None
    origin: typing.Optional[Fraction] = None

    def __post_init__(self):
        if len(self.values) == 0:
            raise RuntimeError('state needs at least one cell')
        if not (0 < self.lam <= 1):
            raise RuntimeError('lambda must lie in (0, 1]')
        if self.kind == Kind.PERIODIC:
            if self.left_tail is not None or self.right_tail is not None:
                raise RuntimeError('periodic state cannot carry tails')
        else:
            if self.left_tail is None or self.right_tail is None:
                raise RuntimeError('infinite state needs both tails')
            f = self.field
            if not (f.equal(self.left_tail.anchor_value, self.values[0])
                    and f.equal(self.right_tail.anchor_value, self.values[-1])):
                raise RuntimeError('tail anchor contradicts the window')

    @property
    def field(self):
        return field(self.arithmetic)

    @property
    def M(self):
        return len(self.values)

    @property
    def window_end(self):
        return self.window_start + len(self.values) - 1

    @property
    def offset(self):
        """Shift of the cell centres, 0 or lam"""
        return self.lam if self.phase == Phase.SHIFTED_LEFT else Fraction(0)

    @property
    def dx(self):
        if self.kind == Kind.PERIODIC and self.domain_length is not None:
            return self.domain_length / self.M
        return Fraction(1)

    @property
    def period(self):
        if self.kind != Kind.PERIODIC:
            return None
        return self.domain_length if self.domain_length is not None else Fraction(self.M)

    @property
    def x_origin(self):
        if self.origin is not None:
            return self.origin
        return Fraction(0) if self.kind == Kind.PERIODIC else Fraction(-1, 2)

def periodic_state(values, lam, arithmetic, domain_length=None, origin=None,
                   phase=Phase.INTEGER):
    f = field(arithmetic)
    return GridState(
        kind=Kind.PERIODIC,
        values=f.coerce_all(values),
        lam=parse_ratio(lam),
        arithmetic=f.arithmetic,
        phase=get_phase(phase),
        domain_length=None if domain_length is None else parse_ratio(domain_length),
        origin=None if origin is None else parse_ratio(origin))

def infinite_state(values, lam, arithmetic, window_start=0, left_step=0,
                   right_step=0, phase=Phase.INTEGER):
    """Window plus arithmetic tails; the result is trimmed to a minimal window"""
    f = field(arithmetic)
    values = f.coerce_all(values)
    state = GridState(
        kind=Kind.INFINITE,
        values=values,
        lam=parse_ratio(lam),
        arithmetic=f.arithmetic,
        window_start=window_start,
        phase=get_phase(phase),
        left_tail=TailSpec(values[0], f.coerce(left_step)),
        right_tail=TailSpec(values[-1], f.coerce(right_step)))
    return trim(state)

def with_window(state, values, window_start, phase=None):
    """Same tails and layout as state, new window values"""
    phase = state.phase if phase is None else phase
    if state.kind == Kind.PERIODIC:
        return replace(state, values=tuple(values), phase=phase)
    values = tuple(values)
    return trim(replace(
        state,
        values=values,
        window_start=window_start,
        phase=phase,
        left_tail=TailSpec(values[0], state.left_tail.step),
        right_tail=TailSpec(values[-1], state.right_tail.step)))

def trim(state):
    """Smallest window consistent with the tails (at least one cell)"""
    if state.kind == Kind.PERIODIC:
        return state
    f = state.field
    values = list(state.values)
    start = state.window_start
    left_step = state.left_tail.step
    right_step = state.right_tail.step
    while len(values) > 1 and f.equal(values[0], values[1] + left_step):
        values.pop(0)
        start += 1
    while len(values) > 1 and f.equal(values[-1], values[-2] + right_step):
        values.pop()
    if len(values) == len(state.values):
        return state
    return replace(
        state,
        values=tuple(values),
        window_start=start,
        left_tail=TailSpec(values[0], left_step),
        right_tail=TailSpec(values[-1], right_step))

def pad(state, k):
    """Extend the window by k tail-extrapolated cells on each side"""
    if state.kind == Kind.PERIODIC or k <= 0:
        return state
    start = state.window_start - k
    values = tuple(cell_value(state, j) for j in range(start, state.window_end + k + 1))
    return replace(
        state,
        values=values,
        window_start=start,
        left_tail=TailSpec(values[0], state.left_tail.step),
        right_tail=TailSpec(values[-1], state.right_tail.step))

def cell_value(state, j):
    if state.kind == Kind.PERIODIC:
        return state.values[j % state.M]
    if j < state.window_start:
        return state.left_tail.anchor_value + state.left_tail.step * (state.window_start - j)
    if j > state.window_end:
        return state.right_tail.anchor_value + state.right_tail.step * (j - state.window_end)
    return state.values[j - state.window_start]

def cell_center(state, j):
    """Centre of cell j in index units"""
    return Fraction(j) - state.offset

def physical_center(state, j):
    return state.x_origin + (cell_center(state, j) + Fraction(1, 2)) * state.dx

def cell_containing(state, x):
    """Index of the cell whose closed-open span holds index coordinate x"""
    return math.floor(parse_ratio(x) + state.offset + Fraction(1, 2))

@dataclass(frozen=True)
class JumpSequence:
    """Differences value(k+1) - value(k) indexed by the raw interface k

    Interface k sits at position center(k) + 1/2, which is k + 1/2 on the
    integer grid and k + 1/2 - lam on the shifted grid.
    """
    kind: Kind
    values: tuple
    first_interface: int
    phase: Phase
    lam: Fraction
    arithmetic: Arithmetic
    left_jump: typing.Any = None
    right_jump: typing.Any = None

    @property
    def offset(self):
        return self.lam if self.phase == Phase.SHIFTED_LEFT else Fraction(0)

    @property
    def last_interface(self):
        return self.first_interface + len(self.values) - 1

    def interfaces(self):
        return range(self.first_interface, self.first_interface + len(self.values))

    def at(self, k):
        if self.kind == Kind.PERIODIC:
            return self.values[k % len(self.values)]
        if k < self.first_interface:
            return self.left_jump
        if k > self.last_interface:
            return self.right_jump
        return self.values[k - self.first_interface]

    def position(self, k):
        return Fraction(k) - self.offset + Fraction(1, 2)

    def interface_at(self, position):
        k = parse_ratio(position) + self.offset - Fraction(1, 2)
        if k.denominator != 1:
            raise RuntimeError('no interface at position ' + str(position))
        return int(k)

    def at_position(self, position):
        return self.at(self.interface_at(position))

    def window_sum(self):
        return sum(self.values, field(self.arithmetic).zero())

def jumps(state):
    f = state.field
    if state.kind == Kind.PERIODIC:
        v = state.values
        return JumpSequence(
            kind=state.kind,
            values=tuple(v[(k + 1) % len(v)] - v[k] for k in range(len(v))),
            first_interface=0,
            phase=state.phase,
            lam=state.lam,
            arithmetic=state.arithmetic)
    v = state.values
    return JumpSequence(
        kind=state.kind,
        values=tuple(v[i + 1] - v[i] for i in range(len(v) - 1)),
        first_interface=state.window_start,
        phase=state.phase,
        lam=state.lam,
        arithmetic=state.arithmetic,
        left_jump=f.zero() - state.left_tail.step,
        right_jump=state.right_tail.step)

def is_nondecreasing(state):
    s = jumps(state)
    f = state.field
    candidates = list(s.values)
    if state.kind == Kind.INFINITE:
        candidates += [s.left_jump, s.right_jump]
    return all(x >= 0 or f.is_zero(x) for x in candidates)

class MonotoneDecomposition(typing.NamedTuple):
    v: GridState
    w: GridState
    offset: typing.Any

def monotone_decomposition(state):
    """Split an infinite state into nondecreasing v and nonincreasing w

    Both start at 0 on the first window cell; offset is the value of that
    cell, so v + w + offset reproduces the state.
    """
    if state.kind != Kind.INFINITE:
        raise RuntimeError('monotone decomposition needs an infinite state')
    f = state.field
    zero = f.zero()
    v = [zero]
    w = [zero]
    for s in jumps(state).values:
        if s > 0:
            v.append(v[-1] + s)
            w.append(w[-1])
        else:
            v.append(v[-1])
            w.append(w[-1] + s)

    # left tail jump is -step
    left = state.left_tail.step
    right = state.right_tail.step
    v_left, w_left = (left, zero) if left < 0 else (zero, left)
    v_right, w_right = (right, zero) if right > 0 else (zero, right)

    def build(values, left_step, right_step):
        return trim(GridState(
            kind=Kind.INFINITE,
            values=tuple(values),
            lam=state.lam,
            arithmetic=state.arithmetic,
            window_start=state.window_start,
            phase=state.phase,
            left_tail=TailSpec(values[0], left_step),
            right_tail=TailSpec(values[-1], right_step)))

    return MonotoneDecomposition(
        build(v, v_left, v_right),
        build(w, w_left, w_right),
        state.values[0])

class TotalVariation(typing.NamedTuple):
    value: typing.Any
    infinite: bool

def total_variation(state):
    s = jumps(state)
    total = sum((abs(x) for x in s.values), state.field.zero())
    if state.kind == Kind.INFINITE:
        infinite = not (state.left_tail.is_constant() and state.right_tail.is_constant())
        return TotalVariation(None if infinite else total, infinite)
    return TotalVariation(total, False)

def states_equal(a, b):
    """Cellwise equality, exact in rational mode and to 1e-10 in binary64"""
    if a.kind != b.kind or a.phase != b.phase or a.arithmetic != b.arithmetic:
        return False
    f = a.field
    if a.kind == Kind.PERIODIC:
        return a.M == b.M and all(f.equal(x, y) for x, y in zip(a.values, b.values))
    if not (f.equal(a.left_tail.step, b.left_tail.step)
            and f.equal(a.right_tail.step, b.right_tail.step)):
        return False
    lo = min(a.window_start, b.window_start) - 1
    hi = max(a.window_end, b.window_end) + 1
    return all(f.equal(cell_value(a, j), cell_value(b, j)) for j in range(lo, hi + 1))

def add_states(a, b, constant=0):
    """Cellwise a + b + constant of two infinite states on the same grid"""
    if a.kind != Kind.INFINITE or b.kind != Kind.INFINITE or a.phase != b.phase:
        raise RuntimeError('states are not on the same infinite grid')
    f = a.field
    constant = f.coerce(constant)
    lo = min(a.window_start, b.window_start)
    hi = max(a.window_end, b.window_end)
    values = [cell_value(a, j) + cell_value(b, j) + constant for j in range(lo, hi + 1)]
    return infinite_state(
        values, a.lam, a.arithmetic,
        window_start=lo,
        left_step=a.left_tail.step + b.left_tail.step,
        right_step=a.right_tail.step + b.right_tail.step,
        phase=a.phase)

def affine_image(state, scale, shift):
    """Cellwise scale * u + shift"""
    f = state.field
    scale = f.coerce(scale)
    shift = f.coerce(shift)
    values = tuple(scale * x + shift for x in state.values)
    if state.kind == Kind.PERIODIC:
        return replace(state, values=values)
    return replace(
        state,
        values=values,
        left_tail=TailSpec(values[0], scale * state.left_tail.step),
        right_tail=TailSpec(values[-1], scale * state.right_tail.step))

def to_json(state):
    f = state.field
    d = {
        'kind': state.kind.name.lower(),
        'arithmetic': state.arithmetic.name.lower(),
        'lambda': ratio_to_string(state.lam),
        'phase': state.phase.name.lower(),
        'window_start': state.window_start,
        'values': [f.to_json(x) for x in state.values],
    }
    if state.kind == Kind.INFINITE:
        for name, tail in (('left_tail', state.left_tail), ('right_tail', state.right_tail)):
            d[name] = {
                'anchor_value': f.to_json(tail.anchor_value),
                'step': f.to_json(tail.step),
            }
    if state.domain_length is not None:
        d['domain_length'] = ratio_to_string(state.domain_length)
    if state.origin is not None:
        d['origin'] = ratio_to_string(state.origin)
    return d

def from_json(data):
    if 'arithmetic' in data:
        arithmetic = get_arithmetic(data['arithmetic'])
    elif all(isinstance(x, str) for x in data['values']):
        arithmetic = Arithmetic.RATIONAL
    else:
        arithmetic = Arithmetic.BINARY64
    f = field(arithmetic)
    kind = get_kind(data.get('kind', 'infinite'))
    phase = get_phase(data.get('phase', 'integer'))
    lam = data.get('lambda', '1/2')
    if kind == Kind.PERIODIC:
        return periodic_state(
            data['values'], lam, arithmetic,
            domain_length=data.get('domain_length'),
            origin=data.get('origin'),
            phase=phase)
    left = data.get('left_tail', {})
    right = data.get('right_tail', {})
    values = [f.from_json(x) for x in data['values']]
    if 'anchor_value' in left and not f.equal(f.from_json(left['anchor_value']), values[0]):
        raise RuntimeError('left tail anchor contradicts the window')
    if 'anchor_value' in right and not f.equal(f.from_json(right['anchor_value']), values[-1]):
        raise RuntimeError('right tail anchor contradicts the window')
    return infinite_state(
        values, lam, arithmetic,
        window_start=int(data.get('window_start', 0)),
        left_step=f.from_json(left.get('step', f.to_json(f.zero()))),
        right_step=f.from_json(right.get('step', f.to_json(f.zero()))),
        phase=phase)
