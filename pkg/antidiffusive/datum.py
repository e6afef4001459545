#!/usr/bin/env python3

import bisect
import math
import typing
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .lib.field import Arithmetic, field, parse_ratio, ratio_to_string
from .state import periodic_state

#
# expressions carry a closed-form primitive so averages never need
# quadrature. constant and affine ones stay exact on Fraction input,
# trigonometric ones are binary64 only.
#

class Constant:
    exact = True

    def __init__(self, c):
        self.c = parse_ratio(c)

    def value(self, x):
        return self.c + 0 * x

    def primitive(self, x):
        return self.c * x

    def to_json(self):
        return {'type': 'constant', 'c': ratio_to_string(self.c)}

class Affine:
    exact = True

    def __init__(self, a, b):
        self.a = parse_ratio(a)
        self.b = parse_ratio(b)

    def value(self, x):
        return self.a * x + self.b

    def primitive(self, x):
        return self.a * x * x / 2 + self.b * x

    def to_json(self):
        return {'type': 'affine', 'a': ratio_to_string(self.a), 'b': ratio_to_string(self.b)}

class Sine:
    """amplitude * sin(omega * x + phase)"""
    exact = False

    def __init__(self, omega, phase=0.0, amplitude=1.0):
        if omega == 0:
            raise RuntimeError('sine needs a nonzero frequency')
        self.omega = float(omega)
        self.phase = float(phase)
        self.amplitude = float(amplitude)

    def value(self, x):
        return self.amplitude * np.sin(self.omega * x + self.phase)

    def primitive(self, x):
        return -self.amplitude * np.cos(self.omega * x + self.phase) / self.omega

    def to_json(self):
        return {'type': 'sin', 'omega': self.omega, 'phase': self.phase, 'amplitude': self.amplitude}

class Cosine:
    """amplitude * cos(omega * x + phase)"""
    exact = False

    def __init__(self, omega, phase=0.0, amplitude=1.0):
        if omega == 0:
            raise RuntimeError('cosine needs a nonzero frequency')
        self.omega = float(omega)
        self.phase = float(phase)
        self.amplitude = float(amplitude)

    def value(self, x):
        return self.amplitude * np.cos(self.omega * x + self.phase)

    def primitive(self, x):
        return self.amplitude * np.sin(self.omega * x + self.phase) / self.omega

    def to_json(self):
        return {'type': 'cos', 'omega': self.omega, 'phase': self.phase, 'amplitude': self.amplitude}

class CosSinProduct:
    """amplitude * cos(omega1 * x) * sin(omega2 * x)"""
    exact = False

    def __init__(self, omega1, omega2, amplitude=1.0):
        self.omega1 = float(omega1)
        self.omega2 = float(omega2)
        self.amplitude = float(amplitude)
        if self.omega2 + self.omega1 == 0 or self.omega2 - self.omega1 == 0:
            raise RuntimeError('cos-sin product needs omega2 != +-omega1')

    def value(self, x):
        return self.amplitude * np.cos(self.omega1 * x) * np.sin(self.omega2 * x)

    def primitive(self, x):
        # cos(a x) sin(b x) = (sin((b + a) x) + sin((b - a) x)) / 2
        p = self.omega2 + self.omega1
        m = self.omega2 - self.omega1
        return self.amplitude * (-np.cos(p * x) / (2 * p) - np.cos(m * x) / (2 * m))

    def to_json(self):
        return {'type': 'cos_sin', 'omega1': self.omega1, 'omega2': self.omega2, 'amplitude': self.amplitude}

_EXPRESSION = {
    'constant': lambda d: Constant(d['c']),
    'affine': lambda d: Affine(d['a'], d['b']),
    'sin': lambda d: Sine(d['omega'], d.get('phase', 0.0), d.get('amplitude', 1.0)),
    'cos': lambda d: Cosine(d['omega'], d.get('phase', 0.0), d.get('amplitude', 1.0)),
    'cos_sin': lambda d: CosSinProduct(d['omega1'], d['omega2'], d.get('amplitude', 1.0)),
}

def expression_from_json(data):
    try:
        return _EXPRESSION[data['type']](data)
    except KeyError:
        raise RuntimeError('expression (' + str(data.get('type')) + ') not found')

@dataclass(frozen=True)
class Piece:
    a: Fraction
    b: Fraction
    expression: typing.Any

class PiecewiseDatum:
    """Initial datum built from pieces on half-open intervals [a, b)

    A periodic datum tiles [origin, origin + period). A non-periodic one may
    carry constant values left of the first piece and right of the last.
    """

    def __init__(self, pieces, period=None, origin=None, left_value=None,
                 right_value=None, cell_count=None, name=None):
        if len(pieces) == 0:
            raise RuntimeError('datum needs at least one piece')
        self.pieces = tuple(Piece(parse_ratio(p[0]), parse_ratio(p[1]), p[2])
                            if not isinstance(p, Piece) else p for p in pieces)
        for p, q in zip(self.pieces, self.pieces[1:]):
            if p.b != q.a:
                raise RuntimeError('datum pieces must be contiguous')
        for p in self.pieces:
            if not p.a < p.b:
                raise RuntimeError('empty piece [%s, %s)' % (p.a, p.b))
        self.period = None if period is None else parse_ratio(period)
        self.origin = self.pieces[0].a if origin is None else parse_ratio(origin)
        if self.period is not None:
            if left_value is not None or right_value is not None:
                raise RuntimeError('periodic datum cannot carry tails')
            if self.pieces[0].a != self.origin or self.pieces[-1].b != self.origin + self.period:
                raise RuntimeError('pieces must tile exactly one period')
        self.left_value = None if left_value is None else parse_ratio(left_value)
        self.right_value = None if right_value is None else parse_ratio(right_value)
        self.cell_count = cell_count
        self.name = name
        self.exact = all(p.expression.exact for p in self.pieces)
        self._starts = [p.a for p in self.pieces]
        self._cumulative = [Fraction(0)]
        for p in self.pieces[:-1]:
            self._cumulative.append(
                self._cumulative[-1] + self._piece_integral(p, p.a, p.b))

    @property
    def periodic(self):
        return self.period is not None

    @property
    def lower(self):
        return self.pieces[0].a

    @property
    def upper(self):
        return self.pieces[-1].b

    def _arithmetic(self, arithmetic):
        if arithmetic is None:
            return Arithmetic.RATIONAL if self.exact else Arithmetic.BINARY64
        f = field(arithmetic)
        if f.exact and not self.exact:
            raise RuntimeError('trigonometric datum requires binary64 arithmetic')
        return f.arithmetic

    def _piece_integral(self, piece, x0, x1):
        e = piece.expression
        if e.exact:
            return e.primitive(x1) - e.primitive(x0)
        return float(e.primitive(float(x1)) - e.primitive(float(x0)))

    def _locate(self, x):
        return max(0, bisect.bisect_right(self._starts, x) - 1)

    def _reduce(self, x):
        """(number of whole periods, representative in the base period)"""
        n = math.floor((x - self.origin) / self.period)
        return n, x - n * self.period

    def _running_integral(self, x):
        """Integral of the base pieces from lower to x, lower <= x <= upper"""
        i = self._locate(x)
        p = self.pieces[i]
        return self._cumulative[i] + self._piece_integral(p, p.a, x)

    def _primitive(self, x):
        if self.periodic:
            n, r = self._reduce(x)
            whole = self._cumulative[-1] + self._piece_integral(
                self.pieces[-1], self.pieces[-1].a, self.pieces[-1].b)
            return n * whole + self._running_integral(r)
        if x < self.lower:
            if self.left_value is None:
                return None
            return self.left_value * (x - self.lower)
        if x > self.upper:
            if self.right_value is None:
                return None
            return self._running_integral(self.upper) + self.right_value * (x - self.upper)
        return self._running_integral(x)

    def integral(self, a, b):
        fa = self._primitive(a)
        fb = self._primitive(b)
        if fa is None or fb is None:
            raise RuntimeError('interval [%s, %s] not covered by any piece' % (a, b))
        return fb - fa

    def value(self, x):
        """Pointwise value; a scalar Fraction stays exact on exact pieces"""
        if self.periodic:
            _, x = self._reduce(x)
        elif x < self.lower:
            if self.left_value is None:
                raise RuntimeError('point %s not covered by any piece' % x)
            return self.left_value
        elif x >= self.upper:
            if self.right_value is None:
                raise RuntimeError('point %s not covered by any piece' % x)
            return self.right_value
        p = self.pieces[self._locate(x)]
        if p.expression.exact:
            return p.expression.value(x)
        return float(p.expression.value(float(x)))

    def sample(self, xs):
        """Vectorised binary64 evaluation at the points xs"""
        xs = np.asarray(xs, dtype=float)
        if self.periodic:
            origin = float(self.origin)
            xs = origin + np.mod(xs - origin, float(self.period))
            # the sum can round up onto the excluded end of the period
            end = float(max(p.b for p in self.pieces))
            xs = np.where(xs >= end, np.nextafter(end, -np.inf), xs)
        out = np.full(xs.shape, np.nan)
        if not self.periodic:
            if self.left_value is not None:
                out[xs < float(self.lower)] = float(self.left_value)
            if self.right_value is not None:
                out[xs >= float(self.upper)] = float(self.right_value)
        for p in self.pieces:
            mask = (xs >= float(p.a)) & (xs < float(p.b))
            if np.any(mask):
                e = p.expression
                if e.exact:
                    out[mask] = float(e.a) * xs[mask] + float(e.b) if isinstance(e, Affine) else float(e.c)
                else:
                    out[mask] = e.value(xs[mask])
        if np.any(np.isnan(out)):
            raise RuntimeError('sample point not covered by any piece')
        return out

    def to_json(self):
        d = {
            'pieces': [[ratio_to_string(p.a), ratio_to_string(p.b), p.expression.to_json()]
                       for p in self.pieces],
        }
        if self.period is not None:
            d['period'] = ratio_to_string(self.period)
            d['origin'] = ratio_to_string(self.origin)
        if self.left_value is not None:
            d['left_value'] = ratio_to_string(self.left_value)
        if self.right_value is not None:
            d['right_value'] = ratio_to_string(self.right_value)
        if self.cell_count is not None:
            d['cell_count'] = self.cell_count
        return d

def datum_from_json(data):
    return PiecewiseDatum(
        [(p[0], p[1], expression_from_json(p[2])) for p in data['pieces']],
        period=data.get('period'),
        origin=data.get('origin'),
        left_value=data.get('left_value'),
        right_value=data.get('right_value'),
        cell_count=data.get('cell_count'),
        name=data.get('name'))

def cell_average(datum, center, width, arithmetic=None):
    """(1 / width) times the integral of datum over [center - width/2, center + width/2]"""
    arithmetic = datum._arithmetic(arithmetic)
    if field(arithmetic).exact:
        center = parse_ratio(center)
        width = parse_ratio(width)
    if not width > 0:
        raise RuntimeError('cell width must be positive')
    half = width / 2
    avg = datum.integral(center - half, center + half) / width
    return field(arithmetic).coerce(avg)

def _grid(datum, M):
    if not datum.periodic:
        raise RuntimeError('periodic initialization needs a periodic datum')
    if M < 4:
        raise RuntimeError('cell count must be at least 4')
    return datum.period / M

def init_periodic_state(datum, M, lam, arithmetic=None):
    """Exact cell averages on M cells of width period / M"""
    dx = _grid(datum, M)
    arithmetic = datum._arithmetic(arithmetic)
    values = [cell_average(datum, datum.origin + (j + Fraction(1, 2)) * dx, dx, arithmetic)
              for j in range(M)]
    return periodic_state(values, lam, arithmetic,
                          domain_length=datum.period, origin=datum.origin)

def sample_periodic_state(datum, M, lam, arithmetic=None):
    """Point values at the M cell centres"""
    dx = _grid(datum, M)
    arithmetic = datum._arithmetic(arithmetic)
    if field(arithmetic).exact:
        values = [datum.value(datum.origin + (j + Fraction(1, 2)) * dx) for j in range(M)]
    else:
        centers = float(datum.origin) + (np.arange(M) + 0.5) * float(dx)
        values = datum.sample(centers).tolist()
    return periodic_state(values, lam, arithmetic,
                          domain_length=datum.period, origin=datum.origin)
