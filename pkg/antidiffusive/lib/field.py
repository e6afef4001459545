#!/usr/bin/env python3

import decimal
import math
import numbers
import typing
from enum import Enum
from fractions import Fraction

BINARY64_TOLERANCE: typing.Final[float] = 1e-10
DECIMAL_DIGITS: typing.Final[int] = 17

class Arithmetic(Enum):
    RATIONAL = 1
    BINARY64 = 2

def get_arithmetic(value):
    if isinstance(value, Arithmetic):
        return value
    s = str(value).upper()
    if s in ('RATIONAL', 'EXACT'):
        return Arithmetic.RATIONAL
    elif s in ('BINARY64', 'FLOAT', 'DOUBLE'):
        return Arithmetic.BINARY64
    raise RuntimeError('arithmetic (' + str(value) + ') not found')

def parse_ratio(value):
    """Exact ratio from an int, a Fraction, a "p/q" string or a decimal string

    Floats are read through their shortest repr so 0.47 means 47/100.
    """
    if isinstance(value, bool):
        raise RuntimeError('invalid ratio (' + str(value) + ')')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        if not math.isfinite(value):
            raise RuntimeError('invalid ratio (' + str(value) + ')')
        return Fraction(repr(value))
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise RuntimeError('invalid ratio (' + str(value) + ')')

def ratio_to_string(value):
    value = parse_ratio(value)
    return '%d/%d' % (value.numerator, value.denominator)

class field:
    """Scalar arithmetic of one run

    Rational mode works on Fraction values (always in lowest terms), binary64
    mode on Python floats. Values of the other mode are refused rather than
    silently converted, except exact ratios entering binary64 mode.
    """

    def __init__(self, arithmetic):
        self.arithmetic = get_arithmetic(arithmetic)

    def __eq__(self, other):
        return isinstance(other, field) and other.arithmetic == self.arithmetic

    def __hash__(self):
        return hash(self.arithmetic)

    def __repr__(self):
        return 'field(%s)' % self.arithmetic.name.lower()

    @property
    def exact(self):
        return self.arithmetic == Arithmetic.RATIONAL

    def zero(self):
        return Fraction(0) if self.exact else 0.0

    def one(self):
        return Fraction(1) if self.exact else 1.0

    def coerce(self, value):
        if self.exact:
            if isinstance(value, float):
                raise RuntimeError(
                    'binary64 value (' + repr(value) + ') in rational mode')
            return parse_ratio(value)
        if isinstance(value, str):
            return float(parse_ratio(value))
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise RuntimeError('invalid scalar (' + str(value) + ')')
        return float(value)

    def coerce_all(self, values):
        return tuple(self.coerce(v) for v in values)

    def equal(self, a, b):
        if self.exact:
            return a == b
        return math.isclose(a, b, rel_tol=0.0, abs_tol=BINARY64_TOLERANCE)

    def is_zero(self, value):
        return self.equal(value, self.zero())

    def sign(self, value):
        if self.is_zero(value):
            return 0
        return 1 if value > 0 else -1

    def to_json(self, value):
        if self.exact:
            return ratio_to_string(value)
        return float(value)

    def from_json(self, value):
        return self.coerce(value)

    def format_exact(self, value):
        if self.exact:
            return ratio_to_string(value)
        return repr(float(value))

    def format_decimal(self, value):
        """17 significant digits for rationals, shortest round-trip for floats"""
        if not self.exact:
            return repr(float(value))
        value = parse_ratio(value)
        ctx = decimal.Context(prec=DECIMAL_DIGITS)
        q = ctx.divide(decimal.Decimal(value.numerator),
                       decimal.Decimal(value.denominator)).normalize(ctx)
        if q.is_zero():
            return '0'
        if -7 < q.adjusted() < DECIMAL_DIGITS:
            return format(q, 'f')
        return str(q)
