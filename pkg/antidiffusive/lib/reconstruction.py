#!/usr/bin/env python3

import math
import typing
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

SENTINEL: typing.Final[int] = -1

class Convention(Enum):
    FROM_LEFT = 1
    FROM_RIGHT = 2

def get_convention(value):
    if isinstance(value, Convention):
        return value
    s = str(value).upper().replace('-', '_')
    try:
        return Convention[s]
    except KeyError:
        raise RuntimeError('reconstruction convention (' + str(value) + ') not found')

@dataclass(frozen=True)
class CellReconstruction:
    """Two-valued step inside one cell, or a constant when d is the sentinel

    d is measured from the left interface (FROM_LEFT) or from the right
    interface (FROM_RIGHT). Local coordinates run from 0 to 1 across the cell.
    """
    j: int
    left_value: typing.Any
    right_value: typing.Any
    d: typing.Any
    convention: Convention

    @property
    def constant(self):
        return self.d == SENTINEL

    @property
    def split(self):
        """Local position of the discontinuity, None when constant"""
        if self.constant:
            return None
        if self.convention == Convention.FROM_LEFT:
            return self.d
        return 1 - self.d

    def integrate(self, t0, t1):
        """Integral over local [t0, t1] with 0 <= t0 <= t1 <= 1"""
        if self.constant:
            return self.left_value * (t1 - t0)
        s = self.split
        return (self.left_value * max(0, min(t1, s) - t0)
                + self.right_value * max(0, t1 - max(t0, s)))

def reconstruct_cell(um, u, up, convention, j=0):
    den = up - um
    if den == 0:
        return CellReconstruction(j, u, u, SENTINEL, convention)
    if convention == Convention.FROM_RIGHT:
        d = (u - um) / den
    else:
        d = (up - u) / den
    if 0 < d < 1:
        return CellReconstruction(j, um, up, d, convention)
    return CellReconstruction(j, u, u, SENTINEL, convention)

def right_slice(um, u, up, width, convention):
    """Integral of the reconstructed cell over its last `width` of length"""
    return reconstruct_cell(um, u, up, convention).integrate(1 - width, 1)

def left_slice(um, u, up, width, convention):
    """Integral of the reconstructed cell over its first `width` of length"""
    return reconstruct_cell(um, u, up, convention).integrate(0, width)

class ReconstructionProfile:
    """Per-cell reconstruction of a state, computed on demand

    Cell k spans [k - offset - 1/2, k - offset + 1/2] in the state's index
    coordinates; the state module's cell_value supplies the stencils so
    tails extend the profile indefinitely.
    """

    def __init__(self, cell_value, offset, convention, cells):
        self._cell_value = cell_value
        self.offset = offset
        self.convention = convention
        self.cells = cells
        self._cache = {}

    def cell(self, j):
        if j not in self._cache:
            v = self._cell_value
            self._cache[j] = reconstruct_cell(v(j - 1), v(j), v(j + 1), self.convention, j)
        return self._cache[j]

    def __iter__(self):
        return (self.cell(j) for j in self.cells)

    def integrate(self, a, b):
        """Exact integral of the reconstructed function over [a, b]"""
        if not a < b:
            raise RuntimeError('integration bounds must satisfy a < b')
        half = Fraction(1, 2)
        k = math.floor(a + self.offset + half)
        total = 0
        while True:
            left = k - self.offset - half
            if left >= b:
                break
            t0 = max(a, left) - left
            t1 = min(b, left + 1) - left
            if t1 > t0:
                total = total + self.cell(k).integrate(t0, t1)
            k += 1
        return total

    def to_json(self, to_scalar):
        return [{
            'j': c.j,
            'left': to_scalar(c.left_value),
            'right': to_scalar(c.right_value),
            'd': SENTINEL if c.constant else to_scalar(c.d),
            'convention': 'from-left' if c.convention == Convention.FROM_LEFT else 'from-right',
        } for c in self]

def half_cell_integrals(a, b, c):
    """Integrals of the from-right reconstruction of (a, b, c) over the two half cells"""
    a, b, c = (Fraction(x) if isinstance(x, int) else x for x in (a, b, c))
    if not (a <= b <= c):
        raise RuntimeError('half cell integrals require a monotone stencil a <= b <= c')
    if b - a >= c - b:
        return b - c / 2, c / 2
    return a / 2, b - a / 2
