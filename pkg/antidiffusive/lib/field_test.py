#!/usr/bin/env python3

import unittest
from fractions import Fraction

import importlib
fieldlib = importlib.import_module('antidiffusive.lib.field')

class TestField(unittest.TestCase):
    def test_arithmetic_lookup(self):
        self.assertEqual(fieldlib.get_arithmetic('rational'), fieldlib.Arithmetic.RATIONAL)
        self.assertEqual(fieldlib.get_arithmetic('BINARY64'), fieldlib.Arithmetic.BINARY64)
        self.assertEqual(fieldlib.get_arithmetic(fieldlib.Arithmetic.RATIONAL),
                         fieldlib.Arithmetic.RATIONAL)
        with self.assertRaises(RuntimeError):
            fieldlib.get_arithmetic('decimal')

    def test_parse_ratio(self):
        self.assertEqual(fieldlib.parse_ratio('2/5'), Fraction(2, 5))
        self.assertEqual(fieldlib.parse_ratio('0.47'), Fraction(47, 100))
        self.assertEqual(fieldlib.parse_ratio(0.47), Fraction(47, 100))
        self.assertEqual(fieldlib.parse_ratio(3), Fraction(3))
        for bad in ('abc', '1/0', True, float('inf')):
            with self.assertRaises(RuntimeError):
                fieldlib.parse_ratio(bad)

    def test_ratio_to_string(self):
        self.assertEqual(fieldlib.ratio_to_string(Fraction(4, 10)), '2/5')
        self.assertEqual(fieldlib.ratio_to_string(2), '2/1')

    def test_rational_coerce(self):
        f = fieldlib.field('rational')
        self.assertTrue(f.exact)
        self.assertEqual(f.coerce('7/20'), Fraction(7, 20))
        self.assertEqual(f.coerce(1), Fraction(1))
        with self.assertRaises(RuntimeError):
            f.coerce(0.5)

    def test_binary64_coerce(self):
        f = fieldlib.field('binary64')
        self.assertFalse(f.exact)
        self.assertEqual(f.coerce('1/4'), 0.25)
        self.assertEqual(f.coerce(Fraction(1, 2)), 0.5)
        with self.assertRaises(RuntimeError):
            f.coerce('x')

    def test_equality(self):
        exact = fieldlib.field('rational')
        self.assertFalse(exact.equal(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10 ** 12)))
        approx = fieldlib.field('binary64')
        self.assertTrue(approx.equal(0.1 + 0.2, 0.3))
        self.assertFalse(approx.equal(0.0, 1e-9))
        self.assertTrue(approx.is_zero(1e-12))
        self.assertEqual(approx.sign(-1e-12), 0)
        self.assertEqual(exact.sign(Fraction(-1, 10 ** 30)), -1)

    def test_formats(self):
        f = fieldlib.field('rational')
        self.assertEqual(f.format_exact(Fraction(8, 625)), '8/625')
        self.assertEqual(f.format_decimal(Fraction(8, 625)), '0.0128')
        self.assertEqual(f.format_decimal(Fraction(1, 3)), '0.33333333333333333')
        self.assertEqual(f.format_decimal(Fraction(0)), '0')
        g = fieldlib.field('binary64')
        self.assertEqual(g.format_decimal(0.1), '0.1')
        self.assertEqual(g.to_json(0.25), 0.25)
        self.assertEqual(f.from_json(f.to_json(Fraction(-3, 7))), Fraction(-3, 7))

if __name__ == '__main__':
    unittest.main()
