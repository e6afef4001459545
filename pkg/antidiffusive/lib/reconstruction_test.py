#!/usr/bin/env python3

import unittest
from fractions import Fraction

import importlib
reconstruction = importlib.import_module('antidiffusive.lib.reconstruction')

F = Fraction
FROM_LEFT = reconstruction.Convention.FROM_LEFT
FROM_RIGHT = reconstruction.Convention.FROM_RIGHT

class TestReconstruction(unittest.TestCase):
    def cellTest(self, stencil, convention, d, left, right):
        cell = reconstruction.reconstruct_cell(*stencil, convention)
        self.assertEqual(cell.d, d)
        self.assertEqual(cell.left_value, left)
        self.assertEqual(cell.right_value, right)

    def test_from_right_quarter(self):
        self.cellTest((F(0), F(1, 4), F(1)), FROM_RIGHT, F(1, 4), 0, 1)

    def test_midpoint_either_convention(self):
        self.cellTest((F(0), F(1, 2), F(1)), FROM_RIGHT, F(1, 2), 0, 1)
        self.cellTest((F(0), F(1, 2), F(1)), FROM_LEFT, F(1, 2), 0, 1)

    def test_constant_stencil(self):
        c = F(3, 7)
        cell = reconstruction.reconstruct_cell(c, c, c, FROM_LEFT)
        self.assertTrue(cell.constant)
        self.assertEqual(cell.d, reconstruction.SENTINEL)
        self.assertEqual(cell.integrate(F(1, 4), F(3, 4)), c / 2)

    def test_degenerate_denominator(self):
        self.cellTest((F(1), F(0), F(1)), FROM_RIGHT, -1, 0, 0)

    def test_boundary_split_is_constant(self):
        # d = 0 and d = 1 both fall back to the constant
        self.assertTrue(reconstruction.reconstruct_cell(F(0), F(1), F(1), FROM_LEFT).constant)
        self.assertTrue(reconstruction.reconstruct_cell(F(0), F(0), F(1), FROM_LEFT).constant)

    def test_slices(self):
        self.assertEqual(reconstruction.right_slice(F(0), F(1, 2), F(1), F(2, 5), FROM_LEFT), F(2, 5))
        self.assertEqual(reconstruction.left_slice(F(0), F(1, 2), F(1), F(2, 5), FROM_LEFT), 0)

    def test_half_cell_integrals(self):
        self.assertEqual(reconstruction.half_cell_integrals(0, F(2, 3), 1), (F(1, 6), F(1, 2)))
        self.assertEqual(reconstruction.half_cell_integrals(0, F(1, 3), 1), (0, F(1, 3)))
        c = F(5, 4)
        self.assertEqual(reconstruction.half_cell_integrals(c, c, c), (c / 2, c / 2))
        with self.assertRaises(RuntimeError):
            reconstruction.half_cell_integrals(1, 0, 1)

    def test_half_cells_match_reconstruction(self):
        cell = reconstruction.reconstruct_cell(F(0), F(2, 3), F(1), FROM_RIGHT)
        self.assertEqual((cell.integrate(0, F(1, 2)), cell.integrate(F(1, 2), 1)),
                         reconstruction.half_cell_integrals(0, F(2, 3), 1))

    def test_profile_integrate(self):
        step = lambda j: F(0) if j < 0 else F(1)
        profile = reconstruction.ReconstructionProfile(step, F(0), FROM_LEFT, range(-2, 3))
        self.assertEqual(profile.integrate(F(-1), F(1)), F(3, 2))
        constant = reconstruction.ReconstructionProfile(lambda j: F(2), F(2, 5), FROM_RIGHT, range(3))
        self.assertEqual(constant.integrate(F(-3, 10), F(9, 4)), 2 * (F(9, 4) + F(3, 10)))
        with self.assertRaises(RuntimeError):
            constant.integrate(F(1), F(1))

    def test_profile_json(self):
        profile = reconstruction.ReconstructionProfile(
            lambda j: F(j), F(0), FROM_RIGHT, range(2))
        rows = profile.to_json(str)
        self.assertEqual(rows[0], {'j': 0, 'left': '-1', 'right': '1', 'd': '1/2',
                                   'convention': 'from-right'})
        flat = reconstruction.ReconstructionProfile(lambda j: F(1), F(0), FROM_LEFT, range(1))
        self.assertEqual(flat.to_json(str)[0]['d'], -1)

    def test_convention_lookup(self):
        self.assertEqual(reconstruction.get_convention('from-right'), FROM_RIGHT)
        with self.assertRaises(RuntimeError):
            reconstruction.get_convention('centered')

if __name__ == '__main__':
    unittest.main()
