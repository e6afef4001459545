import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from antidiffusive.lib.field import Arithmetic
from antidiffusive.lib.reconstruction import Convention
from antidiffusive.schemes import (
    SchemeParams, dl_fixed_step, integrate_reconstruction, lax_wendroff_step,
    reconstruct, run, shifted_step, trajectory, upwind_step)
from antidiffusive.state import (
    Phase, cell_center, cell_value, infinite_state, periodic_state, states_equal)

F = Fraction
RATIONAL = Arithmetic.RATIONAL

ratios = st.fractions(min_value=-2, max_value=2, max_denominator=16)
windows = st.lists(ratios, min_size=1, max_size=8)
shifted_lambdas = st.sampled_from([F(1, 5), F(1, 4), F(1, 3), F(2, 5), F(1, 2)])
lambdas = st.sampled_from([F(1, 5), F(1, 3), F(2, 5), F(1, 2), F(3, 4), F(1)])

class SchemesTest(unittest.TestCase):
    def test_constant_is_fixed(self):
        for scheme in SchemeParams.names():
            params = SchemeParams(scheme, F(1, 2))
            for state in (periodic_state([F(3, 2)] * 6, F(1, 2), RATIONAL),
                          infinite_state([F(-1, 3)], F(1, 2), RATIONAL)):
                after = params.step(state)
                self.assertTrue(all(cell_value(after, j) == cell_value(state, j)
                                    for j in range(-4, 8)))
                if scheme == 'dl_shifted':
                    self.assertEqual(after.phase, Phase.SHIFTED_LEFT)
                else:
                    self.assertEqual(after.phase, Phase.INTEGER)

    def test_single_jump_is_translated_exactly(self):
        lam = F(2, 5)
        params = SchemeParams('dl_fixed', lam)
        state = infinite_state([0, 1], lam, RATIONAL)
        for n, current in trajectory(state, params, 12):
            for j in range(-3, 10):
                expected = min(max(j - n * lam, 0), 1)
                self.assertEqual(cell_value(current, j), expected, 'step %d cell %d' % (n, j))

    def test_upwind_unit_cfl_shifts(self):
        state = periodic_state([0, 1, 2, 3, 4], 1, RATIONAL)
        after = run(state, SchemeParams('upwind', 1), 2)
        self.assertEqual(after.values, (3, 4, 0, 1, 2))

    def test_upwind_formula(self):
        state = periodic_state([0, 1, 0, 0], F(1, 4), RATIONAL)
        self.assertEqual(upwind_step(state, SchemeParams('upwind', F(1, 4))).values,
                         (0, F(3, 4), F(1, 4), 0))

    def test_lax_wendroff_formula(self):
        state = periodic_state([0, 1, 0, 0], F(1, 2), RATIONAL)
        after = lax_wendroff_step(state, SchemeParams('lax_wendroff', F(1, 2)))
        self.assertEqual(after.values, (F(-1, 8), F(3, 4), F(3, 8), 0))

    def test_run_zero_steps(self):
        state = periodic_state([0, 1, 2], F(1, 2), RATIONAL)
        self.assertIs(run(state, SchemeParams('dl_fixed', F(1, 2)), 0), state)
        with self.assertRaises(RuntimeError):
            run(state, SchemeParams('dl_fixed', F(1, 2)), -1)

    def test_trajectory_length(self):
        state = periodic_state([0, 1, 2], F(1, 2), RATIONAL)
        steps = [n for n, _ in trajectory(state, SchemeParams('upwind', F(1, 2)), 5)]
        self.assertEqual(steps, [0, 1, 2, 3, 4, 5])

    def test_shifted_parity(self):
        state = infinite_state([0, F(1, 3), 1], F(1, 2), RATIONAL)
        params = SchemeParams('dl_shifted', F(1, 2))
        observed = []
        run(state, params, 6, observer=lambda n, s: observed.append(s.phase))
        self.assertEqual(observed[-1], Phase.INTEGER)
        self.assertEqual(observed[0], Phase.SHIFTED_LEFT)

    def test_parameter_errors(self):
        with self.assertRaises(RuntimeError):
            SchemeParams('dl_shifted', F(3, 5))
        with self.assertRaises(RuntimeError):
            SchemeParams('upwind', 0)
        with self.assertRaises(RuntimeError):
            SchemeParams('upwind', F(6, 5))
        with self.assertRaises(RuntimeError):
            SchemeParams('central', F(1, 2))
        self.assertEqual(SchemeParams(3, '1/2').name, 'dl_shifted')

    def test_phase_errors(self):
        shifted = infinite_state([0, 1], F(1, 2), RATIONAL, phase=Phase.SHIFTED_LEFT)
        for step in (upwind_step, lax_wendroff_step, dl_fixed_step):
            with self.assertRaises(RuntimeError):
                step(shifted, SchemeParams('upwind', F(1, 2)))
        with self.assertRaises(RuntimeError):
            shifted_step(shifted, SchemeParams('dl_shifted', F(1, 4)))

    @settings(max_examples=60, deadline=None)
    @given(windows, lambdas)
    def test_dl_fixed_integrates_translated_reconstruction(self, values, lam):
        state = infinite_state(values, lam, RATIONAL)
        after = dl_fixed_step(state, SchemeParams('dl_fixed', lam))
        profile = reconstruct(state, Convention.FROM_LEFT)
        for j in range(state.window_start - 3, state.window_end + 4):
            a = F(j) - F(1, 2) - lam
            self.assertEqual(cell_value(after, j), integrate_reconstruction(profile, a, a + 1))

    @settings(max_examples=60, deadline=None)
    @given(windows, shifted_lambdas)
    def test_shifted_averages_reconstruction(self, values, lam):
        params = SchemeParams('dl_shifted', lam)
        state = infinite_state(values, lam, RATIONAL)
        for convention in (Convention.FROM_RIGHT, Convention.FROM_LEFT):
            after = params.step(state)
            profile = reconstruct(state, convention)
            for j in range(state.window_start - 3, state.window_end + 4):
                a = cell_center(after, j) - F(1, 2)
                self.assertEqual(cell_value(after, j), integrate_reconstruction(profile, a, a + 1))
            state = after

    @settings(max_examples=40, deadline=None)
    @given(st.lists(ratios, min_size=4, max_size=12), shifted_lambdas,
           st.sampled_from(SchemeParams.names()))
    def test_binary64_kernels_match_exact_steps(self, values, lam, scheme):
        params = SchemeParams(scheme, lam)
        exact = periodic_state(values, lam, RATIONAL)
        approx = periodic_state([float(x) for x in values], lam, Arithmetic.BINARY64)
        for _ in range(3):
            exact = params.step(exact)
            approx = params.step(approx)
            self.assertEqual(exact.phase, approx.phase)
            for x, y in zip(exact.values, approx.values):
                self.assertAlmostEqual(float(x), y, delta=1e-12)

    def test_mass_of_periodic_rational_runs(self):
        state = periodic_state([0, F(1, 3), 2, F(-1, 2), 1], F(2, 5), RATIONAL)
        for scheme in SchemeParams.names():
            after = run(state, SchemeParams(scheme, F(2, 5)), 7)
            self.assertEqual(sum(after.values), sum(state.values))

    def test_window_grows_with_support(self):
        state = infinite_state([0, 1, 0], F(1, 2), RATIONAL)
        after = upwind_step(state, SchemeParams('upwind', F(1, 2)))
        self.assertTrue(states_equal(after, infinite_state([0, F(1, 2), F(1, 2), 0], F(1, 2), RATIONAL)))

if __name__ == '__main__':
    unittest.main()
