import math
import unittest
from fractions import Fraction

from antidiffusive.analysis.classifiers import (
    ExtremityClass, automaton_allows, classify_extremities, classify_H_alpha,
    count_positive_jumps, detect_two_periodicity, is_discrete_heaviside,
    two_periodicity_onset)
from antidiffusive.analysis.metrics import (
    comparison_time, convergence_rates, elapsed_time, l1_error_cell_averaged,
    linf_error_pointwise, plateau_metric_I)
from antidiffusive.datum import Constant, PiecewiseDatum, init_periodic_state, sample_periodic_state
from antidiffusive.experiments.presets import build_initial
from antidiffusive.lib.field import Arithmetic
from antidiffusive.schemes import SchemeParams, run, trajectory
from antidiffusive.state import infinite_state, periodic_state

F = Fraction
RATIONAL = Arithmetic.RATIONAL

def cumulative(jumps, lam=F(1, 2), window_start=0):
    values = [F(0)]
    for s in jumps:
        values.append(values[-1] + F(s))
    return infinite_state(values, lam, RATIONAL, window_start=window_start)

class MetricsTest(unittest.TestCase):
    def plateaus(self):
        return build_initial('plateaus', 'rational', '2/5')

    def test_zero_time_errors(self):
        datum = self.plateaus()
        self.assertEqual(linf_error_pointwise(sample_periodic_state(datum, 15, F(2, 5)), datum, 0), 0)
        self.assertEqual(l1_error_cell_averaged(init_periodic_state(datum, 15, F(2, 5)), datum, 0), 0)
        id1 = build_initial('id1', 'binary64', '2/5')
        self.assertLess(linf_error_pointwise(sample_periodic_state(id1, 50, F(2, 5)), id1, 0), 1e-12)
        self.assertLess(l1_error_cell_averaged(init_periodic_state(id1, 50, F(2, 5)), id1, 0), 1e-12)

    def test_constant_datum(self):
        datum = PiecewiseDatum([(0, 1, Constant('1/3'))], period=1)
        state = periodic_state([F(1, 3)] * 7, F(1, 2), RATIONAL, domain_length=1)
        self.assertEqual(linf_error_pointwise(state, datum, F(5, 7)), 0)
        self.assertEqual(l1_error_cell_averaged(state, datum, F(5, 7)), 0)

    def test_unit_cfl_upwind_is_exact(self):
        datum = self.plateaus()
        params = SchemeParams('upwind', 1)
        pointwise = sample_periodic_state(datum, 15, 1)
        averaged = init_periodic_state(datum, 15, 1)
        for n in (1, 4, 9):
            t = elapsed_time(pointwise, n)
            self.assertEqual(t, n)
            self.assertEqual(linf_error_pointwise(run(pointwise, params, n), datum, t), 0)
            self.assertEqual(l1_error_cell_averaged(run(averaged, params, n), datum, t), 0)

    def test_dl_fixed_plateaus_are_advected_exactly(self):
        datum = self.plateaus()
        params = SchemeParams('dl_fixed', F(2, 5))
        state = init_periodic_state(datum, 15, F(2, 5))
        for n, current in trajectory(state, params, 100):
            self.assertEqual(l1_error_cell_averaged(current, datum, elapsed_time(current, n)), 0)

    def test_comparison_time(self):
        state = init_periodic_state(self.plateaus(), 15, F(2, 5))
        self.assertEqual(comparison_time('dl_fixed', state, 5), elapsed_time(state, 5))
        self.assertEqual(comparison_time('upwind', state, 5), 2)
        self.assertEqual(comparison_time('dl_shifted', state, 5), 0)

    def test_period_mismatch(self):
        datum = self.plateaus()
        state = periodic_state([0, 1, 2], F(1, 2), RATIONAL)
        with self.assertRaises(RuntimeError):
            linf_error_pointwise(state, datum, 0)
        with self.assertRaises(RuntimeError):
            l1_error_cell_averaged(state, datum, 0)

    def test_plateau_metric(self):
        self.assertEqual(plateau_metric_I(init_periodic_state(self.plateaus(), 15, F(2, 5))), 0)
        self.assertEqual(plateau_metric_I(periodic_state([F(2)] * 5, F(1, 2), RATIONAL)), 0)
        self.assertEqual(plateau_metric_I(periodic_state([0, 1, 0, 1], F(1, 2), RATIONAL)), 4)
        self.assertEqual(plateau_metric_I(periodic_state([0, 1, 0, 1], F(1, 2), Arithmetic.BINARY64)), 4.0)
        self.assertEqual(plateau_metric_I(infinite_state([0, 1], F(1, 2), RATIONAL)), 0)

    def test_convergence_rates(self):
        report = convergence_rates([0.4, 0.2, 0.1])
        self.assertEqual(report.ratios, (2.0, 2.0))
        self.assertEqual(report.orders, (1.0, 1.0))
        self.assertTrue(math.isnan(convergence_rates([0.0, 0.0]).orders[0]))

class ClassifiersTest(unittest.TestCase):
    def test_heaviside_pattern(self):
        report = classify_H_alpha(infinite_state([0, 1], F(1, 2), RATIONAL), F(1, 5))
        self.assertEqual(report.M, 1)
        self.assertTrue(report.alpha_satisfied)
        self.assertIsNone(report.min_inner_jump)

    def test_three_jump_pattern(self):
        state = cumulative(['1/2', '3/10', '7/10'], window_start=2)
        report = classify_H_alpha(state, F(1, 10))
        self.assertEqual(report.M, 3)
        self.assertEqual(report.jumps, (F(1, 2), F(3, 10), F(7, 10)))
        self.assertEqual(report.min_inner_jump, F(3, 10))
        self.assertTrue(report.alpha_satisfied)
        self.assertEqual(report.j0, 2)
        self.assertEqual(report.position(0), F(5, 2))
        self.assertFalse(classify_H_alpha(state, F(1, 5)).alpha_satisfied)

    def test_alpha_is_relative_to_the_tail_gap(self):
        state = cumulative(['1', '3/5', '2/5'])
        report = classify_H_alpha(state, F(1, 2))
        self.assertEqual(report.jumps, (1, F(3, 5), F(2, 5)))
        self.assertEqual(report.min_inner_jump, F(3, 5))
        self.assertFalse(report.alpha_satisfied)
        self.assertTrue(classify_H_alpha(state, F(1, 4)).alpha_satisfied)

    def test_pattern_violations(self):
        self.assertIsNone(classify_H_alpha(cumulative(['1/2', '0', '1/2']), 0))
        self.assertIsNone(classify_H_alpha(cumulative(['1/2', '-1/4', '1/2']), 0))
        self.assertIsNone(classify_H_alpha(infinite_state([1, 0], F(1, 2), RATIONAL), 0))
        self.assertIsNone(classify_H_alpha(periodic_state([0, 1], F(1, 2), RATIONAL), 0))
        with self.assertRaises(RuntimeError):
            count_positive_jumps(infinite_state([2], F(1, 2), RATIONAL))

    def test_extremities(self):
        self.assertEqual(classify_extremities(cumulative([2, 1, 1, 2])), ExtremityClass.LS_SL)
        self.assertEqual(classify_extremities(cumulative([1, 2, 2, 1])), ExtremityClass.SL_LS)
        self.assertEqual(classify_extremities(cumulative([1, 2, 1, 2])), ExtremityClass.SL_SL)
        self.assertEqual(classify_extremities(cumulative([2, 1, 2, 1])), ExtremityClass.LS_LS)
        self.assertEqual(classify_extremities(cumulative([1, 1, 1])), ExtremityClass.SL_LS)
        self.assertEqual(classify_extremities(cumulative([1, 2])), ExtremityClass.NOT_APPLICABLE)

    def test_positive_jump_count(self):
        self.assertEqual(count_positive_jumps(infinite_state([0, 1], F(1, 2), RATIONAL)), 1)
        self.assertEqual(count_positive_jumps(cumulative(['1/2', '3/10', '7/10'])), 3)

    def test_automaton(self):
        LS_SL, SL_LS = ExtremityClass.LS_SL, ExtremityClass.SL_LS
        SL_SL, LS_LS = ExtremityClass.SL_SL, ExtremityClass.LS_LS
        self.assertTrue(automaton_allows(LS_SL, 4, SL_LS, 5))
        self.assertFalse(automaton_allows(LS_SL, 4, SL_LS, 4))
        self.assertFalse(automaton_allows(LS_SL, 4, LS_LS, 5))
        self.assertTrue(automaton_allows(SL_LS, 5, LS_LS, 4))
        self.assertTrue(automaton_allows(SL_SL, 5, LS_LS, 5))
        self.assertFalse(automaton_allows(SL_SL, 5, LS_SL, 5))
        self.assertTrue(automaton_allows(LS_LS, 5, SL_SL, 5))
        self.assertTrue(automaton_allows(SL_LS, 3, ExtremityClass.NOT_APPLICABLE, 2))
        self.assertFalse(automaton_allows(SL_SL, 3, ExtremityClass.NOT_APPLICABLE, 3))

    def test_discrete_heaviside(self):
        self.assertEqual(is_discrete_heaviside(infinite_state([0, 0, 1, 1], F(1, 2), RATIONAL)), 1)
        self.assertEqual(is_discrete_heaviside(infinite_state([0, F(1, 2), 1], F(1, 2), RATIONAL, window_start=3)), 4)
        self.assertIsNone(is_discrete_heaviside(infinite_state([0, F(1, 4), F(3, 4), 1], F(1, 2), RATIONAL)))
        self.assertIsNone(is_discrete_heaviside(infinite_state([1, 0], F(1, 2), RATIONAL)))
        self.assertIsNone(is_discrete_heaviside(infinite_state([0, 5, 1], F(1, 2), RATIONAL)))
        self.assertIsNone(is_discrete_heaviside(infinite_state([0, -1, 1], F(1, 2), RATIONAL)))
        self.assertEqual(is_discrete_heaviside(infinite_state([0, 1, 1], F(1, 2), RATIONAL)), 0)

    def test_periodicity_of_constant(self):
        state = infinite_state([F(1, 3)], F(1, 2), RATIONAL)
        params = SchemeParams('dl_shifted', F(1, 2))
        self.assertEqual(two_periodicity_onset(state, params, 10), 0)
        self.assertEqual(detect_two_periodicity(trajectory(state, params, 10), 10), 0)

    def test_shrinking_configuration_never_repeats(self):
        lam = F(2, 5)
        state = build_initial('fiveconfig', 'rational', lam)
        params = SchemeParams('dl_shifted', lam)
        self.assertIsNone(two_periodicity_onset(state, params, 60))
        self.assertIsNone(detect_two_periodicity(list(trajectory(state, params, 60)), 60))

    def test_overcompressive_collapse(self):
        state = cumulative(['1/4', '1/2', '1/8', '3/8', '1/4'])
        params = SchemeParams('dl_shifted', F(1, 2))
        p = two_periodicity_onset(state, params, 10000)
        self.assertIsNotNone(p)
        self.assertEqual(detect_two_periodicity(trajectory(state, params, p + 10), p + 10), p)
        for n, current in trajectory(state, params, p + 10):
            if n >= p:
                self.assertIsNotNone(is_discrete_heaviside(current))

if __name__ == '__main__':
    unittest.main()
