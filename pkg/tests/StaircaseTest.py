import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from antidiffusive.analysis.staircase import (
    StaircaseTracker, check_Hprime, front_sum_series, staircase_matches,
    staircase_predicted_next)
from antidiffusive.lib.field import Arithmetic
from antidiffusive.schemes import SchemeParams, trajectory
from antidiffusive.state import infinite_state, periodic_state

F = Fraction
HALF = F(1, 2)
RATIONAL = Arithmetic.RATIONAL

def staircase(s_half, s_three_half, lam=HALF, window_start=0):
    s_half, s_three_half = F(s_half), F(s_three_half)
    return infinite_state([0, s_half, s_half + s_three_half], lam, RATIONAL,
                          window_start=window_start, right_step=1)

class StaircaseTest(unittest.TestCase):
    def test_second_jump_below_one(self):
        report = check_Hprime(staircase(HALF, F(9, 10)))
        self.assertFalse(report.satisfies_Hprime)
        self.assertTrue(report.reason)

    def test_reference_staircase(self):
        report = check_Hprime(staircase(HALF, F(3, 2)))
        self.assertTrue(report.satisfies_Hprime)
        self.assertEqual((report.S_half, report.S_three_half), (HALF, F(3, 2)))
        self.assertEqual(report.case, 'ii')
        self.assertEqual(report.front_sum, 2)
        self.assertEqual(report.origin_position, HALF)

    def test_unit_staircase_reads_from_rightmost_origin(self):
        # (1, 1) and (0, 1) describe the same cells; the rightmost reading wins
        report = check_Hprime(staircase(1, 1))
        self.assertTrue(report.satisfies_Hprime)
        self.assertEqual((report.S_half, report.S_three_half), (1, 1))
        self.assertEqual(report.case, 'i')
        self.assertEqual(report.front_sum, 2)
        self.assertEqual(report.origin_position, HALF)

    def test_first_jump_above_second(self):
        report = check_Hprime(staircase(2, 1))
        self.assertEqual((report.S_half, report.S_three_half), (2, 1))
        self.assertEqual(report.case, 'i')
        self.assertEqual(report.front_sum, 3)

    def test_reading_at_a_given_origin(self):
        state = staircase(1, 1)
        report = check_Hprime(state, -HALF)
        self.assertTrue(report.satisfies_Hprime)
        self.assertEqual((report.S_half, report.S_three_half), (0, 1))
        self.assertEqual(report.case, 'ii')
        self.assertFalse(check_Hprime(state, F(3, 2)).satisfies_Hprime)

    def test_tie_is_followed_at_the_predicted_origin(self):
        params = SchemeParams('dl_shifted', HALF)
        state = staircase(F(3, 2), F(3, 2))
        report = check_Hprime(state)
        self.assertEqual(report.case, 'i')
        prediction = staircase_predicted_next(report, state)
        after = params.step(state)
        self.assertTrue(staircase_matches(prediction, after))
        following = check_Hprime(after, prediction.origin_position)
        self.assertEqual(following.case, 'ii')
        self.assertEqual(following.front_sum, report.front_sum - HALF)
        tracker = StaircaseTracker()
        self.assertEqual([tracker.update(s).front_sum for s in (state, after)],
                         [report.front_sum, following.front_sum])

    def test_rejected_shapes(self):
        self.assertFalse(check_Hprime(periodic_state([0, 1], HALF, RATIONAL)).satisfies_Hprime)
        self.assertFalse(check_Hprime(infinite_state([0, 1], HALF, RATIONAL)).satisfies_Hprime)
        self.assertFalse(check_Hprime(
            infinite_state([0, 1, 3], HALF, RATIONAL, right_step=2)).satisfies_Hprime)
        self.assertFalse(check_Hprime(
            infinite_state([0, 1, 3], HALF, RATIONAL, left_step=1, right_step=1)).satisfies_Hprime)
        self.assertFalse(check_Hprime(
            infinite_state([0, F(-1, 2), F(3, 2)], HALF, RATIONAL, right_step=1)).satisfies_Hprime)

    def test_case_one_step(self):
        params = SchemeParams('dl_shifted', HALF)
        state = staircase(2, F(3, 2))
        report = check_Hprime(state)
        self.assertEqual(report.case, 'i')
        self.assertEqual(report.front_sum, F(7, 2))
        prediction = staircase_predicted_next(report, state)
        self.assertEqual(prediction.jumps, {0: F(1, 4), 1: F(11, 4), 2: 1})
        self.assertEqual(prediction.front_sum_change, -HALF)

        after = params.step(state)
        self.assertTrue(staircase_matches(prediction, after))
        report = check_Hprime(after)
        self.assertEqual(report.case, 'ii')
        self.assertEqual((report.S_half, report.S_three_half), (F(1, 4), F(11, 4)))
        self.assertEqual(report.front_sum, 3)
        self.assertEqual(report.origin_position, 0)

    def test_prediction_errors(self):
        with self.assertRaises(RuntimeError):
            state = staircase(HALF, F(9, 10))
            staircase_predicted_next(check_Hprime(state), state)
        with self.assertRaises(RuntimeError):
            state = staircase(HALF, F(3, 2), lam=F(2, 5))
            staircase_predicted_next(check_Hprime(state), state)

    @settings(max_examples=25, deadline=None)
    @given(st.fractions(min_value=0, max_value=4, max_denominator=16),
           st.fractions(min_value=1, max_value=4, max_denominator=16),
           st.integers(min_value=-3, max_value=3))
    def test_dynamics(self, s_half, s_three_half, window_start):
        params = SchemeParams('dl_shifted', HALF)
        state = staircase(s_half, s_three_half, window_start=window_start)
        states = [s for _, s in trajectory(state, params, 40)]
        sums = front_sum_series(states)
        self.assertTrue(all(s is not None for s in sums))
        report = check_Hprime(state)
        for before, after in zip(states, states[1:]):
            prediction = staircase_predicted_next(report, before)
            self.assertTrue(staircase_matches(prediction, after))
            following = check_Hprime(after, prediction.origin_position)
            self.assertTrue(following.satisfies_Hprime)
            self.assertEqual(following.front_sum, report.front_sum + prediction.front_sum_change)
            if report.case == 'i':
                self.assertEqual(following.case, 'ii')
            report = following
        even = sums[::2]
        self.assertTrue(all(a <= b for a, b in zip(even, even[1:])))

if __name__ == '__main__':
    unittest.main()
