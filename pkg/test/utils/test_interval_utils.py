import unittest
from fractions import Fraction
from math import isqrt

import mpmath

from app.entity import Radical
from app.errors.business_exception import BusinessException, ErrorCodes
from app.utils.interval_utils import (Interval, RadicalTerm, certify_nonzero, eval_radical_sum, linear_form_interval,
                                      root_interval)

mpmath.mp.dps = 100


class TestIntervalUtils(unittest.TestCase):

    def test_given_exact_root_when_eval_radical_sum_then_point_interval(self):
        # Arrange
        terms = [RadicalTerm(4, 2)]

        # Act
        result = eval_radical_sum(terms, Fraction(1, 10 ** 30))

        # Assert
        self.assertEqual(result.interval, Interval.point(2))

    def test_given_two_square_roots_when_eval_radical_sum_then_fifty_digits(self):
        # Arrange
        expected = Fraction(2 * isqrt(2 * 10 ** 100), 10 ** 50)

        # Act
        result = eval_radical_sum([RadicalTerm(2, 2), RadicalTerm(2, 2)], Fraction(1, 10 ** 50))

        # Assert
        self.assertTrue(result.interval.width < Fraction(1, 10 ** 50))
        self.assertTrue(abs(result.interval.lo - expected) < Fraction(3, 10 ** 50))

    def test_given_near_miss_when_eval_radical_sum_then_tiny_nonzero(self):
        terms = [RadicalTerm(433, 6), RadicalTerm(972, 6), RadicalTerm(42089, 6, sign=-1)]

        result = certify_nonzero(terms)

        self.assertFalse(result.interval.contains_zero())
        self.assertTrue(result.interval.abs_upper() < Fraction(1, 10 ** 12))
        oracle = mpmath.root(433, 6) + mpmath.root(972, 6) - mpmath.root(42089, 6)
        tight = eval_radical_sum(terms, Fraction(1, 10 ** 30))
        self.assertAlmostEqual(float(tight.interval.lo) / float(oracle), 1.0, places=9)

    def test_given_doubling_precision_when_root_interval_then_nested(self):
        previous = root_interval(3, 1, 5, 32)
        for bits in (64, 128, 256, 512):
            current = root_interval(3, 1, 5, bits)
            self.assertTrue(current.is_inside(previous))
            previous = current

    def test_given_invalid_term_when_eval_radical_sum_then_raise_invalid_input(self):
        with self.assertRaises(BusinessException) as context:
            eval_radical_sum([RadicalTerm(2, 1)], Fraction(1, 10))
        self.assertEqual(context.exception.code, ErrorCodes.INVALID_INPUT)

    def test_given_tiny_budget_when_eval_radical_sum_then_raise_precision_exhausted(self):
        with self.assertRaises(BusinessException) as context:
            eval_radical_sum([RadicalTerm(2, 2)], Fraction(1, 2 ** 200), start_bits=16, max_bits=64)
        self.assertEqual(context.exception.code, ErrorCodes.PRECISION_EXHAUSTED)

    def test_given_dependent_form_when_linear_form_interval_then_contains_zero(self):
        radicals = [Radical(1, {2: Fraction(1, 2)}), Radical(1, {2: Fraction(3, 2)})]

        result = linear_form_interval([2, -1], radicals, 128)

        self.assertTrue(result.contains_zero())
        self.assertTrue(result.width <= Fraction(3, 2 ** 128))
