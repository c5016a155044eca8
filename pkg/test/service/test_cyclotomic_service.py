import unittest
from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.entity import CycloElement
from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.cyclotomic_dto import VanishingSum
from app.service.cyclotomic_service import CyclotomicService


class TestCyclotomicService(unittest.TestCase):

    def setUp(self):
        self.cyclotomic_service = CyclotomicService()

    # region field arithmetic

    def test_given_cube_roots_when_summed_then_zero(self):
        # Arrange
        z = self.cyclotomic_service.zeta_pow

        # Act
        total = self.cyclotomic_service.cyclo_add(self.cyclotomic_service.cyclo_add(z(3, 0), z(3, 1)), z(3, 2))

        # Assert
        self.assertTrue(total.is_zero())

    def test_given_fourth_root_when_squared_then_minus_one(self):
        i = self.cyclotomic_service.zeta_pow(4, 1)

        self.assertEqual(self.cyclotomic_service.cyclo_mul(i, i), CycloElement.constant(4, -1))

    def test_given_fifth_root_when_inverted_then_fourth_power(self):
        self.assertEqual(self.cyclotomic_service.cyclo_inv(self.cyclotomic_service.zeta_pow(5, 1)),
                         self.cyclotomic_service.zeta_pow(5, 4))

    def test_given_primitive_root_when_raised_to_order_then_one(self):
        for n in range(1, 16):
            zeta = self.cyclotomic_service.zeta_pow(n, 1)
            power = CycloElement.constant(n, 1)
            for _ in range(n):
                power = power * zeta
            self.assertEqual(power, CycloElement.constant(n, 1))

    def test_given_element_when_divided_by_itself_then_one(self):
        a = CycloElement(7, [Fraction(1, 2), 3, 0, -1])

        self.assertEqual(a / a, CycloElement.constant(7, 1))
        self.assertEqual((a * a.conjugate()).conjugate(), a * a.conjugate())

    def test_given_zero_when_inverted_then_raise_invalid_input(self):
        with self.assertRaises(BusinessException) as context:
            CycloElement.zero(5).inverse()
        self.assertEqual(context.exception.code, ErrorCodes.INVALID_INPUT)

    def test_given_orders_when_cyclotomic_poly_then_known_coefficients(self):
        self.assertEqual(self.cyclotomic_service.cyclotomic_poly(6), [1, -1, 1])
        self.assertEqual(self.cyclotomic_service.cyclotomic_poly(12), [1, 0, -1, 0, 1])
        with self.assertRaises(BusinessException):
            self.cyclotomic_service.cyclotomic_poly(0)

    # endregion field arithmetic

    # region matrices

    def test_given_small_sizes_when_dft_unitarity_check_then_holds(self):
        for n in range(1, 9):
            self.assertTrue(self.cyclotomic_service.dft_unitarity_check(n), f"n={n}")

    def test_given_small_sizes_when_vandermonde_det_norm_then_n_to_the_n(self):
        self.assertEqual(self.cyclotomic_service.vandermonde_det_norm(2), 4)
        self.assertEqual(self.cyclotomic_service.vandermonde_det_norm(3), 27)
        self.assertEqual(self.cyclotomic_service.vandermonde_det_norm(5), 3125)
        for n in range(1, 9):
            self.assertTrue(self.cyclotomic_service.vandermonde_det_identity(n), f"n={n}")

    @pytest.mark.slow
    def test_given_sizes_up_to_thirty_when_vandermonde_report_then_all_identities_hold(self):
        for n in range(1, 31):
            # Act
            report = self.cyclotomic_service.vandermonde_report(n)

            # Assert
            self.assertTrue(report.unitary, f"n={n}")
            self.assertEqual(report.det_norm, n ** n)
            self.assertTrue(report.identity_holds)

    def test_given_singular_matrix_when_determinant_then_zero(self):
        one = CycloElement.constant(3, 1)
        zeta = CycloElement.zeta_pow(3, 1)

        det = self.cyclotomic_service.determinant([[one, zeta], [zeta, zeta * zeta]])

        self.assertTrue(det.is_zero())

    def test_given_zero_pivot_when_determinant_then_row_swap_flips_sign(self):
        zero = CycloElement.zero(4)
        one = CycloElement.constant(4, 1)

        det = self.cyclotomic_service.determinant([[zero, one], [one, zero]])

        self.assertEqual(det, CycloElement.constant(4, -1))

    # endregion matrices

    # region vanishing sums

    def test_given_full_fourth_roots_when_subsum_vanishes_then_opposite_pairs_vanish(self):
        # Arrange
        s = VanishingSum(n=4, terms=[(1, 0), (1, 1), (1, 2), (1, 3)])

        # Act / Assert
        self.assertTrue(self.cyclotomic_service.subsum_vanishes(s, [0, 2]))
        self.assertFalse(self.cyclotomic_service.subsum_vanishes(s, [0, 1]))
        self.assertTrue(self.cyclotomic_service.subsum_vanishes(s, []))
        self.assertTrue(self.cyclotomic_service.has_vanishing_proper_subsum(s))

    def test_given_unknown_exponent_when_subsum_vanishes_then_raise_invalid_input(self):
        s = VanishingSum(n=4, terms=[(1, 0), (1, 2)])

        with self.assertRaises(BusinessException) as context:
            self.cyclotomic_service.subsum_vanishes(s, [3])
        self.assertEqual(context.exception.code, ErrorCodes.INVALID_INPUT)

    def test_given_invalid_terms_when_vanishing_sum_then_raise_validation_error(self):
        with self.assertRaises(ValidationError):
            VanishingSum(n=3, terms=[(0, 0), (1, 1)])
        with self.assertRaises(ValidationError):
            VanishingSum(n=3, terms=[(1, 0), (1, 3)])
        with self.assertRaises(ValidationError):
            VanishingSum(n=3, terms=[(1, 1), (2, 1)])

    def test_given_minimal_sums_when_mann_report_then_order_divides_primorial(self):
        # Arrange
        s = VanishingSum(n=6, terms=[(1, 0), (1, 2), (1, 4)])

        # Act
        report = self.cyclotomic_service.mann_report(s)

        # Assert
        self.assertEqual(report.term_count, 3)
        self.assertEqual(report.reduced_order, 3)
        self.assertEqual(report.primorial, 6)
        self.assertTrue(report.holds)
        self.assertTrue(self.cyclotomic_service.mann_condition_check(VanishingSum(n=2, terms=[(1, 0), (1, 1)])))

    def test_given_fifth_roots_when_mann_report_then_five_divides_primorial(self):
        # Arrange
        s = VanishingSum(n=5, terms=[(1, e) for e in range(5)])

        # Act
        report = self.cyclotomic_service.mann_report(s)

        # Assert
        self.assertEqual(report.term_count, 5)
        self.assertEqual(report.reduced_order, 5)
        self.assertEqual(report.primorial, 30)
        self.assertTrue(report.holds)
        self.assertEqual(self.cyclotomic_service.enumerate_vanishing_sums(5, 1, 5), [s])

    def test_given_hypothesis_violations_when_mann_report_then_raise(self):
        violations = [
            VanishingSum(n=3, terms=[(1, 1), (1, 2)]),
            VanishingSum(n=3, terms=[(1, 0), (1, 1)]),
            VanishingSum(n=4, terms=[(1, 0), (1, 1), (1, 2), (1, 3)]),
        ]
        for s in violations:
            with self.assertRaises(BusinessException) as context:
                self.cyclotomic_service.mann_report(s)
            self.assertEqual(context.exception.code, ErrorCodes.HYPOTHESIS_VIOLATION, str(s))

    def test_given_small_conductors_when_enumerate_vanishing_sums_then_known_lists(self):
        self.assertEqual(self.cyclotomic_service.enumerate_vanishing_sums(2, 1, 2),
                         [VanishingSum(n=2, terms=[(1, 0), (1, 1)])])
        self.assertEqual(self.cyclotomic_service.enumerate_vanishing_sums(3, 1, 3),
                         [VanishingSum(n=3, terms=[(1, 0), (1, 1), (1, 2)])])
        self.assertEqual(self.cyclotomic_service.enumerate_vanishing_sums(4, 1, 4),
                         [VanishingSum(n=4, terms=[(1, 0), (1, 2)])])
        self.assertEqual(self.cyclotomic_service.enumerate_vanishing_sums(1, 1, 1), [])

    def test_given_conductors_up_to_thirty_when_enumerate_vanishing_sums_then_all_pass_mann(self):
        for n in range(1, 31):
            for s in self.cyclotomic_service.enumerate_vanishing_sums(n, 2, min(3, n)):
                # Act
                report = self.cyclotomic_service.mann_report(s)

                # Assert
                self.assertTrue(report.holds, str(s))
                self.assertGreater(s.terms[0][0], 0)

    @pytest.mark.slow
    def test_given_up_to_six_terms_when_enumerate_vanishing_sums_then_all_pass_mann(self):
        reduced_orders = set()
        for n in range(1, 31):
            for s in self.cyclotomic_service.enumerate_vanishing_sums(n, 1, min(6, n)):
                # Act
                report = self.cyclotomic_service.mann_report(s)

                # Assert
                self.assertTrue(report.holds, str(s))
                reduced_orders.add(report.reduced_order)
        self.assertTrue({5, 10, 15, 30} <= reduced_orders, sorted(reduced_orders))

    def test_given_bad_bounds_when_enumerate_vanishing_sums_then_raise_invalid_input(self):
        for args in ((0, 1, 1), (4, 0, 2), (4, 1, 5)):
            with self.assertRaises(BusinessException) as context:
                self.cyclotomic_service.enumerate_vanishing_sums(*args)
            self.assertEqual(context.exception.code, ErrorCodes.INVALID_INPUT)

    # endregion vanishing sums
