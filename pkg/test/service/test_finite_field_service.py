import unittest

from app.errors.business_exception import BusinessException, ErrorCodes
from app.service.finite_field_service import FiniteFieldService


class TestFiniteFieldService(unittest.TestCase):

    def setUp(self):
        self.finite_field_service = FiniteFieldService()

    # region helpers

    def _nonzero_elements(self, tower):
        return [tower.field.from_index(i) for i in range(1, tower.field.order)]

    def _assert_code(self, code: ErrorCodes, call, *args):
        with self.assertRaises(BusinessException) as context:
            call(*args)
        self.assertEqual(context.exception.code, code)

    # endregion helpers

    # region tower

    def test_given_sextic_over_quadratic_when_build_tower_then_known_constants(self):
        # Act
        tower = self.finite_field_service.build_tower(2, 2, 6)

        # Assert
        self.assertEqual((tower.m, tower.n, tower.l), (3, 63, 21))
        self.assertEqual(len(tower.modulus), 7)
        self.assertTrue(self.finite_field_service.has_full_order(tower, tower.generator))

    def test_given_large_tower_when_build_tower_then_index_is_one_mod_p(self):
        for p, u, v in ((2, 2, 4), (2, 2, 6), (3, 2, 16), (5, 1, 3), (3, 3, 6)):
            tower = self.finite_field_service.build_tower(p, u, v)
            self.assertEqual(tower.l % p, 1)
            self.assertEqual(tower.l * tower.m, tower.n)

    def test_given_gf9_when_find_generator_then_order_eight(self):
        # Arrange
        tower = self.finite_field_service.build_tower(3, 1, 2)
        one = tower.field.one()

        # Act
        g = tower.generator

        # Assert
        self.assertEqual(g ** 8, one)
        self.assertNotEqual(g ** 4, one)
        self.assertNotEqual(g ** 2, one)
        for x in self._nonzero_elements(tower):
            if x.index() < g.index():
                self.assertFalse(self.finite_field_service.has_full_order(tower, x))

    def test_given_invalid_parameters_when_build_tower_then_raise(self):
        self._assert_code(ErrorCodes.NOT_PRIME, self.finite_field_service.build_tower, 4, 1, 2)
        self._assert_code(ErrorCodes.NOT_DIVISIBLE, self.finite_field_service.build_tower, 2, 2, 3)
        self._assert_code(ErrorCodes.INVALID_INPUT, self.finite_field_service.build_tower, 2, 0, 3)

    def test_given_tower_when_subfield_elements_then_closed_subfield_of_order_p_to_u(self):
        # Arrange
        tower = self.finite_field_service.build_tower(2, 2, 6)

        # Act
        elements = self.finite_field_service.subfield_elements(tower)

        # Assert
        coeffs = {x.coeffs for x in elements}
        self.assertEqual(len(coeffs), 4)
        for a in elements:
            for b in elements:
                self.assertIn((a + b).coeffs, coeffs)
                self.assertIn((a * b).coeffs, coeffs)

    # endregion tower

    # region logarithms

    def test_given_every_power_when_discrete_log_then_round_trip(self):
        tower = self.finite_field_service.build_tower(2, 2, 6)

        for k in range(tower.n):
            self.assertEqual(self.finite_field_service.discrete_log(tower, tower.generator ** k), k)

    def test_given_zero_when_discrete_log_then_raise_invalid_input(self):
        tower = self.finite_field_service.build_tower(2, 2, 6)

        self._assert_code(ErrorCodes.INVALID_INPUT, self.finite_field_service.discrete_log, tower, tower.field.zero())

    def test_given_every_element_when_root_index_then_matches_brute_force(self):
        # Arrange
        tower = self.finite_field_service.build_tower(2, 2, 6)
        subfield = {x.coeffs for x in self.finite_field_service.subfield_elements(tower)}

        for x in self._nonzero_elements(tower):
            # Act
            k = self.finite_field_service.root_index(tower, x)

            # Assert
            expected = next(j for j in range(1, tower.n + 1) if (x ** j).coeffs in subfield)
            self.assertEqual(k, expected, str(x))

    def test_given_all_pairs_when_pairwise_dependent_then_matches_scalar_multiples(self):
        # Arrange
        tower = self.finite_field_service.build_tower(2, 2, 6)
        scalars = self.finite_field_service.subfield_elements(tower)[1:]
        elements = self._nonzero_elements(tower)

        for x in elements:
            multiples = {(c * x).coeffs for c in scalars}
            for y in elements:
                # Act / Assert
                self.assertEqual(self.finite_field_service.pairwise_dependent(tower, x, y), y.coeffs in multiples)

    def test_given_constructed_set_when_theta_diagnostics_then_hypotheses_hold(self):
        tower = self.finite_field_service.build_tower(2, 2, 6)

        diagnostics = self.finite_field_service.theta_diagnostics(
            tower, self.finite_field_service.construct_independent_set(tower))

        self.assertTrue(diagnostics.pairwise_independent)
        self.assertTrue(diagnostics.hypotheses_hold)
        self.assertEqual([e.root_index for e in diagnostics.entries], [3, 1])

    def test_given_dependent_pair_when_theta_diagnostics_then_not_pairwise_independent(self):
        tower = self.finite_field_service.build_tower(2, 2, 6)
        g = tower.generator

        diagnostics = self.finite_field_service.theta_diagnostics(tower, [g, g * tower.subfield_generator])

        self.assertFalse(diagnostics.pairwise_independent)
        self.assertFalse(diagnostics.hypotheses_hold)

    # endregion logarithms

    # region independent set

    def test_given_sextic_over_quadratic_when_construct_exponents_then_seven_and_twenty_one(self):
        tower = self.finite_field_service.build_tower(2, 2, 6)

        self.assertEqual(self.finite_field_service.construct_exponents(tower), [7, 21])

    def test_given_quartic_over_quadratic_when_construct_exponents_then_raise_not_divisible(self):
        tower = self.finite_field_service.build_tower(2, 2, 4)

        self._assert_code(ErrorCodes.NOT_DIVISIBLE, self.finite_field_service.construct_exponents, tower)

    def test_given_prime_subfield_of_gf2_when_construct_exponents_then_raise_hypothesis_violation(self):
        tower = self.finite_field_service.build_tower(2, 1, 3)

        self._assert_code(ErrorCodes.HYPOTHESIS_VIOLATION, self.finite_field_service.construct_exponents, tower)

    def test_given_gf3_16_over_gf9_when_tower_report_then_verified_exhaustively(self):
        # Act
        report = self.finite_field_service.tower_report(3, 2, 16, verify=True)

        # Assert
        w = 672605
        self.assertEqual((report.m, report.l, report.w), (8, 5380840, w))
        self.assertEqual(report.exponents, [w, 2 * w, 4 * w, 8 * w])
        self.assertTrue(report.verification.independent)
        self.assertEqual(report.verification.method, "exhaustive")
        self.assertEqual(report.verification.combinations_checked, 6560)

    def test_given_scalar_multiple_when_check_linear_independence_then_dependent(self):
        tower = self.finite_field_service.build_tower(2, 2, 6)
        x = tower.generator

        result = self.finite_field_service.check_linear_independence(tower, [x, x * tower.subfield_generator])

        self.assertFalse(result.independent)
        self.assertEqual(result.method, "exhaustive")

    def test_given_zero_element_when_check_linear_independence_then_contains_zero(self):
        tower = self.finite_field_service.build_tower(2, 2, 6)

        result = self.finite_field_service.check_linear_independence(tower, [tower.generator, tower.field.zero()])

        self.assertFalse(result.independent)
        self.assertEqual(result.method, "contains-zero")

    def test_given_empty_set_when_check_linear_independence_then_vacuously_independent(self):
        tower = self.finite_field_service.build_tower(2, 2, 6)

        result = self.finite_field_service.check_linear_independence(tower, [])

        self.assertTrue(result.independent)
        self.assertEqual(result.method, "exhaustive")
        self.assertEqual(result.combinations_checked, 0)
        self.assertTrue(FiniteFieldService(exhaustive_limit=1).verify_linear_independence(tower, []))

    def test_given_small_limit_when_check_linear_independence_then_rank_agrees_with_exhaustive(self):
        # Arrange
        rank_service = FiniteFieldService(exhaustive_limit=1)
        tower = self.finite_field_service.build_tower(2, 2, 6)
        g = tower.generator
        candidates = [
            self.finite_field_service.construct_independent_set(tower),
            [g, g * tower.subfield_generator],
            [g, g ** 2, g ** 3],
            [g ** 5, g ** 11],
        ]

        for elements in candidates:
            # Act
            exhaustive = self.finite_field_service.check_linear_independence(tower, elements)
            rank = rank_service.check_linear_independence(tower, elements)

            # Assert
            self.assertEqual(rank.method, "rank")
            self.assertEqual(rank.independent, exhaustive.independent)

    # endregion independent set
