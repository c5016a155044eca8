import unittest
from math import gcd

import pytest

from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.orbit_dto import OrbitStep
from app.service.orbit_service import OrbitService


class TestOrbitService(unittest.TestCase):

    def setUp(self):
        self.orbit_service = OrbitService()

    # region helpers

    def _coprime_pairs(self, n_max: int):
        for n in range(1, n_max + 1):
            for d in range(1, max(n, 2)):
                if gcd(d, n) == 1:
                    yield n, d

    def _assert_paths(self, n_max: int, replay: bool = False):
        for n, d in self._coprime_pairs(n_max):
            for target in range(n):
                path = self.orbit_service.constructive_path(n, d, target)
                self.assertEqual(path.endpoint, target)
                if replay:
                    self.assertEqual(self.orbit_service.apply_word(n, d, path.word), target)
                self.assertLessEqual(len(path.word), n * (self.orbit_service.phi_period(n, d) + 3))

    # endregion helpers

    def test_given_coprime_pairs_when_orbit_closure_then_whole_ring(self):
        for n, d in self._coprime_pairs(200):
            # Act
            closure = self.orbit_service.orbit_closure(n, d)

            # Assert
            self.assertEqual(closure.size, n, f"n={n} d={d}")
            self.assertEqual(closure.residues, list(range(n)))

    def test_given_small_moduli_when_constructive_path_then_reaches_every_target(self):
        self._assert_paths(10, replay=True)

    @pytest.mark.slow
    def test_given_moduli_up_to_fifty_when_constructive_path_then_reaches_every_target(self):
        self._assert_paths(50)

    def test_given_unit_multiplier_when_constructive_path_then_phi_steps_only(self):
        # Act
        path = self.orbit_service.constructive_path(5, 1, 3)

        # Assert
        self.assertEqual(path.word, [OrbitStep.phi, OrbitStep.phi, OrbitStep.phi])

    def test_given_examples_when_constructive_path_then_endpoint_matches(self):
        self.assertEqual(self.orbit_service.constructive_path(7, 2, 5).endpoint, 5)
        self.assertEqual(self.orbit_service.constructive_path(6, 5, 3).endpoint, 3)
        self.assertEqual(self.orbit_service.constructive_path(1, 0, 0).word, [])

    def test_given_residues_when_phi_inverse_then_round_trip(self):
        for n, d in self._coprime_pairs(40):
            for x in range(n):
                self.assertEqual(self.orbit_service.phi(n, d, self.orbit_service.phi_inverse(n, d, x)), x % n)

    def test_given_period_when_phi_applied_then_identity(self):
        for n, d in self._coprime_pairs(40):
            word = [OrbitStep.phi] * self.orbit_service.phi_period(n, d)
            for x in range(n):
                self.assertEqual(self.orbit_service.apply_word(n, d, word, start=x), x)

    def test_given_non_coprime_multiplier_when_orbit_closure_then_raise_not_coprime(self):
        with self.assertRaises(BusinessException) as context:
            self.orbit_service.orbit_closure(4, 2)
        self.assertEqual(context.exception.code, ErrorCodes.NOT_COPRIME)

    def test_given_zero_modulus_when_constructive_path_then_raise_invalid_input(self):
        with self.assertRaises(BusinessException) as context:
            self.orbit_service.constructive_path(0, 1, 0)
        self.assertEqual(context.exception.code, ErrorCodes.INVALID_INPUT)
