import unittest
from fractions import Fraction

from app.errors.business_exception import BusinessException, ErrorCodes
from app.utils.lattice_utils import (gf_matrix_rank, hermite_normal_form, lattice_determinant,
                                     rational_lattice_index, rational_rref)


class TestLatticeUtils(unittest.TestCase):

    def test_given_spanning_rows_when_hermite_normal_form_then_reduced_upper_form(self):
        # Arrange
        rows = [[2, 4], [1, 3], [3, 7]]

        # Act
        result = hermite_normal_form(rows)

        # Assert
        self.assertEqual(result, [[1, 1], [0, 2]])

    def test_given_full_rank_rows_when_lattice_determinant_then_covolume(self):
        self.assertEqual(lattice_determinant([[2, 0], [0, 3]]), 6)
        self.assertEqual(lattice_determinant([[2, 1], [1, 2]]), 3)

    def test_given_rank_deficient_rows_when_lattice_determinant_then_raise_invalid_state(self):
        with self.assertRaises(BusinessException) as context:
            lattice_determinant([[1, 2], [2, 4]])
        self.assertEqual(context.exception.code, ErrorCodes.INVALID_STATE)

    def test_given_rational_vectors_when_rational_lattice_index_then_coset_count(self):
        self.assertEqual(rational_lattice_index([[Fraction(1, 2)], [Fraction(1, 3)]]), 6)
        self.assertEqual(rational_lattice_index([[Fraction(1, 2), Fraction(1, 4)], [Fraction(0), Fraction(1, 2)]]), 4)
        self.assertEqual(rational_lattice_index([[Fraction(1, 2), 0], [0, Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 2)]]), 4)
        self.assertEqual(rational_lattice_index([]), 1)

    def test_given_rational_rows_when_rational_rref_then_pivots_and_kernel(self):
        rows, pivots = rational_rref([[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(7)]])

        self.assertEqual(pivots, [0, 2])
        self.assertEqual(rows, [[1, 2, 0], [0, 0, 1]])

    def test_given_rows_mod_p_when_gf_matrix_rank_then_rank(self):
        self.assertEqual(gf_matrix_rank([[1, 1], [1, 1]], 2), 1)
        self.assertEqual(gf_matrix_rank([[1, 2], [2, 1]], 3), 1)
        self.assertEqual(gf_matrix_rank([[1, 2], [2, 1]], 5), 2)
