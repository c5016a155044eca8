import random
import unittest
from fractions import Fraction

from app.entity import Radical, RadicalSet
from app.errors.business_exception import BusinessException, ErrorCodes



# region init entity
def _random_radical(rng: random.Random) -> Radical:
    exponents = {p: Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for p in rng.sample((2, 3, 5, 7, 11), rng.randint(0, 3))}
    return Radical(rng.choice((1, -1)), exponents)

# endregion init entity


class TestRadical(unittest.TestCase):

    def test_given_exponent_map_when_construct_then_zero_exponents_dropped_and_sorted(self):
        # Arrange
        exponents = {5: Fraction(1, 3), 2: Fraction(0), 3: Fraction(2, 4)}

        # Act
        result = Radical(1, exponents)

        # Assert
        self.assertEqual(result.items(), ((3, Fraction(1, 2)), (5, Fraction(1, 3))))
        self.assertEqual(result.root_degree(), 6)
        self.assertEqual(result.power_value(), Fraction(27 * 25))

    def test_given_negative_radical_when_pow_then_sign_follows_parity(self):
        a = Radical(-1, {2: Fraction(1, 3)})

        self.assertEqual((a ** 3).rational_value(), Fraction(-2))
        self.assertEqual((a ** 2).sign, 1)
        self.assertEqual(a ** 0, Radical.one())

    def test_given_two_radicals_when_divide_then_exponents_subtract(self):
        a = Radical(1, {2: Fraction(1, 2), 3: Fraction(1, 2)})
        b = Radical(-1, {2: Fraction(1, 2)})

        result = a / b

        self.assertEqual(result, Radical(-1, {3: Fraction(1, 2)}))
        self.assertEqual(str(result), "-3^(1/2)")

    def test_given_radical_when_float_then_close_to_real_value(self):
        a = Radical(1, {2: Fraction(1, 2)})

        self.assertAlmostEqual(float(a), 2 ** 0.5, places=12)
        self.assertAlmostEqual(float(-a), -(2 ** 0.5), places=12)

    def test_given_invalid_sign_or_base_when_construct_then_raise_invalid_input(self):
        for sign, exponents in [(0, {}), (1, {1: Fraction(1, 2)})]:
            with self.assertRaises(BusinessException) as context:
                Radical(sign, exponents)
            self.assertEqual(context.exception.code, ErrorCodes.INVALID_INPUT)

    def test_given_irrational_radical_when_rational_value_then_raise_invalid_state(self):
        with self.assertRaises(BusinessException) as context:
            Radical(1, {2: Fraction(1, 2)}).rational_value()
        self.assertEqual(context.exception.code, ErrorCodes.INVALID_STATE)

    def test_given_repeated_element_when_radical_set_then_raise_invalid_input(self):
        a = Radical(1, {2: Fraction(1, 2)})

        with self.assertRaises(BusinessException):
            RadicalSet([a])
        with self.assertRaises(BusinessException):
            RadicalSet([a, Radical(1, {2: Fraction(2, 4)})])
        self.assertEqual(len(RadicalSet([a, -a])), 2)

    def test_given_random_radicals_when_multiply_and_divide_then_group_laws_hold(self):
        # Arrange
        rng = random.Random(20240615)
        one = Radical.one()

        for _ in range(300):
            a, b, c = _random_radical(rng), _random_radical(rng), _random_radical(rng)

            # Act / Assert
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * b, b * a)
            self.assertEqual(a * one, a)
            self.assertEqual(a / a, one)
            self.assertEqual((a / b) * b, a)
            self.assertEqual(one / (one / a), a)
            self.assertEqual(hash(a * b), hash(b * a))

    def test_given_random_radicals_when_pow_then_exponent_laws_hold(self):
        # Arrange
        rng = random.Random(20240616)

        for _ in range(300):
            a, b = _random_radical(rng), _random_radical(rng)
            j, k = rng.randint(-4, 4), rng.randint(-4, 4)

            # Act / Assert
            self.assertEqual(a ** j * a ** k, a ** (j + k))
            self.assertEqual((a ** j) ** k, a ** (j * k))
            self.assertEqual((a * b) ** k, a ** k * b ** k)
            self.assertEqual(a ** -1, Radical.one() / a)

    def test_given_composite_keys_when_construct_then_split_into_primes(self):
        # Act
        result = Radical(1, {4: Fraction(1, 2)})
        mixed = Radical(-1, {12: Fraction(1, 2), 3: Fraction(-1, 2)})

        # Assert
        self.assertEqual(result, Radical(1, {2: Fraction(1)}))
        self.assertTrue(result.is_rational())
        self.assertEqual(result.rational_value(), Fraction(2))
        self.assertEqual(mixed, Radical(-1, {2: Fraction(1)}))
        self.assertEqual(Radical(1, {6: Fraction(1, 3)}).items(), ((2, Fraction(1, 3)), (3, Fraction(1, 3))))
