import itertools
import logging
from fractions import Fraction
from math import gcd
from typing import Iterable

from app.entity.cyclo_element import CycloElement
from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.cyclotomic_dto import MannReport, VandermondeReport, VanishingSum
from app.service.number_core_service import NumberCoreService, number_core_service
from app.utils import poly_utils
from app.utils.lattice_utils import rational_rref

_log = logging.getLogger(__name__)

Matrix = list[list[CycloElement]]


class CyclotomicService:
    """
    Exact arithmetic in Q(zeta_n): the Fourier matrix identities and the divisibility bound on
    minimal vanishing sums of roots of unity.

    Attributes:
    number_core: NumberCoreService
        Supplies primorials for the divisibility bound
    """

    def __init__(self, number_core: NumberCoreService = number_core_service):
        self.number_core = number_core

    @staticmethod
    def cyclotomic_poly(n: int) -> list[int]:
        if n < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"cyclotomic polynomial needs n >= 1, got {n}")
        return list(poly_utils.cyclotomic_poly(n))

    # region field arithmetic

    @staticmethod
    def zeta_pow(n: int, k: int) -> CycloElement:
        return CycloElement.zeta_pow(n, k)

    @staticmethod
    def cyclo_add(a: CycloElement, b: CycloElement) -> CycloElement:
        return a + b

    @staticmethod
    def cyclo_mul(a: CycloElement, b: CycloElement) -> CycloElement:
        return a * b

    @staticmethod
    def cyclo_inv(a: CycloElement) -> CycloElement:
        return a.inverse()

    # endregion field arithmetic

    # region matrices

    @staticmethod
    def dft_matrix(n: int) -> Matrix:
        """Rows i = 1..n, columns j = 1..n, entry zeta^(j(i-1))."""
        return [[CycloElement.zeta_pow(n, j * (i - 1)) for j in range(1, n + 1)] for i in range(1, n + 1)]

    @staticmethod
    def conjugate_transpose(matrix: Matrix) -> Matrix:
        size = len(matrix)
        return [[matrix[j][i].conjugate() for j in range(size)] for i in range(size)]

    @staticmethod
    def mat_mul(left: Matrix, right: Matrix) -> Matrix:
        n = left[0][0].n
        size = len(left)
        product = []
        for i in range(size):
            row = []
            for j in range(size):
                # accumulate unreduced products, reduce once per entry
                total: list = []
                for k in range(size):
                    term = poly_utils.poly_mul(list(left[i][k].coeffs), list(right[k][j].coeffs))
                    total = [a + b for a, b in itertools.zip_longest(total, term, fillvalue=0)]
                row.append(CycloElement(n, total))
            product.append(row)
        return product

    @staticmethod
    def determinant(matrix: Matrix) -> CycloElement:
        """Fraction-free (Bareiss) elimination; each step divides exactly by the previous pivot."""
        size = len(matrix)
        n = matrix[0][0].n
        m = [list(row) for row in matrix]
        sign = 1
        previous = CycloElement.constant(n, 1)
        for k in range(size - 1):
            if m[k][k].is_zero():
                swap = next((i for i in range(k + 1, size) if not m[i][k].is_zero()), None)
                if swap is None:
                    return CycloElement.zero(n)
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            previous_inverse = previous.inverse()
            for i in range(k + 1, size):
                for j in range(k + 1, size):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) * previous_inverse
            previous = m[k][k]
        det = m[size - 1][size - 1]
        return -det if sign < 0 else det

    def dft_unitarity_check(self, n: int) -> bool:
        if n < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"DFT size must be >= 1, got {n}")
        v = self.dft_matrix(n)
        product = self.mat_mul(v, self.conjugate_transpose(v))
        expected_diagonal = CycloElement.constant(n, n)
        for i, row in enumerate(product):
            for j, entry in enumerate(row):
                if entry != (expected_diagonal if i == j else CycloElement.zero(n)):
                    _log.debug(f"CyclotomicService DFT product entry ({i}, {j}) = {entry}")
                    return False
        return True

    def vandermonde_det_norm(self, n: int) -> Fraction:
        if n < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"Vandermonde size must be >= 1, got {n}")
        det = self.determinant(self.dft_matrix(n))
        return (det * det.conjugate()).rational_value()

    def vandermonde_det_identity(self, n: int) -> bool:
        return self.vandermonde_det_norm(n) == n ** n

    def vandermonde_report(self, n: int) -> VandermondeReport:
        norm = self.vandermonde_det_norm(n)
        _log.debug(f"CyclotomicService Vandermonde n={n}: |det|^2 = {norm}")
        return VandermondeReport(n=n, unitary=self.dft_unitarity_check(n), det_norm=int(norm),
                                 identity_holds=norm == n ** n)

    # endregion matrices

    # region vanishing sums

    @staticmethod
    def evaluate(s: VanishingSum, exponents: Iterable[int] | None = None) -> CycloElement:
        chosen = None if exponents is None else set(exponents)
        total = CycloElement.zero(s.n)
        for c, e in s.terms:
            if chosen is None or e in chosen:
                total = total + CycloElement.zeta_pow(s.n, e).scale(c)
        return total

    def subsum_vanishes(self, s: VanishingSum, subset: Iterable[int]) -> bool:
        """subset names terms by their exponents; the empty subsum vanishes."""
        subset = set(subset)
        unknown = subset - set(s.exponents)
        if unknown:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"exponents {sorted(unknown)} are not terms of {s}")
        return self.evaluate(s, subset).is_zero()

    def has_vanishing_proper_subsum(self, s: VanishingSum) -> bool:
        exponents = s.exponents
        for size in range(2, len(exponents)):
            for subset in itertools.combinations(exponents, size):
                if self.subsum_vanishes(s, subset):
                    return True
        return False

    def mann_report(self, s: VanishingSum) -> MannReport:
        if 0 not in s.exponents:
            raise BusinessException(ErrorCodes.HYPOTHESIS_VIOLATION, f"{s} has no term with exponent 0")
        if not self.evaluate(s).is_zero():
            _log.error(f"CyclotomicService {s} does not vanish")
            raise BusinessException(ErrorCodes.HYPOTHESIS_VIOLATION, f"{s} does not vanish")
        if self.has_vanishing_proper_subsum(s):
            _log.error(f"CyclotomicService {s} has a vanishing proper subsum")
            raise BusinessException(ErrorCodes.HYPOTHESIS_VIOLATION, f"{s} has a vanishing proper subsum")
        k = len(s.terms)
        reduced_order = s.n // gcd(s.n, *s.exponents)
        primorial = self.number_core.primorial_upto(k)
        return MannReport(vanishing_sum=s, term_count=k, reduced_order=reduced_order, primorial=primorial,
                          holds=primorial % reduced_order == 0)

    def mann_condition_check(self, s: VanishingSum) -> bool:
        return self.mann_report(s).holds

    def _vanishing_on(self, n: int, exponents: tuple[int, ...], coeff_bound: int) -> list[VanishingSum]:
        """Minimal vanishing sums supported exactly on exponents, positive at exponent 0."""
        columns = [CycloElement.zeta_pow(n, e).coeffs for e in exponents]
        rows = [[column[r] for column in columns] for r in range(len(columns[0]))]
        reduced, pivots = rational_rref(rows)
        free = [j for j in range(len(exponents)) if j not in pivots]
        if not free:
            return []
        span = [c for c in range(-coeff_bound, coeff_bound + 1) if c]
        found = []
        for values in itertools.product(span, repeat=len(free)):
            solution = [Fraction(0)] * len(exponents)
            for j, value in zip(free, values):
                solution[j] = Fraction(value)
            for row, p in zip(reduced, pivots):
                solution[p] = -sum(row[j] * solution[j] for j in free)
            if solution[0] <= 0:
                continue
            if any(x == 0 or x.denominator != 1 or abs(x) > coeff_bound for x in solution):
                continue
            candidate = VanishingSum(n=n, terms=[(int(c), e) for c, e in zip(solution, exponents)])
            # a one-dimensional kernel has no vector with smaller support
            if len(free) > 1 and self.has_vanishing_proper_subsum(candidate):
                continue
            found.append(candidate)
        return found

    def enumerate_vanishing_sums(self, n: int, coeff_bound: int, max_terms: int) -> list[VanishingSum]:
        """
        All minimal vanishing sums with a positive exponent-0 term, distinct exponents,
        coefficients in [-coeff_bound, coeff_bound] minus 0 and at most max_terms terms.
        """
        if n < 1 or coeff_bound < 1 or not 1 <= max_terms <= n:
            raise BusinessException(ErrorCodes.INVALID_INPUT,
                                    f"need n >= 1, coeff_bound >= 1, 1 <= max_terms <= n; got {n}, {coeff_bound}, {max_terms}")
        results: list[VanishingSum] = []
        for size in range(2, max_terms + 1):
            for rest in itertools.combinations(range(1, n), size - 1):
                results.extend(self._vanishing_on(n, (0, *rest), coeff_bound))
        results.sort(key=lambda s: (len(s.terms), s.exponents, [c for c, _ in s.terms]))
        _log.debug(f"CyclotomicService n={n} bound={coeff_bound} terms<={max_terms}: {len(results)} vanishing sums")
        return results

    # endregion vanishing sums


cyclotomic_service = CyclotomicService()
