from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from app.errors.business_exception import BusinessException, ErrorCodes
from app.utils.poly_utils import cyclotomic_poly, poly_divmod_monic, poly_mul, qpoly_inverse_mod


class CycloElement:
    """
    An element of Q(zeta_n), stored as its coefficient vector in 1, zeta, ..., zeta^(phi(n)-1).

    Coefficients are reduced modulo the n-th cyclotomic polynomial, so equality and zero tests
    are plain coefficient comparisons.
    """

    __slots__ = ("_n", "_coeffs")

    def __init__(self, n: int, coeffs: Iterable = ()):
        if n < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"conductor must be >= 1, got {n}")
        modulus = cyclotomic_poly(n)
        degree = len(modulus) - 1
        _, remainder = poly_divmod_monic([Fraction(c) for c in coeffs], list(modulus))
        self._n = n
        self._coeffs = tuple(remainder) + (Fraction(0),) * (degree - len(remainder))

    @classmethod
    def zero(cls, n: int) -> "CycloElement":
        return cls(n)

    @classmethod
    def constant(cls, n: int, q) -> "CycloElement":
        return cls(n, [Fraction(q)])

    @classmethod
    def zeta_pow(cls, n: int, k: int) -> "CycloElement":
        return _zeta_pow_cached(n, k % n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def rational_value(self) -> Fraction:
        if any(self._coeffs[1:]):
            raise BusinessException(ErrorCodes.INVALID_STATE, f"{self} is not rational")
        return self._coeffs[0]

    def _check(self, other: "CycloElement"):
        if self._n != other._n:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"conductor mismatch: {self._n} vs {other._n}")

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self._n, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self._n, [a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> "CycloElement":
        return CycloElement(self._n, [-a for a in self._coeffs])

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self._n, poly_mul(list(self._coeffs), list(other._coeffs)))

    def scale(self, q) -> "CycloElement":
        q = Fraction(q)
        return CycloElement(self._n, [q * a for a in self._coeffs])

    def inverse(self) -> "CycloElement":
        if self.is_zero():
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"zero has no inverse in Q(zeta_{self._n})")
        return CycloElement(self._n, qpoly_inverse_mod(list(self._coeffs), list(cyclotomic_poly(self._n))))

    def __truediv__(self, other: "CycloElement") -> "CycloElement":
        return self * other.inverse()

    def conjugate(self) -> "CycloElement":
        """Complex conjugation, zeta^k -> zeta^(n-k)."""
        total = CycloElement.zero(self._n)
        for k, c in enumerate(self._coeffs):
            if c:
                total = total + CycloElement.zeta_pow(self._n, -k).scale(c)
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloElement) and self._n == other._n and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._n, self._coeffs))

    def __str__(self) -> str:
        terms = [f"{c}*z^{k}" if k else str(c) for k, c in enumerate(self._coeffs) if c]
        return " + ".join(terms) or "0"

    def __repr__(self) -> str:
        return f"CycloElement(n={self._n}, {self})"


@lru_cache(maxsize=4096)
def _zeta_pow_cached(n: int, k: int) -> CycloElement:
    return CycloElement(n, [0] * k + [1])
