from fractions import Fraction
from math import lcm, prod
from typing import Iterable, Mapping

from app.errors.business_exception import BusinessException, ErrorCodes
from app.service.number_core_service import number_core_service


class Radical:
    """
    A nonzero real radical sign * prod(p ** e_p) kept in canonical form.

    The exponent map holds primes with nonzero reduced rational exponents, sorted by prime.
    Composite keys are split into their prime factors on construction.
    Zero is not representable. Instances are immutable and hashable.
    """

    __slots__ = ("_sign", "_exponents")

    def __init__(self, sign: int = 1, exponents: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]] = ()):
        if sign not in (1, -1):
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"Radical sign must be +1 or -1, got {sign}")
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: dict[int, Fraction] = {}
        for p, e in items:
            if p < 2:
                raise BusinessException(ErrorCodes.INVALID_INPUT, f"Radical base must be >= 2, got {p}")
            for q, multiplicity in number_core_service.factor_dict(p).items():
                merged[q] = merged.get(q, Fraction(0)) + multiplicity * Fraction(e)
        self._sign = sign
        self._exponents = tuple(sorted((p, e) for p, e in merged.items() if e != 0))

    @classmethod
    def one(cls) -> "Radical":
        return cls(1, ())

    @property
    def sign(self) -> int:
        return self._sign

    @property
    def exponents(self) -> dict[int, Fraction]:
        return dict(self._exponents)

    def items(self) -> tuple[tuple[int, Fraction], ...]:
        return self._exponents

    def primes(self) -> list[int]:
        return [p for p, _ in self._exponents]

    def is_rational(self) -> bool:
        return all(e.denominator == 1 for _, e in self._exponents)

    def root_degree(self) -> int:
        """Minimal n with self ** n rational: lcm of the exponent denominators."""
        return lcm(1, *(e.denominator for _, e in self._exponents))

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise BusinessException(ErrorCodes.INVALID_STATE, f"{self} is not rational")
        value = Fraction(1)
        for p, e in self._exponents:
            value *= Fraction(p) ** int(e)
        return self._sign * value

    def power_value(self) -> Fraction:
        """The rational number self ** root_degree()."""
        return (self ** self.root_degree()).rational_value()

    def exponent_vector(self, primes: list[int]) -> list[Fraction]:
        exponents = self.exponents
        return [exponents.get(p, Fraction(0)) for p in primes]

    def __float__(self) -> float:
        return self._sign * prod(float(p) ** float(e) for p, e in self._exponents)

    def __mul__(self, other: "Radical") -> "Radical":
        return Radical(self._sign * other._sign, self._exponents + other._exponents)

    def __truediv__(self, other: "Radical") -> "Radical":
        return Radical(self._sign * other._sign, self._exponents + tuple((p, -e) for p, e in other._exponents))

    def __pow__(self, k: int) -> "Radical":
        if k == 0:
            return Radical.one()
        sign = -1 if self._sign < 0 and k % 2 else 1
        return Radical(sign, tuple((p, e * k) for p, e in self._exponents))

    def __neg__(self) -> "Radical":
        return Radical(-self._sign, self._exponents)

    def __abs__(self) -> "Radical":
        return Radical(1, self._exponents)

    def __eq__(self, other) -> bool:
        return isinstance(other, Radical) and self._sign == other._sign and self._exponents == other._exponents

    def __hash__(self) -> int:
        return hash((self._sign, self._exponents))

    def __lt__(self, other: "Radical") -> bool:
        return (self._exponents, self._sign) < (other._exponents, other._sign)

    def __str__(self) -> str:
        body = "*".join(f"{p}^({e.numerator}/{e.denominator})" for p, e in self._exponents) or "1"
        return f"-{body}" if self._sign < 0 else body

    def __repr__(self) -> str:
        return f"Radical({self})"


class RadicalSet:
    """At least two pairwise distinct canonical radicals, kept in input order."""

    __slots__ = ("_elements",)

    def __init__(self, elements: Iterable[Radical]):
        items = tuple(elements)
        if len(items) < 2:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"RadicalSet needs at least 2 elements, got {len(items)}")
        seen = set()
        for item in items:
            if item in seen:
                raise BusinessException(ErrorCodes.INVALID_INPUT, f"RadicalSet element repeated: {item}")
            seen.add(item)
        self._elements = items

    @property
    def elements(self) -> tuple[Radical, ...]:
        return self._elements

    def __iter__(self):
        return iter(self._elements)

    def __len__(self) -> int:
        return len(self._elements)
