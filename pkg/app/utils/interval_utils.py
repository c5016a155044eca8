"""
Certified interval arithmetic on rational endpoints.

Real radicals are enclosed by integer k-th root extraction at a binary scale 2^bits: the
floor root gives the lower endpoint, floor + 1 the upper one, exact roots give a point.
Doubling the scale yields nested intervals.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import gmpy2

from app.entity.radical import Radical
from app.errors.business_exception import BusinessException, ErrorCodes


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise BusinessException(ErrorCodes.INTERNAL_SERVER_ERROR, f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value) -> "Interval":
        return cls(Fraction(value), Fraction(value))

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def scale(self, c) -> "Interval":
        c = Fraction(c)
        return Interval(self.lo * c, self.hi * c) if c >= 0 else Interval(self.hi * c, self.lo * c)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def abs_upper(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def abs_lower(self) -> Fraction:
        return Fraction(0) if self.contains_zero() else min(abs(self.lo), abs(self.hi))

    def is_inside(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi


@dataclass(frozen=True)
class RadicalTerm:
    """The real number sign * base ** (1/k)."""
    base: int
    k: int
    sign: int = 1


@dataclass(frozen=True)
class CertifiedValue:
    interval: Interval
    precision_bits: int


def root_interval(num: int, den: int, k: int, bits: int) -> Interval:
    """Enclosure of (num/den) ** (1/k) for num >= 0, den > 0, with width at most 2^-bits."""
    scale = 1 << bits
    shifted, remainder = divmod(num << (k * bits), den)
    root, exact = gmpy2.iroot(gmpy2.mpz(shifted), k)
    root = int(root)
    if exact and remainder == 0:
        return Interval.point(Fraction(root, scale))
    return Interval(Fraction(root, scale), Fraction(root + 1, scale))


def term_interval(term: RadicalTerm, bits: int) -> Interval:
    enclosure = root_interval(term.base, 1, term.k, bits)
    return -enclosure if term.sign < 0 else enclosure


def radical_interval(radical: Radical, bits: int) -> Interval:
    power = abs(radical.power_value())
    enclosure = root_interval(power.numerator, power.denominator, radical.root_degree(), bits)
    return -enclosure if radical.sign < 0 else enclosure


def linear_form_interval(coefficients: Sequence[int | Fraction], radicals: Sequence[Radical], bits: int) -> Interval:
    total = Interval.point(0)
    for c, radical in zip(coefficients, radicals):
        if c:
            total = total + radical_interval(radical, bits).scale(c)
    return total


def sum_interval(terms: Sequence[RadicalTerm], bits: int) -> Interval:
    total = Interval.point(0)
    for term in terms:
        total = total + term_interval(term, bits)
    return total


def eval_radical_sum(terms: Sequence[RadicalTerm], target_width: Fraction, start_bits: int = 64,
                     max_bits: int = 1 << 14) -> CertifiedValue:
    """
    Enclose sum(sign * base ** (1/k)) in an interval narrower than target_width.

    Precision starts at start_bits and doubles until the width bound is met.
    """
    if target_width <= 0:
        raise BusinessException(ErrorCodes.INVALID_INPUT, f"target width must be positive, got {target_width}")
    for term in terms:
        if term.base < 1 or term.k < 2:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"invalid radical term {term}")
    bits = start_bits
    while bits <= max_bits:
        interval = sum_interval(terms, bits)
        if interval.width < target_width:
            return CertifiedValue(interval=interval, precision_bits=bits)
        bits *= 2
    raise BusinessException(ErrorCodes.PRECISION_EXHAUSTED, f"width {target_width} not reached within {max_bits} bits")


def certify_nonzero(terms: Sequence[RadicalTerm], start_bits: int = 64, max_bits: int = 1 << 14) -> CertifiedValue:
    """Refine until the enclosure excludes 0 and is narrower than a tenth of its distance to 0."""
    bits = start_bits
    while bits <= max_bits:
        interval = sum_interval(terms, bits)
        if not interval.contains_zero() and interval.width * 10 < interval.abs_lower():
            return CertifiedValue(interval=interval, precision_bits=bits)
        bits *= 2
    raise BusinessException(ErrorCodes.PRECISION_EXHAUSTED, f"could not separate {terms} from 0 within {max_bits} bits")
