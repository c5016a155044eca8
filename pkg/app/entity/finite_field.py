import dataclasses
from dataclasses import dataclass
from typing import Iterable

from app.errors.business_exception import BusinessException, ErrorCodes
from app.utils.poly_utils import gf_mul, gf_mod, index_to_coeffs


@dataclass(frozen=True)
class GaloisField:
    """GF(p^v) realized as GF(p)[x] modulo a monic irreducible of degree v."""
    p: int
    modulus: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p ** self.degree

    def element(self, coeffs: Iterable[int]) -> "FqElement":
        reduced = gf_mod(list(coeffs), list(self.modulus), self.p)
        return FqElement(self, tuple(reduced) + (0,) * (self.degree - len(reduced)))

    def zero(self) -> "FqElement":
        return FqElement(self, (0,) * self.degree)

    def one(self) -> "FqElement":
        return self.element([1])

    def from_index(self, index: int) -> "FqElement":
        """Element whose coefficients are the base-p digits of index, constant term first."""
        return FqElement(self, tuple(index_to_coeffs(index, self.p, self.degree)))


@dataclass(frozen=True)
class FqElement:
    """A coefficient vector of length v over GF(p); arithmetic is modulo field.modulus."""
    field: GaloisField = dataclasses.field(repr=False)
    coeffs: tuple[int, ...]

    def _check(self, other: "FqElement"):
        if self.field != other.field:
            raise BusinessException(ErrorCodes.INVALID_INPUT, "elements belong to different fields")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def index(self) -> int:
        return sum(c * self.field.p ** i for i, c in enumerate(self.coeffs))

    def __add__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        p = self.field.p
        return FqElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        p = self.field.p
        return FqElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FqElement":
        p = self.field.p
        return FqElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        product = gf_mul(list(self.coeffs), list(other.coeffs), self.field.p)
        return self.field.element(product)

    def scale(self, c: int) -> "FqElement":
        p = self.field.p
        return FqElement(self.field, tuple(c * a % p for a in self.coeffs))

    def __pow__(self, e: int) -> "FqElement":
        if e < 0:
            return self.inverse() ** -e
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "FqElement":
        if self.is_zero():
            raise BusinessException(ErrorCodes.INVALID_INPUT, "zero has no inverse")
        return self ** (self.field.order - 2)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class FieldTower:
    """
    GF(p^u) inside GF(p^v) with a certified generator g of GF(p^v)*.

    m = p^u - 1, n = p^v - 1, l = n / m; the subfield is {0} together with the powers of g^l.
    """
    p: int
    u: int
    v: int
    field: GaloisField
    generator: FqElement
    n_factors: tuple[tuple[int, int], ...] = ()

    @property
    def modulus(self) -> tuple[int, ...]:
        return self.field.modulus

    @property
    def m(self) -> int:
        return self.p ** self.u - 1

    @property
    def n(self) -> int:
        return self.p ** self.v - 1

    @property
    def l(self) -> int:  # noqa: E743
        return self.n // self.m

    @property
    def subfield_generator(self) -> FqElement:
        return self.generator ** self.l

    @property
    def subfield_order(self) -> int:
        return self.p ** self.u
