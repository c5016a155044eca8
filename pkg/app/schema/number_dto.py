from math import prod

from pydantic import BaseModel, ConfigDict, model_validator


class PrimeFactorization(BaseModel):
    """
    Prime factorization of a positive integer as (prime, multiplicity) pairs, primes ascending.
    The empty list represents 1.
    """
    factors: list[tuple[int, int]] = []

    model_config = ConfigDict(
        frozen=True,
        title="Prime Factorization",
        json_schema_extra={"example": {"factors": [[2, 2], [3, 1]]}}
    )

    @model_validator(mode="after")
    def _check_invariants(self):
        previous = 1
        for prime, multiplicity in self.factors:
            if prime <= previous:
                raise ValueError(f"primes must be strictly increasing, got {prime} after {previous}")
            if multiplicity < 1:
                raise ValueError(f"multiplicity of {prime} must be positive")
            previous = prime
        return self

    @property
    def value(self) -> int:
        return prod(p ** e for p, e in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def merge(self, other: "PrimeFactorization") -> "PrimeFactorization":
        """Factorization of the product of the two factored integers."""
        merged = self.as_dict()
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return PrimeFactorization(factors=sorted(merged.items()))
