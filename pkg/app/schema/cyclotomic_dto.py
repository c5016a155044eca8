from pydantic import BaseModel, ConfigDict, Field, model_validator


class VanishingSum(BaseModel):
    """sum(c * zeta_n^e) over (c, e) in terms, with nonzero integer c and distinct residues e."""
    n: int = Field(ge=1, description="Conductor")
    terms: list[tuple[int, int]] = Field(description="(coefficient, exponent) pairs")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_terms(self):
        exponents = [e for _, e in self.terms]
        if any(c == 0 for c, _ in self.terms):
            raise ValueError("coefficients must be nonzero")
        if any(not 0 <= e < self.n for e in exponents):
            raise ValueError(f"exponents must lie in [0, {self.n})")
        if len(set(exponents)) != len(exponents):
            raise ValueError("exponents must be distinct")
        return self

    @property
    def exponents(self) -> list[int]:
        return [e for _, e in self.terms]

    def __str__(self) -> str:
        return " + ".join(f"{c}*z{self.n}^{e}" for c, e in self.terms)


class MannReport(BaseModel):
    vanishing_sum: VanishingSum
    term_count: int
    reduced_order: int = Field(description="n / gcd(n, exponents)")
    primorial: int
    holds: bool


class VandermondeReport(BaseModel):
    n: int
    unitary: bool
    det_norm: int = Field(description="det(V) * conj(det(V)), a rational integer")
    identity_holds: bool
