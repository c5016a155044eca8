from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from app.schema.verdict import Rationality, Verdict


def fraction_text(value: Fraction) -> str:
    """Serialize a rational as the decimal string numerator/denominator."""
    return f"{value.numerator}/{value.denominator}"


class PairWitness(BaseModel):
    """Outcome of the pairwise test for one unordered pair of a radical set."""
    left: str
    right: str
    independent: bool
    prime: int | None = Field(default=None, description="Prime with a non-integral exponent in left/right")
    exponent: str | None = Field(default=None, description="That non-integral exponent")
    ratio: str | None = Field(default=None, description="Rational value of left/right when dependent")


class ThetaMembership(BaseModel):
    member: bool
    size: int
    failing_pair: tuple[str, str] | None = None
    reason: str | None = None


class IndependenceCertificate(BaseModel):
    verdict: Verdict
    elements: list[str]
    witnesses: list[PairWitness]

    model_config = ConfigDict(
        title="Independence Certificate",
        json_schema_extra={
            "example": {
                "verdict": "dependent",
                "elements": ["2^(1/2)", "2^(1/2)*3^(1/1)"],
                "witnesses": [{"left": "2^(1/2)", "right": "2^(1/2)*3^(1/1)", "independent": False,
                               "ratio": "1/3"}]
            }
        }
    )


class DegreeReport(BaseModel):
    elements: list[str]
    root_degrees: list[int]
    multiplicative_condition: bool
    lattice_degree: int
    extension_degree: int | None = None


class PositiveSumResult(BaseModel):
    verdict: Rationality
    value: str | None = None


class RadicalListRequest(BaseModel):
    """Radicals in text form, e.g. 433^(1/6) or -2^(1/3)*3^(1/2)."""
    elements: list[str] = Field(..., min_length=1, max_length=64)

    model_config = ConfigDict(
        json_schema_extra={"example": {"elements": ["433^(1/6)", "972^(1/6)", "42089^(1/6)"]}}
    )


class PositiveSumTerm(BaseModel):
    coefficient: str = Field(..., description="Positive rational such as 3 or 2/5")
    radical: str


class PositiveSumRequest(BaseModel):
    terms: list[PositiveSumTerm] = Field(..., min_length=1, max_length=64)


class RelationRequest(RadicalListRequest):
    coeff_bound: int = Field(default=20, ge=1, le=50)
    precision_bits: int = Field(default=256, ge=8, le=1 << 14)


class RelationResult(BaseModel):
    elements: list[str]
    coeff_bound: int
    relation: list[int] | None = Field(default=None, description="Integer coefficients, first nonzero positive")


class SierpinskiDegree(BaseModel):
    n: int
    degree: int
