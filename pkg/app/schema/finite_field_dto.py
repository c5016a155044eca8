from pydantic import BaseModel, Field


class IndependenceCheck(BaseModel):
    independent: bool
    method: str = Field(description="exhaustive, rank or contains-zero")
    combinations_checked: int = 0


class RootIndexEntry(BaseModel):
    """Root-of-unity data of one element: x^root_index is the first power landing in the subfield."""
    element: list[int]
    discrete_log: int
    root_index: int
    coprime_to_p: bool
    divides_m: bool


class ThetaDiagnostics(BaseModel):
    entries: list[RootIndexEntry]
    pairwise_independent: bool
    hypotheses_hold: bool


class FieldTowerReport(BaseModel):
    """Everything ff-construct prints, as one JSON object."""
    p: int
    u: int
    v: int
    m: int
    n: int
    l: int
    w: int | None = Field(default=None, description="l / m when m divides l")
    modulus: list[int]
    generator: list[int]
    exponents: list[int] = []
    elements: list[list[int]] = []
    verification: IndependenceCheck | None = None
