from enum import Enum

from pydantic import BaseModel, Field


class OrbitStep(str, Enum):
    """phi: x -> 1 + d*x, inv: x -> -x, both on Z_n."""
    phi = "phi"
    inv = "inv"


class OrbitClosure(BaseModel):
    n: int
    d: int
    size: int
    residues: list[int]


class OrbitPath(BaseModel):
    n: int
    d: int = Field(description="Multiplier normalized into [1, n)")
    target: int
    word: list[OrbitStep]
    endpoint: int
