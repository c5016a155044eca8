import hashlib
import json
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.conf.app_settings import search_settings
from app.schema.radical_dto import IndependenceCertificate


class SearchConfig(BaseModel):
    """Parameters of a near-miss scan over x^(1/m) + y^(1/n) - z^(1/r)."""
    x_max: int = Field(ge=1)
    y_max: int = Field(ge=1)
    exp_min: int = Field(default=2, ge=2)
    exp_max: int = Field(default=10, ge=2)
    allow_mixed_exponents: bool = False
    top_k: int = Field(default=10, ge=1)
    checkpoint_path: str | None = None
    worker_count: int = Field(default_factory=lambda: search_settings.WORKERS, ge=1)
    pool_size: int = Field(default_factory=lambda: search_settings.POOL_SIZE, ge=1)

    model_config = ConfigDict(
        frozen=True,
        title="Search Config",
        json_schema_extra={"example": {"x_max": 1000, "y_max": 1000, "exp_min": 2, "exp_max": 10}},
    )

    @model_validator(mode="after")
    def check_exponents(self):
        if self.exp_min > self.exp_max:
            raise ValueError(f"exp_min={self.exp_min} exceeds exp_max={self.exp_max}")
        return self

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(range(self.exp_min, self.exp_max + 1))

    def config_hash(self) -> str:
        """Digest of the fields that determine the scan; workers, top_k and the path do not."""
        key = {
            "x_max": self.x_max, "y_max": self.y_max, "exp_min": self.exp_min, "exp_max": self.exp_max,
            "mixed": self.allow_mixed_exponents, "pool_size": self.pool_size,
        }
        return hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()


class NearMiss(BaseModel):
    """A certified enclosure [eps_lo, eps_hi] of x^(1/m) + y^(1/n) - z^(1/r), excluding 0."""
    x: int
    y: int
    z: int
    m: int
    n: int
    r: int
    eps_lo: str
    eps_hi: str
    precision_bits: int

    @property
    def eps_bounds(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.eps_lo), Fraction(self.eps_hi)

    @property
    def abs_upper(self) -> Fraction:
        lo, hi = self.eps_bounds
        return max(abs(lo), abs(hi))

    def sort_key(self) -> tuple:
        return self.abs_upper, self.x, self.y, self.z, self.m, self.n, self.r


class GuardCertificate(BaseModel):
    x: int
    m: int
    y: int
    n: int
    z: int
    r: int
    nonzero: bool
    independence: IndependenceCertificate
    classes: int = Field(description="Number of pairwise-independent classes after collapsing rational ratios")
    eps_lo: str
    eps_hi: str
    precision_bits: int


class CheckpointState(BaseModel):
    """Completed (x, m) shards and the merged prefilter pool as (|eps|, x, y, z, m, n, r) rows."""
    config_hash: str
    completed_shards: list[tuple[int, int]] = []
    pool: list[tuple[float, int, int, int, int, int, int]] = []
    candidates_scanned: int = 0


class SearchReport(BaseModel):
    results: list[NearMiss] = []
    shards_total: int = 0
    shards_completed: int = 0
    candidates_scanned: int = 0
    pool_boundary: float | None = Field(default=None, description="Float |eps| of the last pooled candidate")
    pool_margin_ok: bool = True
    completed: bool = True
