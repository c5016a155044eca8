# Near-miss search configuration from Environment Variables
from pydantic import Field
from pydantic_settings import BaseSettings


class SearchSettings(BaseSettings):
    """
    Search harness settings

    Attributes:
    -----------
    POOL_SIZE: int
        Number of prefilter candidates promoted to certified confirmation
    PREFILTER_MARGIN: int
        Safety factor applied to the double-precision error bound at the pool boundary
    START_PRECISION_BITS: int
        First precision tried by the certified evaluator, doubled until the width bound holds
    MAX_PRECISION_BITS: int
        Precision at which the certified evaluator gives up
    WORKERS: int
        Default worker pool size for the shard scan
    CHECKPOINT_EVERY: int
        Completed shards between two checkpoint writes
    API_MAX_BASE: int
        Largest x_max / y_max accepted by the HTTP search endpoint
    API_MAX_EXPONENT: int
        Largest root degree accepted by the HTTP search and guard endpoints
    API_MAX_WORKERS: int
        Largest worker_count accepted by the HTTP search endpoint
    API_MAX_POOL_SIZE: int
        Largest pool_size accepted by the HTTP search endpoint
    API_MAX_TOP_K: int
        Largest top_k accepted by the HTTP search endpoint
    """

    POOL_SIZE: int = Field(default=10_000, ge=1)
    PREFILTER_MARGIN: int = Field(default=1_000, ge=1)
    START_PRECISION_BITS: int = Field(default=64, ge=8)
    MAX_PRECISION_BITS: int = Field(default=1 << 14, ge=64)
    WORKERS: int = Field(default=1, ge=1)
    CHECKPOINT_EVERY: int = Field(default=64, ge=1)
    API_MAX_BASE: int = Field(default=200, ge=2)
    API_MAX_EXPONENT: int = Field(default=12, ge=2)
    API_MAX_WORKERS: int = Field(default=4, ge=1)
    API_MAX_POOL_SIZE: int = Field(default=20_000, ge=1)
    API_MAX_TOP_K: int = Field(default=100, ge=1)

    class Config:
        env_prefix = "SEARCH_"
        env_file = ".env.dev"
        env_file_encoding = "utf-8"
        case_sensitive = True
