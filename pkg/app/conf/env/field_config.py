# Finite field configuration from Environment Variables
from pydantic import Field
from pydantic_settings import BaseSettings


class FieldSettings(BaseSettings):
    """
    Finite field settings

    Attributes:
    -----------
    EXHAUSTIVE_LIMIT: int
        Independence is decided by enumerating all (p^u)^|A| coefficient tuples up to this count,
        by a rank computation above it
    """

    EXHAUSTIVE_LIMIT: int = Field(default=10 ** 7, ge=1)

    class Config:
        env_prefix = "FIELD_"
        env_file = ".env.dev"
        env_file_encoding = "utf-8"
        case_sensitive = True
