# CORS for browser clients of the read-only endpoints
from pydantic_settings import BaseSettings


class CorsSettings(BaseSettings):
    """Every endpoint is a pure computation, so the defaults admit any origin without credentials."""

    ALLOWED_ORIGINS: list[str] = ["*"]
    ALLOWED_METHODS: list[str] = ["GET", "POST", "OPTIONS"]
    ALLOWED_HEADERS: list[str] = ["*"]
    ALLOW_CREDENTIALS: bool = False

    class Config:
        env_prefix = "CORS_"
        env_file = ".env.dev"
        env_file_encoding = "utf-8"
        case_sensitive = True
