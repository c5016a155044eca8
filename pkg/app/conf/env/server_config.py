# HTTP surface of the radical toolkit
from pydantic import Field
from pydantic_settings import BaseSettings


class ServerSettings(BaseSettings):
    """uvicorn binding and the prefix every router mounts under."""

    HOST: str = "0.0.0.0"
    PORT: int = 8000
    RELOAD: bool = Field(default=True, description="uvicorn auto-reload; main_prod.py ignores it")
    WORKERS: int = Field(default=1, ge=1, description="uvicorn worker processes for main_prod.py")
    CONTEXT_PATH: str = "/api/v1"

    class Config:
        env_prefix = "SERVER_"
        env_file = ".env.dev"
        env_file_encoding = "utf-8"
        case_sensitive = True
