# Logging for the CLI and the HTTP service
from pydantic_settings import BaseSettings


class LoggingSettings(BaseSettings):
    """
    Logging settings

    Attributes:
    -----------
    LOG_HANDLER: list[str]
        Any of console, file; console is used when nothing else is configured
    LOG_FILE: str
        Target of the file handlers, rotated nightly and by size
    QUIET_LOGGERS: list[str]
        Third-party loggers held at WARNING so search progress stays readable
    """

    LOG_LEVEL: str = "INFO"
    LOG_FILE: str = "/tmp/radical_independence.log"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_HANDLER: list[str] = ["console"]
    LOG_BACKUP_COUNT: int = 7
    LOG_MAX_DAYS: int = 7
    LOG_MAX_SIZE: int = 10 * 1024 * 1024
    QUIET_LOGGERS: list[str] = ["asyncio", "uvicorn", "fastapi", "starlette", "httpx", "sympy", "concurrent.futures"]

    class Config:
        env_file = ".env.dev"
        env_file_encoding = "utf-8"
        case_sensitive = True
