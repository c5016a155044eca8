import logging
import time

from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware

_log = logging.getLogger(__name__)


class RequestLogMiddleware(BaseHTTPMiddleware):
    """Logs method, path, status and elapsed milliseconds of every request."""

    async def dispatch(self, request: Request, call_next):
        started = time.perf_counter()
        response = await call_next(request)
        elapsed = (time.perf_counter() - started) * 1000
        _log.info(f"{request.method} {request.url.path} -> {response.status_code} in {elapsed:.1f} ms")
        return response
