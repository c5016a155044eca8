import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request, status
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from app.api import api_router
from app.conf.app_settings import app_settings, cors_settings, server_settings
from app.errors.business_exception import BusinessException
from app.middleware.request_log_middleware import RequestLogMiddleware

_log = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(_):
    _log.debug("FastAPI Lifespan started")
    yield
    _log.debug("FastAPI Lifespan stopped")


tags_metadata = [
    {
        "name": "radicals",
        "description": "Independence certificates, field degrees and exact zero tests for real radicals."
    },
    {
        "name": "orbit",
        "description": "Orbit of 0 in Z_n under x -> 1 + d*x and x -> -x, with replayable step words."
    },
    {
        "name": "cyclotomic",
        "description": "Exact arithmetic in Q(zeta_n): DFT identities and vanishing sums of roots of unity."
    },
    {
        "name": "finite-field",
        "description": "Towers GF(p^u) in GF(p^v) and independent sets over the subfield."
    },
    {
        "name": "search",
        "description": "Certified near-miss search and the exactness guard for x^(1/m) + y^(1/n) = z^(1/r)."
    }
]

app = FastAPI(
    title=app_settings.APP_NAME,
    summary=app_settings.APP_DESCRIPTION,
    description=app_settings.APP_DESCRIPTION,
    version=app_settings.APP_VERSION,
    docs_url=f"{server_settings.CONTEXT_PATH}/docs",
    redoc_url=f"{server_settings.CONTEXT_PATH}/redoc",
    openapi_url=f"{server_settings.CONTEXT_PATH}/openapi.json",
    lifespan=lifespan,
    openapi_tags=tags_metadata,
    license_info={
        "name": "Apache 2.0",
        "url": "https://www.apache.org/licenses/LICENSE-2.0"
    },
)

# noinspection PyTypeChecker
app.add_middleware(
    CORSMiddleware,
    allow_origins=cors_settings.ALLOWED_ORIGINS,
    allow_credentials=cors_settings.ALLOW_CREDENTIALS,
    allow_methods=cors_settings.ALLOWED_METHODS,
    allow_headers=cors_settings.ALLOWED_HEADERS
)

# noinspection PyTypeChecker
app.add_middleware(RequestLogMiddleware)
app.include_router(api_router)


def write_log(request: Request, exc: BusinessException):
    _log.error(f"BusinessException - Request: {request.method} {request.url.path} failed with {exc.code} {exc.msg}")


@app.exception_handler(BusinessException)
async def business_exception_handler(request: Request, exc: BusinessException):
    write_log(request, exc)
    return JSONResponse(
        status_code=status.HTTP_400_BAD_REQUEST,
        content={"detail": exc.to_detail()},
        headers={"X-Error": f"{status.HTTP_400_BAD_REQUEST}.{exc.code.name}"},
        media_type="application/json",
    )


@app.get(f"{server_settings.CONTEXT_PATH}/health")
async def health():
    return {"status": "UP", "version": app_settings.APP_VERSION}
