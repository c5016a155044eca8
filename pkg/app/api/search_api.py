import logging
from typing import Annotated

from fastapi import APIRouter, Body, Depends, Query

from app.api.vm.api_response import response_fail_status_codes
from app.conf.app_settings import search_settings, server_settings
from app.conf.dependencies import get_search_service
from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.search_dto import GuardCertificate, SearchConfig, SearchReport
from app.service.search_service import SearchService

_resource = "search"
_path = f"{server_settings.CONTEXT_PATH}/{_resource}"
_log = logging.getLogger(__name__)

router = APIRouter(prefix=_path, tags=[_resource], responses=response_fail_status_codes)


def _check_api_limits(config: SearchConfig) -> None:
    limits = (
        ("exp_max", config.exp_max, search_settings.API_MAX_EXPONENT),
        ("worker_count", config.worker_count, search_settings.API_MAX_WORKERS),
        ("pool_size", config.pool_size, search_settings.API_MAX_POOL_SIZE),
        ("top_k", config.top_k, search_settings.API_MAX_TOP_K),
    )
    for name, value, limit in limits:
        if value > limit:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"{name}={value} exceeds the HTTP limit {limit}")


@router.post(path="", operation_id="near_miss_search", summary="Certified near-miss search on a bounded range",
             response_model=SearchReport)
def search(
        config: Annotated[SearchConfig, Body(...)],
        service: SearchService = Depends(get_search_service),
) -> SearchReport:
    if max(config.x_max, config.y_max) > search_settings.API_MAX_BASE:
        raise BusinessException(ErrorCodes.INVALID_INPUT,
                                f"bases above {search_settings.API_MAX_BASE} are only searchable from the CLI")
    _check_api_limits(config)
    if config.checkpoint_path:
        raise BusinessException(ErrorCodes.INVALID_INPUT, "checkpoints are only available from the CLI")
    return service.run(config)


@router.get(path="/guard", operation_id="exactness_guard", summary="Certify x^(1/m) + y^(1/n) - z^(1/r) != 0",
            response_model=GuardCertificate)
def guard(
        x: Annotated[int, Query()],
        m: Annotated[int, Query(le=search_settings.API_MAX_EXPONENT)],
        y: Annotated[int, Query()],
        n: Annotated[int, Query(le=search_settings.API_MAX_EXPONENT)],
        z: Annotated[int, Query()],
        r: Annotated[int, Query(le=search_settings.API_MAX_EXPONENT)],
        service: SearchService = Depends(get_search_service),
) -> GuardCertificate:
    return service.exactness_guard(x, m, y, n, z, r)
