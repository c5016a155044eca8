import logging
from typing import Annotated

from fastapi import APIRouter, Depends, Query

from app.api.vm.api_response import response_fail_status_codes
from app.conf.app_settings import server_settings
from app.conf.dependencies import get_orbit_service
from app.schema.orbit_dto import OrbitClosure, OrbitPath
from app.service.orbit_service import OrbitService

_resource = "orbit"
_path = f"{server_settings.CONTEXT_PATH}/{_resource}"
_log = logging.getLogger(__name__)

router = APIRouter(prefix=_path, tags=[_resource], responses=response_fail_status_codes)


@router.get(path="/closure", operation_id="orbit_closure", summary="Orbit of 0 in Z_n", response_model=OrbitClosure)
def closure(
        n: Annotated[int, Query(ge=1, le=100_000)],
        d: Annotated[int, Query()],
        service: OrbitService = Depends(get_orbit_service),
) -> OrbitClosure:
    return service.orbit_closure(n, d)


@router.get(path="/path", operation_id="constructive_path", summary="Word of phi/inv steps from 0 to target",
            response_model=OrbitPath)
def path(
        n: Annotated[int, Query(ge=1, le=50)],
        d: Annotated[int, Query()],
        target: Annotated[int, Query()],
        service: OrbitService = Depends(get_orbit_service),
) -> OrbitPath:
    return service.constructive_path(n, d, target)
