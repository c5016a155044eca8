import logging
from typing import Annotated

from fastapi import APIRouter, Depends, Query

from app.api.vm.api_response import response_fail_status_codes
from app.conf.app_settings import server_settings
from app.conf.dependencies import get_finite_field_service
from app.schema.finite_field_dto import FieldTowerReport
from app.service.finite_field_service import FiniteFieldService

_resource = "finite-field"
_path = f"{server_settings.CONTEXT_PATH}/{_resource}"
_log = logging.getLogger(__name__)

router = APIRouter(prefix=_path, tags=[_resource], responses=response_fail_status_codes)


@router.get(path="/tower", operation_id="construct_independent_set",
            summary="Tower constants and the independent set indexed by the divisors of m",
            response_model=FieldTowerReport)
def tower(
        p: Annotated[int, Query(ge=2, le=101)],
        u: Annotated[int, Query(ge=1, le=8)],
        v: Annotated[int, Query(ge=1, le=16)],
        verify: Annotated[bool, Query()] = False,
        service: FiniteFieldService = Depends(get_finite_field_service),
) -> FieldTowerReport:
    _log.debug(f"FiniteField API tower p={p} u={u} v={v} verify={verify}")
    return service.tower_report(p, u, v, verify=verify)
