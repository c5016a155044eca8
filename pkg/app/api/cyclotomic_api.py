import logging
from typing import Annotated

from fastapi import APIRouter, Body, Depends, Path, Query

from app.api.vm.api_response import response_fail_status_codes
from app.conf.app_settings import server_settings
from app.conf.dependencies import get_cyclotomic_service
from app.schema.cyclotomic_dto import MannReport, VandermondeReport, VanishingSum
from app.service.cyclotomic_service import CyclotomicService

_resource = "cyclotomic"
_path = f"{server_settings.CONTEXT_PATH}/{_resource}"
_log = logging.getLogger(__name__)

router = APIRouter(prefix=_path, tags=[_resource], responses=response_fail_status_codes)


@router.get(path="/poly/{n}", operation_id="cyclotomic_poly", summary="n-th cyclotomic polynomial, constant term first",
            response_model=list[int])
def poly(
        n: Annotated[int, Path(ge=1, le=2_000)],
        service: CyclotomicService = Depends(get_cyclotomic_service),
) -> list[int]:
    return service.cyclotomic_poly(n)


@router.get(path="/vandermonde/{n}", operation_id="vandermonde_check", summary="Exact DFT identities",
            response_model=VandermondeReport)
def vandermonde(
        n: Annotated[int, Path(ge=1, le=30)],
        service: CyclotomicService = Depends(get_cyclotomic_service),
) -> VandermondeReport:
    return service.vandermonde_report(n)


@router.post(path="/mann", operation_id="mann_condition_check", summary="Divisibility bound of a minimal vanishing sum",
             response_model=MannReport)
def mann(
        vanishing_sum: Annotated[VanishingSum, Body(...)],
        service: CyclotomicService = Depends(get_cyclotomic_service),
) -> MannReport:
    return service.mann_report(vanishing_sum)


@router.get(path="/vanishing-sums", operation_id="enumerate_vanishing_sums", summary="Minimal vanishing sums",
            response_model=list[VanishingSum])
def vanishing_sums(
        n: Annotated[int, Query(ge=1, le=30)],
        coeff_bound: Annotated[int, Query(ge=1, le=2)] = 1,
        max_terms: Annotated[int, Query(ge=1, le=6)] = 3,
        service: CyclotomicService = Depends(get_cyclotomic_service),
) -> list[VanishingSum]:
    return service.enumerate_vanishing_sums(n, coeff_bound, min(max_terms, n))
