import logging
from fractions import Fraction
from typing import Annotated

from fastapi import APIRouter, Body, Depends, Path, status

from app.api.vm.api_response import response_fail_status_codes
from app.conf.app_settings import server_settings
from app.conf.dependencies import get_radical_service
from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.radical_dto import (DegreeReport, IndependenceCertificate, PositiveSumRequest, PositiveSumResult,
                                    RadicalListRequest, RelationRequest, RelationResult, SierpinskiDegree,
                                    ThetaMembership)
from app.service.radical_service import RadicalService

_resource = "radicals"
_path = f"{server_settings.CONTEXT_PATH}/{_resource}"
_log = logging.getLogger(__name__)

router = APIRouter(prefix=_path, tags=[_resource], responses=response_fail_status_codes)


def _parse(service: RadicalService, request: RadicalListRequest):
    return [service.parse_radical(text) for text in request.elements]


@router.post(
    path="/certificate",
    operation_id="independence_certificate",
    summary="Pairwise independence certificate",
    response_model=IndependenceCertificate,
    status_code=status.HTTP_200_OK,
)
def certificate(
        request: Annotated[RadicalListRequest, Body(...)],
        service: RadicalService = Depends(get_radical_service),
) -> IndependenceCertificate:
    """Linear independence over Q of real radicals, decided from the pairwise ratios."""
    _log.debug(f"Radical API certificate for {request.elements}")
    return service.independence_certificate(_parse(service, request))


@router.post(path="/theta", operation_id="theta_membership", summary="Pairwise independent root set membership",
             response_model=ThetaMembership)
def theta(
        request: Annotated[RadicalListRequest, Body(...)],
        service: RadicalService = Depends(get_radical_service),
) -> ThetaMembership:
    return service.theta_membership(_parse(service, request))


@router.post(path="/degree", operation_id="degree_report", summary="Field degree of the generated extension",
             response_model=DegreeReport)
def degree(
        request: Annotated[RadicalListRequest, Body(...)],
        service: RadicalService = Depends(get_radical_service),
) -> DegreeReport:
    return service.degree_report(_parse(service, request))


@router.post(path="/monomial-basis", operation_id="monomial_basis", summary="Monomial basis of the extension",
             response_model=list[str])
def monomial_basis(
        request: Annotated[RadicalListRequest, Body(...)],
        service: RadicalService = Depends(get_radical_service),
) -> list[str]:
    return [str(b) for b in service.monomial_basis(_parse(service, request))]


@router.post(path="/positive-sum", operation_id="positive_sum_rationality", summary="Rationality of a positive sum",
             response_model=PositiveSumResult)
def positive_sum(
        request: Annotated[PositiveSumRequest, Body(...)],
        service: RadicalService = Depends(get_radical_service),
) -> PositiveSumResult:
    try:
        terms = [(Fraction(t.coefficient), service.parse_radical(t.radical)) for t in request.terms]
    except (ValueError, ZeroDivisionError) as e:
        raise BusinessException(ErrorCodes.INVALID_INPUT, f"bad coefficient: {e}") from e
    return service.positive_sum_rationality(terms)


@router.post(path="/relation", operation_id="numeric_relation_search", summary="Bounded integer relation search",
             response_model=RelationResult)
def relation(
        request: Annotated[RelationRequest, Body(...)],
        service: RadicalService = Depends(get_radical_service),
) -> RelationResult:
    if len(request.elements) > 4:
        raise BusinessException(ErrorCodes.INVALID_INPUT, "relation search over HTTP is limited to 4 radicals")
    found = service.numeric_relation_search(_parse(service, request), request.coeff_bound, request.precision_bits)
    return RelationResult(elements=request.elements, coeff_bound=request.coeff_bound, relation=found)


@router.get(path="/sierpinski/{n}", operation_id="sierpinski_degree", summary="Degree of Q(2^(1/2), ..., n^(1/n))",
            response_model=SierpinskiDegree)
def sierpinski(
        n: Annotated[int, Path(ge=2, le=500)],
        service: RadicalService = Depends(get_radical_service),
) -> SierpinskiDegree:
    return SierpinskiDegree(n=n, degree=service.sierpinski_degree(n))
