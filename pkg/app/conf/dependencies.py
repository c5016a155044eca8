from app.service.cyclotomic_service import CyclotomicService, cyclotomic_service
from app.service.finite_field_service import FiniteFieldService, finite_field_service
from app.service.orbit_service import OrbitService, orbit_service
from app.service.radical_service import RadicalService, radical_service
from app.service.search_service import SearchService, search_service


async def get_radical_service() -> RadicalService:
    return radical_service


async def get_orbit_service() -> OrbitService:
    return orbit_service


async def get_cyclotomic_service() -> CyclotomicService:
    return cyclotomic_service


async def get_finite_field_service() -> FiniteFieldService:
    return finite_field_service


async def get_search_service() -> SearchService:
    return search_service
