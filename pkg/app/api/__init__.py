from fastapi import APIRouter

from .cyclotomic_api import router as cyclotomic_router
from .finite_field_api import router as finite_field_router
from .orbit_api import router as orbit_router
from .radical_api import router as radical_router
from .search_api import router as search_router

api_router = APIRouter()
api_router.include_router(radical_router)
api_router.include_router(orbit_router)
api_router.include_router(cyclotomic_router)
api_router.include_router(finite_field_router)
api_router.include_router(search_router)

__all__ = ["radical_router", "orbit_router", "cyclotomic_router", "finite_field_router", "search_router", "api_router"]
