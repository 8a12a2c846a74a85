"""Main API router."""

from fastapi import APIRouter

from .cones import router as cones_router
from .gorenstein import router as gorenstein_router
from .verification import router as verification_router

api_router = APIRouter()

# Include sub-routers
api_router.include_router(cones_router, prefix="/cones", tags=["cones"])

api_router.include_router(gorenstein_router, prefix="/gorenstein", tags=["gorenstein"])

api_router.include_router(verification_router, tags=["verification"])
