"""
@Time ： 2026-10-18
"""
# api/v1/__init__.py

from fastapi import APIRouter

from api.v1.analysis import router as analysis_router
from api.v1.exponents import router as exponents_router
from api.v1.health import router as health_router

router = APIRouter()
router.include_router(health_router, tags=["health"])
router.include_router(analysis_router, tags=["analysis"])
router.include_router(exponents_router, tags=["exponents"])
