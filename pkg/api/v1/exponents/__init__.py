"""
@Time ： 2026-10-18
"""
# v1/exponents/__init__.py

from fastapi import APIRouter

from .exponents import router as exponents_router

router = APIRouter()
router.include_router(exponents_router, prefix="/exponents", tags=["Exponents"])
