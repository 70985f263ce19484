"""
@Time ： 2026-10-18
"""
# v1/analysis/__init__.py

from fastapi import APIRouter

from .analysis import router as analysis_router

router = APIRouter()
router.include_router(analysis_router, prefix="/analysis", tags=["Analysis"])
