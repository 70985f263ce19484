"""
@Time ： 2026-10-18
"""
from fastapi import APIRouter
from fastapi.responses import JSONResponse

from utils.settings import VERSION, get_settings

router = APIRouter()


@router.get("/")
async def health_check():
    return JSONResponse(content={"status": "ok", "version": VERSION, "workers": get_settings().workers}, status_code=200)
