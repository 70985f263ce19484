"""
@Time ： 2026-10-18
"""
from typing import List

from fastapi import APIRouter, Query

from services.exponents.admissibility import drury_fixed_point
from services.exponents.drury import drury_iterate, interp_region_check
from services.exponents.pairs import to_text
from services.exponents.table import TABLE_HEADER, exponent_table
from utils.decorators import handle_response

router = APIRouter()


@router.get("/table")
@handle_response
async def table(d: int = Query(..., ge=2, le=8), q: List[str] = Query(...)):
    return {"status": "success", "data": {"header": TABLE_HEADER, "rows": exponent_table(d, q)}}


@router.get("/drury")
@handle_response
async def drury(d: int = Query(..., ge=2, le=8), p0: str = Query(...), iterations: int = Query(5, ge=1, le=64)):
    """
    Iterates of the Drury induction map from p0, the fixed point they approach,
    and the interpolation vertex built from p0 with its region check.
    """
    sequence = drury_iterate(d, p0, iterations)
    vertex, inside = interp_region_check(d, p0)
    return {
        "status": "success",
        "data": {
            "sequence": [to_text(p) for p in sequence],
            "fixed_point": to_text(drury_fixed_point(d)),
            "vertex": [to_text(v) for v in vertex],
            "inside_region": inside,
        },
    }
