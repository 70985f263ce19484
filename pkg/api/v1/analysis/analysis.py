"""
@Time ： 2026-10-18
"""
from typing import List

from fastapi import APIRouter, Query

from services.curve.validation import CurveInput
from services.experiments.analyze import analyze_curve, level_set_table
from services.experiments.validation import AnalyzeRequest
from services.exponents.profile import torsion_profile
from services.poly.parser import format_poly
from utils.decorators import handle_response
from utils.logger import Logger
from utils.parallel import worker_count

logger = Logger(__name__)
router = APIRouter()


@router.post("/curve")
@handle_response
async def analyze(body: AnalyzeRequest):
    """
    Full curve report: torsion, profile, decomposition, level sets and growth slopes.
    """
    gamma = body.to_curve()
    report = analyze_curve(gamma, body.levels, body.injectivity_samples, body.seed, worker_count())
    return {"status": "success", "data": report}


@router.get("/torsion")
@handle_response
async def torsion(exprs: List[str] = Query(...)):
    gamma = CurveInput(exprs=exprs).to_curve()
    L = gamma.torsion
    return {
        "status": "success",
        "data": {"torsion": format_poly(L), "degree": L.degree, "profile": torsion_profile(gamma).to_dict()},
    }


@router.get("/level_sets")
@handle_response
async def level_sets(exprs: List[str] = Query(...), n: int = Query(..., ge=-64, le=64)):
    """
    The set {2^n <= |L| < 2^(n+1)} as disjoint intervals with its measure.
    """
    gamma = CurveInput(exprs=exprs).to_curve()
    gamma.require_nondegenerate()
    (row,) = level_set_table(gamma, (n, n))
    return {"status": "success", "data": row}
