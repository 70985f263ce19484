"""
@Time ： 2026-10-18
"""
from typing import List, Optional

from pydantic import BaseModel, field_validator, model_validator

from services.curve.curve import MAX_DIMENSION, MIN_DIMENSION, PolyCurve
from services.poly.parser import parse_poly


class CurveInput(BaseModel):
    d: Optional[int] = None
    components: Optional[List[List[float]]] = None
    exprs: Optional[List[str]] = None

    @field_validator("d")
    def validate_d(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not (MIN_DIMENSION <= value <= MAX_DIMENSION):
            raise ValueError(f"d must be between {MIN_DIMENSION} and {MAX_DIMENSION}")
        return value

    @model_validator(mode="after")
    def validate_source(self):
        """
        Exactly one of components / exprs, with d matching its length when given.
        """
        if (self.components is None) == (self.exprs is None):
            raise ValueError("provide exactly one of 'components' or 'exprs'")
        size = len(self.components) if self.components is not None else len(self.exprs)
        if self.d is not None and self.d != size:
            raise ValueError(f"d={self.d} but {size} components were given")
        if not (MIN_DIMENSION <= size <= MAX_DIMENSION):
            raise ValueError(f"a curve needs between {MIN_DIMENSION} and {MAX_DIMENSION} components")
        return self

    def to_curve(self) -> PolyCurve:
        if self.exprs is not None:
            return PolyCurve(tuple(parse_poly(expr) for expr in self.exprs))
        return PolyCurve.from_coeffs(self.components)
