"""
@Time ： 2026-10-18
"""
from pathlib import Path
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from services.curve.curve import MAX_CURVE_DEGREE, MAX_DIMENSION, MIN_DIMENSION
from services.curve.validation import CurveInput

SUITES = ("algebra", "decompose", "geometric", "oscillatory", "exponents", "all")
U64_MAX = (1 << 64) - 1


class RandomFamily(BaseModel):
    d: int
    N: int
    box: float = Field(default=1.0, gt=0)
    count: int = Field(default=20, ge=1)
    # rejection threshold on |leading coefficient of L| relative to its largest coefficient
    min_leading_torsion: float = Field(default=0.0, ge=0)

    @field_validator("d")
    def validate_d(cls, value: int) -> int:
        if not MIN_DIMENSION <= value <= MAX_DIMENSION:
            raise ValueError(f"d must be between {MIN_DIMENSION} and {MAX_DIMENSION}")
        return value

    @model_validator(mode="after")
    def validate_degree(self):
        if not self.d <= self.N <= MAX_CURVE_DEGREE:
            raise ValueError(f"N must satisfy d <= N <= {MAX_CURVE_DEGREE} for a nondegenerate family")
        return self


class CurveSource(BaseModel):
    d: Optional[int] = None
    exprs: Optional[List[str]] = None
    components: Optional[List[List[float]]] = None
    path: Optional[str] = None
    random: Optional[RandomFamily] = None

    @field_validator("path")
    def validate_path(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and not Path(value).is_file():
            raise ValueError(f"curve file does not exist: {value}")
        return value

    @model_validator(mode="after")
    def validate_source(self):
        sources = [name for name in ("exprs", "components", "path", "random") if getattr(self, name) is not None]
        if len(sources) != 1:
            raise ValueError(f"a curve source needs exactly one of exprs, components, path or random; got {sources}")
        if self.exprs is not None or self.components is not None:
            CurveInput(d=self.d, exprs=self.exprs, components=self.components)
        return self

    @property
    def is_random(self) -> bool:
        return self.random is not None

    def inline(self) -> Optional[CurveInput]:
        if self.exprs is None and self.components is None:
            return None
        return CurveInput(d=self.d, exprs=self.exprs, components=self.components)


class AnalyzeParams(BaseModel):
    levels: Tuple[int, int] = (-4, 4)
    injectivity_samples: int = Field(default=0, ge=0)

    @field_validator("levels")
    def validate_levels(cls, value):
        if value[0] > value[1]:
            raise ValueError("levels must be (low, high) with low <= high")
        return value


class VerifyParams(BaseModel):
    suite: str = "all"
    curves: int = Field(default=20, ge=1)
    samples: int = Field(default=20000, ge=2)

    @field_validator("suite")
    def validate_suite(cls, value: str) -> str:
        if value not in SUITES:
            raise ValueError(f"unknown suite {value!r}; choose one of {', '.join(SUITES)}")
        return value


class SweepParams(BaseModel):
    p: Union[float, str] = 2.0
    q: Union[float, str] = 6.0
    family: Literal["gaussian", "indicator", "knapp"] = "gaussian"
    budget: int = Field(default=24, ge=1)
    half_width: float = Field(default=48.0, gt=0)
    resolution: int = Field(default=48, ge=2)
    nodes: int = Field(default=512, ge=1)


class BumpParams(BaseModel):
    center: float = 0.0
    width: float = Field(default=0.25, gt=0)
    frequency: float = 0.0


class FieldParams(BaseModel):
    box: Optional[List[Tuple[float, float]]] = None
    resolution: int = Field(default=256, ge=2)
    nodes: int = Field(default=1024, ge=1)
    weighted: bool = True
    format: Literal["csv", "binary", "both"] = "both"
    bump: BumpParams = BumpParams()


class ExperimentConfig(BaseModel):
    kind: Optional[Literal["analyze", "verify", "sweep", "field"]] = None
    seed: Optional[int] = None
    quick: bool = False
    out: str = "out"
    curve: Optional[CurveSource] = None
    analyze: AnalyzeParams = AnalyzeParams()
    verify: VerifyParams = VerifyParams()
    sweep: SweepParams = SweepParams()
    field: FieldParams = FieldParams()

    @field_validator("seed")
    def validate_seed(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not 0 <= value <= U64_MAX:
            raise ValueError("seed must be an unsigned 64-bit integer")
        return value

    @property
    def uses_randomness(self) -> bool:
        if self.curve is not None and self.curve.is_random:
            return True
        if self.kind in ("verify", "sweep"):
            return True
        return self.kind == "analyze" and self.analyze.injectivity_samples > 0

    @model_validator(mode="after")
    def validate_seed_present(self):
        if self.uses_randomness and self.seed is None:
            raise ValueError("a seed is required whenever randomness is used")
        return self


class AnalyzeRequest(CurveInput):
    levels: Tuple[int, int] = (-4, 4)
    injectivity_samples: int = Field(default=0, ge=0, le=100000)
    seed: Optional[int] = Field(default=None, ge=0, le=U64_MAX)

    @field_validator("levels")
    def validate_levels(cls, value):
        if value[0] > value[1]:
            raise ValueError("levels must be (low, high) with low <= high")
        return value

    @model_validator(mode="after")
    def validate_seed(self):
        if self.injectivity_samples and self.seed is None:
            raise ValueError("a seed is required when injectivity_samples > 0")
        return self
