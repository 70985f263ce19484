from services.curve.affine import (
    AffineMap,
    anisotropic_rescale,
    apply_affine,
    normalize_at,
    reparametrize,
    unimodular_normalize_at,
)
from services.curve.curve import (
    PolyCurve,
    affine_arclength,
    cn_norm,
    jacobian_J,
    j_vandermonde_factor,
    torsion_poly,
    vandermonde,
)
from services.curve.offspring import OffspringSpec, offspring, offspring_correction_matrix

__all__ = [
    "AffineMap",
    "OffspringSpec",
    "PolyCurve",
    "affine_arclength",
    "anisotropic_rescale",
    "apply_affine",
    "cn_norm",
    "j_vandermonde_factor",
    "jacobian_J",
    "normalize_at",
    "offspring",
    "offspring_correction_matrix",
    "reparametrize",
    "torsion_poly",
    "unimodular_normalize_at",
    "vandermonde",
]
