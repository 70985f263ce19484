from services.poly.determinant import poly_det
from services.poly.parser import format_poly, parse_poly
from services.poly.polynomial import Polynomial
from services.poly.roots import ComplexRootSet, real_roots, roots

__all__ = [
    "ComplexRootSet",
    "Polynomial",
    "format_poly",
    "parse_poly",
    "poly_det",
    "real_roots",
    "roots",
]
