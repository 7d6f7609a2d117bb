"""Exact arithmetic: rationals, sparse polynomials, Laurent polynomials."""

from ..errors import InexactDivision, StructureError
from .kernel import BACKEND
from .laurent import (
    LaurentPolynomial,
    format_laurent,
    laurent_arith,
    laurent_exact_div,
    parse_laurent,
)
from .orders import DEGREVLEX, LEX, BlockOrder, MonomialOrder, order_by_name
from .poly import (
    ExactRational,
    SparsePolynomial,
    format_poly,
    parse_poly,
    poly_arith,
    poly_det,
    poly_exact_div,
    try_exact_div,
)
from .variables import VariableTable

__all__ = [
    "BACKEND",
    "InexactDivision",
    "StructureError",
    "BlockOrder",
    "DEGREVLEX",
    "ExactRational",
    "LEX",
    "LaurentPolynomial",
    "MonomialOrder",
    "SparsePolynomial",
    "VariableTable",
    "format_laurent",
    "format_poly",
    "laurent_arith",
    "laurent_exact_div",
    "order_by_name",
    "parse_laurent",
    "parse_poly",
    "poly_arith",
    "poly_det",
    "poly_exact_div",
    "try_exact_div",
]
