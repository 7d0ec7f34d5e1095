"""Exact computation of the Hochschild cohomology ring of
Lambda_q = k<x,y>/(x^2, xy + q yx, y^2) over Q, F_p and cyclotomic fields."""

from .algebra import CaseDescriptor, LambdaQ, classify
from .cup import cup, presentation_for, product_table, verify_presentation
from .exactfield import FieldContext, FieldScalar, make_field, mult_order, parse_scalar
from .hilbert import compare_dims, series_coefficients, series_for
from .resolution import (
    Cochain,
    coboundary,
    delta_star_matrix,
    hh_basis,
    hh_dimension,
    verify_comultiplication,
    verify_complex,
    verify_minimality,
)

__version__ = "0.1.0"

__all__ = [
    "CaseDescriptor",
    "Cochain",
    "FieldContext",
    "FieldScalar",
    "LambdaQ",
    "classify",
    "coboundary",
    "compare_dims",
    "cup",
    "delta_star_matrix",
    "hh_basis",
    "hh_dimension",
    "make_field",
    "mult_order",
    "parse_scalar",
    "presentation_for",
    "product_table",
    "series_coefficients",
    "series_for",
    "verify_comultiplication",
    "verify_complex",
    "verify_minimality",
    "verify_presentation",
]
