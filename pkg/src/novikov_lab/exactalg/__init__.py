"""Exact arithmetic: rationals, Laurent polynomials, Q(s)-ranks, series."""

from .laurent import LaurentPolynomial, as_fraction, poly_divmod, poly_gcd
from .matrix import (
    DropLocus,
    RationalFunctionMatrix,
    determinantal_gcd,
    drop_locus,
    rank_at_parameter,
    rank_over_function_field,
    rational_rank,
)
from .roots import RootInterval, isolate_positive_roots, simplest_rational
from .series import CountingSeries, expand_inverse_one_minus_lambda_sq, series_arith
from . import qmat
from .algebraic import rank_at_root

S = LaurentPolynomial.monomial(1)

__all__ = [
    "LaurentPolynomial",
    "as_fraction",
    "poly_divmod",
    "poly_gcd",
    "DropLocus",
    "RationalFunctionMatrix",
    "determinantal_gcd",
    "drop_locus",
    "rank_at_parameter",
    "rank_over_function_field",
    "rational_rank",
    "RootInterval",
    "isolate_positive_roots",
    "simplest_rational",
    "CountingSeries",
    "expand_inverse_one_minus_lambda_sq",
    "series_arith",
    "qmat",
    "rank_at_root",
]
