"""Exact stuffle/shuffle regularization of multiple zeta values.

Indices are tuples of positive ints.  Symbolic values are :class:`MzvExpr`
combinations of ``ζ`` symbols; regularized values are polynomials in ``T``
(and in ``x, y`` for the bivariate generalization) over them.
"""
from .algebra import Combination, Product, combine, parse_combination, product_linear, shuffle, stuffle
from .bivariate import zeta_xy, zeta_xy_linear
from .expr import MzvExpr, flatten_products
from .indices import (
    DomainError,
    enumerate_indices,
    format_index,
    index_to_word,
    is_admissible,
    leading_ones_decomposition,
    parse_index,
    reverse_index,
    word_to_index,
)
from .kernels import BACKEND
from .numeric import EvalCache, eval_expr, eval_index
from .polynomials import BivariatePolynomial, RegPolynomial
from .regularization import regularize, regularize_linear
from .rho import a_coefficients, a_coefficients_xy, apply_rho, apply_rho_xy

__version__ = "0.1.0"
