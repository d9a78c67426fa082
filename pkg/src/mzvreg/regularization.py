"""Stuffle and shuffle regularized values ``ζ^•(k; T)``.

Both regularizations are computed by the same reduction.  An admissible
index maps to its own symbol and ``(1)`` maps to ``T``.  Any other index has
the form ``k = (1, k')``, and expanding ``(1) • k'`` contains ``k`` exactly
``b(k)`` times (``b`` = number of leading ones).  Every other term has
strictly fewer leading ones, so::

    T · ζ^•(k') = b · ζ^•(k) + ζ^•(rest)

can be solved for ``ζ^•(k)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import Combination, Product, as_product, product
from .expr import MzvExpr, flatten_products
from .indices import Index, check_index, descend, is_admissible, leading_ones_decomposition
from .polynomials import RegPolynomial

__all__ = [
    "regularize",
    "regularize_linear",
    "poly_multiply",
    "flatten_products",
    "reg_coefficient_expansion",
]


class ReductionError(RuntimeError):
    """The ``(1)``-product expansion did not have the expected shape."""


@lru_cache(maxsize=None)
def _regularize(k: Index, which: Product) -> RegPolynomial:
    if is_admissible(k):
        return RegPolynomial.scalar(MzvExpr.zeta(k))
    if k == (1,):
        return RegPolynomial.T()
    tail = k[1:]
    expansion = product((1,), tail, which)
    c = expansion.coefficient(k)
    b, _ = leading_ones_decomposition(k)
    if c != b:
        raise ReductionError(f"coefficient of {k} in (1){which.symbol}{tail} is {c}, expected {b}")
    rest = expansion - Combination.of(k, c)
    lhs = RegPolynomial.T() * _regularize(tail, which)
    return (lhs - _regularize_linear(rest, which)) * Fraction(1, b)


def _regularize_linear(a: Combination, which: Product) -> RegPolynomial:
    out = RegPolynomial.zero()
    for k, c in a.terms.items():
        out = out + _regularize(k, which) * c
    return out


def regularize(k, which) -> RegPolynomial:
    """``ζ^•(k; T)`` with depth-1 coefficients; memoized per ``(k, •)``."""
    return _regularize(check_index(k), as_product(which))


def regularize_linear(a: Combination, which) -> RegPolynomial:
    return _regularize_linear(a, as_product(which))


def poly_multiply(p: RegPolynomial, q: RegPolynomial) -> RegPolynomial:
    """Product in ``MzvExpr[T]``; symbol products stay as formal monomials."""
    return p * q


def reg_coefficient_expansion(k, which) -> RegPolynomial:
    """``Σ_j ζ^•(k^j; 0) T^j / j!`` built from constant terms only."""
    k = check_index(k)
    which = as_product(which)
    b, _ = leading_ones_decomposition(k)
    out = RegPolynomial.zero()
    factorial = 1
    for j in range(b + 1):
        if j:
            factorial *= j
        const = _regularize(descend(k, j), which).coefficient(0)
        out = out + RegPolynomial.T(j) * const * Fraction(1, factorial)
    return out


def clear_memo() -> None:
    _regularize.cache_clear()
