"""The bivariate polynomials ``ζ_{x,y}^•(k; T)``.

For ``k = (k_1, ..., k_r)``::

    ζ_{x,y}^•(k; T) = Σ_{i=0}^{r} x^{k_1+...+k_i} y^{k_{i+1}+...+k_r}
                       · ζ^•(k_i, ..., k_1; T) · ζ^•(k_{i+1}, ..., k_r; T)

Products of the two regularized factors are left as two-factor monomials.
"""
from __future__ import annotations

from functools import lru_cache

from .algebra import Combination, Product, as_product
from .expr import MzvExpr
from .indices import Index, check_index, reverse_index
from .polynomials import BivariatePolynomial, RegPolynomial
from .regularization import _regularize


@lru_cache(maxsize=None)
def _zeta_xy(k: Index, which: Product) -> BivariatePolynomial:
    total = sum(k)
    out = BivariatePolynomial.zero()
    for i in range(len(k) + 1):
        head = _regularize(reverse_index(k[:i]), which)
        tail = _regularize(k[i:], which)
        a = sum(k[:i])
        out = out + BivariatePolynomial.from_reg(head * tail, a, total - a)
    return out


def zeta_xy(k, which) -> BivariatePolynomial:
    return _zeta_xy(check_index(k), as_product(which))


def zeta_xy_linear(a: Combination, which) -> BivariatePolynomial:
    which = as_product(which)
    out = BivariatePolynomial.zero()
    for k, c in a.terms.items():
        out = out + _zeta_xy(k, which) * c
    return out


def specialize(p: BivariatePolynomial, x0, y0) -> RegPolynomial:
    return p.specialize(x0, y0)


def coefficient(p: BivariatePolynomial, a: int, b: int, j: int) -> MzvExpr:
    return p.coefficient(a, b, j)


def clear_memo() -> None:
    _zeta_xy.cache_clear()
