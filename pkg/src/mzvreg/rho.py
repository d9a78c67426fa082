"""The correction series ``A(u)``, ``A_{x,y}(u)`` and the maps ``ρ``, ``ρ_{x,y}``.

``A(u) = exp(B(u))`` with ``B(u) = Σ_{n≥2} (-1)^n/n · ζ(n) · u^n``, expanded
via ``n·a_n = Σ_{m=2}^{n} m·b_m·a_{n-m}``.  The bivariate series uses
``b_m · (x^m + y^m)/(x+y)^m``; its coefficients are carried as
numerator / ``(x+y)^power`` pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .expr import MzvExpr
from .polynomials import BivariatePolynomial, RegPolynomial


def _b(n: int) -> MzvExpr:
    return MzvExpr.zeta((n,), Fraction((-1) ** n, n))


@lru_cache(maxsize=None)
def _a_table(n_max: int) -> tuple:
    if n_max < 0:
        return ()
    if n_max == 0:
        return (MzvExpr.constant(1),)
    prev = _a_table(n_max - 1)
    n = n_max
    acc = MzvExpr.zero()
    for m in range(2, n + 1):
        acc = acc + (_b(m) * prev[n - m]).scale(m)
    return prev + (acc.scale(Fraction(1, n)),)


def a_coefficients(n_max: int) -> list[MzvExpr]:
    """``[a_0, ..., a_{n_max}]`` for ``A(u) = Σ a_n u^n``."""
    return list(_a_table(n_max))


def apply_rho(p: RegPolynomial) -> RegPolynomial:
    """``ρ(T^j) = j! Σ_{i≤j} a_{j-i} T^i / i!``, extended linearly over symbols."""
    a = _a_table(max(p.degree(), 0))
    out = RegPolynomial.zero()
    for j, c in p.terms():
        fj = factorial(j)
        for i in range(j + 1):
            coeff = a[j - i]
            if coeff:
                out = out + RegPolynomial.T(i) * (coeff * c).scale(Fraction(fj, factorial(i)))
    return out


@dataclass(frozen=True)
class RationalFnCoeff:
    """``numerator / (x+y)^denom_power``; ``numerator`` has no ``T``."""

    numerator: BivariatePolynomial
    denom_power: int

    def __mul__(self, other: "RationalFnCoeff") -> "RationalFnCoeff":
        return RationalFnCoeff(self.numerator * other.numerator, self.denom_power + other.denom_power)

    def __add__(self, other: "RationalFnCoeff") -> "RationalFnCoeff":
        m = max(self.denom_power, other.denom_power)
        lhs = self.numerator * BivariatePolynomial.x_plus_y_power(m - self.denom_power)
        rhs = other.numerator * BivariatePolynomial.x_plus_y_power(m - other.denom_power)
        return RationalFnCoeff(lhs + rhs, m)

    def scale(self, q) -> "RationalFnCoeff":
        return RationalFnCoeff(self.numerator * Fraction(q), self.denom_power)

    def numerator_at(self, x0, y0) -> MzvExpr:
        return self.numerator.specialize(x0, y0).coefficient(0)

    def specialize(self, x0, y0) -> MzvExpr:
        """Value at rationals with ``x0 + y0 != 0``."""
        s = Fraction(x0) + Fraction(y0)
        if not s:
            raise ZeroDivisionError("x + y = 0 is a pole of A_{x,y}")
        return self.numerator_at(x0, y0).scale(1 / s**self.denom_power)


def _b_xy(n: int) -> RationalFnCoeff:
    num = BivariatePolynomial.monomial(n, 0) + BivariatePolynomial.monomial(0, n)
    return RationalFnCoeff(num * _b(n), n)


@lru_cache(maxsize=None)
def _a_xy_table(n_max: int) -> tuple:
    if n_max < 0:
        return ()
    if n_max == 0:
        return (RationalFnCoeff(BivariatePolynomial.one(), 0),)
    prev = _a_xy_table(n_max - 1)
    n = n_max
    acc = RationalFnCoeff(BivariatePolynomial.zero(), n)
    for m in range(2, n + 1):
        acc = acc + (_b_xy(m) * prev[n - m]).scale(m)
    return prev + (acc.scale(Fraction(1, n)),)


def a_coefficients_xy(n_max: int) -> list[RationalFnCoeff]:
    """Coefficients of ``A_{x,y}(u)``; entry ``n`` has denominator ``(x+y)^n``."""
    return list(_a_xy_table(n_max))


def apply_rho_xy(p: BivariatePolynomial) -> tuple[BivariatePolynomial, int]:
    """Return ``(q, m)`` with ``ρ_{x,y}(p) = q / (x+y)^m`` and ``q`` polynomial.

    ``m`` is the ``T``-degree of ``p`` (0 for constants).
    """
    m = max(p.t_degree(), 0)
    a = _a_xy_table(m)
    out = BivariatePolynomial.zero()
    for (ax, by, j), c in p.coeffs.items():
        fj = factorial(j)
        for i in range(j + 1):
            coeff = a[j - i]
            if not coeff.numerator:
                continue
            lift = BivariatePolynomial.x_plus_y_power(m - coeff.denom_power)
            term = coeff.numerator * lift * c * Fraction(fj, factorial(i))
            shift = BivariatePolynomial.monomial(ax, by, i)
            out = out + term * shift
    return out, m


def splitting_lhs(n: int) -> BivariatePolynomial:
    """``Σ_{i+j=n} a_i a_j x^i y^j``, i.e. the ``u^n`` coefficient of ``A(xu)A(yu)``."""
    a = _a_table(n)
    out = BivariatePolynomial.zero()
    for i in range(n + 1):
        prod = a[i] * a[n - i]
        if prod:
            out = out + BivariatePolynomial.monomial(i, n - i, 0, prod)
    return out


def splitting_rhs(n: int) -> BivariatePolynomial:
    """``a_{x,y,n} · (x+y)^n`` as a polynomial."""
    coeff = _a_xy_table(n)[n]
    return coeff.numerator * BivariatePolynomial.x_plus_y_power(n - coeff.denom_power)


def a_coefficients_at(x0, y0, n_max: int) -> list[MzvExpr]:
    """``A_{x0,y0}`` coefficients computed directly from the scaled series.

    Independent of the ``(x+y)``-power bookkeeping; used as a cross-check.
    """
    x0, y0 = Fraction(x0), Fraction(y0)
    s = x0 + y0
    b = [MzvExpr.zero(), MzvExpr.zero()] + [
        _b(n).scale((x0**n + y0**n) / s**n) for n in range(2, n_max + 1)
    ]
    a = [MzvExpr.constant(1)]
    for n in range(1, n_max + 1):
        acc = MzvExpr.zero()
        for m in range(2, n + 1):
            acc = acc + (b[m] * a[n - m]).scale(m)
        a.append(acc.scale(Fraction(1, n)))
    return a


def apply_rho_with(a: list[MzvExpr], p: RegPolynomial) -> RegPolynomial:
    """``ρ`` with an explicit coefficient table (e.g. from :func:`a_coefficients_at`)."""
    out = RegPolynomial.zero()
    for j, c in p.terms():
        for i in range(j + 1):
            if a[j - i]:
                out = out + RegPolynomial.T(i) * (a[j - i] * c).scale(Fraction(factorial(j), factorial(i)))
    return out
