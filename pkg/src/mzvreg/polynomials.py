"""Sparse polynomials with :class:`MzvExpr` coefficients.

``RegPolynomial`` lives in ``MzvExpr[T]`` and ``BivariatePolynomial`` in
``MzvExpr[x, y, T]``.  Both store a dict from exponent tuples to nonzero
coefficients; the shared arithmetic is in ``_SparsePoly``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .expr import MzvExpr, flatten_products, format_expr


class _SparsePoly:
    __slots__ = ("coeffs",)
    nvars = 0

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for exp, c in items:
                exp = self._norm_exp(exp)
                if isinstance(c, (int, Fraction)):
                    c = MzvExpr.constant(c)
                total = clean[exp] + c if exp in clean else c
                if total:
                    clean[exp] = total
                else:
                    clean.pop(exp, None)
        self.coeffs = clean

    @classmethod
    def _norm_exp(cls, exp):
        exp = (exp,) if isinstance(exp, int) else tuple(exp)
        if len(exp) != cls.nvars or any(e < 0 for e in exp):
            raise ValueError(f"bad exponent {exp!r}")
        return exp

    @classmethod
    def _raw(cls, coeffs):
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0,) * cls.nvars: MzvExpr.constant(1)})

    @classmethod
    def scalar(cls, e: MzvExpr):
        return cls._raw({(0,) * cls.nvars: e} if e else {})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if type(other) is type(self):
            return self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def _accumulate(self, other, sign):
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            v = out[exp] + c * sign if exp in out else c * sign
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return self._raw(out)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._accumulate(other, 1)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._accumulate(other, -1)

    def __neg__(self):
        return self._raw({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return self._raw({e: c.scale(q) for e, c in self.coeffs.items()} if q else {})
        if isinstance(other, MzvExpr):
            out = {e: c * other for e, c in self.coeffs.items()}
            return self._raw({e: c for e, c in out.items() if c})
        if type(other) is not type(self):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = out[exp] + c1 * c2 if exp in out else c1 * c2
                if v:
                    out[exp] = v
                else:
                    out.pop(exp, None)
        return self._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, MzvExpr)):
            return self.__mul__(other)
        return NotImplemented

    def map_coefficients(self, fn):
        out = {}
        for e, c in self.coeffs.items():
            v = fn(c)
            if v:
                out[e] = v
        return self._raw(out)

    def flatten(self):
        """Rewrite product monomials in every coefficient via the stuffle product."""
        return self.map_coefficients(flatten_products)

    def is_depth1(self) -> bool:
        return all(c.is_depth1() for c in self.coeffs.values())


class RegPolynomial(_SparsePoly):
    """Polynomial in ``T`` with :class:`MzvExpr` coefficients."""

    __slots__ = ()
    nvars = 1

    @classmethod
    def T(cls, power: int = 1) -> "RegPolynomial":
        return cls._raw({(power,): MzvExpr.constant(1)})

    def coefficient(self, j: int) -> MzvExpr:
        return self.coeffs.get((j,), MzvExpr.zero())

    def degree(self) -> int:
        """Degree in ``T``; ``-1`` for the zero polynomial."""
        return max((e[0] for e in self.coeffs), default=-1)

    def terms(self):
        """``(j, coeff)`` pairs with ``j`` descending."""
        return sorted(((e[0], c) for e, c in self.coeffs.items()), key=lambda t: -t[0])

    def __str__(self):
        return format_reg_polynomial(self)

    def __repr__(self):
        return f"RegPolynomial({format_reg_polynomial(self)!r})"


def _t_power(j: int) -> str:
    return "" if j == 0 else ("T" if j == 1 else f"T^{j}")


def format_reg_polynomial(p: RegPolynomial) -> str:
    """E.g. ``"(1/2)·T^2 + (-1/2·ζ(2))"``; a constant prints bare."""
    terms = p.terms()
    if not terms:
        return "0"
    if len(terms) == 1 and terms[0][0] == 0:
        return format_expr(terms[0][1])
    out = []
    for j, c in terms:
        body = f"({format_expr(c)})"
        out.append(body if j == 0 else f"{body}·{_t_power(j)}")
    return " + ".join(out)


class BivariatePolynomial(_SparsePoly):
    """Polynomial in ``x, y, T`` with :class:`MzvExpr` coefficients.

    Exponent tuples are ``(a, b, j)`` for ``x^a y^b T^j``.
    """

    __slots__ = ()
    nvars = 3

    @classmethod
    def monomial(cls, a: int, b: int, j: int = 0, coeff=None) -> "BivariatePolynomial":
        coeff = MzvExpr.constant(1) if coeff is None else coeff
        return cls._raw({(a, b, j): coeff} if coeff else {})

    @classmethod
    def from_reg(cls, p: RegPolynomial, a: int = 0, b: int = 0) -> "BivariatePolynomial":
        """``x^a y^b · p``."""
        return cls._raw({(a, b, e[0]): c for e, c in p.coeffs.items()})

    @classmethod
    def x_plus_y_power(cls, m: int) -> "BivariatePolynomial":
        return cls._raw({(i, m - i, 0): MzvExpr.constant(comb(m, i)) for i in range(m + 1)})

    def coefficient(self, a: int, b: int, j: int) -> MzvExpr:
        return self.coeffs.get((a, b, j), MzvExpr.zero())

    def t_degree(self) -> int:
        return max((e[2] for e in self.coeffs), default=-1)

    def terms(self):
        """``((a, b, j), coeff)`` with ``a`` descending, then ``j`` descending."""
        return sorted(self.coeffs.items(), key=lambda t: (-t[0][0], -t[0][2], -t[0][1]))

    def swap_xy(self) -> "BivariatePolynomial":
        return self._raw({(b, a, j): c for (a, b, j), c in self.coeffs.items()})

    def specialize(self, x0, y0) -> RegPolynomial:
        """Substitute exact rationals for ``x`` and ``y``."""
        x0, y0 = Fraction(x0), Fraction(y0)
        out = {}
        for (a, b, j), c in self.coeffs.items():
            factor = x0**a * y0**b
            if not factor:
                continue
            v = out[(j,)] + c.scale(factor) if (j,) in out else c.scale(factor)
            if v:
                out[(j,)] = v
            else:
                out.pop((j,), None)
        return RegPolynomial._raw(out)

    def __str__(self):
        return format_bivariate(self)

    def __repr__(self):
        return f"BivariatePolynomial({format_bivariate(self)!r})"


def format_bivariate(p: BivariatePolynomial) -> str:
    terms = p.terms()
    if not terms:
        return "0"
    out = []
    for (a, b, j), c in terms:
        vars_ = " ".join(
            v for v in (
                "" if a == 0 else ("x" if a == 1 else f"x^{a}"),
                "" if b == 0 else ("y" if b == 1 else f"y^{b}"),
                _t_power(j),
            ) if v
        )
        body = f"({format_expr(c)})"
        out.append(f"{body}·{vars_}" if vars_ else body)
    return " + ".join(out)
