from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from mzvreg.algebra import Product, product
from mzvreg.bivariate import coefficient, specialize, zeta_xy, zeta_xy_linear
from mzvreg.expr import MzvExpr
from mzvreg.indices import indices_up_to, reverse_index
from mzvreg.numeric import eval_expr
from mzvreg.polynomials import BivariatePolynomial, RegPolynomial
from mzvreg.regularization import regularize
from mzvreg.rho import (
    a_coefficients,
    a_coefficients_at,
    a_coefficients_xy,
    apply_rho,
    apply_rho_with,
    apply_rho_xy,
    splitting_lhs,
    splitting_rhs,
)

from oracles import exp_series

Z = MzvExpr.zeta
T = RegPolynomial.T
BP = BivariatePolynomial
one = MzvExpr.constant(1)


def test_a_table():
    a = a_coefficients(4)
    assert a[0] == one
    assert a[1] == MzvExpr.zero()
    assert a[2] == Z((2,), Fraction(1, 2))
    assert a[3] == Z((3,), Fraction(-1, 3))
    assert a[4] == Z((4,), Fraction(1, 4)) + (Z((2,)) * Z((2,))).scale(Fraction(1, 8))


def test_a_weight_homogeneous():
    for n, an in enumerate(a_coefficients(10)):
        if an:
            assert an.weights() == {n}


def test_a_numeric_against_series_and_gamma():
    digits = 40
    a = a_coefficients(10)
    with mpmath.workdps(60):
        b = {n: (-1) ** n * mpmath.zeta(n) / n for n in range(2, 11)}
        direct = exp_series(b, 10)
        # A(u) = e^{γu} Γ(1+u)
        gamma_route = mpmath.taylor(lambda u: mpmath.exp(mpmath.euler * u) * mpmath.gamma(1 + u), 0, 10)
        for n in range(11):
            got = eval_expr(a[n], digits)
            assert abs(got - direct[n]) < mpmath.mpf(10) ** -38
            assert abs(got - gamma_route[n]) < mpmath.mpf(10) ** -30


def test_apply_rho_examples():
    assert apply_rho(RegPolynomial.one()) == RegPolynomial.one()
    assert apply_rho(T()) == T()
    assert apply_rho(T(2)) == T(2) + RegPolynomial.scalar(Z((2,)))
    assert apply_rho(T(3)) == T(3) + T() * Z((2,), 3) - RegPolynomial.scalar(Z((3,), 2))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(max_denominator=7), min_size=1, max_size=6))
def test_rho_linear_preserves_degree(cs):
    p = sum((T(j) * c for j, c in enumerate(cs)), RegPolynomial.zero())
    q = sum((apply_rho(T(j)) * c for j, c in enumerate(cs)), RegPolynomial.zero())
    assert apply_rho(p) == q
    if p:
        assert apply_rho(p).degree() == p.degree()
        assert apply_rho(p).coefficient(p.degree()) == p.coefficient(p.degree())


def test_a_xy_examples():
    axy = a_coefficients_xy(6)
    assert not axy[1].numerator
    assert axy[2].denom_power == 2
    assert axy[2].numerator == (BP.monomial(2, 0) + BP.monomial(0, 2)) * Z((2,), Fraction(1, 2))
    a = a_coefficients(6)
    for n in range(7):
        assert axy[n].numerator_at(0, 1) == a[n]
        assert axy[n].denom_power <= n


def test_a_xy_numerator_homogeneous():
    for n, c in enumerate(a_coefficients_xy(8)):
        for (x, y, j) in c.numerator.coeffs:
            assert x + y == c.denom_power and j == 0


@pytest.mark.parametrize("n", range(11))
def test_splitting_identity(n):
    assert splitting_lhs(n) == splitting_rhs(n)


def test_apply_rho_xy_examples():
    assert apply_rho_xy(BP.one()) == (BP.one(), 0)
    q, m = apply_rho_xy(BP.monomial(0, 0, 2))
    assert m == 2
    assert q == BP.x_plus_y_power(2) * BP.monomial(0, 0, 2) + (BP.monomial(2, 0) + BP.monomial(0, 2)) * Z((2,))


@pytest.mark.parametrize("k", list(indices_up_to(5)))
def test_apply_rho_xy_specializations(k):
    p = zeta_xy(k, "stuffle")
    q, m = apply_rho_xy(p)
    assert q.specialize(0, 1) == apply_rho(p.specialize(0, 1))
    for x0, y0 in [(Fraction(2), Fraction(3)), (Fraction(-1, 2), Fraction(5, 3)), (Fraction(7), Fraction(-2))]:
        direct = apply_rho_with(a_coefficients_at(x0, y0, max(m, 0)), p.specialize(x0, y0))
        assert q.specialize(x0, y0) * (1 / (x0 + y0) ** m) == direct


def test_zeta_xy_examples():
    for which in Product:
        assert zeta_xy((), which) == BP.one()
        assert zeta_xy((2,), which) == (BP.monomial(2, 0) + BP.monomial(0, 2)) * Z((2,))
        assert zeta_xy((1,), which) == BP.monomial(1, 0, 1) + BP.monomial(0, 1, 1)
    assert coefficient(zeta_xy((2,), "stuffle"), 2, 0, 0) == Z((2,))
    assert coefficient(BP.one(), 0, 0, 0) == one
    assert coefficient(zeta_xy((1,), "stuffle"), 1, 0, 1) == one
    assert specialize(BP.one(), 5, 7) == RegPolynomial.one()
    assert specialize(zeta_xy((1,), "stuffle"), -1, 1) == RegPolynomial.zero()


@pytest.mark.parametrize("which", list(Product))
def test_zeta_xy_invariants(which):
    for k in indices_up_to(6):
        p = zeta_xy(k, which)
        w = sum(k)
        for (a, b, j), c in p.coeffs.items():
            assert a + b == w
            assert c.weights() <= {w - j}
        assert p.swap_xy() == zeta_xy(reverse_index(k), which)
        assert specialize(p, 0, 1) == regularize(k, which)
        assert specialize(p, 0, 1).flatten() == regularize(k, which)


def test_t_independence_small_cases():
    assert specialize(zeta_xy((1, 1), "stuffle"), -1, 1) == RegPolynomial.scalar(-Z((2,)))
    assert specialize(zeta_xy((2,), "shuffle"), -1, 1) == RegPolynomial.scalar(Z((2,), 2))


def test_zeta_xy_linear():
    combo = product((1,), (1,), "stuffle")
    lhs = (zeta_xy((1,), "stuffle") * zeta_xy((1,), "stuffle")).flatten()
    assert lhs == zeta_xy_linear(combo, "stuffle").flatten()
