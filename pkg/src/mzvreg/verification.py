"""Sweeps that check the regularization identities index by index.

Two kinds of check:

* symbolic: both sides reduced to canonical forms and compared exactly
  (stuffle homomorphisms, the leading-ones expansion, the A-splitting);
* numeric: the symbolic difference is evaluated at ``digits`` and again at
  ``digits + 10``.  A pass needs the residual below ``tol`` at both
  precisions and a shrink of at least 10^3 between them (measured against
  ``max(residual, 10^-digits)``), which separates identities that hold only
  modulo MZV relations from accidental near-zeros.

Index sweeps run over ``1 <= weight <= max_weight``; pair sweeps include the
empty index.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable

import mpmath
from mpmath import mpf

from .algebra import Product, as_product, product
from .bivariate import _zeta_xy, zeta_xy_linear
from .expr import MzvExpr
from .indices import Index, format_index, indices_up_to
from .numeric import DEFAULT_DIGITS, EvalCache, eval_expr
from .polynomials import BivariatePolynomial
from .regularization import _regularize, reg_coefficient_expansion, regularize_linear
from .rho import apply_rho, apply_rho_xy, splitting_lhs, splitting_rhs

RECHECK_EXTRA_DIGITS = 10
SHRINK_FACTOR = mpf(10) ** -3
DEFAULT_TOL = "1e-30"


@dataclass
class CheckRecord:
    label: str
    passed: bool
    residual: mpf | None = None
    residual_hi: mpf | None = None
    symbolic_equal: bool | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"item": self.label, "status": "pass" if self.passed else "fail"}
        if self.symbolic_equal is not None:
            out["symbolic_equal"] = self.symbolic_equal
        if self.residual is not None:
            out["residual"] = mpmath.nstr(self.residual, 6)
        if self.residual_hi is not None:
            out["residual_recheck"] = mpmath.nstr(self.residual_hi, 6)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    identity: str
    max_weight: int
    records: list[CheckRecord]
    digits: int | None = None
    tol: str | None = None
    product: str | None = None
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def max_residual(self) -> mpf | None:
        vals = [r.residual for r in self.records if r.residual is not None]
        return max(vals) if vals else None

    @property
    def worst(self) -> CheckRecord | None:
        bad = self.failures
        if not bad and not self.max_residual:
            return None
        pool = bad or [r for r in self.records if r.residual is not None] or self.records
        return max(pool, key=lambda r: r.residual if r.residual is not None else mpf(0))

    @property
    def name(self) -> str:
        return f"{self.identity}[{self.product}]" if self.product else self.identity

    def summary(self) -> str:
        n = len(self.records)
        ok = n - len(self.failures)
        parts = [f"{'PASS' if self.passed else 'FAIL'} {self.name} weight<={self.max_weight}: {ok}/{n} pass"]
        if self.max_residual is not None:
            parts.append(f"max residual {mpmath.nstr(self.max_residual, 3)} (tol {self.tol}, {self.digits} digits)")
        else:
            parts.append("exact")
        worst = self.worst
        if worst is not None:
            parts.append(f"worst {worst.label}")
        parts.append(f"{self.elapsed:.2f}s")
        return ", ".join(parts)

    def to_dict(self) -> dict:
        worst = self.worst
        return {
            "identity": self.identity,
            "product": self.product,
            "max_weight": self.max_weight,
            "digits": self.digits,
            "tol": self.tol,
            "checked": len(self.records),
            "failed": len(self.failures),
            "status": "pass" if self.passed else "fail",
            "max_residual": None if self.max_residual is None else mpmath.nstr(self.max_residual, 6),
            "worst": worst.label if worst is not None else None,
            "elapsed": round(self.elapsed, 3),
            **self.extra,
        }

    def json_lines(self) -> Iterable[str]:
        """One record per checked item, then one summary record."""
        head = {"identity": self.identity, "product": self.product}
        for r in self.records:
            yield json.dumps({**head, **r.to_dict()}, ensure_ascii=False)
        yield json.dumps({"summary": self.to_dict()}, ensure_ascii=False)


def _parse_tol(tol) -> mpf:
    return mpf(str(tol))


def _map(fn, items: list, workers: int) -> list:
    if workers and workers > 1 and len(items) > 1:
        chunk = max(1, len(items) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items, chunksize=chunk))
    return [fn(x) for x in items]


def _pairs(max_total_weight: int) -> list[tuple[Index, Index]]:
    ks = list(indices_up_to(max_total_weight))
    return [(k, l) for k in ks for l in ks if sum(k) + sum(l) <= max_total_weight]


def _label_pair(k: Index, l: Index) -> str:
    return f"({format_index(k)})|({format_index(l)})"


def judge_numeric(label: str, diffs: list[MzvExpr], digits: int, tol, cache=None,
                  recheck: bool = True) -> CheckRecord:
    """Residual check for a list of expressions that should vanish as reals."""
    tol = _parse_tol(tol)
    nonzero = [e for e in diffs if e]
    if not nonzero:
        return CheckRecord(label, True, mpf(0), mpf(0) if recheck else None, True)
    r = max(abs(eval_expr(e, digits, cache)) for e in nonzero)
    ok = r < tol
    r_hi = None
    detail = ""
    if recheck:
        hi = digits + RECHECK_EXTRA_DIGITS
        r_hi = max(abs(eval_expr(e, hi, cache)) for e in nonzero)
        floor = mpf(10) ** -digits
        shrunk = r_hi <= SHRINK_FACTOR * max(r, floor)
        ok = ok and r_hi < tol and shrunk
        if not shrunk:
            detail = "residual did not shrink with precision"
    return CheckRecord(label, bool(ok), r, r_hi, False, detail)


# ---- per-item symbolic tasks (module level so they pickle for workers) ----

def ikz_difference(k: Index) -> list[MzvExpr]:
    """``ρ(ζ*(k;T)) - ζ^ш(k;T)``, coefficient by coefficient in ``T``."""
    diff = apply_rho(_regularize(k, Product.STUFFLE)) - _regularize(k, Product.SHUFFLE)
    return [c for _, c in diff.terms()]


def main_difference(k: Index) -> tuple[BivariatePolynomial, int]:
    """``q - (x+y)^m ζ_{x,y}^ш(k;T)`` where ``ρ_{x,y}(ζ_{x,y}^*) = q/(x+y)^m``."""
    lhs = _zeta_xy(k, Product.SHUFFLE)
    q, m = apply_rho_xy(_zeta_xy(k, Product.STUFFLE))
    return q - BivariatePolynomial.x_plus_y_power(m) * lhs, m


def _main_task(k: Index):
    d, m = main_difference(k)
    at01 = d.specialize(0, 1)
    ikz = apply_rho(_regularize(k, Product.STUFFLE)) - _regularize(k, Product.SHUFFLE)
    return [c for _, c in d.terms()], at01 == ikz, len(d.coeffs), m


def _t_task(which: Product, k: Index):
    p = _zeta_xy(k, which).specialize(-1, 1)
    return [c for j, c in p.terms() if j >= 1]


def _stuffle_hom_xy_task(pair):
    k, l = pair
    lhs = (_zeta_xy(k, Product.STUFFLE) * _zeta_xy(l, Product.STUFFLE)).flatten()
    rhs = zeta_xy_linear(product(k, l, Product.STUFFLE), Product.STUFFLE).flatten()
    return lhs == rhs


def _reg_coeff_task(which: Product, k: Index):
    return _regularize(k, which) == reg_coefficient_expansion(k, which)


def _product_hom_task(which: Product, pair):
    k, l = pair
    lhs = _regularize(k, which) * _regularize(l, which)
    rhs = regularize_linear(product(k, l, which), which)
    if which is Product.STUFFLE:
        return lhs.flatten() == rhs
    return [c for _, c in (lhs - rhs).terms()]


# ---- sweeps ----

def _indices(max_weight: int) -> list[Index]:
    return list(indices_up_to(max_weight, min_weight=1))


def verify_regularization_theorem(max_weight: int, digits: int = DEFAULT_DIGITS, tol=DEFAULT_TOL,
                                  cache: EvalCache | None = None, workers: int = 1,
                                  recheck: bool = True) -> VerificationReport:
    """``ζ^ш(k;T) = ρ(ζ*(k;T))`` for every index of weight ``1..max_weight``."""
    start = time.perf_counter()
    ks = _indices(max_weight)
    diffs = _map(ikz_difference, ks, workers)
    records = [judge_numeric(format_index(k), d, digits, tol, cache, recheck) for k, d in zip(ks, diffs)]
    return VerificationReport("ikz", max_weight, records, digits, str(tol),
                              elapsed=time.perf_counter() - start)


def verify_main_theorem(max_weight: int, digits: int = DEFAULT_DIGITS, tol=DEFAULT_TOL,
                        cache: EvalCache | None = None, workers: int = 1,
                        recheck: bool = True) -> VerificationReport:
    """Cleared-denominator, monomial-wise check of ``ζ_{x,y}^ш = ρ_{x,y}(ζ_{x,y}^*)``.

    Each record also requires the ``(x, y) = (0, 1)`` specialization of the
    difference to equal the univariate comparison exactly.
    """
    start = time.perf_counter()
    ks = _indices(max_weight)
    results = _map(_main_task, ks, workers)
    records = []
    for k, (diffs, consistent, _, _) in zip(ks, results):
        rec = judge_numeric(format_index(k), diffs, digits, tol, cache, recheck)
        if not consistent:
            rec.passed = False
            rec.detail = "(0,1) specialization differs from the univariate comparison"
        records.append(rec)
    return VerificationReport("main", max_weight, records, digits, str(tol),
                              elapsed=time.perf_counter() - start)


def verify_t_independence(max_weight: int, digits: int = DEFAULT_DIGITS, tol=DEFAULT_TOL,
                          which=Product.STUFFLE, cache: EvalCache | None = None, workers: int = 1,
                          recheck: bool = True) -> VerificationReport:
    """``ζ_{-1,1}^•(k;T)`` has vanishing ``T^j`` coefficients for ``j >= 1``."""
    which = as_product(which)
    start = time.perf_counter()
    ks = _indices(max_weight)
    diffs = _map(partial(_t_task, which), ks, workers)
    records = [judge_numeric(format_index(k), d, digits, tol, cache, recheck) for k, d in zip(ks, diffs)]
    return VerificationReport("t-independence", max_weight, records, digits, str(tol), which.value,
                              elapsed=time.perf_counter() - start)


def verify_stuffle_hom_xy(max_total_weight: int, workers: int = 1) -> VerificationReport:
    """``ζ_{x,y}^*(k)·ζ_{x,y}^*(l) = ζ_{x,y}^*(k*l)`` as identical flattened forms."""
    start = time.perf_counter()
    pairs = _pairs(max_total_weight)
    oks = _map(_stuffle_hom_xy_task, pairs, workers)
    records = [CheckRecord(_label_pair(k, l), ok, symbolic_equal=ok) for (k, l), ok in zip(pairs, oks)]
    return VerificationReport("stuffle-hom-xy", max_total_weight, records, product="stuffle",
                              elapsed=time.perf_counter() - start)


def verify_reg_coeff(max_weight: int, which=Product.STUFFLE, workers: int = 1) -> VerificationReport:
    """``ζ^•(k;T) = Σ_j ζ^•(k^j;0) T^j/j!`` as identical canonical forms."""
    which = as_product(which)
    start = time.perf_counter()
    ks = _indices(max_weight)
    oks = _map(partial(_reg_coeff_task, which), ks, workers)
    records = [CheckRecord(format_index(k), ok, symbolic_equal=ok) for k, ok in zip(ks, oks)]
    return VerificationReport("reg-coeff", max_weight, records, product=which.value,
                              elapsed=time.perf_counter() - start)


def verify_product_hom(max_total_weight: int, which=Product.STUFFLE, digits: int = DEFAULT_DIGITS,
                       tol=DEFAULT_TOL, cache: EvalCache | None = None, workers: int = 1,
                       recheck: bool = True) -> VerificationReport:
    """``ζ^•(k;T)ζ^•(l;T) = ζ^•(k•l;T)``: exact for ``*``, numeric for ``ш``."""
    which = as_product(which)
    start = time.perf_counter()
    pairs = _pairs(max_total_weight)
    results = _map(partial(_product_hom_task, which), pairs, workers)
    records = []
    for (k, l), res in zip(pairs, results):
        label = _label_pair(k, l)
        if which is Product.STUFFLE:
            records.append(CheckRecord(label, res, symbolic_equal=res))
        else:
            records.append(judge_numeric(label, res, digits, tol, cache, recheck))
    numeric = which is Product.SHUFFLE
    return VerificationReport("product-hom", max_total_weight, records,
                              digits if numeric else None, str(tol) if numeric else None, which.value,
                              elapsed=time.perf_counter() - start)


def verify_a_splitting(n_max: int) -> VerificationReport:
    """``Σ_{i+j=n} a_i a_j x^i y^j = a_{x,y,n} (x+y)^n`` exactly, ``n <= n_max``."""
    start = time.perf_counter()
    records = []
    for n in range(n_max + 1):
        ok = splitting_lhs(n) == splitting_rhs(n)
        records.append(CheckRecord(f"n={n}", ok, symbolic_equal=ok))
    return VerificationReport("a-splitting", n_max, records, elapsed=time.perf_counter() - start)
