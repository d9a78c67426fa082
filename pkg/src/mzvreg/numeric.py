"""Arbitrary-precision evaluation of MZV symbols and expressions.

``ζ(k)`` is evaluated as an iterated integral over ``[0, 1]`` split at 1/2.
Every piece is ``G_w(1/2)``, where ``G_w(x)`` is the iterated integral with
letters ``ω_0 = dt/t`` and ``ω_1 = dt/(1-t)``, read outermost first.  The
power series of ``G_w`` is built from the innermost letter outwards, so at
``x = 1/2`` every piece converges geometrically.
"""
from __future__ import annotations

import json
import os
import tempfile
import threading
from fractions import Fraction
from itertools import accumulate
from pathlib import Path
from typing import NamedTuple

import mpmath
from mpmath import mpf
from mpmath.libmp import to_str

from .expr import MzvExpr
from .indices import (
    DomainError,
    Index,
    NotAdmissibleError,
    Word,
    format_index,
    index_to_word,
    is_admissible,
)

DEFAULT_DIGITS = 40
# extra decimal digits kept beyond the request, in series cutoffs and in cached strings
GUARD_DIGITS = 5
_STABLE_RUN = 10


class DivergentWordError(DomainError):
    pass


def working_bits(digits: int) -> int:
    return int(digits * 3.33) + 32


def eval_truncated_sum(k: Index, N: int) -> mpf:
    """Nested sum over ``N ≥ m_1 > ... > m_r ≥ 1``, in double precision.

    Low-accuracy cross-check only (the tail is ``O(log^r N / N)``).
    """
    k = tuple(k)
    if not is_admissible(k):
        raise NotAdmissibleError(f"index ({format_index(k)}) is not admissible")
    if not k:
        return mpf(1)
    # inner[m-1] = sum over m > m_{i+1} > ... of the inner factors
    inner = [1.0] * N
    for part in reversed(k):
        terms = [inner[m - 1] / m**part for m in range(1, N + 1)]
        inner = [0.0] + list(accumulate(terms))[:-1]
        last = terms
    return mpf(sum(last))


def _check_word(w: Word) -> Word:
    w = tuple(w)
    if any(a not in (0, 1) for a in w):
        raise DomainError(f"word letters must be 0 or 1, got {list(w)}")
    if w and w[-1] != 1:
        raise DivergentWordError(f"word {list(w)} ends in 0; its integral diverges at 0")
    return w


def series_coefficients(w: Word, n_terms: int) -> list:
    """Taylor coefficients ``c_0..c_{n_terms-1}`` of ``G_w`` at 0 (current precision)."""
    c = [mpf(0)] * n_terms
    c[0] = mpf(1)
    for letter in reversed(w):
        if letter == 0:
            c = [mpf(0)] + [c[n] / n for n in range(1, n_terms)]
        else:
            prefix = list(accumulate(c))
            c = [mpf(0)] + [prefix[n - 1] / n for n in range(1, n_terms)]
    return c


class SeriesResult(NamedTuple):
    value: mpf
    n_terms: int
    tail_bound: mpf


def _initial_terms(w: Word, digits: int) -> int:
    return int((digits + GUARD_DIGITS) * 3.33) + 4 * len(w) + 2 * _STABLE_RUN


def series_word(w: Word, digits: int) -> SeriesResult:
    """Evaluate ``G_w(1/2)`` and report the truncation point and tail bound.

    Terms are summed until ``_STABLE_RUN`` consecutive terms fall below
    ``10^-(digits+GUARD_DIGITS)``; the tail is bounded by 4x the last
    retained term (ratio ≤ 3/4 guard).
    """
    w = _check_word(w)
    if not w:
        return SeriesResult(mpf(1), 1, mpf(0))
    with mpmath.workprec(working_bits(digits)):
        eps = mpf(10) ** (-(digits + GUARD_DIGITS))
        n_terms = _initial_terms(w, digits)
        while True:
            coeffs = series_coefficients(w, n_terms)
            terms = [mpmath.ldexp(cn, -n) for n, cn in enumerate(coeffs)]
            run = 0
            cut = None
            for n, t in enumerate(terms):
                if n > len(w) and abs(t) < eps:
                    run += 1
                    if run == _STABLE_RUN:
                        cut = n + 1
                        break
                else:
                    run = 0
            if cut is not None:
                value = mpmath.fsum(terms[:cut])
                return SeriesResult(+value, cut, 4 * abs(terms[cut - 1]))
            n_terms *= 2


def partial_sum_word(w: Word, n_terms: int, digits: int) -> mpf:
    """``Σ_{n < n_terms} c_n 2^-n`` with a fixed number of terms."""
    w = _check_word(w)
    if not w:
        return mpf(1)
    with mpmath.workprec(working_bits(digits)):
        coeffs = series_coefficients(w, n_terms)
        return +mpmath.fsum(mpmath.ldexp(cn, -n) for n, cn in enumerate(coeffs))


def eval_series_word(w: Word, digits: int) -> mpf:
    """``G_w(1/2)`` to absolute accuracy ``10^-digits``."""
    return series_word(w, digits).value


def holder_split(w: Word) -> list[tuple[Word, Word]]:
    """Split ``ζ(w)`` at 1/2 into ``Σ_k G_{u_k}(1/2) · G_{v_k}(1/2)``.

    ``v_k`` is the suffix after position ``k`` and ``u_k`` is the first ``k``
    letters reversed with 0 and 1 exchanged (the substitution ``t -> 1-t``).
    """
    w = tuple(w)
    if w and (w[0] != 0 or w[-1] != 1):
        raise NotAdmissibleError(f"word {list(w)} does not encode an admissible index")
    return [(tuple(1 - a for a in reversed(w[:k])), w[k:]) for k in range(len(w) + 1)]


def _eval_word_split(w: Word, digits: int) -> mpf:
    memo: dict[Word, mpf] = {}

    def g(u):
        if u not in memo:
            memo[u] = eval_series_word(u, digits)
        return memo[u]

    with mpmath.workprec(working_bits(digits)):
        return +mpmath.fsum(g(u) * g(v) for u, v in holder_split(w))


def _cache_key(k: Index, digits: int) -> str:
    return f"{format_index(k)}@{digits}"


def _round_trip(value: mpf, digits: int) -> str:
    return to_str(value._mpf_, digits + GUARD_DIGITS, strip_zeros=False)


class EvalCache:
    """Persistent ``"index@digits" -> decimal string`` store.

    The file is one JSON object with sorted keys.  Saves merge with whatever
    is on disk and replace the file atomically, so concurrent writers can lose
    updates but never leave a torn file.
    """

    def __init__(self, path=None):
        self.path = Path(path) if path else None
        self._data: dict[str, str] = {}
        self._lock = threading.Lock()
        self._dirty = False
        if self.path is not None and self.path.exists():
            self._data.update(self._read())

    @classmethod
    def from_env(cls, path=None) -> "EvalCache":
        return cls(path or os.environ.get("MZV_CACHE") or None)

    def _read(self) -> dict:
        try:
            with open(self.path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return {}
        return {str(k): str(v) for k, v in data.items()} if isinstance(data, dict) else {}

    def get(self, k: Index, digits: int):
        with self._lock:
            return self._data.get(_cache_key(k, digits))

    def put(self, k: Index, digits: int, text: str) -> None:
        with self._lock:
            key = _cache_key(k, digits)
            if self._data.get(key) != text:
                self._data[key] = text
                self._dirty = True

    def __len__(self):
        return len(self._data)

    def save(self) -> None:
        if self.path is None or not self._dirty:
            return
        with self._lock:
            merged = self._read() if self.path.exists() else {}
            merged.update(self._data)
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".mzvcache-", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(merged, fh, indent=1, sort_keys=True)
                    fh.write("\n")
                os.replace(tmp, self.path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
            self._data = merged
            self._dirty = False


_memo: dict[tuple[Index, int], mpf] = {}
_memo_lock = threading.Lock()


def eval_index(k: Index, digits: int = DEFAULT_DIGITS, cache: EvalCache | None = None) -> mpf:
    """``ζ(k)`` with absolute error below ``10^-digits``.

    Values are rounded to ``digits + GUARD_DIGITS`` significant digits, which
    is also the form stored in the cache, so cold and warm runs agree exactly.
    """
    k = tuple(k)
    if not is_admissible(k):
        raise NotAdmissibleError(f"index ({format_index(k)}) is not admissible")
    if not k:
        return mpf(1)
    key = (k, digits)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    text = cache.get(k, digits) if cache is not None else None
    if text is None:
        text = _round_trip(_eval_word_split(index_to_word(k), digits), digits)
        if cache is not None:
            cache.put(k, digits, text)
    with mpmath.workprec(working_bits(digits)):
        value = mpf(text)
    with _memo_lock:
        _memo[key] = value
    return value


def eval_expr(e: MzvExpr, digits: int = DEFAULT_DIGITS, cache: EvalCache | None = None) -> mpf:
    """``Σ q · Π ζ(factor)`` at working precision for ``digits``."""
    with mpmath.workprec(working_bits(digits)):
        total = []
        for m, c in e.terms.items():
            v = mpf(c.numerator) / c.denominator
            for f in m:
                v *= eval_index(f, digits, cache)
            total.append(v)
        return +mpmath.fsum(total)


def format_value(value: mpf, digits: int) -> str:
    """Decimal string with exactly ``digits`` significant digits."""
    return to_str(value._mpf_, digits, strip_zeros=False)


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def rational_to_mpf(q: Fraction) -> mpf:
    return mpf(q.numerator) / q.denominator
