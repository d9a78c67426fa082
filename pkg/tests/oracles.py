"""Brute-force reference implementations, independent of the package paths."""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction


def brute_compositions(w):
    """Every tuple over 1..w summing to w (by filtering, not by construction)."""
    if w == 0:
        return {()}
    out = set()
    for d in range(1, w + 1):
        for parts in itertools.product(range(1, w + 1), repeat=d):
            if sum(parts) == w:
                out.add(parts)
    return out


def phi(k):
    return tuple(b for p in k for b in [0] * (p - 1) + [1])


def phi_inverse(w):
    out, run = [], 0
    for a in w:
        run += 1
        if a:
            out.append(run)
            run = 0
    return tuple(out)


def brute_shuffle_words(u, v):
    """Enumerate every choice of positions for ``u`` inside the merged word."""
    n = len(u) + len(v)
    out = Counter()
    for pos in itertools.combinations(range(n), len(u)):
        word, iu, iv = [], iter(u), iter(v)
        chosen = set(pos)
        for i in range(n):
            word.append(next(iu) if i in chosen else next(iv))
        out[tuple(word)] += 1
    return dict(out)


def brute_shuffle(k, l):
    return {phi_inverse(w): c for w, c in brute_shuffle_words(phi(k), phi(l)).items()}


def brute_stuffle(k, l):
    """The three-way right recursion, without memoization."""
    if not k:
        return {tuple(l): 1}
    if not l:
        return {tuple(k): 1}
    out = Counter()
    for m, c in brute_stuffle(k, l[:-1]).items():
        out[m + (l[-1],)] += c
    for m, c in brute_stuffle(k[:-1], l).items():
        out[m + (k[-1],)] += c
    for m, c in brute_stuffle(k[:-1], l[:-1]).items():
        out[m + (k[-1] + l[-1],)] += c
    return dict(out)


def delannoy(r, s):
    if r == 0 or s == 0:
        return 1
    return delannoy(r, s - 1) + delannoy(r - 1, s) + delannoy(r - 1, s - 1)


def binomial(n, k):
    return math.comb(n, k)


def exp_series(b, n_max):
    """Coefficients of exp(Σ b_n u^n) for numeric ``b`` via the power-series
    definition Σ B^m/m!, truncated -- a different route from the derivative
    recurrence used by the package."""
    import mpmath

    n_max = int(n_max)
    poly = [mpmath.mpf(0)] * (n_max + 1)
    for n, bn in b.items():
        if n <= n_max:
            poly[n] = bn
    out = [mpmath.mpf(0)] * (n_max + 1)
    power = [mpmath.mpf(1)] + [mpmath.mpf(0)] * n_max
    for m in range(n_max + 1):
        for i in range(n_max + 1):
            out[i] += power[i] / math.factorial(m)
        new = [mpmath.mpf(0)] * (n_max + 1)
        for i, pi in enumerate(power):
            if pi:
                for j, bj in enumerate(poly):
                    if bj and i + j <= n_max:
                        new[i + j] += pi * bj
        power = new
    return out


def as_fractions(d):
    return {k: Fraction(v) for k, v in d.items()}
