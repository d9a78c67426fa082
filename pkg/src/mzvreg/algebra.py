"""Formal rational combinations of indices and the stuffle/shuffle products."""
from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .indices import (
    DomainError,
    Index,
    check_index,
    format_index,
    index_to_word,
    parse_index,
    sort_key,
    word_to_index,
)


class Product(str, Enum):
    STUFFLE = "stuffle"
    SHUFFLE = "shuffle"

    @property
    def symbol(self) -> str:
        return "*" if self is Product.STUFFLE else "ш"


def as_product(which) -> Product:
    if isinstance(which, Product):
        return which
    try:
        return Product(str(which).lower())
    except ValueError:
        raise DomainError(f"unknown product {which!r}; expected 'stuffle' or 'shuffle'") from None


def _rational(q) -> Fraction:
    return q if isinstance(q, Fraction) else Fraction(q)


def format_rational(q: Fraction) -> str:
    return str(q)


class Combination:
    """A finite rational linear combination of indices.

    Zero coefficients are never stored.  Iteration yields ``(index, coeff)``
    pairs in canonical index order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Index, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                k = check_index(k)
                c = _rational(c)
                if c:
                    total = clean.get(k, 0) + c
                    if total:
                        clean[k] = total
                    else:
                        clean.pop(k, None)
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "Combination":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def of(cls, k, coeff=1) -> "Combination":
        return cls({tuple(k): coeff})

    @classmethod
    def zero(cls) -> "Combination":
        return cls._raw({})

    def coefficient(self, k) -> Fraction:
        return self.terms.get(tuple(k), Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda kc: sort_key(kc[0]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Combination):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def _accumulate(self, other: "Combination", scale: Fraction) -> "Combination":
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + scale * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Combination._raw(out)

    def __add__(self, other):
        if not isinstance(other, Combination):
            return NotImplemented
        return self._accumulate(other, Fraction(1))

    def __sub__(self, other):
        if not isinstance(other, Combination):
            return NotImplemented
        return self._accumulate(other, Fraction(-1))

    def __neg__(self):
        return Combination._raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            s = _rational(scalar)
            if not s:
                return Combination.zero()
            return Combination._raw({k: s * c for k, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def weights(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def coefficient_sum(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def __str__(self):
        return format_combination(self)

    def __repr__(self):
        return f"Combination({format_combination(self)!r})"


def combine(a: Combination, b: Combination, ca=1, cb=1) -> Combination:
    """``ca·a + cb·b``."""
    return (a * _rational(ca)) + (b * _rational(cb))


def format_combination(a: Combination) -> str:
    """Render as ``"1·(2,3)+3·(3,2)+6·(4,1)"``; the zero combination is ``"0"``."""
    if not a:
        return "0"
    out = []
    for k, c in a:
        term = f"{format_rational(abs(c))}·({format_index(k) if k else ''})"
        out.append(("-" if c < 0 else "+") + term)
    text = "".join(out)
    return text[1:] if text[0] == "+" else text


_TERM_RE = re.compile(r"([+-]?)\s*([0-9]+(?:/[0-9]+)?)\s*[·*]\s*\(([^()]*)\)")


def parse_combination(text: str) -> Combination:
    """Inverse of :func:`format_combination` (``*`` accepted in place of ``·``)."""
    s = text.strip()
    if s == "0":
        return Combination.zero()
    pos = 0
    terms = []
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or (pos > 0 and not m.group(1)):
            raise DomainError(f"malformed combination near {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        terms.append((parse_index(m.group(3)), sign * Fraction(m.group(2))))
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    if not terms:
        raise DomainError(f"malformed combination {text!r}")
    return Combination(terms)


@lru_cache(maxsize=None)
def _stuffle_basis(k: Index, l: Index) -> tuple:
    return tuple(kernels.stuffle_counts(k, l).items())


@lru_cache(maxsize=None)
def shuffle_words(u: tuple, v: tuple) -> tuple:
    """Memoized word-level shuffle: ``((word, multiplicity), ...)``."""
    return tuple(kernels.shuffle_counts(u, v).items())


@lru_cache(maxsize=None)
def _shuffle_basis(k: Index, l: Index) -> tuple:
    return tuple((word_to_index(w), c) for w, c in shuffle_words(index_to_word(k), index_to_word(l)))


def basis_product(k: Index, l: Index, which) -> tuple:
    """``((index, int coefficient), ...)`` for ``k • l``; memoized per pair."""
    if as_product(which) is Product.STUFFLE:
        return _stuffle_basis(k, l)
    return _shuffle_basis(k, l)


def stuffle(k, l) -> Combination:
    return Combination._raw({m: Fraction(c) for m, c in _stuffle_basis(check_index(k), check_index(l))})


def shuffle(k, l) -> Combination:
    return Combination._raw({m: Fraction(c) for m, c in _shuffle_basis(check_index(k), check_index(l))})


def product(k, l, which) -> Combination:
    return stuffle(k, l) if as_product(which) is Product.STUFFLE else shuffle(k, l)


def product_linear(a: Combination, b: Combination, which) -> Combination:
    """Bilinear extension of ``•`` to combinations."""
    which = as_product(which)
    out: dict[Index, Fraction] = {}
    for k, ck in a.terms.items():
        for l, cl in b.terms.items():
            c = ck * cl
            for m, n in basis_product(k, l, which):
                v = out.get(m, 0) + c * n
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
    return Combination._raw(out)


def clear_memo() -> None:
    _stuffle_basis.cache_clear()
    shuffle_words.cache_clear()
    _shuffle_basis.cache_clear()
