"""Rational linear combinations of products of MZV symbols.

A monomial is a sorted tuple of admissible, nonempty indices (a multiset of
``ζ`` factors); ``()`` is the constant monomial 1.  Products of symbols are
kept formal until :func:`flatten_products` rewrites them with the stuffle
product.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import Combination, Product, product_linear
from .indices import Index, format_index, require_admissible, sort_key

Monomial = tuple  # tuple[Index, ...]

ONE: Monomial = ()


def monomial_key(m: Monomial):
    return (sum(sum(f) for f in m), len(m), tuple(sort_key(f) for f in m))


def monomial_weight(m: Monomial) -> int:
    return sum(sum(f) for f in m)


@lru_cache(maxsize=65536)
def _merge(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    return tuple(sorted(m1 + m2, key=sort_key))


def format_monomial(m: Monomial) -> str:
    return "·".join(f"ζ({format_index(f)})" for f in m)


class MzvExpr:
    """Exact rational combination of monomials in MZV symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for m, c in items:
                m = tuple(sorted((require_admissible(tuple(f)) for f in m if f), key=sort_key))
                c = Fraction(c)
                v = clean.get(m, 0) + c
                if v:
                    clean[m] = v
                else:
                    clean.pop(m, None)
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "MzvExpr":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls) -> "MzvExpr":
        return cls._raw({})

    @classmethod
    def constant(cls, q=1) -> "MzvExpr":
        q = Fraction(q)
        return cls._raw({ONE: q} if q else {})

    @classmethod
    def zeta(cls, k, coeff=1) -> "MzvExpr":
        """``coeff·ζ(k)``; ``ζ(∅)`` is the constant 1."""
        k = require_admissible(tuple(k))
        return cls._raw({((k,) if k else ONE): Fraction(coeff)}) if coeff else cls.zero()

    @classmethod
    def from_combination(cls, a: Combination) -> "MzvExpr":
        """``ζ`` applied linearly to a combination of admissible indices."""
        out: dict[Monomial, Fraction] = {}
        for k, c in a.terms.items():
            require_admissible(k)
            m = (k,) if k else ONE
            out[m] = out.get(m, 0) + c
        return cls._raw({m: c for m, c in out.items() if c})

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda mc: monomial_key(mc[0]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MzvExpr):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MzvExpr.constant(other)
        return NotImplemented

    __hash__ = None

    def _accumulate(self, other: "MzvExpr", scale) -> "MzvExpr":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + scale * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MzvExpr._raw(out)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MzvExpr.constant(other)
        if not isinstance(other, MzvExpr):
            return NotImplemented
        return self._accumulate(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MzvExpr.constant(other)
        if not isinstance(other, MzvExpr):
            return NotImplemented
        return self._accumulate(other, -1)

    def __neg__(self):
        return MzvExpr._raw({m: -c for m, c in self.terms.items()})

    def scale(self, q) -> "MzvExpr":
        q = Fraction(q)
        if not q:
            return MzvExpr.zero()
        return MzvExpr._raw({m: q * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MzvExpr):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _merge(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MzvExpr._raw(out)

    __rmul__ = __mul__

    def is_depth1(self) -> bool:
        """True when no monomial has more than one ``ζ`` factor."""
        return all(len(m) <= 1 for m in self.terms)

    def weights(self) -> set[int]:
        return {monomial_weight(m) for m in self.terms}

    def symbols(self) -> set[Index]:
        return {f for m in self.terms for f in m}

    def __str__(self):
        return format_expr(self)

    def __repr__(self):
        return f"MzvExpr({format_expr(self)!r})"


def format_expr(e: MzvExpr) -> str:
    """E.g. ``"1/2·ζ(2)-1/3·ζ(3)"``; constants print bare, zero as ``"0"``."""
    if not e:
        return "0"
    parts = []
    for m, c in e:
        body = str(abs(c)) if not m else f"{abs(c)}·{format_monomial(m)}"
        parts.append(("-" if c < 0 else "+") + body)
    text = "".join(parts)
    return text[1:] if text[0] == "+" else text


@lru_cache(maxsize=None)
def _flatten_monomial(m: Monomial) -> tuple:
    acc = Combination.of(())
    for f in m:
        acc = product_linear(acc, Combination.of(f), Product.STUFFLE)
    return tuple(acc.terms.items())


def flatten_products(e: MzvExpr) -> MzvExpr:
    """Rewrite every multi-factor monomial as single symbols via ``*``."""
    out: dict[Monomial, Fraction] = {}
    for m, c in e.terms.items():
        if len(m) <= 1:
            pieces = ((m[0] if m else (), 1),)
        else:
            pieces = _flatten_monomial(m)
        for k, n in pieces:
            key = (k,) if k else ONE
            v = out.get(key, 0) + c * n
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return MzvExpr._raw(out)
