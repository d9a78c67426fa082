"""Indices (compositions of positive integers) and their zero-one words.

An index is represented as a plain tuple of positive ints; the empty tuple is
the empty index.  A word is a tuple over ``{0, 1}``.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterator, Tuple

Index = Tuple[int, ...]
Word = Tuple[int, ...]

EMPTY_TEXT = "()"


class DomainError(ValueError):
    """Base class for inputs outside an operation's domain."""


class IndexParseError(DomainError):
    pass


class NotEncodableError(DomainError):
    pass


class NotAdmissibleError(DomainError):
    pass


_TOKEN_RE = re.compile(r"^[0-9]+$")


def parse_index(text: str) -> Index:
    """Parse ``"k1,k2,...,kr"`` (or ``"()"`` for the empty index).

    Surrounding parentheses and whitespace are tolerated, so ``"(2, 1)"``
    parses as well.
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        return ()
    parts = []
    for token in s.split(","):
        tok = token.strip()
        if not _TOKEN_RE.match(tok) or int(tok) == 0:
            raise IndexParseError(f"invalid index entry {tok!r} in {text!r}")
        parts.append(int(tok))
    return tuple(parts)


def format_index(k: Index) -> str:
    if not k:
        return EMPTY_TEXT
    return ",".join(str(p) for p in k)


def check_index(k) -> Index:
    k = tuple(k)
    for p in k:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise IndexParseError(f"index entries must be positive integers, got {p!r}")
    return k


def weight(k: Index) -> int:
    return sum(k)


def depth(k: Index) -> int:
    return len(k)


def sort_key(k: Index):
    """Canonical order: weight, then depth, then lexicographic on parts."""
    return (sum(k), len(k), k)


def is_admissible(k: Index) -> bool:
    return not k or k[0] > 1


def require_admissible(k: Index) -> Index:
    if not is_admissible(k):
        raise NotAdmissibleError(f"index ({format_index(k)}) is not admissible")
    return k


def index_to_word(k: Index) -> Word:
    word: list[int] = []
    for p in k:
        word.extend([0] * (p - 1))
        word.append(1)
    return tuple(word)


def word_to_index(w: Word) -> Index:
    if w and w[-1] != 1:
        raise NotEncodableError(f"word {list(w)} does not end in 1")
    parts = []
    run = 0
    for letter in w:
        run += 1
        if letter == 1:
            parts.append(run)
            run = 0
        elif letter != 0:
            raise NotEncodableError(f"word letters must be 0 or 1, got {letter!r}")
    return tuple(parts)


def leading_ones_decomposition(k: Index) -> tuple[int, Index]:
    """Split ``k = ({1}^b, l)`` with ``l`` admissible; return ``(b, l)``."""
    b = 0
    while b < len(k) and k[b] == 1:
        b += 1
    return b, k[b:]


def descend(k: Index, j: int) -> Index:
    """``k^j``: drop ``j`` of the leading ones of ``k``."""
    b, rest = leading_ones_decomposition(k)
    if not 0 <= j <= b:
        raise ValueError(f"j={j} outside 0..{b} for index ({format_index(k)})")
    return (1,) * (b - j) + rest


def reverse_index(k: Index) -> Index:
    return k[::-1]


def compositions(w: int, d: int) -> Iterator[Index]:
    """Compositions of ``w`` into ``d`` parts, lexicographic."""
    if w == 0:
        if d == 0:
            yield ()
        return
    if d < 1 or d > w:
        return
    for cuts in itertools.combinations(range(1, w), d - 1):
        bounds = (0,) + cuts + (w,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def enumerate_indices(w: int) -> Iterator[Index]:
    """All indices of weight ``w`` in canonical order, generated lazily."""
    if w < 0:
        raise ValueError("weight must be nonnegative")
    if w == 0:
        yield ()
        return
    for d in range(1, w + 1):
        yield from compositions(w, d)


def indices_up_to(max_weight: int, min_weight: int = 0) -> Iterator[Index]:
    for w in range(min_weight, max_weight + 1):
        yield from enumerate_indices(w)


def admissible_indices(w: int) -> Iterator[Index]:
    return (k for k in enumerate_indices(w) if is_admissible(k))
