"""Pure-Python shuffle/stuffle expansion kernels.

Both kernels tabulate the product recursion over prefix pairs ``(i, j)``:
row ``i`` holds, for every ``j``, the expansion of ``u[:i]`` with ``v[:j]``.
Results map each output sequence to its (positive integer) multiplicity.
"""
from __future__ import annotations

from collections import defaultdict

BACKEND = "python"


def _extend(dst, src, letter):
    for key, count in src.items():
        dst[key + (letter,)] += count


def shuffle_counts(u, v):
    """Interleavings of the letter sequences ``u`` and ``v`` with multiplicity."""
    u, v = tuple(u), tuple(v)
    q = len(v)
    prev = [defaultdict(int) for _ in range(q + 1)]
    prev[0][()] = 1
    for j in range(1, q + 1):
        _extend(prev[j], prev[j - 1], v[j - 1])
    for a in u:
        cur = [defaultdict(int) for _ in range(q + 1)]
        _extend(cur[0], prev[0], a)
        for j in range(1, q + 1):
            _extend(cur[j], prev[j], a)
            _extend(cur[j], cur[j - 1], v[j - 1])
        prev = cur
    return dict(prev[q])


def stuffle_counts(k, l):
    """Quasi-shuffle of the part sequences ``k`` and ``l`` with multiplicity.

    Each cell combines ``(k[:i] * l[:j-1], l_j)``, ``(k[:i-1] * l[:j], k_i)``
    and ``(k[:i-1] * l[:j-1], k_i + l_j)``.
    """
    k, l = tuple(k), tuple(l)
    s = len(l)
    prev = [defaultdict(int) for _ in range(s + 1)]
    prev[0][()] = 1
    for j in range(1, s + 1):
        _extend(prev[j], prev[j - 1], l[j - 1])
    for a in k:
        cur = [defaultdict(int) for _ in range(s + 1)]
        _extend(cur[0], prev[0], a)
        for j in range(1, s + 1):
            b = l[j - 1]
            _extend(cur[j], cur[j - 1], b)
            _extend(cur[j], prev[j], a)
            _extend(cur[j], prev[j - 1], a + b)
        prev = cur
    return dict(prev[s])
