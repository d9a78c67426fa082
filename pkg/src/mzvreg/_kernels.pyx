# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled shuffle/stuffle expansion kernels.

Same tabulation as ``_kernels_py`` but every intermediate word is packed into
a 64-bit mask (indices through their zero-one encoding, so appending a part
``p`` is ``(key << p) | 1``) and tables are C++ hash maps.
"""
from libc.stdint cimport uint64_t, int64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

ctypedef unordered_map[uint64_t, int64_t] table_t

BACKEND = "cython"
MAX_BITS = 62


cdef inline void _extend(table_t& dst, table_t& src, int shift, uint64_t tail):
    for item in src:
        dst[(item.first << shift) | tail] += item.second


cdef dict _decode_words(table_t& table, int length):
    cdef dict out = {}
    cdef int i
    for item in table:
        out[tuple([<int>((item.first >> (length - 1 - i)) & 1) for i in range(length)])] = item.second
    return out


cdef dict _decode_indices(table_t& table, int total):
    cdef dict out = {}
    cdef int i, run
    cdef list parts
    for item in table:
        parts = []
        run = 0
        for i in range(total - 1, -1, -1):
            run += 1
            if (item.first >> i) & 1:
                parts.append(run)
                run = 0
        out[tuple(parts)] = item.second
    return out


def shuffle_counts(u, v):
    """Interleavings of the 0/1 words ``u`` and ``v`` with multiplicity."""
    cdef vector[int] a = list(u)
    cdef vector[int] b = list(v)
    cdef int p = a.size(), q = b.size(), i, j
    if p + q > MAX_BITS:
        raise OverflowError("combined word length exceeds the packed kernel limit")
    for i in range(p):
        if a[i] != 0 and a[i] != 1:
            raise ValueError("word letters must be 0 or 1")
    for j in range(q):
        if b[j] != 0 and b[j] != 1:
            raise ValueError("word letters must be 0 or 1")
    cdef vector[table_t] prev
    cdef vector[table_t] cur
    prev.resize(q + 1)
    prev[0][0] = 1
    for j in range(1, q + 1):
        _extend(prev[j], prev[j - 1], 1, b[j - 1])
    for i in range(p):
        cur.clear()
        cur.resize(q + 1)
        _extend(cur[0], prev[0], 1, a[i])
        for j in range(1, q + 1):
            _extend(cur[j], prev[j], 1, a[i])
            _extend(cur[j], cur[j - 1], 1, b[j - 1])
        prev.swap(cur)
    return _decode_words(prev[q], p + q)


def stuffle_counts(k, l):
    """Quasi-shuffle of the positive-part sequences ``k`` and ``l``."""
    cdef vector[int] a = list(k)
    cdef vector[int] b = list(l)
    cdef int r = a.size(), s = b.size(), i, j, total = 0
    for i in range(r):
        if a[i] < 1:
            raise ValueError("index parts must be positive")
        total += a[i]
    for j in range(s):
        if b[j] < 1:
            raise ValueError("index parts must be positive")
        total += b[j]
    if total > MAX_BITS:
        raise OverflowError("combined weight exceeds the packed kernel limit")
    cdef vector[table_t] prev
    cdef vector[table_t] cur
    prev.resize(s + 1)
    prev[0][0] = 1
    for j in range(1, s + 1):
        _extend(prev[j], prev[j - 1], b[j - 1], 1)
    for i in range(r):
        cur.clear()
        cur.resize(s + 1)
        _extend(cur[0], prev[0], a[i], 1)
        for j in range(1, s + 1):
            _extend(cur[j], cur[j - 1], b[j - 1], 1)
            _extend(cur[j], prev[j], a[i], 1)
            _extend(cur[j], prev[j - 1], a[i] + b[j - 1], 1)
        prev.swap(cur)
    return _decode_indices(prev[s], total)
