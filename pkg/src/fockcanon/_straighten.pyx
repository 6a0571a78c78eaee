# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled straightening kernel for q-wedge words.

Same contract and algorithm as ``_straighten_py``; see that module for the
rewriting rule and the termination argument.  Words stay Python tuples and
coefficients arbitrary-precision ints; the win comes from typed index loops
and cheaper bookkeeping in the hot path.
"""

import heapq

BACKEND = "cython"

_EXPANSION_CACHE = {}


def _expansion(long d, long gap, long n):
    key = (d, gap, n)
    hit = _EXPANSION_CACHE.get(key)
    if hit is not None:
        return hit
    terms = []
    cdef long t = 0
    cdef long s, sign
    while True:
        if t % 2 == 0:
            s = (t // 2) * n + d
        else:
            s = (t // 2 + 1) * n
        if 2 * s >= gap:
            break
        sign = -1 if t % 2 else 1
        terms.append((s, sign, -t - 2, -sign, -t))
        t += 1
    result = tuple(terms)
    _EXPANSION_CACHE[key] = result
    return result


cdef inline tuple _potential(tuple w):
    cdef long sumsq = 0, inv = 0, vi, vj
    cdef Py_ssize_t i, j, k = len(w)
    for i in range(k):
        vi = w[i]
        sumsq += vi * vi
        for j in range(i + 1, k):
            vj = w[j]
            if vi <= vj:
                inv += 1
    return (sumsq, inv)


cdef inline Py_ssize_t _first_ascent(tuple w):
    cdef Py_ssize_t j, k = len(w)
    cdef long a, b
    for j in range(k - 1):
        a = w[j]
        b = w[j + 1]
        if a <= b:
            return j
    return -1


cdef inline void _merge(dict acc, dict poly):
    for e, c in poly.items():
        nc = acc.get(e, 0) + c
        if nc:
            acc[e] = nc
        else:
            acc.pop(e, None)


cdef inline void _push(dict pending, list heap, tuple word, dict poly):
    cdef dict cur = pending.get(word)
    cdef tuple pot
    if cur is None:
        pending[word] = dict(poly)
        pot = _potential(word)
        heapq.heappush(heap, (-pot[0], -pot[1], word))
    else:
        _merge(cur, poly)
        if not cur:
            del pending[word]


def straighten_terms(items, long n):
    """Normal-order a batch of (word, coeff-dict) terms."""
    cdef dict pending = {}
    cdef list heap = []
    cdef dict out = {}
    cdef dict poly, acc, term
    cdef tuple w, head, tail, swapped, w2, entry
    cdef Py_ssize_t j
    cdef long a, b, d, s, c2, e2, c0, e0

    for w_raw, p_raw in items:
        if p_raw:
            _push(pending, heap, tuple(w_raw), p_raw)

    while heap:
        entry = heapq.heappop(heap)
        w = entry[2]
        poly = pending.pop(w, None)
        if poly is None:
            continue
        j = _first_ascent(w)
        if j < 0:
            acc = out.get(w)
            if acc is None:
                out[w] = poly
            else:
                _merge(acc, poly)
            continue
        a = w[j]
        b = w[j + 1]
        if a == b:
            continue
        head = w[:j]
        tail = w[j + 2:]
        swapped = head + (b, a) + tail
        d = (b - a) % n
        if d == 0:
            _push(pending, heap, swapped, {e: -c for e, c in poly.items()})
            continue
        _push(pending, heap, swapped, {e - 1: -c for e, c in poly.items()})
        for s, c2, e2, c0, e0 in _expansion(d, b - a, n):
            w2 = head + (b - s, a + s) + tail
            term = {}
            for e, c in poly.items():
                nc = term.get(e + e2, 0) + c * c2
                if nc:
                    term[e + e2] = nc
                else:
                    term.pop(e + e2, None)
                nc = term.get(e + e0, 0) + c * c0
                if nc:
                    term[e + e0] = nc
                else:
                    term.pop(e + e0, None)
            if term:
                _push(pending, heap, w2, term)
    return {w: p for w, p in out.items() if p}
