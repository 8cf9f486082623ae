# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: pairwise sumset merge and bitset dilate-sum fold.

Callers pre-validate 64-bit ranges and span limits (see ``backend``), so
these routines run on raw int64 values without further checks.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc, qsort
from libc.string cimport memset

COMPILED = True


cdef extern from *:
    int __builtin_popcountll(unsigned long long x) nogil


cdef int _cmp_int64(const void *pa, const void *pb) noexcept nogil:
    cdef int64_t a = (<const int64_t *> pa)[0]
    cdef int64_t b = (<const int64_t *> pb)[0]
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def sumset_elements(a, b):
    """Sorted unique pairwise sums of two nonempty sorted int sequences."""
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t n = na * nb
    cdef Py_ssize_t i, j
    cdef int64_t v
    cdef int64_t *xs = <int64_t *> malloc(na * sizeof(int64_t))
    cdef int64_t *ys = <int64_t *> malloc(nb * sizeof(int64_t))
    cdef int64_t *buf = <int64_t *> malloc(n * sizeof(int64_t))
    if xs == NULL or ys == NULL or buf == NULL:
        free(xs)
        free(ys)
        free(buf)
        raise MemoryError()
    try:
        for i in range(na):
            xs[i] = a[i]
        for j in range(nb):
            ys[j] = b[j]
        with nogil:
            for i in range(na):
                for j in range(nb):
                    buf[i * nb + j] = xs[i] + ys[j]
            qsort(buf, <size_t> n, sizeof(int64_t), _cmp_int64)
        out = []
        for i in range(n):
            v = buf[i]
            if i == 0 or v != buf[i - 1]:
                out.append(v)
        return out
    finally:
        free(xs)
        free(ys)
        free(buf)


cdef inline void _shift_or(uint64_t *dst, const uint64_t *src,
                           Py_ssize_t src_words, int64_t offset) noexcept nogil:
    cdef Py_ssize_t wq = <Py_ssize_t> (offset >> 6)
    cdef int r = <int> (offset & 63)
    cdef Py_ssize_t i
    if r == 0:
        for i in range(src_words):
            dst[i + wq] |= src[i]
    else:
        for i in range(src_words):
            dst[i + wq] |= src[i] << r
            dst[i + wq + 1] |= src[i] >> (64 - r)


def bitset_fold_size(coeffs, sets):
    """|c0*S0 + c1*S1 + ...| via word-level shift-or; spans pre-checked."""
    cdef Py_ssize_t nterms = len(coeffs)
    cdef Py_ssize_t t, i, na
    cdef int64_t span = 0
    cdef int64_t c, mn, mx, aa, s, step, cur_bits, new_bits
    cdef Py_ssize_t words_cap, cur_w, new_w
    cdef int64_t total = 0
    cdef uint64_t *cur = NULL
    cdef uint64_t *nxt = NULL
    cdef uint64_t *tmp = NULL

    for t in range(nterms):
        elems = sets[t]
        c = coeffs[t]
        na = len(elems)
        mn = elems[0]
        mx = elems[na - 1]
        span += (c if c > 0 else -c) * (mx - mn)

    words_cap = <Py_ssize_t> ((span + 64) >> 6) + 2
    cur = <uint64_t *> malloc(words_cap * sizeof(uint64_t))
    nxt = <uint64_t *> malloc(words_cap * sizeof(uint64_t))
    if cur == NULL or nxt == NULL:
        free(cur)
        free(nxt)
        raise MemoryError()
    try:
        memset(cur, 0, words_cap * sizeof(uint64_t))
        cur[0] = 1
        cur_bits = 1
        for t in range(nterms):
            elems = sets[t]
            c = coeffs[t]
            na = len(elems)
            mn = elems[0]
            mx = elems[na - 1]
            step = (c if c > 0 else -c) * (mx - mn)
            new_bits = cur_bits + step
            cur_w = <Py_ssize_t> ((cur_bits + 63) >> 6)
            new_w = <Py_ssize_t> ((new_bits + 63) >> 6)
            memset(nxt, 0, (new_w + 1) * sizeof(uint64_t))
            for i in range(na):
                aa = elems[i]
                if c > 0:
                    s = c * (aa - mn)
                else:
                    s = (-c) * (mx - aa)
                _shift_or(nxt, cur, cur_w, s)
            tmp = cur
            cur = nxt
            nxt = tmp
            cur_bits = new_bits
        cur_w = <Py_ssize_t> ((cur_bits + 63) >> 6)
        with nogil:
            for i in range(cur_w):
                total += __builtin_popcountll(cur[i])
        return total
    finally:
        free(cur)
        free(nxt)
