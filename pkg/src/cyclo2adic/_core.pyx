# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: modular circulant determinant and GF(2) Berlekamp-Massey."""

from libc.stdint cimport uint64_t, int64_t, uint8_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy


cdef uint64_t _inv_mod(uint64_t a, uint64_t m) nogil:
    cdef int64_t t = 0, newt = 1, tmp
    cdef int64_t r = <int64_t>m, newr = <int64_t>a, quo
    while newr != 0:
        quo = r // newr
        tmp = t - quo * newt
        t = newt
        newt = tmp
        tmp = r - quo * newr
        r = newr
        newr = tmp
    if t < 0:
        t += <int64_t>m
    return <uint64_t>t


def det_mod_prime(column, uint64_t prime):
    """Determinant modulo ``prime`` (< 2**26) of the circulant built from ``column``.

    Non-pivot rows are left unreduced during elimination: each update adds
    less than 2**52, so up to 1024 pivots cannot overflow 64 bits. A row is
    reduced once, when it becomes the pivot row.
    """
    if prime >= (<uint64_t>1 << 26):
        raise ValueError("prime must be below 2**26")
    cdef Py_ssize_t n = len(column)
    if n == 0:
        return 1
    if n > 4096:
        raise ValueError("matrix too large for lazy reduction")
    cdef uint64_t* col = <uint64_t*>malloc(n * sizeof(uint64_t))
    cdef uint64_t* a = <uint64_t*>malloc(n * n * sizeof(uint64_t))
    if col == NULL or a == NULL:
        free(col)
        free(a)
        raise MemoryError()
    cdef Py_ssize_t i, j, k, r, piv
    cdef uint64_t det = 1, inv, f, negf, v
    cdef uint64_t* rowk
    cdef uint64_t* rowr
    cdef uint64_t tmp
    cdef bint negate = False
    for i in range(n):
        col[i] = <uint64_t>(column[i] % prime)
    with nogil:
        for i in range(n):
            for j in range(n):
                a[i * n + j] = col[(i - j + n) % n]
        for k in range(n):
            piv = -1
            for r in range(k, n):
                a[r * n + k] %= prime
                if a[r * n + k] != 0:
                    piv = r
                    break
            if piv < 0:
                det = 0
                break
            if piv != k:
                for j in range(k, n):
                    tmp = a[k * n + j]
                    a[k * n + j] = a[piv * n + j]
                    a[piv * n + j] = tmp
                negate = not negate
            rowk = a + k * n
            for j in range(k + 1, n):
                rowk[j] %= prime
            det = det * rowk[k] % prime
            inv = _inv_mod(rowk[k], prime)
            for r in range(k + 1, n):
                rowr = a + r * n
                v = rowr[k] % prime
                if v == 0:
                    continue
                f = v * inv % prime
                negf = prime - f
                for j in range(k + 1, n):
                    rowr[j] += negf * rowk[j]
    free(col)
    free(a)
    if negate and det != 0:
        det = prime - det
    return int(det)


def berlekamp_massey(bits):
    """Length of the shortest LFSR over GF(2) that generates ``bits``."""
    cdef Py_ssize_t n = len(bits)
    cdef uint8_t* s = <uint8_t*>malloc(n + 1)
    cdef uint8_t* c = <uint8_t*>malloc(n + 1)
    cdef uint8_t* b = <uint8_t*>malloc(n + 1)
    cdef uint8_t* t = <uint8_t*>malloc(n + 1)
    if s == NULL or c == NULL or b == NULL or t == NULL:
        free(s); free(c); free(b); free(t)
        raise MemoryError()
    cdef Py_ssize_t i, k, length = 0, shift = 1
    cdef uint8_t d
    for i in range(n):
        s[i] = <uint8_t>(bits[i] & 1)
    with nogil:
        memset(c, 0, n + 1)
        memset(b, 0, n + 1)
        c[0] = 1
        b[0] = 1
        for k in range(n):
            d = s[k]
            for i in range(1, length + 1):
                d ^= c[i] & s[k - i]
            if d:
                memcpy(t, c, n + 1)
                for i in range(0, n + 1 - shift):
                    c[i + shift] ^= b[i]
                if 2 * length <= k:
                    length = k + 1 - length
                    memcpy(b, t, n + 1)
                    shift = 1
                else:
                    shift += 1
            else:
                shift += 1
    free(s); free(c); free(b); free(t)
    return length
