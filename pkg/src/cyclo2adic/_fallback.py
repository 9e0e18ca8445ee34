"""Pure-Python kernels, used when the compiled ``_core`` extension is absent."""

from __future__ import annotations

from typing import Sequence


def det_mod_prime(column: Sequence[int], prime: int) -> int:
    """Determinant modulo ``prime`` of the circulant with ``a[i][j] = column[(i - j) % N]``."""
    n = len(column)
    col = [c % prime for c in column]
    rows = [[col[(i - j) % n] for j in range(n)] for i in range(n)]
    det = 1
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if rows[r][k]), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            det = -det
        pivot = rows[k][k]
        det = det * pivot % prime
        inv = pow(pivot, -1, prime)
        tail = rows[k][k + 1:]
        for r in range(k + 1, n):
            row = rows[r]
            f = row[k] * inv % prime
            if f:
                rows[r] = row[: k + 1] + [(a - f * b) % prime for a, b in zip(row[k + 1:], tail)]
    return det % prime


def berlekamp_massey(bits: Sequence[int]) -> int:
    """Length of the shortest LFSR over GF(2) that generates ``bits``."""
    c, b = 1, 1
    length, shift = 0, 1
    window = 0
    for n, bit in enumerate(bits):
        window = (window << 1) | (bit & 1)
        d = (c & window).bit_count() & 1
        if d:
            t = c
            c ^= b << shift
            if 2 * length <= n:
                length = n + 1 - length
                b = t
                shift = 1
            else:
                shift += 1
        else:
            shift += 1
    return length
