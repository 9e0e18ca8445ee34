"""Exact determinant of the circulant a[i][j] = s[(i - j) mod N] by multi-modular elimination."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .numtheory import is_prime
from .sequence import BinarySequence
from .spectra import DetClosedForm

MAX_N = 1024
_PRIME_CEILING = 1 << 26


_primes: list[int] = []


def _extend_primes(count: int) -> None:
    n = _primes[-1] - 2 if _primes else _PRIME_CEILING - 1
    while len(_primes) < count:
        if is_prime(n):
            _primes.append(n)
        n -= 2


def word_primes(count: int, skip: int = 0) -> tuple[int, ...]:
    """Primes below 2^26 in descending order, after skipping the first ``skip``."""
    _extend_primes(skip + count)
    return tuple(_primes[skip:skip + count])


def hadamard_bound(column: Sequence[int]) -> int:
    """Integer upper bound on |det| for the circulant: every row has the norm of ``column``."""
    N = len(column)
    norm2 = sum(c * c for c in column)
    # sqrt(norm2)^N, rounded up
    root = math.isqrt(norm2**N)
    return root if root * root == norm2**N else root + 1


def primes_needed(bound: int, skip: int = 0) -> tuple[int, ...]:
    """Shortest prefix of the prime list whose product exceeds ``2 * bound``."""
    count, product = 0, 1
    while product <= 2 * bound:
        count += 1
        product *= word_primes(count, skip)[-1]
    return word_primes(count, skip)


def crt_signed(residues: Sequence[int], primes: Sequence[int]) -> int:
    """Combine residues and lift to the symmetric range (-M/2, M/2]."""
    value, modulus = 0, 1
    for r, prime in zip(residues, primes):
        # value + modulus * t = r (mod prime)
        t = (r - value) * pow(modulus, -1, prime) % prime
        value += modulus * t
        modulus *= prime
    return value - modulus if value > modulus // 2 else value


def _column(seq: BinarySequence | Sequence[int]) -> tuple[int, ...]:
    return seq.bits if isinstance(seq, BinarySequence) else tuple(int(c) for c in seq)


def det_exact(
    seq: BinarySequence | Sequence[int],
    *,
    skip_primes: int = 0,
    workers: int | None = None,
) -> int:
    """Exact determinant; ``skip_primes`` selects a disjoint prime set for cross-checks."""
    column = _column(seq)
    N = len(column)
    if N > MAX_N:
        raise ValueError(f"N = {N} exceeds the determinant cap {MAX_N}")
    bound = hadamard_bound(column)
    if bound == 0:
        return 0
    primes = primes_needed(bound, skip_primes)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            residues = list(pool.map(kernels.det_mod_prime, [column] * len(primes), primes))
    else:
        residues = [kernels.det_mod_prime(column, prime) for prime in primes]
    return crt_signed(residues, primes)


@dataclass(frozen=True)
class DetReport:
    det_exact: int
    det_plus: int
    det_minus: int
    matched_sign: str  # "plus", "minus" or "none"
    hadamard_bound: int
    primes_used: int

    def as_dict(self) -> dict:
        return {
            "det_exact": str(self.det_exact),
            "det_plus": str(self.det_plus),
            "det_minus": str(self.det_minus),
            "matched_sign": self.matched_sign,
            "hadamard_bound": str(self.hadamard_bound),
            "primes_used": self.primes_used,
        }


def match_closed_form(
    seq: BinarySequence,
    cf: DetClosedForm,
    det: int | None = None,
    *,
    workers: int | None = None,
) -> DetReport:
    column = _column(seq)
    bound = hadamard_bound(column)
    if det is None:
        det = det_exact(column, workers=workers)
    candidates = cf.candidates()
    matched = next((sign for sign, value in candidates.items() if value == det), "none")
    return DetReport(
        det_exact=det,
        det_plus=candidates["plus"],
        det_minus=candidates["minus"],
        matched_sign=matched,
        hadamard_bound=bound,
        primes_used=len(primes_needed(bound)) if bound else 0,
    )
