"""Exact 2-adic complexity, theorem verdicts and the rational approximation oracle."""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Sequence

from .numtheory import SequenceParams
from .sequence import BinarySequence, s_of_2


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


class DegenerateSequenceWarning(UserWarning):
    pass


@dataclass(frozen=True)
class AdicReport:
    """Reduced form ``m/n`` of ``S(2)/(2^N - 1)`` and the derived complexity.

    ``m`` is non-negative as in the usual rational form; the stream itself
    is the 2-adic integer ``adic_sign * m / n`` with ``adic_sign = -1``
    for every purely periodic stream (``0`` for the all-zero stream).
    """

    params: SequenceParams | None
    N: int
    S2: int
    modulus: int
    gcd: int
    m: int
    n: int
    adic_sign: int
    phi2: int
    lower_bound: int | None
    meets_lower_bound: bool | None
    is_maximal: bool
    degenerate: bool

    def as_dict(self) -> dict:
        big = lambda v: None if v is None else str(v)  # noqa: E731
        return {
            "N": self.N,
            "S2": big(self.S2),
            "modulus": big(self.modulus),
            "gcd": big(self.gcd),
            "m": big(self.m),
            "n": big(self.n),
            "adic_sign": self.adic_sign,
            "phi2": self.phi2,
            "lower_bound": self.lower_bound,
            "meets_lower_bound": self.meets_lower_bound,
            "is_maximal": self.is_maximal,
            "degenerate": self.degenerate,
        }


def phi2_from_denominator(n: int) -> int:
    """floor(log2(n + 1)) by bit length, no floating point."""
    return (n + 1).bit_length() - 1


def two_adic_complexity(seq: BinarySequence) -> AdicReport:
    N = seq.N
    S2 = s_of_2(seq)
    modulus = (1 << N) - 1
    g = math.gcd(S2, modulus)
    m, n = S2 // g, modulus // g
    degenerate = S2 == 0
    if degenerate:
        warnings.warn(
            "all-zero sequence: reporting phi2 = floor(log2(2)) = 1 literally",
            DegenerateSequenceWarning,
            stacklevel=2,
        )
    phi2 = phi2_from_denominator(n)
    params = seq.params
    lower = params.lower_bound if params is not None else None
    return AdicReport(
        params=params,
        N=N,
        S2=S2,
        modulus=modulus,
        gcd=g,
        m=m,
        n=n,
        adic_sign=0 if degenerate else -1,
        phi2=phi2,
        lower_bound=lower,
        meets_lower_bound=None if lower is None else phi2 >= lower,
        is_maximal=phi2 == N,
        degenerate=degenerate,
    )


def check_theorem1(report: AdicReport) -> Verdict:
    """phi2 >= pq - p - q - 1 whenever p = 1, q = 3 (mod 4) and |q - p| < sqrt(pq) - 1."""
    params = report.params
    if params is None or not params.satisfies_congruences or not params.theorem1_applicable:
        return Verdict.NOT_APPLICABLE
    return Verdict.PASS if report.phi2 >= params.lower_bound else Verdict.FAIL


def check_theorem2(report: AdicReport) -> Verdict:
    """phi2 = N whenever p = 1, q = 3 (mod 4) and q - p = 2."""
    params = report.params
    if params is None or not params.satisfies_congruences or not params.theorem2_applicable:
        return Verdict.NOT_APPLICABLE
    return Verdict.PASS if report.phi2 == report.N and report.gcd == 1 else Verdict.FAIL


def mersenne_gcd_check(p: int, q: int) -> tuple[bool, bool]:
    """Check gcd(2^a - 1, (2^pq - 1)/(2^a - 1)) = gcd(2^a - 1, b) for (a, b) = (p, q), (q, p).

    When one of the two is the larger exponent, its side must also equal 1.
    """
    full = (1 << (p * q)) - 1
    results = []
    for a, b in ((p, q), (q, p)):
        mersenne = (1 << a) - 1
        cofactor, rem = divmod(full, mersenne)
        ok = rem == 0 and math.gcd(mersenne, cofactor) == math.gcd(mersenne, b)
        if a > b:
            ok = ok and math.gcd(mersenne, cofactor) == 1
        results.append(ok)
    return results[0], results[1]


def gcd_divisibility_check(seq: BinarySequence, det: int) -> Verdict:
    """gcd(S(2), 2^N - 1) divides gcd(det, 2^N - 1); only meaningful for det != 0."""
    if det == 0:
        return Verdict.NOT_APPLICABLE
    modulus = (1 << seq.N) - 1
    lhs = math.gcd(s_of_2(seq), modulus)
    rhs = math.gcd(det, modulus)
    return Verdict.PASS if rhs % lhs == 0 else Verdict.FAIL


def _size(h: tuple[int, int]) -> int:
    return max(abs(h[0]), abs(h[1]))


def _best_odd_multiplier(f: tuple[int, int], g: tuple[int, int]) -> int:
    """Odd ``d`` minimising max(|f0 + d g0|, |f1 + d g1|).

    The objective is convex and piecewise linear in ``d``; its real minimiser
    sits at one of the breakpoints below, so the odd integers bracketing
    each breakpoint contain the optimum.
    """
    candidates = set()
    for num, den in (
        (f[0], g[0]),
        (f[1], g[1]),
        (f[0] - f[1], g[0] - g[1]),
        (f[0] + f[1], g[0] + g[1]),
    ):
        if den:
            centre = -num // den
            candidates.update(d for d in range(centre - 2, centre + 3) if d % 2)
    if not candidates:
        candidates = {-1, 1}
    return min(sorted(candidates, key=lambda d: (abs(d), d)),
               key=lambda d: _size((f[0] + d * g[0], f[1] + d * g[1])))


def raa_synthesize(prefix: Sequence[int]) -> tuple[int, int]:
    """Rational approximation of a 2-adic stream from its first ``T`` bits.

    Returns ``(m, n)`` with ``n > 0`` odd, ``gcd(m, n) = 1`` and
    ``m/n = sum(prefix[i] * 2**i)`` modulo ``2**T``, minimising
    ``max(|m|, |n|)`` over the lattice of such pairs (Klapper-Goresky).
    """
    bits = [int(b) & 1 for b in prefix]
    T = len(bits)
    if T < 2:
        raise ValueError("need at least two bits")
    if not any(bits):
        return 0, 1
    k = bits.index(1)
    alpha = 1 << k
    f, g = (0, 2), (1 << k, 1)
    for i in range(k + 1, T):
        alpha |= bits[i] << i
        if (alpha * g[1] - g[0]) % (1 << (i + 1)) == 0:
            f = (2 * f[0], 2 * f[1])
        elif _size(g) < _size(f):
            d = _best_odd_multiplier(f, g)
            g, f = (f[0] + d * g[0], f[1] + d * g[1]), (2 * g[0], 2 * g[1])
        else:
            d = _best_odd_multiplier(g, f)
            g, f = (g[0] + d * f[0], g[1] + d * f[1]), (2 * f[0], 2 * f[1])
    m, n = g
    if n < 0:
        m, n = -m, -n
    common = math.gcd(m, n)
    return m // common, n // common
