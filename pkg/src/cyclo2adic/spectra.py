"""Gauss periods, the spectrum S(w_N^a) by class, and the closed-form determinant."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomy import CyclotomicPartition, Label
from .numtheory import ParamError, SequenceParams, legendre
from .sequence import BinarySequence


def tolerance(N: int) -> float:
    return 1e-6 * math.sqrt(N)


def _root_sum(exponents, modulus: int) -> complex:
    k = np.asarray(exponents, dtype=np.int64) % modulus
    return complex(np.exp(2j * np.pi * k / modulus).sum())


@dataclass(frozen=True)
class GaussPeriods:
    eta0: complex
    eta1: complex
    delta0p: complex
    delta1p: complex
    delta0q: complex
    delta1q: complex
    p: int
    q: int

    @property
    def N(self) -> int:
        return self.p * self.q

    @property
    def eta(self) -> tuple[complex, complex]:
        return self.eta0, self.eta1

    @property
    def delta_p(self) -> tuple[complex, complex]:
        return self.delta0p, self.delta1p

    @property
    def delta_q(self) -> tuple[complex, complex]:
        return self.delta0q, self.delta1q


def gauss_periods(part: CyclotomicPartition) -> GaussPeriods:
    params = part.params
    p, q, N = params.p, params.q, params.N
    cm = part.class_members
    return GaussPeriods(
        eta0=_root_sum(sorted(part.D0), N),
        eta1=_root_sum(sorted(part.D1), N),
        # D_i^(p) q stores r*q; the class itself is the residues r mod p
        delta0p=_root_sum([a // q for a in cm[Label.D0p_q]], p),
        delta1p=_root_sum([a // q for a in cm[Label.D1p_q]], p),
        delta0q=_root_sum([a // p for a in cm[Label.D0q_p]], q),
        delta1q=_root_sum([a // p for a in cm[Label.D1q_p]], q),
        p=p,
        q=q,
    )


def lemma1_residuals(gp: GaussPeriods) -> dict[str, float]:
    """Absolute residuals of the sum and product identities for each family of periods.

    The eta product is (1 + pq)/4 when pq = 3 (mod 4), which covers every
    strict pair; for pq = 1 (mod 4) it is (1 - pq)/4.
    """
    p, q = gp.p, gp.q
    N = p * q
    eta_target = (1 + N) / 4 if N % 4 == 3 else (1 - N) / 4
    out = {
        "eta_sum": abs(gp.eta0 + gp.eta1 - 1),
        "eta_product": abs(gp.eta0 * gp.eta1 - eta_target),
    }
    for name, prime, (d0, d1) in (("p", p, gp.delta_p), ("q", q, gp.delta_q)):
        target = (1 - prime) / 4 if prime % 4 == 1 else (1 + prime) / 4
        out[f"delta_{name}_sum"] = abs(d0 + d1 + 1)
        out[f"delta_{name}_product"] = abs(d0 * d1 - target)
    return out


@dataclass(frozen=True)
class Lemma2Result:
    value: complex
    sign: str | None  # "+" or "-", None if neither branch is within tolerance
    residual: float
    ok: bool


def lemma2_check(gp: GaussPeriods) -> Lemma2Result:
    """eta0^2 (d1p d1q + d0p d0q) + eta1^2 (d1p d0q + d0p d1q) against (1 - pq)/4 +- pq/2."""
    pq = gp.N
    value = gp.eta0**2 * (gp.delta1p * gp.delta1q + gp.delta0p * gp.delta0q) + gp.eta1**2 * (
        gp.delta1p * gp.delta0q + gp.delta0p * gp.delta1q
    )
    branches = {"+": (1 - pq) / 4 + pq / 2, "-": (1 - pq) / 4 - pq / 2}
    sign, target = min(branches.items(), key=lambda kv: abs(value - kv[1]))
    residual = abs(value - target)
    ok = residual < tolerance(pq)
    return Lemma2Result(value=value, sign=sign if ok else None, residual=residual, ok=ok)


def spectrum_table(gp: GaussPeriods) -> dict[Label, complex]:
    """Value of S(w_N^a) for each class label.

    For a = r*p, r in D_j^(q), only the D_1^(q) p part of the support
    survives and gives the q-period with index j + 1 + ind_q(p); the
    Q classes are symmetric with the roles of p and q exchanged. The unit
    classes pick eta from a*D_1 and one period from each prime.
    """
    p, q = gp.p, gp.q
    ind_q_of_p = 0 if legendre(p, q) == 1 else 1
    ind_p_of_q = 0 if legendre(q, p) == 1 else 1
    dp, dq, eta = gp.delta_p, gp.delta_q, gp.eta
    return {
        Label.ZERO: complex((p * q - 1) / 2),
        Label.D0q_p: dq[(1 + ind_q_of_p) % 2],
        Label.D1q_p: dq[ind_q_of_p],
        Label.D0p_q: dp[(1 + ind_p_of_q) % 2],
        Label.D1p_q: dp[ind_p_of_q],
        Label.D00: eta[1] + dp[1] + dq[1],
        Label.D01: eta[1] + dp[0] + dq[0],
        Label.D10: eta[0] + dp[0] + dq[1],
        Label.D11: eta[0] + dp[1] + dq[0],
    }


def spectrum_closed_form(a: int, gp: GaussPeriods, part: CyclotomicPartition) -> complex:
    if not 0 <= a < part.N:
        raise ValueError(f"residue {a} outside [0, {part.N})")
    return spectrum_table(gp)[Label(int(part.labels[a]))]


def spectrum_direct(a: int, seq: BinarySequence) -> complex:
    N = seq.N
    if not 0 <= a < N:
        raise ValueError(f"residue {a} outside [0, {N})")
    support = np.flatnonzero(seq.as_array())
    return _root_sum(a * support, N)


def spectrum_direct_all(seq: BinarySequence) -> np.ndarray:
    """S(w_N^a) for every a, each by its own direct sum (exponents reduced mod N exactly)."""
    N = seq.N
    support = np.flatnonzero(seq.as_array()).astype(np.int64)
    out = np.empty(N, dtype=np.complex128)
    for a in range(N):
        out[a] = np.exp(2j * np.pi * ((a * support) % N) / N).sum()
    return out


def spectrum_residual(part: CyclotomicPartition, seq: BinarySequence, gp: GaussPeriods | None = None) -> float:
    """max_a |direct - closed form|."""
    gp = gp or gauss_periods(part)
    table = spectrum_table(gp)
    closed = np.array([table[Label(int(lab))] for lab in part.labels])
    return float(np.max(np.abs(spectrum_direct_all(seq) - closed)))


def spectrum_product(seq: BinarySequence) -> complex:
    """Floating product of S(w_N^a) in index order; a diagnostic for det(A)."""
    prod = 1 + 0j
    for value in spectrum_direct_all(seq):
        prod *= complex(value)
    return prod


@dataclass(frozen=True)
class DetClosedForm:
    d: int
    delta_plus: Fraction
    delta_minus: Fraction
    det_plus: Fraction
    det_minus: Fraction

    def candidates(self) -> dict[str, int]:
        out = {}
        for sign, value in (("plus", self.det_plus), ("minus", self.det_minus)):
            if value.denominator != 1:
                raise ArithmeticError(f"closed-form determinant ({sign}) is not integral: {value}")
            out[sign] = value.numerator
        return out


def det_closed_form(params: SequenceParams) -> DetClosedForm:
    """Both sign branches of (pq-1)/2 ((1-p)/4)^((p-1)/2) ((1+q)/4)^((q-1)/2) Delta^(e/2)."""
    p, q, e = params.p, params.q, params.e
    if (q - p - 2) % 4:
        raise ParamError("congruence-violation", f"d = ({q} - {p} - 2)/4 is not an integer")
    if not params.satisfies_congruences:
        raise ParamError("congruence-violation", "closed form needs p = 1 (mod 4), q = 3 (mod 4)")
    d = (q - p - 2) // 4
    pq = p * q
    prefactor = Fraction(pq - 1, 2) * Fraction(1 - p, 4) ** ((p - 1) // 2) * Fraction(1 + q, 4) ** ((q - 1) // 2)

    def delta(sign: int) -> Fraction:
        return (
            Fraction((1 + pq) ** 2, 16)
            + Fraction(sign - d, 2) * pq
            + d * d
            + Fraction(3, 2) * d
            + Fraction(1, 2)
        )

    dp, dm = delta(1), delta(-1)
    return DetClosedForm(
        d=d,
        delta_plus=dp,
        delta_minus=dm,
        det_plus=prefactor * dp ** (e // 2),
        det_minus=prefactor * dm ** (e // 2),
    )
