"""One period of the balanced cyclotomic sequence and its elementary statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .cyclotomy import ONE_LABELS, CyclotomicPartition
from .numtheory import SequenceParams


@dataclass(frozen=True)
class BinarySequence:
    """One period of a binary sequence, bit ``i`` weighting ``2**i``.

    ``params`` is ``None`` for sequences that do not come from the
    cyclotomic construction (test vectors, synthetic inputs).
    """

    bits: tuple[int, ...]
    params: SequenceParams | None = None

    def __post_init__(self):
        if not self.bits:
            raise ValueError("sequence period must be at least 1")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @classmethod
    def from_bits(cls, bits: Iterable[int] | str, params: SequenceParams | None = None):
        if isinstance(bits, str):
            bits = [int(ch) for ch in bits]
        return cls(tuple(int(b) for b in bits), params)

    @property
    def N(self) -> int:
        return len(self.bits)

    @property
    def bitstring(self) -> str:
        return "".join(map(str, self.bits))

    def as_array(self) -> np.ndarray:
        return np.fromiter(self.bits, dtype=np.int64, count=len(self.bits))


def generate(part: CyclotomicPartition) -> BinarySequence:
    ones = np.isin(part.labels, np.fromiter(ONE_LABELS, dtype=np.uint8))
    return BinarySequence(tuple(int(b) for b in ones), part.params)


def weight(seq: BinarySequence) -> int:
    return sum(seq.bits)


def autocorrelation(seq: BinarySequence, tau: int) -> int:
    """Periodic autocorrelation sum of (-1)^(s[i+tau] + s[i]) over one period."""
    if not 0 <= tau < seq.N:
        raise ValueError(f"shift {tau} outside [0, {seq.N})")
    signs = 1 - 2 * seq.as_array()
    return int(np.dot(signs, np.roll(signs, -tau)))


def autocorrelation_spectrum(seq: BinarySequence) -> dict[int, int]:
    """Value distribution of the out-of-phase autocorrelation, ``{value: count}``."""
    counts: dict[int, int] = {}
    for tau in range(1, seq.N):
        v = autocorrelation(seq, tau)
        counts[v] = counts.get(v, 0) + 1
    return dict(sorted(counts.items()))


def s_of_2(seq: BinarySequence) -> int:
    # bitstring is s_0 first; int() wants the most significant digit first
    return int(seq.bitstring[::-1], 2)


def linear_complexity(seq: BinarySequence) -> int:
    """Linear complexity of the periodic sequence, from two concatenated periods."""
    return kernels.berlekamp_massey(seq.bits + seq.bits)
