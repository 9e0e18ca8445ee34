"""Whiteman generalized cyclotomic classes of order 2 on Z_pq."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .numtheory import SequenceParams


class Label(enum.IntEnum):
    """Class labels. ``D0p_q`` is D_0^(p)*q and ``D0q_p`` is D_0^(q)*p."""

    ZERO = 0
    D00 = 1
    D01 = 2
    D10 = 3
    D11 = 4
    D0p_q = 5
    D1p_q = 6
    D0q_p = 7
    D1q_p = 8


# Labels whose residues carry a 1 in the sequence (the set C_1).
ONE_LABELS = frozenset({Label.D10, Label.D11, Label.D1p_q, Label.D1q_p})
D0_LABELS = (Label.D00, Label.D01)
D1_LABELS = (Label.D10, Label.D11)
P_LABELS = (Label.D0q_p, Label.D1q_p)
Q_LABELS = (Label.D0p_q, Label.D1p_q)


@dataclass(frozen=True)
class CyclotomicPartition:
    params: SequenceParams
    labels: np.ndarray  # uint8, length N, read-only
    class_members: Mapping[Label, tuple[int, ...]]

    @property
    def N(self) -> int:
        return self.params.N

    def members(self, *labels: Label) -> frozenset[int]:
        out: set[int] = set()
        for lab in labels:
            out.update(self.class_members[lab])
        return frozenset(out)

    @property
    def D0(self) -> frozenset[int]:
        return self.members(*D0_LABELS)

    @property
    def D1(self) -> frozenset[int]:
        return self.members(*D1_LABELS)

    @property
    def P(self) -> frozenset[int]:
        return self.members(*P_LABELS)

    @property
    def Q(self) -> frozenset[int]:
        return self.members(*Q_LABELS)

    @property
    def C0(self) -> frozenset[int]:
        return self.members(*(lab for lab in Label if lab not in ONE_LABELS))

    @property
    def C1(self) -> frozenset[int]:
        return self.members(*ONE_LABELS)

    def as_dict(self) -> dict[str, list[int]]:
        return {lab.name: list(self.class_members[lab]) for lab in Label}


def _powers(base: int, start: int, step: int, count: int, mod: int) -> list[int]:
    out = []
    cur = pow(base, start, mod)
    mult = pow(base, step, mod)
    for _ in range(count):
        out.append(cur)
        cur = cur * mult % mod
    return out


def build_partition(params: SequenceParams) -> CyclotomicPartition:
    p, q, N, g, x, e = params.p, params.q, params.N, params.g, params.x, params.e
    half = e // 2
    even = _powers(g, 0, 2, half, N)
    odd = _powers(g, 1, 2, half, N)
    members = {
        Label.ZERO: [0],
        Label.D00: even,
        Label.D01: odd,
        Label.D10: [a * x % N for a in even],
        Label.D11: [a * x % N for a in odd],
        Label.D0p_q: [r * q for r in _powers(g, 0, 2, (p - 1) // 2, p)],
        Label.D1p_q: [r * q for r in _powers(g, 1, 2, (p - 1) // 2, p)],
        Label.D0q_p: [r * p for r in _powers(g, 0, 2, (q - 1) // 2, q)],
        Label.D1q_p: [r * p for r in _powers(g, 1, 2, (q - 1) // 2, q)],
    }
    labels = np.full(N, 255, dtype=np.uint8)
    for lab, elems in members.items():
        idx = np.asarray(elems, dtype=np.int64)
        if np.any(labels[idx] != 255) or len(set(elems)) != len(elems):
            raise AssertionError(f"class {lab.name} overlaps another class for {params}")
        labels[idx] = lab
    if np.any(labels == 255):
        raise AssertionError(f"classes do not cover Z_{N} for {params}")
    labels.flags.writeable = False
    frozen = MappingProxyType({lab: tuple(sorted(v)) for lab, v in members.items()})
    return CyclotomicPartition(params=params, labels=labels, class_members=frozen)


def classify(a: int, part: CyclotomicPartition) -> Label:
    if not 0 <= a < part.N:
        raise ValueError(f"residue {a} outside [0, {part.N})")
    return Label(int(part.labels[a]))


def cyclotomic_number(i: int, j: int, part: CyclotomicPartition) -> int:
    """(i, j) = |(D_i + 1) & D_j|, counted directly."""
    src = part.D0 if i == 0 else part.D1
    dst = part.D0 if j == 0 else part.D1
    N = part.N
    return sum(1 for a in src if (a + 1) % N in dst)
