"""Balanced Whiteman generalized cyclotomic sequences of period pq and their 2-adic complexity."""

__version__ = "0.1.0"

from .numtheory import ParamError, SequenceParams, make_params
from .cyclotomy import CyclotomicPartition, Label, build_partition
from .sequence import BinarySequence, generate
from .adic import AdicReport, Verdict, two_adic_complexity

__all__ = [
    "AdicReport",
    "BinarySequence",
    "CyclotomicPartition",
    "Label",
    "ParamError",
    "SequenceParams",
    "Verdict",
    "build_partition",
    "generate",
    "make_params",
    "two_adic_complexity",
]
