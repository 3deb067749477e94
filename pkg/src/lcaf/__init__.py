"""Longest common Abelian factor of two strings: brute-force, radix-sort and
batched oblivious-sort engines."""

from .batched import BatchConfig, lcaf_batched
from .oracle import lcaf_bruteforce
from .parikh import Ordering, ParikhVector, cmp, parikh_of
from .radix import lcaf_radix
from .result import LcafResult
from .text_model import RemappedText, remap_alphabet

__all__ = [
    "BatchConfig",
    "LcafResult",
    "Ordering",
    "ParikhVector",
    "RemappedText",
    "cmp",
    "lcaf_batched",
    "lcaf_bruteforce",
    "lcaf_radix",
    "parikh_of",
    "remap_alphabet",
]
