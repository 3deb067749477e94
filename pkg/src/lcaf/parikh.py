"""Parikh vectors, their total order, and difference sets.

Order convention: two equal-length vectors are compared at the first
symbol where their counts differ, and the vector holding the *greater*
count there is the smaller one. Every engine in the package sorts and
merges under this single order.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, List, Optional

from .text_model import OutOfRange, RemappedText


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Underflow(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class ParikhVector:
    """Per-symbol counts of one window; `counts[c - 1]` holds symbol c."""

    __slots__ = ("counts", "length")

    def __init__(self, counts: Iterable[int], length: Optional[int] = None):
        self.counts: List[int] = list(counts)
        self.length = sum(self.counts) if length is None else length

    @classmethod
    def zeros(cls, sigma: int) -> "ParikhVector":
        return cls([0] * sigma, 0)

    @property
    def sigma(self) -> int:
        return len(self.counts)

    def __getitem__(self, symbol: int) -> int:
        return self.counts[symbol - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParikhVector):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(tuple(self.counts))

    def __repr__(self) -> str:
        return f"ParikhVector({tuple(self.counts)}, length={self.length})"

    def copy(self) -> "ParikhVector":
        return ParikhVector(self.counts[:], self.length)

    def key(self) -> tuple:
        return tuple(self.counts)

    # in-place variants used on the hot paths of the engines

    def slide_inplace(self, out_symbol: int, in_symbol: int) -> None:
        if self.counts[out_symbol - 1] < 1:
            raise Underflow(f"symbol {out_symbol} has count 0")
        self.counts[out_symbol - 1] -= 1
        self.counts[in_symbol - 1] += 1

    def extend_inplace(self, in_symbol: int) -> None:
        self.counts[in_symbol - 1] += 1
        self.length += 1


def parikh_of(text: RemappedText, start: int, length: int) -> ParikhVector:
    if start < 1 or length < 0 or start + length - 1 > text.n:
        raise OutOfRange(f"window [{start}, {start + length - 1}] outside 1..{text.n}")
    counts = [0] * text.sigma
    for s in text.symbols[start - 1:start - 1 + length]:
        counts[s - 1] += 1
    return ParikhVector(counts, length)


def slide(pv: ParikhVector, out_symbol: int, in_symbol: int) -> ParikhVector:
    out = pv.copy()
    out.slide_inplace(out_symbol, in_symbol)
    return out


def extend(pv: ParikhVector, in_symbol: int) -> ParikhVector:
    out = pv.copy()
    out.extend_inplace(in_symbol)
    return out


def cmp(p: ParikhVector, q: ParikhVector) -> Ordering:
    if p.length != q.length:
        raise LengthMismatch(f"cannot order windows of lengths {p.length} and {q.length}")
    for x, y in zip(p.counts, q.counts):
        if x != y:
            return Ordering.LESS if x > y else Ordering.GREATER
    return Ordering.EQUAL


class DiffSet:
    """Ordered set of symbol ids with insert, remove and minimum.

    Stored as an integer bitmask (bit c-1 for symbol c); the minimum is the
    lowest set bit, so every operation is a handful of word operations for
    any alphabet of up to 256 symbols.
    """

    __slots__ = ("sigma", "bits")

    def __init__(self, sigma: int, coords: Iterable[int] = ()):
        self.sigma = sigma
        bits = 0
        for c in coords:
            bits |= 1 << (c - 1)
        self.bits = bits

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, c: int) -> bool:
        return (self.bits >> (c - 1)) & 1 == 1

    def __iter__(self):
        bits = self.bits
        return (i + 1 for i in range(self.sigma) if (bits >> i) & 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, DiffSet):
            return self.bits == other.bits
        return NotImplemented

    def __repr__(self) -> str:
        return f"DiffSet({list(self)})"

    def add(self, c: int) -> None:
        self.bits |= 1 << (c - 1)

    def discard(self, c: int) -> None:
        self.bits &= ~(1 << (c - 1))

    def min(self) -> Optional[int]:
        bits = self.bits
        if not bits:
            return None
        return (bits & -bits).bit_length()


def diff_build(p: ParikhVector, q: ParikhVector) -> DiffSet:
    if p.sigma != q.sigma:
        raise ValueError("vectors over different alphabets")
    ds = DiffSet(p.sigma)
    bits = 0
    bit = 1
    for x, y in zip(p.counts, q.counts):
        if x != y:
            bits |= bit
        bit <<= 1
    ds.bits = bits
    return ds


def diff_update(ds: DiffSet, coord: int, p: ParikhVector, q: ParikhVector) -> DiffSet:
    """Restore the set invariant at `coord` after one of its counters changed."""
    if p.counts[coord - 1] != q.counts[coord - 1]:
        ds.add(coord)
    else:
        ds.discard(coord)
    return ds


def diff_resolve(ds: DiffSet, p: ParikhVector, q: ParikhVector) -> Ordering:
    c = ds.min()
    if c is None:
        return Ordering.EQUAL
    return Ordering.LESS if p.counts[c - 1] > q.counts[c - 1] else Ordering.GREATER
