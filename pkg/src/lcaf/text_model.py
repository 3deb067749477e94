"""Byte-string ingestion and joint alphabet remapping.

Both input strings are rewritten over the dense alphabet 1..sigma, where
sigma is the number of distinct byte values occurring in either input.
Symbol ids are handed out in ascending byte order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple


class EmptyInput(ValueError):
    pass


class OutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class Alphabet:
    size: int
    map: Dict[int, int]
    inverse: Dict[int, int]

    def encode(self, raw: bytes) -> Tuple[int, ...]:
        return tuple(self.map[b] for b in raw)

    def decode(self, symbols) -> bytes:
        return bytes(self.inverse[s] for s in symbols)


@dataclass(frozen=True)
class RemappedText:
    symbols: Tuple[int, ...]
    sigma: int
    source_tag: str = "A"

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def factor(self, start: int, length: int) -> Tuple[int, ...]:
        """Symbols of the factor beginning at 1-based `start`."""
        if start < 1 or length < 0 or start + length - 1 > len(self.symbols):
            raise OutOfRange(f"window [{start}, {start + length - 1}] outside 1..{len(self.symbols)}")
        return self.symbols[start - 1:start - 1 + length]


@dataclass(frozen=True)
class FactorRef:
    source: str
    start: int
    length: int

    def check(self, text: RemappedText) -> None:
        if self.length < 1 or self.start < 1 or self.start + self.length - 1 > text.n:
            raise OutOfRange(f"{self} does not fit a text of length {text.n}")


def remap_alphabet(raw_a: bytes, raw_b: bytes) -> Tuple[RemappedText, RemappedText, Alphabet]:
    raw_a, raw_b = bytes(raw_a), bytes(raw_b)
    if not raw_a or not raw_b:
        raise EmptyInput("both input strings must be non-empty")
    used = sorted(set(raw_a) | set(raw_b))
    fwd = {b: i for i, b in enumerate(used, start=1)}
    inv = {i: b for b, i in fwd.items()}
    alphabet = Alphabet(len(used), fwd, inv)
    text_a = RemappedText(alphabet.encode(raw_a), alphabet.size, "A")
    text_b = RemappedText(alphabet.encode(raw_b), alphabet.size, "B")
    return text_a, text_b, alphabet


def texts_from_symbols(a, b, sigma: int | None = None) -> Tuple[RemappedText, RemappedText]:
    """Wrap already-remapped symbol sequences (ids in 1..sigma)."""
    a, b = tuple(a), tuple(b)
    if not a or not b:
        raise EmptyInput("both input strings must be non-empty")
    if sigma is None:
        sigma = max(max(a), max(b))
    if min(min(a), min(b)) < 1 or max(max(a), max(b)) > sigma:
        raise ValueError(f"symbol ids must lie in 1..{sigma}")
    return RemappedText(a, sigma, "A"), RemappedText(b, sigma, "B")
