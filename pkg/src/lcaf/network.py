"""Data-oblivious comparator networks.

Two generators are provided, Batcher's odd-even mergesort and a Shellsort
over the 3-smooth gaps 2^p 3^q. Both emit O(m log^2 m) comparators whose
index pairs depend on m alone. Indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .parikh import Ordering


@dataclass(frozen=True)
class ComparatorNetwork:
    size: int
    comparators: Tuple[Tuple[int, int], ...]
    kind: str = ""

    def __len__(self) -> int:
        return len(self.comparators)

    def dump(self) -> str:
        """One "p q" line per comparator."""
        return "".join(f"{p} {q}\n" for p, q in self.comparators)

    @classmethod
    def load(cls, size: int, text: str, kind: str = "") -> "ComparatorNetwork":
        pairs = tuple(tuple(int(x) for x in line.split()) for line in text.splitlines() if line.strip())
        return cls(size, pairs, kind)


def batcher_network(m: int) -> ComparatorNetwork:
    """Batcher odd-even mergesort for any m (the power-of-two network with
    comparators touching indices >= m removed)."""
    if m < 1:
        raise ValueError("network size must be >= 1")
    pairs: List[Tuple[int, int]] = []
    p = 1
    while p < m:
        k = p
        while k >= 1:
            for j in range(k % p, m - k, 2 * k):
                for i in range(min(k - 1, m - j - k - 1) + 1):
                    if (i + j) // (2 * p) == (i + j + k) // (2 * p):
                        pairs.append((i + j, i + j + k))
            k //= 2
        p *= 2
    return ComparatorNetwork(m, tuple(pairs), "batcher")


def pratt_gaps(m: int) -> List[int]:
    """All 2^p 3^q below m, largest first."""
    gaps = []
    p2 = 1
    while p2 < m:
        g = p2
        while g < m:
            gaps.append(g)
            g *= 3
        p2 *= 2
    return sorted(gaps, reverse=True)


def pratt_network(m: int) -> ComparatorNetwork:
    """Shellsort with 3-smooth gaps as a network.

    When gap g is reached the array is already 2g- and 3g-sorted, so each
    element of a g-chain is at most one step out of place and a single
    left-to-right sweep of (i, i+g) comparators sorts every g-chain.
    """
    if m < 1:
        raise ValueError("network size must be >= 1")
    pairs = [(i, i + g) for g in pratt_gaps(m) for i in range(m - g)]
    return ComparatorNetwork(m, tuple(pairs), "pratt")


def make_network(kind: str, m: int) -> ComparatorNetwork:
    if kind == "batcher":
        return batcher_network(m)
    if kind == "pratt":
        return pratt_network(m)
    raise ValueError(f"unknown network kind {kind!r}")


def apply_network(network: ComparatorNetwork, keys: Sequence,
                  compare: Optional[Callable] = None,
                  on_compare: Optional[Callable] = None) -> list:
    """Run the network over a copy of `keys`, swapping only on GREATER.

    `compare(x, y)` returns an Ordering (defaults to the natural order);
    `on_compare(p, q, x, y, order)` is told about every comparator.
    """
    if len(keys) != network.size:
        raise ValueError(f"network sorts {network.size} keys, got {len(keys)}")
    if compare is None:
        compare = _natural
    out = list(keys)
    for p, q in network.comparators:
        x, y = out[p], out[q]
        order = compare(x, y)
        if on_compare is not None:
            on_compare(p, q, x, y, order)
        if order > 0:
            out[p], out[q] = y, x
    return out


def _natural(x, y) -> Ordering:
    return Ordering.LESS if x < y else Ordering.GREATER if x > y else Ordering.EQUAL
