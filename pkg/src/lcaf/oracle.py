"""Brute-force LCAF used as ground truth by the tests."""

from __future__ import annotations

from .result import LcafResult, Occurrences
from .text_model import RemappedText


def _window_keys(text: RemappedText, length: int):
    """Yield (start, counts-tuple) for every window of `length`, by sliding."""
    sym = text.symbols
    counts = [0] * text.sigma
    for s in sym[:length]:
        counts[s - 1] += 1
    yield 1, tuple(counts)
    for j in range(1, text.n - length + 1):
        counts[sym[j - 1] - 1] -= 1
        counts[sym[j + length - 1] - 1] += 1
        yield j + 1, tuple(counts)


def lcaf_bruteforce(a: RemappedText, b: RemappedText) -> LcafResult:
    """Largest length at which some window of `a` and some window of `b`
    have identical symbol counts.

    Windows of `a` are grouped by their exact count tuple and probed with
    the windows of `b`, for each length from the longest downwards.
    """
    result = LcafResult(0)
    for length in range(min(a.n, b.n), 0, -1):
        groups: dict = {}
        for start, key in _window_keys(a, length):
            groups.setdefault(key, []).append(start)
        hits: dict = {}
        for start, key in _window_keys(b, length):
            result.bump("probes")
            if key in groups:
                hits.setdefault(key, []).append(start)
        if hits:
            result.length = length
            for key, starts_b in hits.items():
                starts_a = groups[key]
                result.witnesses.append((starts_a[0], starts_b[0], length))
                result.occurrences.append(Occurrences(length, starts_a, starts_b))
            result.witnesses.sort()
            result.occurrences.sort(key=lambda o: (o.starts_a[0], o.starts_b[0]))
            return result
    return result
