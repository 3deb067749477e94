"""LCAF engine that sorts batches of k consecutive factor lengths through one
data-oblivious comparator network.

All factors of A and B of a given length live in one tagged array; each
length of a batch owns its own array, and every comparator of the network
is applied to all k arrays before the next comparator runs. While the two
entries under a comparator keep the same start positions from one length
to the next, their Parikh vectors are extended by one symbol each and the
difference set is patched in O(log sigma); otherwise both vectors are
rebuilt from stride-sigma samples and the set is rebuilt in O(sigma).
Any comparison that finds an A factor equal to a B factor is recorded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .network import ComparatorNetwork, make_network
from .parikh import DiffSet, Ordering, ParikhVector, cmp, parikh_of
from .radix import build_samples
from .result import LcafResult, Occurrences
from .text_model import RemappedText

SENTINEL = None
A, B = 0, 1

Entry = Optional[Tuple[int, int]]  # (source, 1-based start) or SENTINEL


class ShadowMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class BatchConfig:
    k: int = 1
    network: str = "batcher"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.network not in ("batcher", "pratt"):
            raise ValueError(f"unknown network kind {self.network!r}")


@dataclass(frozen=True, order=True)
class MatchEvent:
    start_a: int
    start_b: int
    length: int


def default_k(sigma: int) -> int:
    return max(1, math.isqrt(sigma - 1) + 1) if sigma > 1 else 1


def batch_size(text_a: RemappedText, text_b: RemappedText, base: int) -> int:
    """Array size shared by every length of a batch starting at `base`."""
    return (text_a.n - base + 1) + (text_b.n - base + 1)


def initial_layout(text_a: RemappedText, text_b: RemappedText, base: int, length: int,
                   entries: Optional[Tuple[list, list]] = None) -> List[Entry]:
    """Slot layout fixed per batch: A starts first, then B starts; windows
    that no longer fit at `length` become sentinels in place.

    Passing the same `entries` for every length of a batch makes a factor
    the same object in all of its arrays.
    """
    if entries is None:
        entries = ([(A, u) for u in range(1, text_a.n - base + 2)],
                   [(B, v) for v in range(1, text_b.n - base + 2)])
    ea, eb = entries
    off = text_a.n - base + 1
    arr: List[Entry] = [SENTINEL] * batch_size(text_a, text_b, base)
    fit_a, fit_b = text_a.n - length + 1, text_b.n - length + 1
    arr[:fit_a] = ea[:fit_a]
    arr[off:off + fit_b] = eb[:fit_b]
    return arr


def _bump(counters: Dict[str, int], name: str, by: int = 1) -> None:
    counters[name] = counters.get(name, 0) + by


def run_batch(text_a: RemappedText, text_b: RemappedText, base: int, k: int,
              network: ComparatorNetwork,
              counters: Optional[Dict[str, int]] = None,
              shadow_check: bool = False,
              final_arrays: Optional[list] = None) -> List[MatchEvent]:
    """Sort the factors of lengths base..base+k-1 and collect match events.

    If `final_arrays` is a list, the sorted array of each length is
    appended to it.
    """
    if counters is None:
        counters = {}
    top = min(text_a.n, text_b.n)
    if base < 1 or base + k - 1 > top:
        raise ValueError(f"batch {base}..{base + k - 1} outside 1..{top}")
    m = batch_size(text_a, text_b, base)
    if network.size != m:
        raise ValueError(f"network of size {network.size} for a batch of size {m}")

    sigma = text_a.sigma
    texts = (text_a, text_b)
    syms = (text_a.symbols, text_b.symbols)
    entries = ([(A, u) for u in range(1, text_a.n - base + 2)],
               [(B, v) for v in range(1, text_b.n - base + 2)])
    arrays = [initial_layout(text_a, text_b, base, base + j, entries) for j in range(k)]
    # per length, per source: the stride-sigma sample vectors
    stride = sigma
    samples = []
    for j in range(k):
        pair = (build_samples(text_a, base + j, stride), build_samples(text_b, base + j, stride))
        samples.append(tuple([v.counts for v in smp.vectors] for smp in pair))

    vx, vy = ParikhVector.zeros(sigma), ParikhVector.zeros(sigma)
    ds = DiffSet(sigma)
    events = set()
    n_inv = n_rebuild = n_incr = n_diverge = n_sentinel = n_mismatch = 0
    less, equal, greater = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER

    # diff_build / diff_update / diff_resolve and parikh_via_samples are
    # inlined below; tests pin the inlined path to the public functions
    for p, q in network.comparators:
        px = py = None
        for j in range(k):
            arr = arrays[j]
            x = arr[p]
            y = arr[q]
            if x is SENTINEL or y is SENTINEL:
                n_sentinel += 1
                px = py = None
                if y is not SENTINEL:
                    arr[p], arr[q] = y, x
                continue

            length = base + j
            n_inv += 1
            if (x is px and y is py) or (x is py and y is px):
                if x is py:
                    vx, vy = vy, vx
                sx, ux = x
                sy, uy = y
                cx = syms[sx][ux + length - 2]
                cy = syms[sy][uy + length - 2]
                cnt_x, cnt_y = vx.counts, vy.counts
                cnt_x[cx - 1] += 1
                cnt_y[cy - 1] += 1
                vx.length = vy.length = length
                bits = ds.bits
                bit = 1 << (cx - 1)
                bits = bits | bit if cnt_x[cx - 1] != cnt_y[cx - 1] else bits & ~bit
                if cy != cx:
                    bit = 1 << (cy - 1)
                    bits = bits | bit if cnt_x[cy - 1] != cnt_y[cy - 1] else bits & ~bit
                ds.bits = bits
                n_incr += 1
            else:
                smp = samples[j]
                for vec, (src, u) in ((vx, x), (vy, y)):
                    st = u - 1
                    idx = st // stride
                    cnt = vec.counts
                    cnt[:] = smp[src][idx]
                    seq = syms[src]
                    for t in range(idx * stride, st):
                        cnt[seq[t] - 1] -= 1
                        cnt[seq[t + length] - 1] += 1
                    vec.length = length
                bits = 0
                bit = 1
                for cu, cw in zip(vx.counts, vy.counts):
                    if cu != cw:
                        bits |= bit
                    bit <<= 1
                ds.bits = bits
                n_rebuild += 1
                if j:
                    n_diverge += 1
            px, py = x, y

            bits = ds.bits
            if bits:
                c = (bits & -bits).bit_length() - 1
                order = less if vx.counts[c] > vy.counts[c] else greater
            else:
                order = equal

            if shadow_check:
                direct = cmp(parikh_of(texts[x[0]], x[1], length), parikh_of(texts[y[0]], y[1], length))
                if direct != order:
                    n_mismatch += 1
            if order is equal:
                if x[0] != y[0]:
                    ea, eb = (x, y) if x[0] == A else (y, x)
                    events.add(MatchEvent(ea[1], eb[1], length))
            elif order is greater:
                arr[p] = y
                arr[q] = x

    _bump(counters, "comparator_invocations", n_inv)
    _bump(counters, "rebuilds", n_rebuild)
    _bump(counters, "incremental", n_incr)
    _bump(counters, "divergences", n_diverge)
    _bump(counters, "sentinel_comparisons", n_sentinel)
    _bump(counters, "comparisons", n_inv)
    if shadow_check:
        _bump(counters, "shadow_mismatches", n_mismatch)
        if n_mismatch:
            raise ShadowMismatch(f"{n_mismatch} incremental resolutions disagreed with a direct compare")
    if final_arrays is not None:
        final_arrays.extend(arrays)
    return sorted(events)


def batches(top: int, k: int) -> List[Tuple[int, int]]:
    """(base, width) for lengths 1..top cut into blocks of k, longest first."""
    out = [(base, min(k, top - base + 1)) for base in range(1, top + 1, k)]
    return out[::-1]


def _equal_runs(arr: List[Entry], text_a: RemappedText, text_b: RemappedText, length: int):
    """Maximal runs of equal vectors in a sorted array holding both sources."""
    texts = (text_a, text_b)
    real = [e for e in arr if e is not SENTINEL]
    runs = []
    i = 0
    while i < len(real):
        key = parikh_of(texts[real[i][0]], real[i][1], length)
        j = i + 1
        while j < len(real) and parikh_of(texts[real[j][0]], real[j][1], length) == key:
            j += 1
        group = real[i:j]
        sa = sorted(s for src, s in group if src == A)
        sb = sorted(s for src, s in group if src == B)
        if sa and sb:
            runs.append(Occurrences(length, sa, sb))
        i = j
    return runs


def lcaf_batched(text_a: RemappedText, text_b: RemappedText,
                 config: BatchConfig = BatchConfig(),
                 shadow_check: bool = False,
                 full_sweep: bool = False) -> LcafResult:
    """Longest common Abelian factor via batched oblivious sorting.

    Batches are visited from the longest lengths down; the answer is the
    longest event length in the first batch that produces any event.
    `full_sweep` keeps processing the remaining batches for cost
    measurement without changing the answer.
    """
    result = LcafResult(0)
    counters = result.counters
    for name in ("comparator_invocations", "rebuilds", "incremental", "divergences",
                 "sentinel_comparisons", "comparisons", "batches", "events"):
        counters.setdefault(name, 0)
    top = min(text_a.n, text_b.n)
    for base, width in batches(top, config.k):
        net = make_network(config.network, batch_size(text_a, text_b, base))
        finals: list = []
        events = run_batch(text_a, text_b, base, width, net, counters, shadow_check, finals)
        counters["batches"] += 1
        counters["events"] += len(events)
        if events and not result.length:
            best = max(e.length for e in events)
            result.length = best
            result.witnesses = sorted((e.start_a, e.start_b, e.length) for e in events if e.length == best)
            result.occurrences = _equal_runs(finals[best - base], text_a, text_b, best)
            if not full_sweep:
                break
    return result
