"""Linear-space LCAF engine built on LSD radix sort of factor start positions.

For every factor length the windows of each text are radix sorted with
one stable counting pass per symbol (least significant symbol first), the
count of that symbol in every window being precomputed just before its
pass and dropped right after. Parikh vectors of every `stride`-th window
are stored so that any window's vector can be rebuilt in O(sigma + stride)
during the merge of the two sorted lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .parikh import Ordering, ParikhVector, cmp, parikh_of
from .result import LcafResult, Occurrences, Witness
from .text_model import RemappedText


class AllocationMeter:
    """Counts auxiliary words held by the engine; tracks the running peak."""

    def __init__(self):
        self.current = 0
        self.peak = 0
        self.largest = 0

    def alloc(self, words: int) -> None:
        self.current += words
        self.largest = max(self.largest, words)
        self.peak = max(self.peak, self.current)

    def free(self, words: int) -> None:
        self.current -= words

    def reset(self) -> None:
        self.current = self.peak = self.largest = 0


@dataclass
class SortedFactorList:
    length: int
    starts: List[int]


@dataclass
class SampleSet:
    length: int
    stride: int
    starts: List[int] = field(default_factory=list)
    vectors: List[ParikhVector] = field(default_factory=list)

    def words(self) -> int:
        return len(self.starts) + sum(len(v.counts) for v in self.vectors)


def digit_column(text: RemappedText, length: int, symbol: int) -> List[int]:
    """Count of `symbol` in every window of `length`, in window order."""
    sym = text.symbols
    c = 0
    for s in sym[:length]:
        if s == symbol:
            c += 1
    col = [c]
    for j in range(length, len(sym)):
        c += (sym[j] == symbol) - (sym[j - length] == symbol)
        col.append(c)
    return col


def radix_sort_factors(text: RemappedText, length: int,
                       meter: Optional[AllocationMeter] = None,
                       counters: Optional[dict] = None) -> SortedFactorList:
    meter = meter or AllocationMeter()
    nf = text.n - length + 1
    starts = list(range(1, nf + 1))
    meter.alloc(nf)
    for symbol in range(text.sigma, 0, -1):
        digits = digit_column(text, length, symbol)
        meter.alloc(nf)
        # keys range over 0..length; larger counts go first
        bucket = [0] * (length + 1)
        meter.alloc(length + 1)
        for d in digits:
            bucket[d] += 1
        pos = 0
        for v in range(length, -1, -1):
            bucket[v], pos = pos, pos + bucket[v]
        out = [0] * nf
        meter.alloc(nf)
        for s in starts:
            d = digits[s - 1]
            out[bucket[d]] = s
            bucket[d] += 1
        meter.free(nf + (length + 1) + nf)  # old starts, bucket, digits
        starts = out
        if counters is not None:
            counters["radix_passes"] = counters.get("radix_passes", 0) + 1
    return SortedFactorList(length, starts)


def build_samples(text: RemappedText, length: int, stride: int,
                  meter: Optional[AllocationMeter] = None) -> SampleSet:
    if stride < 1:
        raise ValueError("stride must be >= 1")
    sym = text.symbols
    nf = text.n - length + 1
    samples = SampleSet(length, stride)
    pv = parikh_of(text, 1, length)
    for j in range(1, nf + 1):
        if (j - 1) % stride == 0:
            snap = pv.copy()
            if sum(snap.counts) != length:
                raise AssertionError(f"sample at {j} breaks the count-sum invariant")
            samples.starts.append(j)
            samples.vectors.append(snap)
        if j < nf:
            pv.slide_inplace(sym[j - 1], sym[j + length - 1])
    if meter is not None:
        meter.alloc(samples.words())
    return samples


def parikh_via_samples(samples: SampleSet, text: RemappedText, start: int,
                       into: Optional[ParikhVector] = None) -> ParikhVector:
    """Vector of the window at `start`: nearest earlier sample plus slides.

    When `into` is given its buffer is overwritten and returned, so callers
    can materialize without allocating.
    """
    idx = (start - 1) // samples.stride
    base = samples.vectors[idx]
    if into is None:
        pv = base.copy()
    else:
        into.counts[:] = base.counts
        into.length = base.length
        pv = into
    sym, length = text.symbols, samples.length
    counts = pv.counts
    for j in range(samples.starts[idx] - 1, start - 1):
        counts[sym[j] - 1] -= 1
        counts[sym[j + length] - 1] += 1
    return pv


def merge_intersect(sorted_a: SortedFactorList, sorted_b: SortedFactorList,
                    samples_a: SampleSet, samples_b: SampleSet,
                    text_a: RemappedText, text_b: RemappedText,
                    counters: Optional[dict] = None,
                    occurrences: Optional[list] = None,
                    meter: Optional[AllocationMeter] = None) -> List[Witness]:
    """Two-pointer sweep over both sorted lists.

    One witness (first A start, first B start) is reported per maximal run
    of equal vectors present on both sides; if `occurrences` is a list the
    full runs are appended to it as well.
    """
    length = sorted_a.length
    if sorted_b.length != length:
        raise ValueError("sorted lists built for different lengths")
    la, lb = sorted_a.starts, sorted_b.starts
    sigma = text_a.sigma
    va, vb, probe = (ParikhVector.zeros(sigma) for _ in range(3))
    if meter is not None:
        meter.alloc(3 * sigma)
    n_cmp = 0
    found: List[Witness] = []
    i = j = 0
    if la and lb:
        parikh_via_samples(samples_a, text_a, la[0], va)
        parikh_via_samples(samples_b, text_b, lb[0], vb)
    while i < len(la) and j < len(lb):
        order = cmp(va, vb)
        n_cmp += 1
        if order is Ordering.LESS:
            i += 1
            if i < len(la):
                parikh_via_samples(samples_a, text_a, la[i], va)
        elif order is Ordering.GREATER:
            j += 1
            if j < len(lb):
                parikh_via_samples(samples_b, text_b, lb[j], vb)
        else:
            i0, j0 = i, j
            i += 1
            while i < len(la):
                parikh_via_samples(samples_a, text_a, la[i], probe)
                n_cmp += 1
                if cmp(probe, vb) is not Ordering.EQUAL:
                    break
                i += 1
            j += 1
            while j < len(lb):
                parikh_via_samples(samples_b, text_b, lb[j], probe)
                n_cmp += 1
                if cmp(probe, va) is not Ordering.EQUAL:
                    break
                j += 1
            found.append((la[i0], lb[j0], length))
            if occurrences is not None:
                occurrences.append(Occurrences(length, sorted(la[i0:i]), sorted(lb[j0:j])))
            if i < len(la):
                parikh_via_samples(samples_a, text_a, la[i], va)
            if j < len(lb):
                parikh_via_samples(samples_b, text_b, lb[j], vb)
    if meter is not None:
        meter.free(3 * sigma)
    if counters is not None:
        counters["comparisons"] = counters.get("comparisons", 0) + n_cmp
    return found


def match_length(text_a: RemappedText, text_b: RemappedText, length: int,
                 stride: Optional[int] = None,
                 counters: Optional[dict] = None,
                 meter: Optional[AllocationMeter] = None,
                 occurrences: Optional[list] = None) -> List[Witness]:
    """Run sort, sampling and merge for a single factor length."""
    stride = stride or text_a.sigma
    meter = meter or AllocationMeter()
    sa = radix_sort_factors(text_a, length, meter, counters)
    smp_a = build_samples(text_a, length, stride, meter)
    sb = radix_sort_factors(text_b, length, meter, counters)
    smp_b = build_samples(text_b, length, stride, meter)
    found = merge_intersect(sa, sb, smp_a, smp_b, text_a, text_b,
                            counters, occurrences, meter)
    meter.free(len(sa.starts) + len(sb.starts) + smp_a.words() + smp_b.words())
    return found


def lcaf_radix(text_a: RemappedText, text_b: RemappedText,
               stride: Optional[int] = None,
               meter: Optional[AllocationMeter] = None,
               full_sweep: bool = False) -> LcafResult:
    """Longest common Abelian factor via per-length radix sort and merge.

    Lengths are tried from the longest down and the first length with a
    match is returned. With `full_sweep` every length is still processed
    (the answer is unchanged); this exists so cost counters cover the
    whole length range.
    """
    result = LcafResult(0)
    counters = result.counters
    counters.setdefault("radix_passes", 0)
    counters.setdefault("comparisons", 0)
    counters.setdefault("lengths", 0)
    for length in range(min(text_a.n, text_b.n), 0, -1):
        counters["lengths"] += 1
        occ: list = []
        found = match_length(text_a, text_b, length, stride, counters, meter, occ)
        if found and not result.length:
            result.length = length
            result.witnesses = sorted(found)
            result.occurrences = sorted(occ, key=lambda o: (o.starts_a[0], o.starts_b[0]))
            if not full_sweep:
                break
    return result
