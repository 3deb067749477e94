import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcaf.parikh import (DiffSet, LengthMismatch, Ordering, ParikhVector, Underflow, cmp,
                         diff_build, diff_resolve, diff_update, extend, parikh_of, slide)
from lcaf.text_model import OutOfRange, texts_from_symbols

LESS, EQUAL, GREATER = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER


def pv(*counts):
    return ParikhVector(counts)


def text(s, sigma=2):
    t, _ = texts_from_symbols([ord(c) - ord("a") + 1 for c in s], [1], sigma)
    return t


@pytest.mark.parametrize("s, start, length, expected", [
    ("aab", 1, 3, (2, 1)),
    ("aab", 2, 2, (1, 1)),
    ("bbbb", 1, 4, (0, 4)),
])
def test_parikh_of_examples(s, start, length, expected):
    v = parikh_of(text(s), start, length)
    assert tuple(v.counts) == expected and v.length == length


def test_parikh_of_out_of_range():
    with pytest.raises(OutOfRange):
        parikh_of(text("aab"), 2, 3)
    with pytest.raises(OutOfRange):
        parikh_of(text("aab"), 0, 1)


def test_slide_examples():
    assert slide(pv(2, 1), 1, 2) == pv(1, 2)
    assert slide(pv(1, 1), 1, 1) == pv(1, 1)
    v = pv(3, 1, 2)
    assert slide(slide(v, 1, 3), 3, 1) == v
    assert slide(v, 1, 3).length == v.length
    with pytest.raises(Underflow):
        slide(pv(0, 2), 1, 2)


def test_extend_examples():
    v = extend(pv(1, 1), 2)
    assert tuple(v.counts) == (1, 2) and v.length == 3
    v = extend(ParikhVector.zeros(2), 1)
    assert tuple(v.counts) == (1, 0) and v.length == 1


@given(st.lists(st.integers(1, 4), min_size=1, max_size=30), st.data())
def test_extend_builds_parikh_of(symbols, data):
    t, _ = texts_from_symbols(symbols, [1], 4)
    start = data.draw(st.integers(1, len(symbols)))
    length = data.draw(st.integers(0, len(symbols) - start + 1))
    v = ParikhVector.zeros(4)
    for s in symbols[start - 1:start - 1 + length]:
        v = extend(v, s)
    assert v == parikh_of(t, start, length)
    assert v.length == length == sum(v.counts)


@given(st.lists(st.integers(1, 3), min_size=2, max_size=40), st.integers(1, 10))
def test_sliding_keeps_sum(symbols, length):
    length = min(length, len(symbols))
    t, _ = texts_from_symbols(symbols, [1], 3)
    v = parikh_of(t, 1, length)
    for j in range(1, len(symbols) - length + 1):
        v = slide(v, symbols[j - 1], symbols[j + length - 1])
        assert sum(v.counts) == length
        assert v == parikh_of(t, j + 1, length)


def test_cmp_examples():
    assert cmp(pv(1, 1), pv(0, 2)) is LESS
    assert cmp(pv(2, 2), pv(2, 2)) is EQUAL
    assert cmp(pv(0, 2), pv(1, 1)) is GREATER
    with pytest.raises(LengthMismatch):
        cmp(pv(1, 1), pv(1, 2))


def _vectors(sigma, length):
    return [ParikhVector(c) for c in itertools.product(range(length + 1), repeat=sigma) if sum(c) == length]


@pytest.mark.parametrize("sigma", [1, 2, 3])
@pytest.mark.parametrize("length", [0, 1, 2, 3, 4])
def test_cmp_is_total_order_exhaustive(sigma, length):
    vs = _vectors(sigma, length)
    for p in vs:
        for q in vs:
            o = cmp(p, q)
            assert (o is EQUAL) == (p == q)
            assert cmp(q, p) == -o
    for p, q, r in itertools.product(vs, repeat=3):
        if cmp(p, q) is LESS and cmp(q, r) is LESS:
            assert cmp(p, r) is LESS


def test_diff_build_examples():
    assert list(diff_build(pv(1, 2, 0), pv(1, 0, 2))) == [2, 3]
    assert not diff_build(pv(1, 2, 0), pv(1, 2, 0))
    assert list(diff_build(pv(3, 0), pv(0, 3))) == [1, 2]


def test_diff_update_examples():
    p, q = pv(1, 1), pv(1, 2)
    ds = diff_build(p, q)
    assert list(ds) == [2]
    p.extend_inplace(2)
    diff_update(ds, 2, p, q)
    assert not ds

    p, q = pv(1, 1), pv(1, 1)
    ds = diff_build(p, q)
    q.counts[0] += 1
    diff_update(ds, 1, p, q)
    assert list(ds) == [1]

    before = list(ds)
    diff_update(ds, 2, p, q)
    assert list(ds) == before


def test_diff_resolve_examples():
    assert diff_resolve(DiffSet(3), pv(1, 1, 1), pv(1, 1, 1)) is EQUAL
    p, q = pv(1, 2, 0), pv(1, 0, 2)
    ds = diff_build(p, q)
    assert ds.min() == 2
    assert diff_resolve(ds, p, q) is LESS


def test_diff_resolve_matches_cmp_random():
    rng = random.Random(2024)
    for _ in range(10_000):
        sigma = rng.randint(1, 12)
        length = rng.randint(0, 10)
        cuts = sorted(rng.randint(0, length) for _ in range(sigma - 1))
        p = ParikhVector([b - a for a, b in zip([0] + cuts, cuts + [length])])
        cuts = sorted(rng.randint(0, length) for _ in range(sigma - 1))
        q = ParikhVector([b - a for a, b in zip([0] + cuts, cuts + [length])])
        assert diff_resolve(diff_build(p, q), p, q) is cmp(p, q)


def test_diffset_ordered_set_ops():
    ds = DiffSet(200)
    assert ds.min() is None and len(ds) == 0
    for c in (150, 7, 199, 64):
        ds.add(c)
    assert ds.min() == 7 and len(ds) == 4 and 64 in ds
    ds.discard(7)
    ds.discard(7)
    assert ds.min() == 64
    assert list(ds) == [64, 150, 199]


@settings(max_examples=200)
@given(st.integers(1, 6), st.lists(st.tuples(st.booleans(), st.integers(1, 6)), max_size=60))
def test_maintained_diffset_equals_rebuild(sigma, ops):
    p, q = ParikhVector.zeros(sigma), ParikhVector.zeros(sigma)
    ds = diff_build(p, q)
    for to_p, sym in ops:
        sym = (sym - 1) % sigma + 1
        target = p if to_p else q
        target.extend_inplace(sym)
        diff_update(ds, sym, p, q)
        assert ds == diff_build(p, q)
