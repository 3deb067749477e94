"""Independent reference checks shared by the test modules.

Nothing here goes through the package's Parikh machinery: factor equality
is decided by comparing sorted symbol lists.
"""

import random

from lcaf.text_model import remap_alphabet


def naive_lcaf(a, b):
    """Exact maximum over all (length, i, j) triples; sequences of ints or bytes."""
    best = 0
    for length in range(1, min(len(a), len(b)) + 1):
        fa = {tuple(sorted(a[i:i + length])) for i in range(len(a) - length + 1)}
        if any(tuple(sorted(b[j:j + length])) in fa for j in range(len(b) - length + 1)):
            best = length
    return best


def is_abelian_match(a_syms, b_syms, start_a, start_b, length):
    fa = a_syms[start_a - 1:start_a - 1 + length]
    fb = b_syms[start_b - 1:start_b - 1 + length]
    return len(fa) == length == len(fb) and sorted(fa) == sorted(fb)


def random_bytes(rng, n, sigma):
    return bytes(rng.randrange(sigma) for _ in range(n))


def random_pair(rng, n_max, sigma, n_min=1):
    raw_a = random_bytes(rng, rng.randint(n_min, n_max), sigma)
    raw_b = random_bytes(rng, rng.randint(n_min, n_max), sigma)
    a, b, _ = remap_alphabet(raw_a, raw_b)
    return a, b
