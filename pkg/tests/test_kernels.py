import math
import random
from functools import lru_cache

import numpy as np
import pytest

from latticerect.kernels import (
    SIX_INDICES,
    TEN_INDICES,
    KernelQuery,
    eval_six,
    eval_six_py,
    eval_ten,
    eval_ten_py,
    kernel_cycle_depth,
    reversed_floor_moment,
)
from latticerect import _fast

_SIX_IN_TEN = tuple(TEN_INDICES.index(pq) for pq in SIX_INDICES)


@lru_cache(maxsize=None)
def direct_ten(n, m, a, b):
    """Independent oracle: literal summation over x with exact integers."""
    s01 = s11 = s21 = s31 = s02 = s12 = s22 = s03 = s13 = s04 = 0
    for x in range(n):
        g = (a * x + b) // m
        g2 = g * g
        g3 = g2 * g
        x2 = x * x
        s01 += g
        s11 += x * g
        s21 += x2 * g
        s31 += x2 * x * g
        s02 += g2
        s12 += x * g2
        s22 += x2 * g2
        s03 += g3
        s13 += x * g3
        s04 += g2 * g2
    return (s01, s11, s21, s31, s02, s12, s22, s03, s13, s04)


def direct_six(n, m, a, b):
    t = direct_ten(n, m, a, b)
    return tuple(t[i] for i in _SIX_IN_TEN)


@pytest.mark.parametrize("fast_paths", [True, False])
def test_six_small_box_pure(fast_paths):
    for n in range(0, 13):
        for m in range(1, 13):
            for a in range(0, 15):
                for b in range(0, 15):
                    got = eval_six_py(n, m, a, b, fast_paths)
                    assert tuple(got) == direct_six(n, m, a, b)


@pytest.mark.parametrize("fast_paths", [True, False])
def test_ten_small_box_pure(fast_paths):
    for n in range(0, 11):
        for m in range(1, 11):
            for a in range(0, 12):
                for b in range(0, 12):
                    got = eval_ten_py(n, m, a, b, fast_paths)
                    assert tuple(got) == direct_ten(n, m, a, b)


def box_oracle_chunk(indices, m, n_max, ab_max):
    """Moments for every (n, a, b) at fixed m, via numpy cumsums.

    Returns shape ((ab_max+1)**2 * n_max, k); rows enumerate (a, b) in C
    order with n = 1..n_max innermost, matching box_queries_chunk.
    """
    x = np.arange(n_max, dtype=np.int64)
    ab = np.arange(ab_max + 1, dtype=np.int64)
    aa, bb = np.meshgrid(ab, ab, indexing="ij")
    g = (aa.reshape(-1, 1) * x + bb.reshape(-1, 1)) // m
    out = np.empty((g.shape[0], n_max, len(indices)), dtype=np.int64)
    for i, (p, q) in enumerate(indices):
        term = x ** p * g ** q
        np.cumsum(term, axis=1, out=term)
        out[:, :, i] = term
    return out.reshape(-1, len(indices))


def box_queries_chunk(m, n_max, ab_max):
    ab = np.arange(ab_max + 1, dtype=np.int64)
    aa, bb = np.meshgrid(ab, ab, indexing="ij")
    rows = (ab_max + 1) ** 2 * n_max
    q = np.empty((rows, 4), dtype=np.int64)
    q[:, 0] = np.tile(np.arange(1, n_max + 1, dtype=np.int64),
                      (ab_max + 1) ** 2)
    q[:, 1] = m
    q[:, 2] = np.repeat(aa.reshape(-1), n_max)
    q[:, 3] = np.repeat(bb.reshape(-1), n_max)
    return q


def run_exhaustive_box(n_max=40, m_max=40, ab_max=60):
    """Exhaustive native-vs-direct box check shared with the acceptance suite."""
    for m in range(1, m_max + 1):
        q = box_queries_chunk(m, n_max, ab_max)
        got6 = _fast.eval_six_batch(q)
        want6 = box_oracle_chunk(SIX_INDICES, m, n_max, ab_max)
        assert np.array_equal(got6, want6), f"six-moment mismatch at m={m}"
        got10 = _fast.eval_ten_batch(q)
        want10 = box_oracle_chunk(TEN_INDICES, m, n_max, ab_max)
        assert np.array_equal(got10, want10), f"ten-moment mismatch at m={m}"


def test_exhaustive_box_native():
    run_exhaustive_box()


def random_queries(count, seed, large_fraction=0.1, n_small=400, n_large=10 ** 4):
    """Random kernel queries; n stays small enough for the direct oracle."""
    rng = random.Random(seed)
    queries = []
    for _ in range(count):
        if rng.random() < large_fraction:
            n = int(math.exp(rng.uniform(0, math.log(n_large))))
        else:
            n = rng.randint(1, n_small)
        m = rng.randint(1, 10 ** 6)
        a = rng.randint(0, 10 ** 6)
        b = rng.randint(0, 10 ** 6)
        queries.append((n, m, a, b))
    return queries


@pytest.mark.parametrize("fast_paths", [True, False])
def test_random_queries_six(fast_paths):
    for n, m, a, b in random_queries(2000, seed=0xC3A5):
        want = direct_six(n, m, a, b)
        assert tuple(eval_six(n, m, a, b, fast_paths)) == want
        assert tuple(eval_six_py(n, m, a, b, fast_paths)) == want


@pytest.mark.parametrize("fast_paths", [True, False])
def test_random_queries_ten(fast_paths):
    for n, m, a, b in random_queries(2000, seed=0x7E4):
        want = direct_ten(n, m, a, b)
        assert tuple(eval_ten(n, m, a, b, fast_paths)) == want
        assert tuple(eval_ten_py(n, m, a, b, fast_paths)) == want


def test_huge_parameters_fall_back_to_python():
    # Values beyond any 128-bit budget must still evaluate exactly.
    n, m, a, b = 10 ** 12, 10 ** 9 + 7, 10 ** 11 + 3, 10 ** 10 + 9
    six = eval_six(n, m, a, b)
    ten = eval_ten(n, m, a, b)
    assert six.h01 == ten.h01 and six.h21 == ten.h21 and six.h03 == ten.h03
    # Cross-check one closed form: for a == k*m and b < m the floor is k*x.
    k = 10 ** 6
    n2 = 10 ** 7
    v = eval_six(n2, 5, 5 * k, 3)
    assert v.h01 == k * (n2 * (n2 - 1) // 2)
    assert v.h02 == k * k * (n2 * (n2 - 1) * (2 * n2 - 1) // 6)


def test_ten_agrees_with_six_on_shared_indices():
    rng = random.Random(5)
    shared = [(SIX_INDICES.index(pq), TEN_INDICES.index(pq))
              for pq in SIX_INDICES]
    for _ in range(2000):
        n = rng.randint(0, 10 ** 5)
        m = rng.randint(1, 10 ** 6)
        a = rng.randint(0, 10 ** 6)
        b = rng.randint(0, 10 ** 6)
        six = eval_six(n, m, a, b)
        ten = eval_ten(n, m, a, b)
        for i6, i10 in shared:
            assert six[i6] == ten[i10]


def test_cycle_depth_is_logarithmic():
    rng = random.Random(99)
    for _ in range(5000):
        n = rng.randint(0, 10 ** 9)
        m = rng.randint(1, 10 ** 9)
        a = rng.randint(0, 10 ** 9)
        b = rng.randint(0, 10 ** 9)
        bound = 2 * math.log2(max(m, 2)) + 4
        assert kernel_cycle_depth(n, m, a, b) <= bound


def test_kernel_query_accepted_and_validated():
    q = KernelQuery(n=37, m=11, a=23, b=5)
    q.validate()
    assert tuple(eval_six(q)) == direct_six(37, 11, 23, 5)
    assert tuple(eval_ten(q)) == direct_ten(37, 11, 23, 5)
    with pytest.raises(ValueError):
        KernelQuery(n=1, m=0, a=1, b=1).validate()
    with pytest.raises(ValueError):
        KernelQuery(n=-1, m=1, a=1, b=1).validate()
    with pytest.raises(ValueError):
        eval_six(1, 0, 1, 1)


def test_reversed_floor_moment_matches_direct():
    rng = random.Random(17)
    for _ in range(2000):
        u = rng.randint(0, 30)
        m = rng.randint(1, 50)
        R = rng.randint(0, 60)
        L = rng.randint(0, R)
        B = u * R + rng.randint(0, 500)
        p = rng.randint(0, 3)
        q = rng.randint(1, 4 - p)
        want = sum(x ** p * ((B - u * x) // m) ** q for x in range(L, R + 1))
        assert reversed_floor_moment(p, q, L, R, B, u, m) == want
    with pytest.raises(ValueError):
        reversed_floor_moment(2, 3, 0, 5, 100, 1, 3)
    with pytest.raises(ValueError):
        reversed_floor_moment(0, 1, 0, 5, 2, 1, 3)
