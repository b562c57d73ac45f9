import math
from math import gcd

import numpy as np
import pytest

from latticerect.sieves import (
    SieveTables,
    build_sieve,
    coprime_prefix,
    squarefree_divisors,
)

LIMIT = 10 ** 4


def mu_trial_division(k):
    m = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            m = -m
        p += 1
    if k > 1:
        m = -m
    return m


def smallest_prime_factor(k):
    p = 2
    while p * p <= k:
        if k % p == 0:
            return p
        p += 1
    return k


@pytest.fixture(scope="module")
def tables():
    return build_sieve(LIMIT)


def test_mobius_matches_trial_division(tables):
    assert tables.mu[1] == 1
    for k in range(2, LIMIT + 1):
        assert int(tables.mu[k]) == mu_trial_division(k), f"mu({k})"


def test_spf_matches_trial_division(tables):
    for k in range(2, LIMIT + 1):
        assert int(tables.spf[k]) == smallest_prime_factor(k), f"spf({k})"


def test_native_and_pure_sieve_agree():
    import latticerect.sieves as sieves

    native = build_sieve(3000)
    saved = sieves._fast
    sieves._fast = None
    try:
        pure = build_sieve(3000)
    finally:
        sieves._fast = saved
    assert np.array_equal(native.spf, pure.spf)
    assert np.array_equal(native.mu, pure.mu)


def test_squarefree_divisors_on_demand(tables):
    for k in range(1, 2001):
        got = sorted(squarefree_divisors(k, tables))
        want = sorted((d, mu_trial_division(d))
                      for d in range(1, k + 1)
                      if k % d == 0 and mu_trial_division(d) != 0)
        assert got == want, f"divisors of {k}"
    with pytest.raises(ValueError):
        tables.squarefree_divisors(0)
    with pytest.raises(ValueError):
        tables.squarefree_divisors(LIMIT + 1)


def test_bulk_divisor_lists_match_and_cache(tables):
    t = build_sieve(500)
    on_demand = [None] + [t.squarefree_divisors(k) for k in range(1, 501)]
    lists = t.all_squarefree_divisor_lists()
    assert t.all_squarefree_divisor_lists() is lists  # cached
    for k in range(1, 501):
        assert sorted(lists[k]) == sorted(on_demand[k])


def test_divisor_list_total_size_is_quasilinear():
    # Sum over k <= n of 2^omega(k) is O(n log n); c = 1.5 has ample slack.
    for n in (100, 1000, LIMIT):
        t = build_sieve(n)
        total = sum(len(t.squarefree_divisors(k)) for k in range(1, n + 1))
        assert total <= 1.5 * n * math.log(n + 1)


def test_coprime_prefix_matches_gcd_loop(tables):
    for u in range(1, 501):
        for X in (0, 1, 2, 3, 7, 50, 211, 500):
            for j in (0, 1, 2):
                want = sum(v ** j for v in range(1, X + 1) if gcd(u, v) == 1)
                assert coprime_prefix(u, X, j, tables) == want
    with pytest.raises(ValueError):
        coprime_prefix(6, 10, 3, tables)


def test_tables_dataclass_fields(tables):
    assert isinstance(tables, SieveTables)
    assert tables.limit == LIMIT
    assert tables.spf.dtype == np.int64
    assert tables.mu.dtype == np.int8
    assert tables.spf[0] == 0 and tables.spf[1] == 0
