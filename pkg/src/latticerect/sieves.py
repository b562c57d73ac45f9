"""Multiplicative-function sieves shared by the counting algorithms.

A single linear sieve produces the smallest prime factor and Mobius
function up to a limit; squarefree divisor lists are derived from the
smallest-prime-factor table either on demand or in bulk.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

try:
    from . import _fast
except ImportError:  # pragma: no cover
    _fast = None

__all__ = ["SieveTables", "build_sieve", "squarefree_divisors", "coprime_prefix"]


@dataclass
class SieveTables:
    """Smallest prime factor and Mobius tables for 0..limit."""

    limit: int
    spf: np.ndarray  # int64, spf[0] = spf[1] = 0
    mu: np.ndarray   # int8
    _divisor_lists: list | None = field(default=None, repr=False)

    def squarefree_divisors(self, k: int) -> list:
        """Pairs (d, mu(d)) over the squarefree divisors d of k.

        Uses the bulk cache when one was built, otherwise factors k via
        the smallest-prime-factor table on demand.
        """
        if not 1 <= k <= self.limit:
            raise ValueError(f"k={k} outside sieve range [1, {self.limit}]")
        if self._divisor_lists is not None:
            return self._divisor_lists[k]
        return _squarefree_from_spf(k, self.spf)

    def all_squarefree_divisor_lists(self) -> list:
        """Bulk-build and cache squarefree divisor lists for all 1..limit.

        Costs O(limit log limit) memory; worth it when every index is
        visited, as the sweep algorithms do.
        """
        if self._divisor_lists is None:
            lists = [[] for _ in range(self.limit + 1)]
            for d in range(1, self.limit + 1):
                md = int(self.mu[d])
                if md != 0:
                    entry = (d, md)
                    for k in range(d, self.limit + 1, d):
                        lists[k].append(entry)
            self._divisor_lists = lists
        return self._divisor_lists


def build_sieve(limit: int) -> SieveTables:
    """Linear sieve of smallest prime factors and Mobius values up to limit."""
    if limit < 1:
        raise ValueError(f"sieve limit must be >= 1, got {limit}")
    spf = np.zeros(limit + 1, dtype=np.int64)
    mu = np.zeros(limit + 1, dtype=np.int8)
    if _fast is not None:
        _fast.fill_sieve(spf, mu)
    else:
        mu[1] = 1
        primes = []
        for i in range(2, limit + 1):
            if spf[i] == 0:
                spf[i] = i
                mu[i] = -1
                primes.append(i)
            for p in primes:
                ip = i * p
                if p > spf[i] or ip > limit:
                    break
                spf[ip] = p
                mu[ip] = 0 if p == spf[i] else -mu[i]
    return SieveTables(limit=limit, spf=spf, mu=mu)


def _squarefree_from_spf(k: int, spf) -> list:
    divs = [(1, 1)]
    while k > 1:
        p = int(spf[k])
        divs += [(d * p, -md) for d, md in divs]
        while k % p == 0:
            k //= p
    return divs


def squarefree_divisors(k: int, tables: SieveTables) -> list:
    """Pairs (d, mu(d)) for squarefree d | k."""
    return tables.squarefree_divisors(k)


def coprime_prefix(u: int, X: int, j: int, tables: SieveTables) -> int:
    """Sum of v**j over 1 <= v <= X with gcd(u, v) = 1, for j in {0, 1, 2}.

    Mobius inversion over the squarefree divisors of u reduces this to
    closed-form power sums.
    """
    from .arith import power_sum

    if j not in (0, 1, 2):
        raise ValueError(f"degree j must be 0, 1 or 2, got {j}")
    if X < 1:
        return 0
    total = 0
    for d, md in tables.squarefree_divisors(u):
        if d <= X:
            q = X // d
            # power_sum starts at v = 0; drop that term (it only matters
            # for j = 0, where it would overcount by one per divisor).
            total += md * d**j * (power_sum(j, q + 1) if j else q)
    return total
