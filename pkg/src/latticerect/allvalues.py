"""The O(N^(3/2)) all-values algorithm: F(n) for every n <= N at once.

Stage 1 builds divisor-free coefficient arrays G0, G1, G2 where

    G0[L] = sum of mult(x, y) over a > b >= 1, x >= y >= 1, ax + by = L

and G1, G2 carry the extra weights (L + K) and L*K with K = bx + ay.
The quadruples are covered disjointly by {x <= B} and {a <= B, x > B},
B = floor(sqrt(N)); within each part the innermost variable traces an
arithmetic progression of stride m with polynomial weight, applied
through per-step difference buffers so a whole progression costs O(1)
plus one O(N) flush per step.

Stage 2 restores primitivity by a Mobius convolution E_i = mu_d * G_i,
stage 3 recovers F(n) = f0(n) + n^2 P0(n) - n P1(n) + P2(n) from the
prefix sums P_i of E_i.

Auxiliary memory is O(N) exact-integer slots: three G arrays, three E
arrays, six difference buffers of length N + 2B + 2 (one for the
constant G0 channel, two for the linear G1 channel, three for the
quadratic G2 channel) and per-step accumulators of length m <= 2B.
Documented bound: fewer than 13*N + O(sqrt(N)) slots beyond the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .onevalue import f0
from .sieves import SieveTables, build_sieve

try:
    from . import _fast
except ImportError:  # pragma: no cover
    _fast = None

__all__ = [
    "CoefficientArrays",
    "EventArrays",
    "ProgressionUpdate",
    "DifferenceChannel",
    "build_coefficient_arrays",
    "mobius_convolve",
    "recover_table",
    "compute_table",
    "MEMORY_SLOT_FACTOR",
]

#: documented constant c in the "< c*N exact-integer slots" memory bound.
MEMORY_SLOT_FACTOR = 13


@dataclass
class CoefficientArrays:
    N: int
    G0: list
    G1: list
    G2: list


@dataclass
class EventArrays:
    N: int
    E0: list
    E1: list
    E2: list


@dataclass(frozen=True)
class ProgressionUpdate:
    """Add c0 + c1*l + c2*l**2 at index base + step*l for lo <= l <= hi."""

    base: int
    step: int
    lo: int
    hi: int
    c0: int
    c1: int = 0
    c2: int = 0

    def apply_direct(self, arr: list) -> None:
        """Reference semantics: the literal loop."""
        for l in range(self.lo, self.hi + 1):
            arr[self.base + self.step * l] += (
                self.c0 + self.c1 * l + self.c2 * l * l)


class DifferenceChannel:
    """Stride-m difference buffers for polynomial progressions of one
    degree (0, 1 or 2).

    A progression deposit costs O(1); ``flush`` integrates the buffers
    (degree + 1) times at stride m, adds the result into the target
    array, and zeroes the buffers while walking so they can be reused
    for the next step.
    """

    def __init__(self, length: int, degree: int):
        if degree not in (0, 1, 2):
            raise ValueError(f"degree must be 0, 1 or 2, got {degree}")
        self.degree = degree
        self.length = length
        self.bufs = [[0] * length for _ in range(degree + 1)]

    def add(self, upd: ProgressionUpdate) -> None:
        if upd.lo > upd.hi:
            return
        if upd.step < 1:
            raise ValueError(f"progression stride must be positive: {upd}")
        deg = self.degree
        if (deg < 2 and upd.c2) or (deg < 1 and upd.c1):
            raise ValueError(f"update degree exceeds channel degree {deg}")
        # shift so the progression starts at offset 0
        c0 = upd.c0 + upd.c1 * upd.lo + upd.c2 * upd.lo * upd.lo
        c1 = upd.c1 + 2 * upd.c2 * upd.lo
        c2 = upd.c2
        start = upd.base + upd.step * upd.lo
        stop = upd.base + upd.step * (upd.hi + 1)
        if start < 0 or stop >= self.length:
            raise IndexError(f"progression {upd} escapes buffer")
        self._deposit(start, c0, c1, c2, +1)
        # cancel the polynomial continuation past the last element
        s1 = upd.hi - upd.lo + 1
        d0 = c0 + c1 * s1 + c2 * s1 * s1
        d1 = c1 + 2 * c2 * s1
        self._deposit(stop, d0, d1, c2, -1)

    def _deposit(self, pos: int, c0: int, c1: int, c2: int, sign: int) -> None:
        # Basis: one integration of a unit gives 1, two give (s+1),
        # three give C(s+2, 2); decompose c0 + c1*s + c2*s^2 accordingly.
        deg = self.degree
        if deg == 0:
            self.bufs[0][pos] += sign * c0
            return
        if deg == 1:
            self.bufs[0][pos] += sign * (c0 - c1)
            self.bufs[1][pos] += sign * c1
            return
        self.bufs[0][pos] += sign * (c0 - c1 + c2)
        self.bufs[1][pos] += sign * (c1 - 3 * c2)
        self.bufs[2][pos] += sign * 2 * c2

    def flush(self, m: int, target: list) -> None:
        """Integrate at stride m into target (index-clipped), then clear."""
        n_t = len(target)
        deg = self.degree
        accs = [[0] * m for _ in range(deg + 1)]
        b = self.bufs
        for L in range(self.length):
            r = L % m
            if deg == 2:
                accs[2][r] += b[2][L]
                accs[1][r] += b[1][L] + accs[2][r]
                accs[0][r] += b[0][L] + accs[1][r]
                b[2][L] = 0
                b[1][L] = 0
            elif deg == 1:
                accs[1][r] += b[1][L]
                accs[0][r] += b[0][L] + accs[1][r]
                b[1][L] = 0
            else:
                accs[0][r] += b[0][L]
            b[0][L] = 0
            if L < n_t:
                target[L] += accs[0][r]

    def is_clear(self) -> bool:
        return all(not any(buf) for buf in self.bufs)


def build_coefficient_arrays(N: int,
                             check_buffers: bool = False) -> CoefficientArrays:
    """G0, G1, G2 for thresholds L <= N in O(N^(3/2)) operations."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    B = isqrt(N)
    G0 = [0] * (N + 1)
    G1 = [0] * (N + 1)
    G2 = [0] * (N + 1)
    buf_len = N + 2 * B + 3
    ch0 = DifferenceChannel(buf_len, 0)
    ch1 = DifferenceChannel(buf_len, 1)
    ch2 = DifferenceChannel(buf_len, 2)

    for m in range(2, 2 * B):
        used = False
        # part {a <= B, x > B}: a = m, progression in s = x - y >= 1
        if m <= B:
            a = m
            for b in range(1, a):
                ab = a + b
                for y in range(1, N // ab + 1):
                    w = ab * y
                    s_hi = (N - w) // a
                    s_lo = 1 if y > B else B + 1 - y
                    if s_lo <= s_hi:
                        ch0.add(ProgressionUpdate(w, a, s_lo, s_hi, 4))
                        ch1.add(ProgressionUpdate(w, a, s_lo, s_hi,
                                                  8 * w, 4 * ab))
                        ch2.add(ProgressionUpdate(w, a, s_lo, s_hi,
                                                  4 * w * w, 4 * w * ab,
                                                  4 * a * b))
                        used = True
                    if y > B:
                        # singleton s = 0 (x = y > B) at multiplier 2
                        G0[w] += 2
                        G1[w] += 4 * w
                        G2[w] += 2 * w * w
        # part {x <= B}, off-diagonal: x + y = m, progression in b
        if m >= 3:
            for x in range(m // 2 + 1, min(B, m - 1) + 1):
                y = m - x
                for r in range(1, (N - m) // x + 1):
                    xr = x * r
                    b_hi = (N - xr) // m
                    ch0.add(ProgressionUpdate(xr, m, 1, b_hi, 4))
                    ch1.add(ProgressionUpdate(xr, m, 1, b_hi,
                                              4 * m * r, 8 * m))
                    ch2.add(ProgressionUpdate(xr, m, 1, b_hi,
                                              4 * x * y * r * r,
                                              4 * m * m * r, 4 * m * m))
                    used = True
        if used:
            ch0.flush(m, G0)
            ch1.flush(m, G1)
            ch2.flush(m, G2)
            if check_buffers and not (ch0.is_clear() and ch1.is_clear()
                                      and ch2.is_clear()):
                raise AssertionError(f"buffers not clear after step m={m}")

    # diagonal sides x = y = t <= B: (a, b) pairs with a + b = s
    for t in range(1, B + 1):
        for s in range(3, N // t + 1):
            cnt = (s - 1) // 2
            L = t * s
            G0[L] += 2 * cnt
            G1[L] += 4 * L * cnt
            G2[L] += 2 * L * L * cnt
    return CoefficientArrays(N=N, G0=G0, G1=G1, G2=G2)


def mobius_convolve(G: CoefficientArrays,
                    tables: SieveTables) -> EventArrays:
    """E_i[t] = sum over d | t of mu(d) * d**i * G_i[t // d]."""
    N = G.N
    if tables.limit < N:
        raise ValueError(f"sieve limit {tables.limit} < N={N}")
    mu = tables.mu
    E0 = [0] * (N + 1)
    E1 = [0] * (N + 1)
    E2 = [0] * (N + 1)
    G0, G1, G2 = G.G0, G.G1, G.G2
    for d in range(1, N + 1):
        md = int(mu[d])
        if md == 0:
            continue
        md1 = md * d
        md2 = md1 * d
        for k in range(1, N // d + 1):
            t = d * k
            if G0[k]:
                E0[t] += md * G0[k]
            if G1[k]:
                E1[t] += md1 * G1[k]
            if G2[k]:
                E2[t] += md2 * G2[k]
    return EventArrays(N=N, E0=E0, E1=E1, E2=E2)


def recover_table(E: EventArrays) -> list:
    """[F(1), ..., F(N)] from the event arrays."""
    N = E.N
    out = []
    p0 = p1 = p2 = 0
    for n in range(1, N + 1):
        p0 += E.E0[n]
        p1 += E.E1[n]
        p2 += E.E2[n]
        out.append(f0(n) + n * n * p0 - n * p1 + p2)
    return out


def compute_table(N: int, check_buffers: bool = False):
    """[F(1), ..., F(N)] in O(N^(3/2)) time and O(N) auxiliary slots.

    Uses the compiled 128-bit implementation when available (all entries
    of F up to N = 10^6 fit comfortably); set check_buffers to force the
    pure-Python path with per-step buffer assertions.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if _fast is not None and not check_buffers:
        try:
            return _fast.compute_table(N)
        except OverflowError:
            pass
    G = build_coefficient_arrays(N, check_buffers=check_buffers)
    E = mobius_convolve(G, build_sieve(N))
    return recover_table(E)
