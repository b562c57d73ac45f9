"""Weighted floor-sum kernels.

Two recursively closed families of moments

    H[p,q](n; m, a, b) = sum_{x=0}^{n-1} x**p * floor((a*x + b) / m) ** q

are evaluated by a Euclidean recursion that alternates an affine
normalization (reduce a, b modulo m) with a reciprocal step (transpose the
floor staircase, swapping the roles of a and m).  The six-moment family
covers p + q <= 3 and the ten-moment family p + q <= 4; both are closed
under the two steps, so each query costs O(log m) cycles.

A compiled fast path (``latticerect._fast``) evaluates the same recursions
in overflow-checked 128-bit arithmetic; on overflow or when unavailable,
the pure-Python arbitrary-precision versions below are used.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from math import comb

try:
    from . import _fast
except ImportError:  # pragma: no cover - compiled module should exist
    _fast = None

__all__ = [
    "KernelQuery",
    "MomentVector6",
    "MomentVector10",
    "SIX_INDICES",
    "TEN_INDICES",
    "eval_six",
    "eval_ten",
    "eval_six_py",
    "eval_ten_py",
    "reversed_floor_moment",
    "kernel_cycle_depth",
]

MomentVector6 = namedtuple("MomentVector6",
                           ["h01", "h11", "h21", "h02", "h12", "h03"])
MomentVector10 = namedtuple("MomentVector10",
                            ["h01", "h11", "h21", "h31", "h02", "h12",
                             "h22", "h03", "h13", "h04"])

#: (p, q) index order of the six-moment vector.
SIX_INDICES = ((0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (0, 3))
#: (p, q) index order of the ten-moment vector.
TEN_INDICES = (
    (0, 1), (1, 1), (2, 1), (3, 1),
    (0, 2), (1, 2), (2, 2),
    (0, 3), (1, 3),
    (0, 4),
)

_ZERO6 = (0, 0, 0, 0, 0, 0)
_ZERO10 = (0,) * 10


@dataclass(frozen=True)
class KernelQuery:
    """Parameter quadruple of a floor-moment query."""

    n: int
    m: int
    a: int
    b: int

    def validate(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus must be >= 1, got m={self.m}")
        if self.n < 0 or self.a < 0 or self.b < 0:
            raise ValueError(f"n, a, b must be nonnegative: {self}")


def _check_args(n: int, m: int, a: int, b: int) -> None:
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got m={m}")
    if n < 0 or a < 0 or b < 0:
        raise ValueError(f"n, a, b must be nonnegative: n={n} a={a} b={b}")


def _six_rec(n: int, m: int, a: int, b: int, fast_paths: bool):
    # One cycle: affine normalization, then base case or reciprocal step.
    if n <= 0:
        return _ZERO6
    A, ar = divmod(a, m)
    B, br = divmod(b, m)

    if ar == 0:
        inner = _ZERO6
    else:
        Y = (ar * (n - 1) + br) // m
        if Y == 0:
            inner = _ZERO6
        else:
            g01, g11, g21, g02, g12, g03 = _six_rec(Y, ar, m, m - br - 1, fast_paths)
            Q0 = Y
            Q1 = Y * (Y - 1) // 2
            Q2 = Y * (Y - 1) * (2 * Y - 1) // 6
            P1 = n * (n - 1) // 2
            P2 = n * (n - 1) * (2 * n - 1) // 6
            inner = (
                n * Y - Q0 - g01,
                (2 * P1 * Y - g01 - g02) // 2,
                (6 * P2 * Y - g01 - 3 * g02 - 2 * g03) // 6,
                n * Y * Y - Q0 - g01 - 2 * Q1 - 2 * g11,
                (2 * P1 * Y * Y - g01 - g02 - 2 * g11 - 2 * g12) // 2,
                n * Y ** 3 - Q0 - g01 - 3 * Q1 - 3 * g11 - 3 * Q2 - 3 * g21,
            )

    if A == 0 and B == 0:
        return inner

    b01, b11, b21, b02, b12, b03 = inner
    P0 = n
    P1 = n * (n - 1) // 2
    P2 = n * (n - 1) * (2 * n - 1) // 6
    P3 = P1 * P1

    if fast_paths and B == 0:
        # Common affine subcase b < m; within it, unit quotient is cheapest.
        if A == 1:
            return (
                b01 + P1,
                b11 + P2,
                b21 + P3,
                b02 + 2 * b11 + P2,
                b12 + 2 * b21 + P3,
                b03 + 3 * b12 + 3 * b21 + P3,
            )
        return (
            b01 + A * P1,
            b11 + A * P2,
            b21 + A * P3,
            b02 + 2 * A * b11 + A * A * P2,
            b12 + 2 * A * b21 + A * A * P3,
            b03 + 3 * A * b12 + 3 * A * A * b21 + A ** 3 * P3,
        )

    return (
        b01 + A * P1 + B * P0,
        b11 + A * P2 + B * P1,
        b21 + A * P3 + B * P2,
        b02 + 2 * A * b11 + 2 * B * b01 + A * A * P2 + 2 * A * B * P1 + B * B * P0,
        b12 + 2 * A * b21 + 2 * B * b11 + A * A * P3 + 2 * A * B * P2 + B * B * P1,
        b03 + 3 * A * b12 + 3 * B * b02 + 3 * A * A * b21 + 6 * A * B * b11
        + 3 * B * B * b01 + A ** 3 * P3 + 3 * A * A * B * P2
        + 3 * A * B * B * P1 + B ** 3 * P0,
    )


def _ten_rec(n: int, m: int, a: int, b: int, fast_paths: bool):
    if n <= 0:
        return _ZERO10
    A, ar = divmod(a, m)
    B, br = divmod(b, m)

    if ar == 0:
        inner = _ZERO10
    else:
        Y = (ar * (n - 1) + br) // m
        if Y == 0:
            inner = _ZERO10
        else:
            g = _ten_rec(Y, ar, m, m - br - 1, fast_paths)
            g01, g11, g21, g31, g02, g12, g22, g03, g13, g04 = g
            Q0 = Y
            Q1 = Y * (Y - 1) // 2
            Q2 = Y * (Y - 1) * (2 * Y - 1) // 6
            Q3 = Q1 * Q1
            P1 = n * (n - 1) // 2
            P2 = n * (n - 1) * (2 * n - 1) // 6
            P3 = P1 * P1
            Y2 = Y * Y
            Y3 = Y2 * Y
            inner = (
                n * Y - Q0 - g01,
                (2 * P1 * Y - g01 - g02) // 2,
                (6 * P2 * Y - g01 - 3 * g02 - 2 * g03) // 6,
                (4 * P3 * Y - g02 - 2 * g03 - g04) // 4,
                n * Y2 - Q0 - g01 - 2 * Q1 - 2 * g11,
                (2 * P1 * Y2 - g01 - g02 - 2 * g11 - 2 * g12) // 2,
                (6 * P2 * Y2 - g01 - 3 * g02 - 2 * g03 - 2 * g11 - 6 * g12 - 4 * g13) // 6,
                n * Y3 - Q0 - g01 - 3 * Q1 - 3 * g11 - 3 * Q2 - 3 * g21,
                (2 * P1 * Y3 - g01 - g02 - 3 * g11 - 3 * g12 - 3 * g21 - 3 * g22) // 2,
                n * Y2 * Y2 - Q0 - g01 - 4 * Q1 - 4 * g11 - 6 * Q2 - 6 * g21
                - 4 * Q3 - 4 * g31,
            )

    if A == 0 and B == 0:
        return inner

    b01, b11, b21, b31, b02, b12, b22, b03, b13, b04 = inner
    P0 = n
    P1 = n * (n - 1) // 2
    P2 = n * (n - 1) * (2 * n - 1) // 6
    P3 = P1 * P1
    P4 = n * (n - 1) * (2 * n - 1) * (3 * n * n - 3 * n - 1) // 30

    if fast_paths and B == 0:
        A2 = A * A
        A3 = A2 * A
        A4 = A2 * A2
        return (
            b01 + A * P1,
            b11 + A * P2,
            b21 + A * P3,
            b31 + A * P4,
            b02 + 2 * A * b11 + A2 * P2,
            b12 + 2 * A * b21 + A2 * P3,
            b22 + 2 * A * b31 + A2 * P4,
            b03 + 3 * A * b12 + 3 * A2 * b21 + A3 * P3,
            b13 + 3 * A * b22 + 3 * A2 * b31 + A3 * P4,
            b04 + 4 * A * b13 + 6 * A2 * b22 + 4 * A3 * b31 + A4 * P4,
        )

    A2 = A * A
    A3 = A2 * A
    A4 = A2 * A2
    B2 = B * B
    B3 = B2 * B
    B4 = B2 * B2
    return (
        b01 + A * P1 + B * P0,
        b11 + A * P2 + B * P1,
        b21 + A * P3 + B * P2,
        b31 + A * P4 + B * P3,
        b02 + 2 * A * b11 + 2 * B * b01 + A2 * P2 + 2 * A * B * P1 + B2 * P0,
        b12 + 2 * A * b21 + 2 * B * b11 + A2 * P3 + 2 * A * B * P2 + B2 * P1,
        b22 + 2 * A * b31 + 2 * B * b21 + A2 * P4 + 2 * A * B * P3 + B2 * P2,
        b03 + 3 * A * b12 + 3 * B * b02 + 3 * A2 * b21 + 6 * A * B * b11
        + 3 * B2 * b01 + A3 * P3 + 3 * A2 * B * P2 + 3 * A * B2 * P1 + B3 * P0,
        b13 + 3 * A * b22 + 3 * B * b12 + 3 * A2 * b31 + 6 * A * B * b21
        + 3 * B2 * b11 + A3 * P4 + 3 * A2 * B * P3 + 3 * A * B2 * P2 + B3 * P1,
        b04 + 4 * A * b13 + 4 * B * b03 + 6 * A2 * b22 + 12 * A * B * b12
        + 6 * B2 * b02 + 4 * A3 * b31 + 12 * A2 * B * b21 + 12 * A * B2 * b11
        + 4 * B3 * b01 + A4 * P4 + 4 * A3 * B * P3 + 6 * A2 * B2 * P2
        + 4 * A * B3 * P1 + B4 * P0,
    )


def eval_six_py(n: int, m: int, a: int, b: int, fast_paths: bool = True):
    """Pure-Python six-moment evaluation (arbitrary precision)."""
    _check_args(n, m, a, b)
    return _six_rec(n, m, a, b, fast_paths)


def eval_ten_py(n: int, m: int, a: int, b: int, fast_paths: bool = True):
    """Pure-Python ten-moment evaluation (arbitrary precision)."""
    _check_args(n, m, a, b)
    return _ten_rec(n, m, a, b, fast_paths)


def eval_six(n, m: int = None, a: int = None, b: int = None,
             fast_paths: bool = True) -> MomentVector6:
    """Six moments H[p,q](n; m, a, b) for (p, q) in SIX_INDICES.

    Accepts either the four integers or a single KernelQuery.  Uses the
    compiled 128-bit path when the inputs fit its conservative overflow
    guard, falling back to pure Python otherwise.
    """
    if isinstance(n, KernelQuery):
        n, m, a, b = n.n, n.m, n.a, n.b
    _check_args(n, m, a, b)
    if _fast is not None and n < 2**62 and m < 2**62 and a < 2**62 and b < 2**62:
        try:
            return MomentVector6(*_fast.eval_six(n, m, a, b, fast_paths))
        except OverflowError:
            pass
    return MomentVector6(*_six_rec(n, m, a, b, fast_paths))


def eval_ten(n, m: int = None, a: int = None, b: int = None,
             fast_paths: bool = True) -> MomentVector10:
    """Ten moments H[p,q](n; m, a, b) for (p, q) in TEN_INDICES."""
    if isinstance(n, KernelQuery):
        n, m, a, b = n.n, n.m, n.a, n.b
    _check_args(n, m, a, b)
    if _fast is not None and n < 2**62 and m < 2**62 and a < 2**62 and b < 2**62:
        try:
            return MomentVector10(*_fast.eval_ten(n, m, a, b, fast_paths))
        except OverflowError:
            pass
    return MomentVector10(*_ten_rec(n, m, a, b, fast_paths))


_SIX_POS = {pq: i for i, pq in enumerate(SIX_INDICES)}
_TEN_POS = {pq: i for i, pq in enumerate(TEN_INDICES)}


def reversed_floor_moment(p: int, q: int, L: int, R: int, B: int, u: int, m: int,
                          fast_paths: bool = True) -> int:
    """Sum of x**p * floor((B - u*x)/m)**q over L <= x <= R.

    The negative-slope floor is rewritten by the substitution x = R - t,
    which binomially re-indexes the sum onto nonneg-slope kernel moments.
    The caller must clip [L, R] so that B - u*x >= 0 throughout.
    """
    if L > R:
        return 0
    if not (0 <= p and 1 <= q and p + q <= 4):
        raise ValueError(f"(p, q)=({p}, {q}) outside the supported families")
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got m={m}")
    if u < 0:
        raise ValueError(f"slope must be nonnegative, got u={u}")
    b0 = B - u * R
    if b0 < 0 or B - u * L < 0:
        raise ValueError(
            f"floor argument B - u*x negative on [{L}, {R}] (B={B}, u={u})")
    N = R - L + 1
    if p + q <= 3:
        H = eval_six(N, m, u, b0, fast_paths)
        pos = _SIX_POS
    else:
        H = eval_ten(N, m, u, b0, fast_paths)
        pos = _TEN_POS
    total = 0
    for j in range(p + 1):
        term = comb(p, j) * R ** (p - j) * H[pos[(j, q)]]
        total += -term if j & 1 else term
    return total


def kernel_cycle_depth(n: int, m: int, a: int, b: int) -> int:
    """Number of Euclidean cycles (affine + reciprocal) a query performs.

    Diagnostic used by tests to confirm the logarithmic descent.
    """
    _check_args(n, m, a, b)
    depth = 0
    while True:
        depth += 1
        if n <= 0:
            return depth
        ar = a % m
        br = b % m
        if ar == 0:
            return depth
        Y = (ar * (n - 1) + br) // m
        if Y == 0:
            return depth
        n, m, a, b = Y, ar, m, m - br - 1
