"""Five exact algorithms for F(n), the rectangle count on an n x n grid.

Every rectangle is either axis-aligned, diagonal (side direction (1, 1)),
or tilted with a primitive side direction (u, v), u > v >= 1, and side
multiples x >= y >= 1.  A tilted family occupies a bounding box of size
(xu + yv) by (xv + yu), so

    F(n) = f0(n) + sum over primitive u > v >= 1, x >= y >= 1
                   of mult(x, y) * (n - xu - yv) * (n - xv - yu)

restricted to xu + yv <= n, with mult = 2 on the diagonal x = y and 4 off
it, and f0 collecting the axis-aligned and (1, 1) cases in closed form.

The five algorithms evaluate the tilted sum F1(n) at decreasing cost:

* ``f_baseline``     O(n^2)            closed-form innermost sum
* ``f_sqrt``         O(n^(3/2) log n)  direction split at sqrt(n)
* ``f_cuberoot``     O(n^(4/3) log n)  split at n^(2/3), six-moment kernel
* ``f_tenmoment``    O(n log^3 n)      Mobius over v, ten-moment kernel
* ``f_divisorlayer`` O(n log^2 n)      Mobius over a common scale factor

All return identical integers; the test suite enforces this against two
independent oracles.  Compiled fast paths are used where available, with
transparent fallback to exact Python on 128-bit overflow.
"""

from __future__ import annotations

from math import gcd, isqrt

import numpy as np

from .arith import power_sum_range
from .kernels import eval_six, eval_ten
from .sieves import build_sieve

try:
    from . import _fast
except ImportError:  # pragma: no cover
    _fast = None

__all__ = [
    "f0",
    "layer_sum",
    "f_baseline",
    "f_sqrt",
    "f_cuberoot",
    "f_tenmoment",
    "f_divisorlayer",
    "f_auto",
    "direction_contribution",
    "r_uyd",
    "layer_coefficients",
    "f1_divisorlayer_range",
    "f1_tenmoment_range",
    "ALGORITHMS",
    "AUTO_CUTOFF",
]

#: below this, f_auto prefers the constant-light baseline.
AUTO_CUTOFF = 4096


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"grid size must be nonnegative, got n={n}")


def f0(n: int) -> int:
    """Axis-aligned plus direction-(1,1) rectangles, in closed form."""
    _check_n(n)
    return n * n * (n - 1) ** 2 // 4 + n * (n - 1) ** 2 * (n - 2) // 12


def _s(r: int, X: int) -> int:
    # sum of x**r for 1 <= x <= X  (0 when X < 1)
    return power_sum_range(r, 1, X) if X >= 1 else 0


def _coprime_v_iter(n_u: int, spf) -> np.ndarray:
    """v in [1, n_u) with gcd(v, n_u) = 1, as an int64 array."""
    mask = np.ones(n_u, dtype=bool)
    mask[0] = False  # exclude v = 0; v = n_u not in range
    k = n_u
    while k > 1:
        p = int(spf[k])
        mask[::p] = False
        while k % p == 0:
            k //= p
    out = np.nonzero(mask)[0]
    return out


# ---------------------------------------------------------------------------
# baseline: O(n^2)


def _direction_loop(u: int, v: int, n: int) -> int:
    """Exact contribution of one primitive direction by an x-loop."""
    total4 = 0  # weight-4 accumulator over all y <= min(x, (n-xu)//v)
    diag = 0
    x_hi = (n - v) // u
    for x in range(1, x_hi + 1):
        A = n - x * u
        C = n - x * v
        Y = A // v
        if Y > x:
            Y = x
        if Y < 1:
            break
        s1 = Y * (Y + 1) // 2
        s2 = Y * (Y + 1) * (2 * Y + 1) // 6
        total4 += A * C * Y - (A * u + C * v) * s1 + u * v * s2
        if Y == x:
            diag += (n - x * (u + v)) ** 2
    return 4 * total4 - 2 * diag


def f_baseline(n: int) -> int:
    """F(n) by a per-direction y-loop over primitive directions: O(n^2)."""
    _check_n(n)
    if n < 3:
        return f0(n)
    spf = build_sieve(n).spf
    total = f0(n)
    for u in range(2, n):
        for v in _coprime_v_iter(u, spf):
            v = int(v)
            if u + v > n:
                break
            total += _direction_yloop(u, v, n)
    return total


# ---------------------------------------------------------------------------
# sqrt decomposition: O(n^(3/2) log n)


def _direction_yloop(u: int, v: int, n: int) -> int:
    """Same contribution as _direction_loop, by a y-loop (O(n/(u+v)))."""
    total4 = 0
    diag = 0
    y_hi = n // (u + v)
    for y in range(1, y_hi + 1):
        a0 = n - y * v
        c0 = n - y * u
        X = a0 // u  # >= y because y(u+v) <= n
        cnt = X - y + 1
        t1 = power_sum_range(1, y, X)
        t2 = power_sum_range(2, y, X)
        total4 += a0 * c0 * cnt - (a0 * v + c0 * u) * t1 + u * v * t2
        diag += (n - y * (u + v)) ** 2
    return 4 * total4 - 2 * diag


def _large_direction_sweep(n: int, B: int, tables) -> int:
    """Tilted contribution of all directions with u > B, summed over
    coprime v by Mobius inversion: O(n^2 / B) cells."""
    total = 0
    for u in range(B + 1, n):
        x_hi = (n - 1) // u
        if x_hi < 1:
            break
        dm = tables.squarefree_divisors(u)
        for x in range(1, x_hi + 1):
            nxu = n - x * u
            for y in range(1, x + 1):
                vmax = nxu // y
                if vmax >= u:
                    vmax = u - 1
                if vmax < 1:
                    break
                nyu = n - y * u
                a0 = nxu * nyu
                a1 = -(x * nxu + y * nyu)
                a2 = x * y
                c0 = c1 = c2 = 0
                for d, md in dm:
                    if d > vmax:
                        continue
                    X = vmax // d
                    c0 += md * X
                    c1 += md * d * (X * (X + 1) // 2)
                    c2 += md * d * d * (X * (X + 1) * (2 * X + 1) // 6)
                w = 2 if x == y else 4
                total += w * (a0 * c0 + a1 * c1 + a2 * c2)
    return total


def f_sqrt(n: int) -> int:
    """F(n) split at B = sqrt(n): O(n^(3/2) log n)."""
    _check_n(n)
    if n < 3:
        return f0(n)
    B = isqrt(n)
    tables = build_sieve(n)
    total = f0(n)
    for u in range(2, B + 1):
        for v in range(1, u):
            if u + v > n:
                break
            if gcd(u, v) == 1:
                total += _direction_yloop(u, v, n)
    total += _large_direction_sweep(n, B, tables)
    return total


# ---------------------------------------------------------------------------
# cuberoot decomposition: O(n^(4/3) log n)


def direction_contribution(u: int, v: int, n: int) -> int:
    """Contribution of one primitive direction in O(log n) kernel time."""
    if not (u > v >= 1):
        raise ValueError(f"need u > v >= 1, got (u, v)=({u}, {v})")
    if gcd(u, v) != 1:
        raise ValueError(f"direction ({u}, {v}) is not primitive")
    if u + v > n:
        return 0
    s = u + v
    q2 = u * v
    su2 = u * u + v * v
    x1 = n // s
    x2 = n // u

    # x <= x1: the y-sum runs to Y = x; six times it is a cubic in x.
    c1 = 6 * n * n - 3 * n * s + q2
    c2 = -9 * n * s + 3 * su2 + 3 * q2
    c3 = 8 * q2 + 3 * su2
    six = c1 * _s(1, x1) + c2 * _s(2, x1) + c3 * _s(3, x1)
    diag = (n * n * x1 - 2 * n * s * _s(1, x1) + s * s * _s(2, x1))

    # x1 < x <= x2: the y-sum runs to M(x) = (n - ux) // v < x.
    if x2 > x1:
        N = x2 - x1
        h01, h11, h21, h02, h12, h03 = eval_six(N, v, u, n - u * x2)
        R = x2
        F01 = h01
        F11 = R * h01 - h11
        F21 = R * R * h01 - 2 * R * h11 + h21
        F02 = h02
        F12 = R * h02 - h12
        F03 = h03
        six += (6 * (n * n * F01 - n * s * F11 + q2 * F21)
                - 3 * (n * s * (F02 + F01) - su2 * (F12 + F11))
                + q2 * (2 * F03 + 3 * F02 + F01))

    return 4 * (six // 6) - 2 * diag


def _icbrt(x: int) -> int:
    r = round(x ** (1.0 / 3.0))
    while r > 0 and r * r * r > x:
        r -= 1
    while (r + 1) ** 3 <= x:
        r += 1
    return r


def f_cuberoot(n: int) -> int:
    """F(n) split at B = n^(2/3) with the six-moment kernel."""
    _check_n(n)
    if n < 3:
        return f0(n)
    B = _icbrt(n * n)
    if B >= n:
        B = n - 1
    tables = build_sieve(n)
    total = f0(n)
    for u in range(2, B + 1):
        for v in range(1, u):
            if u + v > n:
                break
            if gcd(u, v) == 1:
                total += direction_contribution(u, v, n)
    total += _large_direction_sweep(n, B, tables)
    return total


# ---------------------------------------------------------------------------
# ten-moment algorithm: O(n log^3 n)


def _r_uyd6(u: int, y: int, d: int, n: int) -> int:
    """Six times the unweighted (u, y, d) cell (diagonal at weight 1).

    The cell is sum over x >= y and s >= 1, with v = d*s <= u - 1 and
    xu + yv <= n, of (n - xu - yv)(n - xv - yu).  Multiplied by 6 so the
    kernel-combination numerators stay integral.
    """
    T0 = (u - 1) // d
    if T0 < 1:
        return 0
    yd = y * d
    x_max = (n - yd) // u
    if x_max < y:
        return 0
    nyu = n - y * u
    six = 0

    # capped zone: s runs all the way to T0
    X0 = (n - yd * T0) // u
    hi = min(X0, x_max)
    if hi >= y:
        sig1 = T0 * (T0 + 1) // 2
        sig2 = T0 * (T0 + 1) * (2 * T0 + 1) // 6
        cnt = hi - y + 1
        S1 = power_sum_range(1, y, hi)
        S2 = power_sum_range(2, y, hi)
        sum_p0 = nyu * (n * cnt - u * S1)
        sum_p1 = -d * (y * nyu * cnt + n * S1 - u * S2)
        sum_p2 = y * d * d * S1
        six += 6 * T0 * sum_p0 + 6 * sig1 * sum_p1 + 6 * sig2 * sum_p2

    # active zone: s runs to G(x) = (n - ux) // (yd) < T0
    L = max(y, X0 + 1)
    if L <= x_max:
        N = x_max - L + 1
        R = x_max
        h = eval_ten(N, yd, u, n - u * R)
        h01, h11, h21, h31, h02, h12, h22, h03, h13, h04 = h
        F01 = h01
        F11 = R * h01 - h11
        F21 = R * R * h01 - 2 * R * h11 + h21
        F02 = h02
        F12 = R * h02 - h12
        F22 = R * R * h02 - 2 * R * h12 + h22
        F03 = h03
        F13 = R * h03 - h13
        six += (6 * nyu * (n * F01 - u * F11)
                - 3 * d * (y * nyu * (F02 + F01) + n * (F12 + F11)
                           - u * (F22 + F21))
                + y * d * d * (2 * F13 + 3 * F12 + F11))
    return six


def _diag_cell6(u: int, y: int, d: int, n: int) -> int:
    """Six times the x = y slice of the (u, y, d) cell."""
    T0 = (u - 1) // d
    yd = y * d
    if T0 < 1 or (n - yd) // u < y:
        return 0
    T = min(T0, (n - u * y) // yd)
    if T < 1:
        return 0
    nyu = n - y * u
    p0 = nyu * nyu
    p1 = -d * (2 * y * nyu)
    p2 = y * y * d * d
    return (6 * T * p0 + 3 * T * (T + 1) * p1
            + T * (T + 1) * (2 * T + 1) * p2)


def r_uyd(u: int, y: int, d: int, n: int) -> int:
    """The weighted cell R[u,y,d]: multiplier 4 off the x = y diagonal, 2 on it.

    Summing mu(d) * r_uyd over u >= 2, 1 <= y <= n // u and squarefree
    d | u with d < u gives the tilted count F(n) - f0(n).
    """
    if u < 2 or d >= u or d < 1 or u % d:
        raise ValueError(f"need d | u, d < u, u >= 2: u={u}, d={d}")
    k = d
    for p in range(2, d + 1):
        if p * p > k:
            break
        if k % (p * p) == 0:
            raise ValueError(f"d={d} is not squarefree")
        while k % p == 0:
            k //= p
    if not 1 <= y <= n // u:
        raise ValueError(f"need 1 <= y <= n // u: y={y}, n={n}, u={u}")
    cell6 = 4 * _r_uyd6(u, y, d, n) - 2 * _diag_cell6(u, y, d, n)
    if cell6 % 6:
        raise ArithmeticError("cell not divisible by 6")
    return cell6 // 6


def f1_tenmoment_range(n: int, u_lo: int, u_hi: int) -> int:
    """Tilted contribution restricted to u in [u_lo, u_hi), pure Python.

    Partial ranges sum to the full tilted count, so disjoint ranges may
    be evaluated in parallel and added.
    """
    tables = build_sieve(max(u_hi - 1, 1))
    acc6 = 0
    for u in range(max(2, u_lo), min(u_hi, n)):
        for d, md in tables.squarefree_divisors(u):
            if d >= u:
                continue
            y_hi = n // (u + d)
            for y in range(1, y_hi + 1):
                cell = (4 * _r_uyd6(u, y, d, n)
                        - 2 * _diag_cell6(u, y, d, n))
                if cell:
                    acc6 += md * cell
    if acc6 % 6:
        raise ArithmeticError("ten-moment accumulator not divisible by 6")
    return acc6 // 6


def f_tenmoment(n: int, fast_paths: bool = True) -> int:
    """F(n) via Mobius inversion over v and the ten-moment kernel."""
    _check_n(n)
    if n < 3:
        return f0(n)
    if _fast is not None:
        try:
            return f0(n) + _fast.tenmoment_f1(n, 2, n, fast_paths)
        except OverflowError:
            total = f0(n)
            for u in range(2, n):
                try:
                    total += _fast.tenmoment_f1(n, u, u + 1, fast_paths)
                except OverflowError:
                    total += f1_tenmoment_range(n, u, u + 1)
            return total
    return f0(n) + f1_tenmoment_range(n, 2, n)


# ---------------------------------------------------------------------------
# divisor-layer algorithm: O(n log^2 n)


def _pair_block(N: int, p: int, q: int, B: int):
    """Moment bundle for the (p, q) pair inside a layer of scale N.

    Returns (m_sum, m_cap, d_sum, d_cap) where m_* are the tuples
    (M00, M10, M20, M01, M11, M02) over Y <= T (resp. with the X side
    capped at B) and d_* are (D0, D1, D2) power sums at T resp. Tc.
    """
    T = N // (p + q)
    Tc = min(B, T)

    def s(r, lo, hi):
        return power_sum_range(r, lo, hi) if lo <= hi else 0

    def moments(lo, hi, capped_by_hyperbola):
        # sum over lo <= Y <= hi of Y^j * (P_i(W) - P_i(Y-1)),
        # W = (N - qY) // p (only called where W <= B if capped zone 2)
        if lo > hi:
            return (0, 0, 0, 0, 0, 0)
        Nn = hi - lo + 1
        h01, h11, h21, h02, h12, h03 = eval_six(Nn, p, q, N - q * hi)
        R = hi
        F01 = h01
        F11 = R * h01 - h11
        F21 = R * R * h01 - 2 * R * h11 + h21
        F02 = h02
        F12 = R * h02 - h12
        F03 = h03
        s0 = Nn
        s1 = s(1, lo, hi)
        s2 = s(2, lo, hi)
        s3 = s(3, lo, hi)
        return (
            F01 - (s1 - s0),
            (F02 + F01) // 2 - (s2 - s1) // 2,
            (2 * F03 + 3 * F02 + F01) // 6 - (2 * s3 - 3 * s2 + s1) // 6,
            F11 - (s2 - s1),
            (F12 + F11) // 2 - (s3 - s2) // 2,
            F21 - (s3 - s2),
        )

    m_sum = moments(1, T, False)

    # capped version: X additionally bounded by B
    Ys = (N - p * B) // q  # last Y with W(Y) >= B (may be negative)
    Y1 = min(Ys, Tc)
    P0B, P1B, P2B = B, B * (B + 1) // 2, B * (B + 1) * (2 * B + 1) // 6
    if Y1 >= 1:
        s0 = Y1
        s1 = s(1, 1, Y1)
        s2 = s(2, 1, Y1)
        s3 = s(3, 1, Y1)
        z1 = (
            P0B * s0 - (s1 - s0),
            P1B * s0 - (s2 - s1) // 2,
            P2B * s0 - (2 * s3 - 3 * s2 + s1) // 6,
            P0B * s1 - (s2 - s1),
            P1B * s1 - (s3 - s2) // 2,
            P0B * s2 - (s3 - s2),
        )
    else:
        Y1 = 0
        z1 = (0, 0, 0, 0, 0, 0)
    z2 = moments(Y1 + 1, Tc, True)
    m_cap = tuple(a + b for a, b in zip(z1, z2))

    d_sum = (T, power_sum_range(1, 1, T), power_sum_range(2, 1, T))
    d_cap = (Tc, power_sum_range(1, 1, Tc), power_sum_range(2, 1, Tc))
    return m_sum, m_cap, d_sum, d_cap


def _half_weighted(S: int, j: int) -> int:
    """Sum over 1 <= s <= S of floor((s-1)/2) * s**j, for j in {0, 1, 2}."""
    h1 = S // 2        # even s = 2*sig, coefficient sig - 1
    h2 = (S - 1) // 2  # odd s = 2*sig + 1, coefficient sig
    e1 = power_sum_range(1, 1, h1)
    e2 = power_sum_range(2, 1, h1)
    e3 = power_sum_range(3, 1, h1)
    o1 = power_sum_range(1, 1, h2)
    o2 = power_sum_range(2, 1, h2)
    o3 = power_sum_range(3, 1, h2)
    if j == 0:
        return (e1 - h1) + o1
    if j == 1:
        return 2 * (e2 - e1) + 2 * o2 + o1
    if j == 2:
        return 4 * (e3 - e2) + 4 * o3 + 4 * o2 + o1
    raise ValueError(f"degree j must be 0, 1 or 2, got {j}")


def layer_coefficients(N: int):
    """Coefficients (X0, X1, X2) of one layer at scale N.

    A layer of scale factor d inside grid size n (with N = n // d)
    contributes X0*n^2 + X1*n*d + X2*d^2; the X's depend only on N,
    which is what makes quotient grouping possible.
    """
    if N < 0:
        raise ValueError(f"layer scale must be nonnegative, got N={N}")
    B = isqrt(N)
    X0 = X1 = X2 = 0
    for q in range(1, B + 1):
        for p in range(q + 1, B + 1):
            if p + q > N:
                break
            m_sum, m_cap, d_sum, d_cap = _pair_block(N, p, q, B)
            M00, M10, M20, M01, M11, M02 = m_sum
            C00, C10, C20, C01, C11, C02 = m_cap
            pq = p + q
            X0 += 8 * M00 - 6 * d_sum[0] - 4 * C00 + 2 * d_cap[0]
            X1 += pq * (-8 * (M10 + M01) + 12 * d_sum[1]
                        + 4 * (C10 + C01) - 4 * d_cap[1])
            X2 += (8 * (p * q * (M20 + M02) + (p * p + q * q) * M11)
                   - 6 * pq * pq * d_sum[2]
                   - 4 * (p * q * (C20 + C02) + (p * p + q * q) * C11)
                   + 2 * pq * pq * d_cap[2])
    for t in range(1, B + 1):
        S = N // t
        X0 += 2 * _half_weighted(S, 0)
        X1 += -4 * t * _half_weighted(S, 1)
        X2 += 2 * t * t * _half_weighted(S, 2)
    return X0, X1, X2


def layer_sum(d: int, n: int, tables) -> int:
    """S_d(n), the contribution of scale factor d before its Mobius sign."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n: d={d}, n={n}")
    if tables.limit < d or int(tables.mu[d]) == 0:
        raise ValueError(f"layer d={d} has mu(d) = 0 (or sieve too small)")
    X0, X1, X2 = layer_coefficients(n // d)
    return X0 * n * n + X1 * n * d + X2 * d * d


def f1_divisorlayer_range(n: int, d_lo: int, d_hi: int,
                          grouped: bool = False) -> int:
    """Tilted contribution of layers d in [d_lo, d_hi), pure Python.

    Disjoint ranges sum to the full tilted count (the parallel contract).
    With ``grouped=True`` layers sharing a quotient N = n // d are
    collapsed to one coefficient evaluation.
    """
    d_hi = min(d_hi, n // 3 + 1)
    d_lo = max(d_lo, 1)
    if d_lo >= d_hi:
        return 0
    tables = build_sieve(max(d_hi - 1, 1))
    mu = tables.mu
    total = 0
    if not grouped:
        for d in range(d_lo, d_hi):
            md = int(mu[d])
            if md == 0:
                continue
            X0, X1, X2 = layer_coefficients(n // d)
            total += md * (X0 * n * n + X1 * n * d + X2 * d * d)
        return total
    d = d_lo
    while d < d_hi:
        N = n // d
        d2 = min(n // N, d_hi - 1)  # last d with the same quotient
        w0 = w1 = w2 = 0
        for e in range(d, d2 + 1):
            me = int(mu[e])
            if me:
                w0 += me
                w1 += me * e
                w2 += me * e * e
        if w0 or w1 or w2:
            X0, X1, X2 = layer_coefficients(N)
            total += X0 * n * n * w0 + X1 * n * w1 + X2 * w2
        d = d2 + 1
    return total


def f_divisorlayer(n: int, grouped: bool = False,
                   fast_paths: bool = True) -> int:
    """F(n) via Mobius inversion over a common scale factor d."""
    _check_n(n)
    if n < 3:
        return f0(n)
    if not grouped and _fast is not None:
        d_hi = n // 3 + 1
        try:
            return f0(n) + _fast.divisorlayer_f1(n, 1, d_hi, fast_paths)
        except OverflowError:
            total = f0(n)
            for d in range(1, d_hi):
                try:
                    total += _fast.divisorlayer_f1(n, d, d + 1, fast_paths)
                except OverflowError:
                    total += f1_divisorlayer_range(n, d, d + 1)
            return total
    return f0(n) + f1_divisorlayer_range(n, 1, n // 3 + 1, grouped=grouped)


# ---------------------------------------------------------------------------

ALGORITHMS = {
    "baseline": f_baseline,
    "sqrt": f_sqrt,
    "cuberoot": f_cuberoot,
    "tenmoment": f_tenmoment,
    "divisorlayer": f_divisorlayer,
}


def f_auto(n: int) -> int:
    """F(n) by the algorithm best suited to the size of n."""
    _check_n(n)
    if n > AUTO_CUTOFF:
        return f_divisorlayer(n)
    return f_baseline(n)
