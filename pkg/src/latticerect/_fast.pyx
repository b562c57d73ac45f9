# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the lattice-rectangle counting suite.

The arithmetic core lives in a verbatim C block and works in signed
128-bit integers.  Rather than checking every multiplication for
overflow (which would cost a runtime-library call per operation), each
entry point enforces a conservative a-priori magnitude guard under
which every intermediate provably fits in 127 bits; a guard trip raises
``OverflowError`` and the pure-Python caller falls back to exact
arbitrary-precision arithmetic.

Per-call results are handed back as 128-bit (hi, lo) pairs and summed
on the Python side in big integers, so no final accumulator is ever
width-limited.
"""

import numpy as np

cdef extern from *:
    """
#include <math.h>
#include <stdlib.h>
#include <string.h>

typedef long long ll;
typedef unsigned long long ull;
typedef __int128 i128;

/* Magnitude guards.  With n, m and every floor value below the guard at
   every recursion level, the largest intermediate in the moment
   combinations is ~16 * V^4 * n (six-moment family) resp.
   ~16 * V^4 * n (ten-moment family, with the extra P4 factor), which
   stays below 2^127 for V < 2^30 resp. V < 2^24. */
#define SIX_GUARD ((i128)1 << 30)
#define TEN_GUARD ((i128)1 << 24)

static ll isqrt_ll(ll n) {
    ll s;
    if (n < 0) return -1;
    s = (ll)sqrtl((long double)n);
    while (s > 0 && s * s > n) s--;
    while ((s + 1) * (s + 1) <= n) s++;
    return s;
}

/* power sums: S_r(X) = sum_{x=1}^{X} x^r (0 for X < 1) */
static i128 S1_(i128 X) { return X < 1 ? 0 : X * (X + 1) / 2; }
static i128 S2_(i128 X) { return X < 1 ? 0 : X * (X + 1) * (2 * X + 1) / 6; }
static i128 S3_(i128 X) { i128 t; if (X < 1) return 0; t = X * (X + 1) / 2; return t * t; }
static i128 SR_(int r, i128 lo, i128 hi) {
    if (lo > hi) return 0;
    if (r == 0) return hi - lo + 1;
    if (r == 1) return S1_(hi) - S1_(lo - 1);
    if (r == 2) return S2_(hi) - S2_(lo - 1);
    return S3_(hi) - S3_(lo - 1);
}

/* ================= six-moment kernel =================
   o[] = h01,h11,h21,h02,h12,h03 of
   H[p,q](n; m, a, b) = sum_{x=0}^{n-1} x^p floor((a x + b)/m)^q.
   Returns 0 on success, 1 on guard trip.

   eval6_ll is the hot path: parameter arithmetic in 64 bits (legal
   because n, m, a < SIX_GUARD and b < 2^61 keep every parameter-level
   product under 2^62), moment values in 128 bits.  eval6_big handles
   oversized a, b by one arbitrary-precision affine step per level and
   is only reached through the dispatcher eval6_c. */
static int eval6_ll(ll n, ll m, ll a, ll b, int fast, i128 *o) {
    i128 g[6];
    ll A, ar, B, br, Y;
    int i;
    for (i = 0; i < 6; i++) o[i] = 0;
    if (n <= 0) return 0;
    if ((a * (n - 1) + b) / m >= (ll)SIX_GUARD) return 1;
    if (n <= 12) {
        /* short ranges: direct summation beats the recursion */
        ll x, gv;
        i128 G1, G2;
        for (x = 0; x < n; x++) {
            gv = (a * x + b) / m;
            G1 = gv;
            G2 = G1 * gv;
            o[0] += G1;
            o[1] += x * G1;
            o[2] += (i128)x * x * G1;
            o[3] += G2;
            o[4] += x * G2;
            o[5] += G2 * gv;
        }
        return 0;
    }
    A = a / m; ar = a - A * m;
    B = b / m; br = b - B * m;
    for (i = 0; i < 6; i++) g[i] = 0;
    if (ar == 0 || (Y = (ar * (n - 1) + br) / m) <= 0) {
        /* terminal level: the inner moments vanish */
        i128 P0 = n;
        i128 P1 = (i128)n * (n - 1) / 2;
        i128 P2 = (i128)n * (n - 1) * (2 * n - 1) / 6;
        i128 P3 = P1 * P1;
        if (A == 0 && B == 0) return 0;
        if (B == 0) {
            o[0] = A * P1;
            o[1] = A * P2;
            o[2] = A * P3;
            o[3] = (i128)A * A * P2;
            o[4] = (i128)A * A * P3;
            o[5] = (i128)A * A * A * P3;
            return 0;
        }
        o[0] = A * P1 + B * P0;
        o[1] = A * P2 + B * P1;
        o[2] = A * P3 + B * P2;
        o[3] = (i128)A * A * P2 + 2 * (i128)A * B * P1 + (i128)B * B * P0;
        o[4] = (i128)A * A * P3 + 2 * (i128)A * B * P2 + (i128)B * B * P1;
        o[5] = (i128)A * A * A * P3 + 3 * (i128)A * A * B * P2
               + 3 * (i128)A * (i128)B * B * P1 + (i128)B * B * B * P0;
        return 0;
    }
    {
        {
            i128 gg[6];
            i128 g01, g11, g21, g02, g12, g03;
            i128 Q0, Q1, Q2, p1, p2, Yw;
            if (eval6_ll(Y, ar, m, m - br - 1, fast, gg)) return 1;
            g01 = gg[0]; g11 = gg[1]; g21 = gg[2];
            g02 = gg[3]; g12 = gg[4]; g03 = gg[5];
            Yw = Y;
            Q0 = Yw;
            Q1 = Yw * (Y - 1) / 2;
            Q2 = Yw * (Y - 1) * (2 * Y - 1) / 6;
            p1 = (i128)n * (n - 1) / 2;
            p2 = (i128)n * (n - 1) * (2 * n - 1) / 6;
            g[0] = n * Yw - Q0 - g01;
            g[1] = (2 * p1 * Y - g01 - g02) / 2;
            g[2] = (6 * p2 * Y - g01 - 3 * g02 - 2 * g03) / 6;
            g[3] = n * Yw * Y - Q0 - g01 - 2 * Q1 - 2 * g11;
            g[4] = (2 * p1 * Yw * Y - g01 - g02 - 2 * g11 - 2 * g12) / 2;
            g[5] = n * Yw * Y * Y - Q0 - g01 - 3 * Q1 - 3 * g11
                   - 3 * Q2 - 3 * g21;
        }
    }
    if (A == 0 && B == 0) {
        for (i = 0; i < 6; i++) o[i] = g[i];
        return 0;
    }
    {
        i128 P0 = n;
        i128 P1 = (i128)n * (n - 1) / 2;
        i128 P2 = (i128)n * (n - 1) * (2 * n - 1) / 6;
        i128 P3 = P1 * P1;
        i128 b01 = g[0], b11 = g[1], b21 = g[2];
        i128 b02 = g[3], b12 = g[4], b03 = g[5];
        if (fast && B == 0) {
            if (A == 1) {
                o[0] = b01 + P1;
                o[1] = b11 + P2;
                o[2] = b21 + P3;
                o[3] = b02 + 2 * b11 + P2;
                o[4] = b12 + 2 * b21 + P3;
                o[5] = b03 + 3 * b12 + 3 * b21 + P3;
            } else {
                o[0] = b01 + A * P1;
                o[1] = b11 + A * P2;
                o[2] = b21 + A * P3;
                o[3] = b02 + 2 * A * b11 + (i128)A * A * P2;
                o[4] = b12 + 2 * A * b21 + (i128)A * A * P3;
                o[5] = b03 + 3 * A * b12 + 3 * (i128)A * A * b21
                       + (i128)A * A * A * P3;
            }
            return 0;
        }
        o[0] = b01 + A * P1 + B * P0;
        o[1] = b11 + A * P2 + B * P1;
        o[2] = b21 + A * P3 + B * P2;
        o[3] = b02 + 2 * A * b11 + 2 * B * b01
               + (i128)A * A * P2 + 2 * (i128)A * B * P1 + (i128)B * B * P0;
        o[4] = b12 + 2 * A * b21 + 2 * B * b11
               + (i128)A * A * P3 + 2 * (i128)A * B * P2 + (i128)B * B * P1;
        o[5] = b03 + 3 * A * b12 + 3 * B * b02 + 3 * (i128)A * A * b21
               + 6 * (i128)A * B * b11 + 3 * (i128)B * B * b01
               + (i128)A * A * A * P3 + 3 * (i128)A * A * B * P2
               + 3 * (i128)A * (i128)B * B * P1 + (i128)B * B * B * P0;
        return 0;
    }
}

static int eval6_big(i128 n, i128 m, i128 a, i128 b, int fast, i128 *o);

static int eval6_c(i128 n, i128 m, i128 a, i128 b, int fast, i128 *o) {
    int i;
    if (n <= 0) {
        for (i = 0; i < 6; i++) o[i] = 0;
        return 0;
    }
    if (n >= SIX_GUARD || m <= 0 || a < 0 || b < 0) {
        for (i = 0; i < 6; i++) o[i] = 0;
        return 1;
    }
    if (m < SIX_GUARD && a < SIX_GUARD && b < ((i128)1 << 61))
        return eval6_ll((ll)n, (ll)m, (ll)a, (ll)b, fast, o);
    return eval6_big(n, m, a, b, fast, o);
}

static int eval6_big(i128 n, i128 m, i128 a, i128 b, int fast, i128 *o) {
    i128 g[6];
    i128 A, ar, B, br, ytot;
    int i;
    for (i = 0; i < 6; i++) o[i] = 0;
    if (n <= 0) return 0;
    if (n >= SIX_GUARD || m <= 0 || a < 0 || b < 0) return 1;
    if (n == 1) {
        i128 c = b / m;
        if (c >= SIX_GUARD) return 1;
        o[0] = c; o[3] = c * c; o[5] = c * c * c;
        return 0;
    }
    ytot = (a * (n - 1) + b) / m;
    if (ytot >= SIX_GUARD) return 1;
    A = a / m; ar = a % m;
    B = b / m; br = b % m;
    for (i = 0; i < 6; i++) g[i] = 0;
    if (ar != 0) {
        i128 Y = (ar * (n - 1) + br) / m;
        if (Y > 0) {
            i128 gg[6];
            i128 g01, g11, g21, g02, g12, g03;
            i128 Q0, Q1, Q2, p1, p2;
            if (eval6_c(Y, ar, m, m - br - 1, fast, gg)) return 1;
            g01 = gg[0]; g11 = gg[1]; g21 = gg[2];
            g02 = gg[3]; g12 = gg[4]; g03 = gg[5];
            Q0 = Y;
            Q1 = Y * (Y - 1) / 2;
            Q2 = Y * (Y - 1) * (2 * Y - 1) / 6;
            p1 = n * (n - 1) / 2;
            p2 = n * (n - 1) * (2 * n - 1) / 6;
            g[0] = n * Y - Q0 - g01;
            g[1] = (2 * p1 * Y - g01 - g02) / 2;
            g[2] = (6 * p2 * Y - g01 - 3 * g02 - 2 * g03) / 6;
            g[3] = n * Y * Y - Q0 - g01 - 2 * Q1 - 2 * g11;
            g[4] = (2 * p1 * Y * Y - g01 - g02 - 2 * g11 - 2 * g12) / 2;
            g[5] = n * Y * Y * Y - Q0 - g01 - 3 * Q1 - 3 * g11
                   - 3 * Q2 - 3 * g21;
        }
    }
    if (A == 0 && B == 0) {
        for (i = 0; i < 6; i++) o[i] = g[i];
        return 0;
    }
    {
        i128 P0 = n;
        i128 P1 = n * (n - 1) / 2;
        i128 P2 = n * (n - 1) * (2 * n - 1) / 6;
        i128 P3 = P1 * P1;
        i128 b01 = g[0], b11 = g[1], b21 = g[2];
        i128 b02 = g[3], b12 = g[4], b03 = g[5];
        if (fast && B == 0) {
            if (A == 1) {
                o[0] = b01 + P1;
                o[1] = b11 + P2;
                o[2] = b21 + P3;
                o[3] = b02 + 2 * b11 + P2;
                o[4] = b12 + 2 * b21 + P3;
                o[5] = b03 + 3 * b12 + 3 * b21 + P3;
            } else {
                o[0] = b01 + A * P1;
                o[1] = b11 + A * P2;
                o[2] = b21 + A * P3;
                o[3] = b02 + 2 * A * b11 + A * A * P2;
                o[4] = b12 + 2 * A * b21 + A * A * P3;
                o[5] = b03 + 3 * A * b12 + 3 * A * A * b21 + A * A * A * P3;
            }
            return 0;
        }
        o[0] = b01 + A * P1 + B * P0;
        o[1] = b11 + A * P2 + B * P1;
        o[2] = b21 + A * P3 + B * P2;
        o[3] = b02 + 2 * A * b11 + 2 * B * b01
               + A * A * P2 + 2 * A * B * P1 + B * B * P0;
        o[4] = b12 + 2 * A * b21 + 2 * B * b11
               + A * A * P3 + 2 * A * B * P2 + B * B * P1;
        o[5] = b03 + 3 * A * b12 + 3 * B * b02 + 3 * A * A * b21
               + 6 * A * B * b11 + 3 * B * B * b01
               + A * A * A * P3 + 3 * A * A * B * P2
               + 3 * A * B * B * P1 + B * B * B * P0;
        return 0;
    }
}

/* ================= ten-moment kernel =================
   o[] = h01,h11,h21,h31,h02,h12,h22,h03,h13,h04
   Same ll/big split as the six-moment family. */
static int eval10_ll(ll n, ll m, ll a, ll b, int fast, i128 *o) {
    i128 g[10];
    ll A, ar, B, br, Y;
    int i;
    for (i = 0; i < 10; i++) o[i] = 0;
    if (n <= 0) return 0;
    if ((a * (n - 1) + b) / m >= (ll)TEN_GUARD) return 1;
    if (n <= 16) {
        /* short ranges: direct summation beats the recursion */
        ll x, gv;
        i128 G1, G2, G3;
        for (x = 0; x < n; x++) {
            gv = (a * x + b) / m;
            G1 = gv;
            G2 = G1 * gv;
            G3 = G2 * gv;
            o[0] += G1;
            o[1] += x * G1;
            o[2] += (i128)x * x * G1;
            o[3] += (i128)x * x * x * G1;
            o[4] += G2;
            o[5] += x * G2;
            o[6] += (i128)x * x * G2;
            o[7] += G3;
            o[8] += x * G3;
            o[9] += G3 * gv;
        }
        return 0;
    }
    A = a / m; ar = a - A * m;
    B = b / m; br = b - B * m;
    for (i = 0; i < 10; i++) g[i] = 0;
    if (ar == 0 || (Y = (ar * (n - 1) + br) / m) <= 0) {
        /* terminal level: the inner moments vanish */
        i128 P0 = n;
        i128 P1 = (i128)n * (n - 1) / 2;
        i128 P2 = (i128)n * (n - 1) * (2 * n - 1) / 6;
        i128 P3 = P1 * P1;
        i128 P4 = (i128)n * (n - 1) * (2 * n - 1)
                  * ((i128)3 * n * n - 3 * n - 1) / 30;
        i128 A2, A3, A4, B2, B3, B4;
        if (A == 0 && B == 0) return 0;
        A2 = (i128)A * A; A3 = A2 * A; A4 = A2 * A2;
        if (B == 0) {
            o[0] = A * P1;
            o[1] = A * P2;
            o[2] = A * P3;
            o[3] = A * P4;
            o[4] = A2 * P2;
            o[5] = A2 * P3;
            o[6] = A2 * P4;
            o[7] = A3 * P3;
            o[8] = A3 * P4;
            o[9] = A4 * P4;
            return 0;
        }
        B2 = (i128)B * B; B3 = B2 * B; B4 = B2 * B2;
        o[0] = A * P1 + B * P0;
        o[1] = A * P2 + B * P1;
        o[2] = A * P3 + B * P2;
        o[3] = A * P4 + B * P3;
        o[4] = A2 * P2 + 2 * (i128)A * B * P1 + B2 * P0;
        o[5] = A2 * P3 + 2 * (i128)A * B * P2 + B2 * P1;
        o[6] = A2 * P4 + 2 * (i128)A * B * P3 + B2 * P2;
        o[7] = A3 * P3 + 3 * A2 * B * P2 + 3 * B2 * A * P1 + B3 * P0;
        o[8] = A3 * P4 + 3 * A2 * B * P3 + 3 * B2 * A * P2 + B3 * P1;
        o[9] = A4 * P4 + 4 * A3 * B * P3 + 6 * A2 * B2 * P2
               + 4 * B3 * A * P1 + B4 * P0;
        return 0;
    }
    {
        {
            i128 gg[10];
            i128 g01, g11, g21, g31, g02, g12, g22, g03, g13, g04;
            i128 Q0, Q1, Q2, Q3, p1, p2, p3;
            ll Y2;
            if (eval10_ll(Y, ar, m, m - br - 1, fast, gg)) return 1;
            g01 = gg[0]; g11 = gg[1]; g21 = gg[2]; g31 = gg[3];
            g02 = gg[4]; g12 = gg[5]; g22 = gg[6];
            g03 = gg[7]; g13 = gg[8]; g04 = gg[9];
            Q0 = Y;
            Q1 = (i128)Y * (Y - 1) / 2;
            Q2 = (i128)Y * (Y - 1) * (2 * Y - 1) / 6;
            Q3 = Q1 * Q1;
            p1 = (i128)n * (n - 1) / 2;
            p2 = (i128)n * (n - 1) * (2 * n - 1) / 6;
            p3 = p1 * p1;
            Y2 = Y * Y;
            g[0] = (i128)n * Y - Q0 - g01;
            g[1] = (2 * p1 * Y - g01 - g02) / 2;
            g[2] = (6 * p2 * Y - g01 - 3 * g02 - 2 * g03) / 6;
            g[3] = (4 * p3 * Y - g02 - 2 * g03 - g04) / 4;
            g[4] = (i128)n * Y2 - Q0 - g01 - 2 * Q1 - 2 * g11;
            g[5] = (2 * p1 * Y2 - g01 - g02 - 2 * g11 - 2 * g12) / 2;
            g[6] = (6 * p2 * Y2 - g01 - 3 * g02 - 2 * g03
                    - 2 * g11 - 6 * g12 - 4 * g13) / 6;
            g[7] = (i128)n * Y2 * Y - Q0 - g01 - 3 * Q1 - 3 * g11
                   - 3 * Q2 - 3 * g21;
            g[8] = (2 * p1 * Y2 * Y - g01 - g02 - 3 * g11 - 3 * g12
                    - 3 * g21 - 3 * g22) / 2;
            g[9] = (i128)n * Y2 * Y2 - Q0 - g01 - 4 * Q1 - 4 * g11
                   - 6 * Q2 - 6 * g21 - 4 * Q3 - 4 * g31;
        }
    }
    if (A == 0 && B == 0) {
        for (i = 0; i < 10; i++) o[i] = g[i];
        return 0;
    }
    {
        i128 P0 = n;
        i128 P1 = (i128)n * (n - 1) / 2;
        i128 P2 = (i128)n * (n - 1) * (2 * n - 1) / 6;
        i128 P3 = P1 * P1;
        i128 P4 = (i128)n * (n - 1) * (2 * n - 1)
                  * ((i128)3 * n * n - 3 * n - 1) / 30;
        i128 b01 = g[0], b11 = g[1], b21 = g[2], b31 = g[3];
        i128 b02 = g[4], b12 = g[5], b22 = g[6];
        i128 b03 = g[7], b13 = g[8], b04 = g[9];
        i128 A2, A3, A4, B2, B3, B4;
        if (fast && B == 0) {
            A2 = (i128)A * A; A3 = A2 * A; A4 = A2 * A2;
            o[0] = b01 + A * P1;
            o[1] = b11 + A * P2;
            o[2] = b21 + A * P3;
            o[3] = b31 + A * P4;
            o[4] = b02 + 2 * A * b11 + A2 * P2;
            o[5] = b12 + 2 * A * b21 + A2 * P3;
            o[6] = b22 + 2 * A * b31 + A2 * P4;
            o[7] = b03 + 3 * A * b12 + 3 * A2 * b21 + A3 * P3;
            o[8] = b13 + 3 * A * b22 + 3 * A2 * b31 + A3 * P4;
            o[9] = b04 + 4 * A * b13 + 6 * A2 * b22 + 4 * A3 * b31 + A4 * P4;
            return 0;
        }
        A2 = (i128)A * A; A3 = A2 * A; A4 = A2 * A2;
        B2 = (i128)B * B; B3 = B2 * B; B4 = B2 * B2;
        o[0] = b01 + A * P1 + B * P0;
        o[1] = b11 + A * P2 + B * P1;
        o[2] = b21 + A * P3 + B * P2;
        o[3] = b31 + A * P4 + B * P3;
        o[4] = b02 + 2 * A * b11 + 2 * B * b01 + A2 * P2
               + 2 * (i128)A * B * P1 + B2 * P0;
        o[5] = b12 + 2 * A * b21 + 2 * B * b11 + A2 * P3
               + 2 * (i128)A * B * P2 + B2 * P1;
        o[6] = b22 + 2 * A * b31 + 2 * B * b21 + A2 * P4
               + 2 * (i128)A * B * P3 + B2 * P2;
        o[7] = b03 + 3 * A * b12 + 3 * B * b02 + 3 * A2 * b21
               + 6 * (i128)A * B * b11 + 3 * B2 * b01
               + A3 * P3 + 3 * A2 * B * P2 + 3 * B2 * A * P1 + B3 * P0;
        o[8] = b13 + 3 * A * b22 + 3 * B * b12 + 3 * A2 * b31
               + 6 * (i128)A * B * b21 + 3 * B2 * b11
               + A3 * P4 + 3 * A2 * B * P3 + 3 * B2 * A * P2 + B3 * P1;
        o[9] = b04 + 4 * A * b13 + 4 * B * b03 + 6 * A2 * b22
               + 12 * (i128)A * B * b12 + 6 * B2 * b02 + 4 * A3 * b31
               + 12 * A2 * B * b21 + 12 * B2 * A * b11 + 4 * B3 * b01
               + A4 * P4 + 4 * A3 * B * P3 + 6 * A2 * B2 * P2
               + 4 * B3 * A * P1 + B4 * P0;
        return 0;
    }
}

static int eval10_big(i128 n, i128 m, i128 a, i128 b, int fast, i128 *o);

static int eval10_c(i128 n, i128 m, i128 a, i128 b, int fast, i128 *o) {
    int i;
    if (n <= 0) {
        for (i = 0; i < 10; i++) o[i] = 0;
        return 0;
    }
    if (n >= TEN_GUARD || m <= 0 || a < 0 || b < 0) {
        for (i = 0; i < 10; i++) o[i] = 0;
        return 1;
    }
    if (m < TEN_GUARD && a < TEN_GUARD && b < ((i128)1 << 61))
        return eval10_ll((ll)n, (ll)m, (ll)a, (ll)b, fast, o);
    return eval10_big(n, m, a, b, fast, o);
}

static int eval10_big(i128 n, i128 m, i128 a, i128 b, int fast, i128 *o) {
    i128 g[10];
    i128 A, ar, B, br, ytot;
    int i;
    for (i = 0; i < 10; i++) o[i] = 0;
    if (n <= 0) return 0;
    if (n >= TEN_GUARD || m <= 0 || a < 0 || b < 0) return 1;
    if (n == 1) {
        i128 c = b / m;
        if (c >= TEN_GUARD) return 1;
        o[0] = c; o[4] = c * c; o[7] = c * c * c; o[9] = c * c * c * c;
        return 0;
    }
    ytot = (a * (n - 1) + b) / m;
    if (ytot >= TEN_GUARD) return 1;
    A = a / m; ar = a % m;
    B = b / m; br = b % m;
    for (i = 0; i < 10; i++) g[i] = 0;
    if (ar != 0) {
        i128 Y = (ar * (n - 1) + br) / m;
        if (Y > 0) {
            i128 gg[10];
            i128 g01, g11, g21, g31, g02, g12, g22, g03, g13, g04;
            i128 Q0, Q1, Q2, Q3, p1, p2, p3, Y2, Y3;
            if (eval10_c(Y, ar, m, m - br - 1, fast, gg)) return 1;
            g01 = gg[0]; g11 = gg[1]; g21 = gg[2]; g31 = gg[3];
            g02 = gg[4]; g12 = gg[5]; g22 = gg[6];
            g03 = gg[7]; g13 = gg[8]; g04 = gg[9];
            Q0 = Y;
            Q1 = Y * (Y - 1) / 2;
            Q2 = Y * (Y - 1) * (2 * Y - 1) / 6;
            Q3 = Q1 * Q1;
            p1 = n * (n - 1) / 2;
            p2 = n * (n - 1) * (2 * n - 1) / 6;
            p3 = p1 * p1;
            Y2 = Y * Y;
            Y3 = Y2 * Y;
            g[0] = n * Y - Q0 - g01;
            g[1] = (2 * p1 * Y - g01 - g02) / 2;
            g[2] = (6 * p2 * Y - g01 - 3 * g02 - 2 * g03) / 6;
            g[3] = (4 * p3 * Y - g02 - 2 * g03 - g04) / 4;
            g[4] = n * Y2 - Q0 - g01 - 2 * Q1 - 2 * g11;
            g[5] = (2 * p1 * Y2 - g01 - g02 - 2 * g11 - 2 * g12) / 2;
            g[6] = (6 * p2 * Y2 - g01 - 3 * g02 - 2 * g03
                    - 2 * g11 - 6 * g12 - 4 * g13) / 6;
            g[7] = n * Y3 - Q0 - g01 - 3 * Q1 - 3 * g11 - 3 * Q2 - 3 * g21;
            g[8] = (2 * p1 * Y3 - g01 - g02 - 3 * g11 - 3 * g12
                    - 3 * g21 - 3 * g22) / 2;
            g[9] = n * Y2 * Y2 - Q0 - g01 - 4 * Q1 - 4 * g11
                   - 6 * Q2 - 6 * g21 - 4 * Q3 - 4 * g31;
        }
    }
    if (A == 0 && B == 0) {
        for (i = 0; i < 10; i++) o[i] = g[i];
        return 0;
    }
    {
        i128 P0 = n;
        i128 P1 = n * (n - 1) / 2;
        i128 P2 = n * (n - 1) * (2 * n - 1) / 6;
        i128 P3 = P1 * P1;
        i128 P4 = n * (n - 1) * (2 * n - 1) * (3 * n * n - 3 * n - 1) / 30;
        i128 b01 = g[0], b11 = g[1], b21 = g[2], b31 = g[3];
        i128 b02 = g[4], b12 = g[5], b22 = g[6];
        i128 b03 = g[7], b13 = g[8], b04 = g[9];
        i128 A2 = A * A, A3, A4, B2, B3, B4;
        if (fast && B == 0) {
            A3 = A2 * A; A4 = A2 * A2;
            o[0] = b01 + A * P1;
            o[1] = b11 + A * P2;
            o[2] = b21 + A * P3;
            o[3] = b31 + A * P4;
            o[4] = b02 + 2 * A * b11 + A2 * P2;
            o[5] = b12 + 2 * A * b21 + A2 * P3;
            o[6] = b22 + 2 * A * b31 + A2 * P4;
            o[7] = b03 + 3 * A * b12 + 3 * A2 * b21 + A3 * P3;
            o[8] = b13 + 3 * A * b22 + 3 * A2 * b31 + A3 * P4;
            o[9] = b04 + 4 * A * b13 + 6 * A2 * b22 + 4 * A3 * b31 + A4 * P4;
            return 0;
        }
        A3 = A2 * A; A4 = A2 * A2;
        B2 = B * B; B3 = B2 * B; B4 = B2 * B2;
        o[0] = b01 + A * P1 + B * P0;
        o[1] = b11 + A * P2 + B * P1;
        o[2] = b21 + A * P3 + B * P2;
        o[3] = b31 + A * P4 + B * P3;
        o[4] = b02 + 2 * A * b11 + 2 * B * b01 + A2 * P2 + 2 * A * B * P1
               + B2 * P0;
        o[5] = b12 + 2 * A * b21 + 2 * B * b11 + A2 * P3 + 2 * A * B * P2
               + B2 * P1;
        o[6] = b22 + 2 * A * b31 + 2 * B * b21 + A2 * P4 + 2 * A * B * P3
               + B2 * P2;
        o[7] = b03 + 3 * A * b12 + 3 * B * b02 + 3 * A2 * b21
               + 6 * A * B * b11 + 3 * B2 * b01
               + A3 * P3 + 3 * A2 * B * P2 + 3 * A * B2 * P1 + B3 * P0;
        o[8] = b13 + 3 * A * b22 + 3 * B * b12 + 3 * A2 * b31
               + 6 * A * B * b21 + 3 * B2 * b11
               + A3 * P4 + 3 * A2 * B * P3 + 3 * A * B2 * P2 + B3 * P1;
        o[9] = b04 + 4 * A * b13 + 4 * B * b03 + 6 * A2 * b22
               + 12 * A * B * b12 + 6 * B2 * b02 + 4 * A3 * b31
               + 12 * A2 * B * b21 + 12 * A * B2 * b11 + 4 * B3 * b01
               + A4 * P4 + 4 * A3 * B * P3 + 6 * A2 * B2 * P2
               + 4 * A * B3 * P1 + B4 * P0;
        return 0;
    }
}

static void split128(const i128 *v, int cnt, ll *hi, ull *lo) {
    int i;
    for (i = 0; i < cnt; i++) {
        hi[i] = (ll)(v[i] >> 64);
        lo[i] = (ull)v[i];
    }
}

static int eval6_split(ll n, ll m, ll a, ll b, int fast, ll *hi, ull *lo) {
    i128 o[6];
    if (eval6_c(n, m, a, b, fast, o)) return 1;
    split128(o, 6, hi, lo);
    return 0;
}

static int eval10_split(ll n, ll m, ll a, ll b, int fast, ll *hi, ull *lo) {
    i128 o[10];
    if (eval10_c(n, m, a, b, fast, o)) return 1;
    split128(o, 10, hi, lo);
    return 0;
}

static int eval6_batch_c(const ll *q, ll cnt, int fast, ll *out) {
    i128 o[6];
    ll i;
    int j;
    for (i = 0; i < cnt; i++) {
        if (eval6_c(q[4 * i], q[4 * i + 1], q[4 * i + 2], q[4 * i + 3],
                    fast, o))
            return 1;
        for (j = 0; j < 6; j++) {
            if (o[j] > (i128)0x7fffffffffffffffLL
                || o[j] < -(i128)0x7fffffffffffffffLL - 1)
                return 1;
            out[6 * i + j] = (ll)o[j];
        }
    }
    return 0;
}

static int eval10_batch_c(const ll *q, ll cnt, int fast, ll *out) {
    i128 o[10];
    ll i;
    int j;
    for (i = 0; i < cnt; i++) {
        if (eval10_c(q[4 * i], q[4 * i + 1], q[4 * i + 2], q[4 * i + 3],
                     fast, o))
            return 1;
        for (j = 0; j < 10; j++) {
            if (o[j] > (i128)0x7fffffffffffffffLL
                || o[j] < -(i128)0x7fffffffffffffffLL - 1)
                return 1;
            out[10 * i + j] = (ll)o[j];
        }
    }
    return 0;
}

/* ================= linear sieve ================= */
static int sieve_c(ll limit, ll *spf, signed char *mu) {
    ll i, ip, np = 0;
    ll *primes = (ll *)malloc(sizeof(ll) * (limit / 2 + 2));
    if (primes == NULL) return 1;
    if (limit >= 1) mu[1] = 1;
    for (i = 2; i <= limit; i++) {
        ll j, p;
        if (spf[i] == 0) {
            spf[i] = i;
            mu[i] = -1;
            primes[np++] = i;
        }
        for (j = 0; j < np; j++) {
            p = primes[j];
            if (p > spf[i] || i * p > limit) break;
            ip = i * p;
            spf[ip] = p;
            mu[ip] = (p == spf[i]) ? 0 : (signed char)(-mu[i]);
        }
    }
    free(primes);
    return 0;
}

/* ================= ten-moment algorithm cells ================= */

/* six times the unweighted (u, y, d) cell; 1 on guard trip */
static int r_uyd6_c(ll u, ll y, ll d, ll n, int fast, i128 *res) {
    ll T0 = (u - 1) / d;
    ll yd, x_max, X0, hi, L;
    i128 six = 0, nyu;
    *res = 0;
    if (T0 < 1) return 0;
    yd = y * d;
    x_max = (n - yd) / u;
    if (x_max < y) return 0;
    nyu = n - y * u;

    X0 = (ll)((n - (i128)yd * T0) / u);
    hi = X0 < x_max ? X0 : x_max;
    if (hi >= y) {
        i128 sig1 = (i128)T0 * (T0 + 1) / 2;
        i128 sig2 = (i128)T0 * (T0 + 1) * (2 * T0 + 1) / 6;
        i128 cnt = hi - y + 1;
        i128 s1v = SR_(1, y, hi);
        i128 s2v = SR_(2, y, hi);
        i128 sum_p0 = nyu * ((i128)n * cnt - u * s1v);
        i128 sum_p1 = -(i128)d * (y * nyu * cnt + n * s1v - u * s2v);
        i128 sum_p2 = (i128)y * d * d * s1v;
        six += 6 * T0 * sum_p0 + 6 * sig1 * sum_p1 + 6 * sig2 * sum_p2;
    }

    L = X0 + 1 > y ? X0 + 1 : y;
    if (L <= x_max) {
        i128 h[10];
        i128 R = x_max;
        i128 F01, F11, F21, F02, F12, F22, F03, F13;
        if (eval10_c(x_max - L + 1, yd, u, n - u * x_max, fast, h)) return 1;
        F01 = h[0];
        F11 = R * h[0] - h[1];
        F21 = R * R * h[0] - 2 * R * h[1] + h[2];
        F02 = h[4];
        F12 = R * h[4] - h[5];
        F22 = R * R * h[4] - 2 * R * h[5] + h[6];
        F03 = h[7];
        F13 = R * h[7] - h[8];
        six += 6 * nyu * (n * F01 - u * F11)
               - 3 * (i128)d * (y * nyu * (F02 + F01) + n * (F12 + F11)
                                - u * (F22 + F21))
               + (i128)y * d * d * (2 * F13 + 3 * F12 + F11);
    }
    *res = six;
    return 0;
}

/* six times the x = y slice of the (u, y, d) cell */
static i128 diag_cell6_c(ll u, ll y, ll d, ll n) {
    ll T0 = (u - 1) / d;
    ll yd = y * d, T, T2;
    i128 nyu, p0, p1, p2;
    if (T0 < 1 || (n - yd) / u < y) return 0;
    T2 = (n - u * y) / yd;
    T = T0 < T2 ? T0 : T2;
    if (T < 1) return 0;
    nyu = n - y * u;
    p0 = nyu * nyu;
    p1 = -(i128)d * (2 * y * nyu);
    p2 = (i128)y * y * d * d;
    return 6 * (i128)T * p0 + 3 * (i128)T * (T + 1) * p1
           + (i128)T * (T + 1) * (2 * T + 1) * p2;
}

/* sum over u in [u0, u1) of the Mobius-signed six-fold cells */
static int ten_chunk(ll n, ll u0, ll u1, const ll *spf, int fast,
                     ll *hi, ull *lo) {
    i128 acc = 0;
    ll u, ds[512];
    int sg[512];
    if (n >= (1LL << 24)) return 1;
    if (u1 > n) u1 = n;
    if (u0 < 2) u0 = 2;
    for (u = u0; u < u1; u++) {
        ll k = u, dd, ymax, y;
        int cnt = 1, i, c0;
        ds[0] = 1; sg[0] = 1;
        while (k > 1) {
            ll p = spf[k];
            c0 = cnt;
            for (i = 0; i < c0; i++) {
                ds[cnt] = ds[i] * p;
                sg[cnt] = -sg[i];
                cnt++;
            }
            while (k % p == 0) k /= p;
        }
        for (i = 0; i < cnt; i++) {
            dd = ds[i];
            if (dd >= u) continue;
            ymax = n / (u + dd);
            for (y = 1; y <= ymax; y++) {
                i128 rsix;
                if (r_uyd6_c(u, y, dd, n, fast, &rsix)) return 1;
                rsix = 4 * rsix - 2 * diag_cell6_c(u, y, dd, n);
                acc += sg[i] > 0 ? rsix : -rsix;
            }
        }
    }
    hi[0] = (ll)(acc >> 64);
    lo[0] = (ull)acc;
    return 0;
}

/* ================= divisor-layer coefficients ================= */

/* moments M00,M10,M20,M01,M11,M02 over lo <= Y <= hi for pair (p, q)
   at scale N; 1 on guard trip */
static int moments6_c(ll N, ll p, ll q, ll lo, ll hi, int fast, i128 *M) {
    i128 h[6];
    i128 R, F01, F11, F21, F02, F12, F03, s0, s1, s2, s3;
    int i;
    for (i = 0; i < 6; i++) M[i] = 0;
    if (lo > hi) return 0;
    if (eval6_c(hi - lo + 1, p, q, N - (i128)q * hi, fast, h)) return 1;
    R = hi;
    F01 = h[0];
    F11 = R * h[0] - h[1];
    F21 = R * R * h[0] - 2 * R * h[1] + h[2];
    F02 = h[3];
    F12 = R * h[3] - h[4];
    F03 = h[5];
    s0 = hi - lo + 1;
    s1 = SR_(1, lo, hi);
    s2 = SR_(2, lo, hi);
    s3 = SR_(3, lo, hi);
    M[0] = F01 - (s1 - s0);
    M[1] = (F02 + F01) / 2 - (s2 - s1) / 2;
    M[2] = (2 * F03 + 3 * F02 + F01) / 6 - (2 * s3 - 3 * s2 + s1) / 6;
    M[3] = F11 - (s2 - s1);
    M[4] = (F12 + F11) / 2 - (s3 - s2) / 2;
    M[5] = F21 - (s3 - s2);
    return 0;
}

/* sum_{s=1}^{S} floor((s-1)/2) * s^j for j in {0,1,2} */
static i128 half_weighted_c(ll S, int j) {
    ll h1 = S / 2, h2 = (S - 1) / 2;
    i128 e1 = S1_(h1), e2 = S2_(h1), e3 = S3_(h1);
    i128 o1 = S1_(h2), o2 = S2_(h2), o3 = S3_(h2);
    if (j == 0) return (e1 - h1) + o1;
    if (j == 1) return 2 * (e2 - e1) + 2 * o2 + o1;
    return 4 * (e3 - e2) + 4 * o3 + 4 * o2 + o1;
}

static int layer_c(ll N, int fast, i128 *x0, i128 *x1, i128 *x2) {
    ll B = isqrt_ll(N);
    ll p, q, t;
    i128 X0 = 0, X1 = 0, X2 = 0;
    for (q = 1; q <= B; q++) {
        for (p = q + 1; p <= B; p++) {
            ll pq = p + q, T, Tc, Ys, Y1;
            i128 ms[6], z2[6], C[6];
            i128 dT0, dT1, dT2, dc0, dc1, dc2;
            i128 P0B, P1B, P2B;
            int i;
            if (pq > N) break;
            T = N / pq;
            Tc = B < T ? B : T;
            if (moments6_c(N, p, q, 1, T, fast, ms)) return 1;
            Ys = (N - p * B) / q;
            Y1 = Ys < Tc ? Ys : Tc;
            P0B = B;
            P1B = S1_(B);
            P2B = S2_(B);
            if (Y1 >= 1) {
                i128 s0 = Y1, s1 = S1_(Y1), s2 = S2_(Y1), s3 = S3_(Y1);
                C[0] = P0B * s0 - (s1 - s0);
                C[1] = P1B * s0 - (s2 - s1) / 2;
                C[2] = P2B * s0 - (2 * s3 - 3 * s2 + s1) / 6;
                C[3] = P0B * s1 - (s2 - s1);
                C[4] = P1B * s1 - (s3 - s2) / 2;
                C[5] = P0B * s2 - (s3 - s2);
            } else {
                Y1 = 0;
                for (i = 0; i < 6; i++) C[i] = 0;
            }
            if (moments6_c(N, p, q, Y1 + 1, Tc, fast, z2)) return 1;
            for (i = 0; i < 6; i++) C[i] += z2[i];
            dT0 = T; dT1 = S1_(T); dT2 = S2_(T);
            dc0 = Tc; dc1 = S1_(Tc); dc2 = S2_(Tc);
            X0 += 8 * ms[0] - 6 * dT0 - 4 * C[0] + 2 * dc0;
            X1 += (i128)pq * (-8 * (ms[1] + ms[3]) + 12 * dT1
                              + 4 * (C[1] + C[3]) - 4 * dc1);
            X2 += 8 * ((i128)p * q * (ms[2] + ms[5])
                       + ((i128)p * p + (i128)q * q) * ms[4])
                  - 6 * (i128)pq * pq * dT2
                  - 4 * ((i128)p * q * (C[2] + C[5])
                         + ((i128)p * p + (i128)q * q) * C[4])
                  + 2 * (i128)pq * pq * dc2;
        }
    }
    for (t = 1; t <= B; t++) {
        ll S = N / t;
        X0 += 2 * half_weighted_c(S, 0);
        X1 += -4 * (i128)t * half_weighted_c(S, 1);
        X2 += 2 * (i128)t * t * half_weighted_c(S, 2);
    }
    *x0 = X0; *x1 = X1; *x2 = X2;
    return 0;
}

/* Mobius-signed layer sums for d in [d0, d1); 1 on guard trip */
static int div_chunk(ll n, ll d0, ll d1, const signed char *mu, int fast,
                     ll *hi, ull *lo) {
    i128 acc = 0;
    ll d;
    if (n >= (1LL << 28)) return 1;
    if (d1 > n / 3 + 1) d1 = n / 3 + 1;
    if (d0 < 1) d0 = 1;
    for (d = d0; d < d1; d++) {
        i128 X0, X1, X2, term;
        int md = mu[d];
        if (md == 0) continue;
        if (layer_c(n / d, fast, &X0, &X1, &X2)) return 1;
        term = X0 * n * n + X1 * n * d + X2 * d * d;
        acc += md > 0 ? term : -term;
    }
    hi[0] = (ll)(acc >> 64);
    lo[0] = (ull)acc;
    return 0;
}

/* ================= all-values table ================= */

static i128 *t_b0, *t_b1a, *t_b1b, *t_b2a, *t_b2b, *t_b2c;

static void add0_c(ll base, ll step, ll lo, ll hi, i128 c0) {
    ll start, stop;
    if (lo > hi) return;
    start = base + step * lo;
    stop = base + step * (hi + 1);
    t_b0[start] += c0;
    t_b0[stop] -= c0;
}

static void add1_c(ll base, ll step, ll lo, ll hi, i128 c0, i128 c1) {
    ll start, stop, s1;
    i128 C0, D0;
    if (lo > hi) return;
    C0 = c0 + c1 * lo;
    start = base + step * lo;
    stop = base + step * (hi + 1);
    t_b1a[start] += C0 - c1;
    t_b1b[start] += c1;
    s1 = hi - lo + 1;
    D0 = C0 + c1 * s1;
    t_b1a[stop] -= D0 - c1;
    t_b1b[stop] -= c1;
}

static void add2_c(ll base, ll step, ll lo, ll hi, i128 c0, i128 c1, i128 c2) {
    ll start, stop, s1;
    i128 C0, C1, D0, D1;
    if (lo > hi) return;
    C0 = c0 + c1 * lo + c2 * lo * lo;
    C1 = c1 + 2 * c2 * lo;
    start = base + step * lo;
    stop = base + step * (hi + 1);
    t_b2a[start] += C0 - C1 + c2;
    t_b2b[start] += C1 - 3 * c2;
    t_b2c[start] += 2 * c2;
    s1 = hi - lo + 1;
    D0 = C0 + C1 * s1 + c2 * (i128)s1 * s1;
    D1 = C1 + 2 * c2 * s1;
    t_b2a[stop] -= D0 - D1 + c2;
    t_b2b[stop] -= D1 - 3 * c2;
    t_b2c[stop] -= 2 * c2;
}

static i128 f0_c(i128 n) {
    return n * n * (n - 1) * (n - 1) / 4
           + n * (n - 1) * (n - 1) * (n - 2) / 12;
}

static int table_c(ll N, const signed char *mu, ll *ohi, ull *olo) {
    ll B, blen, m, L, t, d, nn;
    i128 *G0, *G1, *G2, *E0, *E1, *E2;
    i128 *a00, *a10, *a11, *a20, *a21, *a22;
    if (N < 1 || N >= (1LL << 22)) return 1;
    B = isqrt_ll(N);
    blen = N + 2 * B + 3;
    G0 = (i128 *)calloc(N + 1, sizeof(i128));
    G1 = (i128 *)calloc(N + 1, sizeof(i128));
    G2 = (i128 *)calloc(N + 1, sizeof(i128));
    t_b0 = (i128 *)calloc(blen, sizeof(i128));
    t_b1a = (i128 *)calloc(blen, sizeof(i128));
    t_b1b = (i128 *)calloc(blen, sizeof(i128));
    t_b2a = (i128 *)calloc(blen, sizeof(i128));
    t_b2b = (i128 *)calloc(blen, sizeof(i128));
    t_b2c = (i128 *)calloc(blen, sizeof(i128));
    a00 = (i128 *)malloc(sizeof(i128) * (2 * B + 1));
    a10 = (i128 *)malloc(sizeof(i128) * (2 * B + 1));
    a11 = (i128 *)malloc(sizeof(i128) * (2 * B + 1));
    a20 = (i128 *)malloc(sizeof(i128) * (2 * B + 1));
    a21 = (i128 *)malloc(sizeof(i128) * (2 * B + 1));
    a22 = (i128 *)malloc(sizeof(i128) * (2 * B + 1));
    if (!G0 || !G1 || !G2 || !t_b0 || !t_b1a || !t_b1b || !t_b2a || !t_b2b
        || !t_b2c || !a00 || !a10 || !a11 || !a20 || !a21 || !a22) {
        free(G0); free(G1); free(G2);
        free(t_b0); free(t_b1a); free(t_b1b);
        free(t_b2a); free(t_b2b); free(t_b2c);
        free(a00); free(a10); free(a11); free(a20); free(a21); free(a22);
        return 2;
    }

    for (m = 2; m < 2 * B; m++) {
        int used = 0;
        if (m <= B) {
            ll a = m, b, y;
            for (b = 1; b < a; b++) {
                ll ab = a + b, yhi = N / ab;
                for (y = 1; y <= yhi; y++) {
                    ll w = ab * y;
                    ll s_hi = (N - w) / a;
                    ll s_lo = y > B ? 1 : B + 1 - y;
                    if (s_lo <= s_hi) {
                        add0_c(w, a, s_lo, s_hi, 4);
                        add1_c(w, a, s_lo, s_hi, 8 * (i128)w, 4 * (i128)ab);
                        add2_c(w, a, s_lo, s_hi, 4 * (i128)w * w,
                               4 * (i128)w * ab, 4 * (i128)a * b);
                        used = 1;
                    }
                    if (y > B) {
                        G0[w] += 2;
                        G1[w] += 4 * (i128)w;
                        G2[w] += 2 * (i128)w * w;
                    }
                }
            }
        }
        if (m >= 3) {
            ll x, xcap = B < m - 1 ? B : m - 1;
            for (x = m / 2 + 1; x <= xcap; x++) {
                ll y = m - x, r, rhi = (N - m) / x;
                for (r = 1; r <= rhi; r++) {
                    ll xr = x * r;
                    ll b_hi = (N - xr) / m;
                    add0_c(xr, m, 1, b_hi, 4);
                    add1_c(xr, m, 1, b_hi, 4 * (i128)m * r, 8 * (i128)m);
                    add2_c(xr, m, 1, b_hi, 4 * (i128)x * y * r * r,
                           4 * (i128)m * m * r, 4 * (i128)m * m);
                    used = 1;
                }
            }
        }
        if (used) {
            ll r = 0;
            memset(a00, 0, sizeof(i128) * m);
            memset(a10, 0, sizeof(i128) * m);
            memset(a11, 0, sizeof(i128) * m);
            memset(a20, 0, sizeof(i128) * m);
            memset(a21, 0, sizeof(i128) * m);
            memset(a22, 0, sizeof(i128) * m);
            for (L = 0; L < blen; L++) {
                a22[r] += t_b2c[L];
                a21[r] += t_b2b[L] + a22[r];
                a20[r] += t_b2a[L] + a21[r];
                a11[r] += t_b1b[L];
                a10[r] += t_b1a[L] + a11[r];
                a00[r] += t_b0[L];
                t_b2c[L] = 0; t_b2b[L] = 0; t_b2a[L] = 0;
                t_b1b[L] = 0; t_b1a[L] = 0; t_b0[L] = 0;
                if (L <= N) {
                    G0[L] += a00[r];
                    G1[L] += a10[r];
                    G2[L] += a20[r];
                }
                if (++r == m) r = 0;
            }
        }
    }
    free(t_b0); free(t_b1a); free(t_b1b);
    free(t_b2a); free(t_b2b); free(t_b2c);
    free(a00); free(a10); free(a11); free(a20); free(a21); free(a22);

    for (t = 1; t <= B; t++) {
        ll s, shi = N / t;
        for (s = 3; s <= shi; s++) {
            ll cnt = (s - 1) / 2;
            ll Lts = t * s;
            G0[Lts] += 2 * (i128)cnt;
            G1[Lts] += 4 * (i128)Lts * cnt;
            G2[Lts] += 2 * (i128)Lts * Lts * cnt;
        }
    }

    E0 = (i128 *)calloc(N + 1, sizeof(i128));
    E1 = (i128 *)calloc(N + 1, sizeof(i128));
    E2 = (i128 *)calloc(N + 1, sizeof(i128));
    if (!E0 || !E1 || !E2) {
        free(G0); free(G1); free(G2);
        free(E0); free(E1); free(E2);
        return 2;
    }
    for (d = 1; d <= N; d++) {
        ll k, kk;
        i128 f0m, f1m, f2m;
        int md = mu[d];
        if (md == 0) continue;
        f0m = md;
        f1m = (i128)md * d;
        f2m = f1m * d;
        kk = N / d;
        for (k = 1; k <= kk; k++) {
            ll tt = d * k;
            if (G0[k] != 0) E0[tt] += f0m * G0[k];
            if (G1[k] != 0) E1[tt] += f1m * G1[k];
            if (G2[k] != 0) E2[tt] += f2m * G2[k];
        }
    }
    free(G0); free(G1); free(G2);

    {
        i128 p0 = 0, p1 = 0, p2 = 0, v;
        for (nn = 1; nn <= N; nn++) {
            p0 += E0[nn];
            p1 += E1[nn];
            p2 += E2[nn];
            v = f0_c(nn) + (i128)nn * nn * p0 - (i128)nn * p1 + p2;
            ohi[nn - 1] = (ll)(v >> 64);
            olo[nn - 1] = (ull)v;
        }
    }
    free(E0); free(E1); free(E2);
    return 0;
}
    """
    ctypedef long long ll
    ctypedef unsigned long long ull
    int eval6_split(ll n, ll m, ll a, ll b, int fast, ll *hi, ull *lo) nogil
    int eval10_split(ll n, ll m, ll a, ll b, int fast, ll *hi, ull *lo) nogil
    int eval6_batch_c(const ll *q, ll cnt, int fast, ll *out) nogil
    int eval10_batch_c(const ll *q, ll cnt, int fast, ll *out) nogil
    int sieve_c(ll limit, ll *spf, signed char *mu) nogil
    int ten_chunk(ll n, ll u0, ll u1, const ll *spf, int fast,
                  ll *hi, ull *lo) nogil
    int div_chunk(ll n, ll d0, ll d1, const signed char *mu, int fast,
                  ll *hi, ull *lo) nogil
    int table_c(ll N, const signed char *mu, ll *ohi, ull *olo) nogil


cdef object _join(long long hi, unsigned long long lo):
    # value = hi * 2^64 + lo with hi the arithmetic high word
    return ((<object> hi) << 64) + lo


def eval_six(long long n, long long m, long long a, long long b,
             bint fast_paths=True):
    """Six-moment vector as a 6-tuple of Python ints.

    Raises OverflowError when the conservative 128-bit guard trips.
    """
    cdef ll hi[6]
    cdef ull lo[6]
    if eval6_split(n, m, a, b, fast_paths, hi, lo):
        raise OverflowError("six-moment query outside the 128-bit guard")
    return (_join(hi[0], lo[0]), _join(hi[1], lo[1]), _join(hi[2], lo[2]),
            _join(hi[3], lo[3]), _join(hi[4], lo[4]), _join(hi[5], lo[5]))


def eval_ten(long long n, long long m, long long a, long long b,
             bint fast_paths=True):
    """Ten-moment vector as a 10-tuple of Python ints."""
    cdef ll hi[10]
    cdef ull lo[10]
    cdef int i
    if eval10_split(n, m, a, b, fast_paths, hi, lo):
        raise OverflowError("ten-moment query outside the 128-bit guard")
    return tuple([_join(hi[i], lo[i]) for i in range(10)])


def eval_six_batch(queries, bint fast_paths=True):
    """Evaluate many six-moment queries; (Q, 4) int64 -> (Q, 6) int64.

    Raises OverflowError if any query trips the guard or any moment
    exceeds int64 range.
    """
    cdef long long[:, ::1] q = np.ascontiguousarray(queries, dtype=np.int64)
    if q.shape[1] != 4:
        raise ValueError("queries must have shape (Q, 4)")
    out = np.empty((q.shape[0], 6), dtype=np.int64)
    cdef long long[:, ::1] o = out
    cdef int rc
    if q.shape[0] > 0:
        with nogil:
            rc = eval6_batch_c(&q[0, 0], q.shape[0], fast_paths, &o[0, 0])
        if rc:
            raise OverflowError("six-moment batch outside int64/guard range")
    return out


def eval_ten_batch(queries, bint fast_paths=True):
    """Evaluate many ten-moment queries; (Q, 4) int64 -> (Q, 10) int64."""
    cdef long long[:, ::1] q = np.ascontiguousarray(queries, dtype=np.int64)
    if q.shape[1] != 4:
        raise ValueError("queries must have shape (Q, 4)")
    out = np.empty((q.shape[0], 10), dtype=np.int64)
    cdef long long[:, ::1] o = out
    cdef int rc
    if q.shape[0] > 0:
        with nogil:
            rc = eval10_batch_c(&q[0, 0], q.shape[0], fast_paths, &o[0, 0])
        if rc:
            raise OverflowError("ten-moment batch outside int64/guard range")
    return out


def fill_sieve(spf, mu):
    """Fill pre-zeroed spf (int64) and mu (int8) arrays by a linear sieve."""
    cdef long long[::1] s = spf
    cdef signed char[::1] u = mu
    cdef ll limit = s.shape[0] - 1
    cdef int rc
    if u.shape[0] != s.shape[0]:
        raise ValueError("spf and mu must have equal length")
    if limit < 1:
        return
    with nogil:
        rc = sieve_c(limit, &s[0], &u[0])
    if rc:
        raise MemoryError("sieve allocation failed")


def tenmoment_f1(long long n, long long u_lo, long long u_hi,
                 bint fast_paths=True):
    """Tilted contribution for directions with u in [u_lo, u_hi)."""
    cdef ll hi[1]
    cdef ull lo[1]
    cdef int rc
    if n < 3 or u_lo >= u_hi:
        return 0
    if n >= (1 << 24):
        raise OverflowError("grid size outside the ten-moment 128-bit guard")
    spf = np.zeros(max(u_hi, 2), dtype=np.int64)
    mu = np.zeros(max(u_hi, 2), dtype=np.int8)
    fill_sieve(spf, mu)
    cdef long long[::1] s = spf
    with nogil:
        rc = ten_chunk(n, u_lo, u_hi, &s[0], fast_paths, hi, lo)
    if rc:
        raise OverflowError("ten-moment chunk outside the 128-bit guard")
    acc6 = _join(hi[0], lo[0])
    if acc6 % 6:
        raise ArithmeticError("ten-moment accumulator not divisible by 6")
    return acc6 // 6


def divisorlayer_f1(long long n, long long d_lo, long long d_hi,
                    bint fast_paths=True):
    """Tilted contribution of layers d in [d_lo, d_hi)."""
    cdef ll hi[1]
    cdef ull lo[1]
    cdef int rc
    if n < 3 or d_lo >= d_hi:
        return 0
    if n >= (1 << 28):
        raise OverflowError("grid size outside the layer 128-bit guard")
    cap = min(d_hi, n // 3 + 1)
    spf = np.zeros(max(cap, 2), dtype=np.int64)
    mu = np.zeros(max(cap, 2), dtype=np.int8)
    fill_sieve(spf, mu)
    cdef signed char[::1] u = mu
    with nogil:
        rc = div_chunk(n, d_lo, d_hi, &u[0], fast_paths, hi, lo)
    if rc:
        raise OverflowError("divisor-layer chunk outside the 128-bit guard")
    return _join(hi[0], lo[0])


def compute_table(long long N):
    """[F(1), ..., F(N)] via the compiled all-values pipeline."""
    cdef int rc
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if N >= (1 << 22):
        raise OverflowError("table size outside the 128-bit guard")
    mu = np.zeros(N + 1, dtype=np.int8)
    spf = np.zeros(N + 1, dtype=np.int64)
    fill_sieve(spf, mu)
    ohi = np.empty(N, dtype=np.int64)
    olo = np.empty(N, dtype=np.uint64)
    cdef signed char[::1] u = mu
    cdef long long[::1] h = ohi
    cdef unsigned long long[::1] l = olo
    with nogil:
        rc = table_c(N, &u[0], &h[0], &l[0])
    if rc == 2:
        raise MemoryError("table allocation failed")
    if rc:
        raise OverflowError("table size outside the 128-bit guard")
    return [(int(a) << 64) + int(b) for a, b in zip(ohi.tolist(), olo.tolist())]
