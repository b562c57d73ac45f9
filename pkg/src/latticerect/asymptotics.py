"""Asymptotic constants of F(n) and the residual used to test them.

F(n) = A*n^4*ln(n) + B*n^4 + O(n^(7/2) log n), where A and B are explicit
in terms of ln 2, pi, the Euler-Mascheroni constant gamma and the
derivative of the Riemann zeta function at 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["EULER_GAMMA", "ZETA_PRIME_2", "AsymptoticConstants",
           "constants", "residual"]

#: Euler-Mascheroni constant.
EULER_GAMMA = 0.57721566490153286

#: zeta'(2), the derivative of the Riemann zeta function at s = 2.
ZETA_PRIME_2 = -0.93754825431584375


@dataclass(frozen=True)
class AsymptoticConstants:
    A: float
    B: float
    gamma: float
    zeta_prime_2: float
    pi_sq: float
    log2: float


def constants() -> AsymptoticConstants:
    """The leading constants A and B of F(n) ~ A n^4 ln n + B n^4."""
    ln2 = math.log(2.0)
    pi2 = math.pi * math.pi
    c = 4.0 * ln2 - 1.0
    A = c / pi2
    zeta2 = pi2 / 6.0
    B = (-(c / 6.0) * (ZETA_PRIME_2 / (zeta2 * zeta2))
         + (24.0 * c * EULER_GAMMA + 72.0 * ln2 * ln2 - 76.0 * ln2 + 1.0)
         / (12.0 * pi2)
         - 0.25)
    return AsymptoticConstants(A=A, B=B, gamma=EULER_GAMMA,
                               zeta_prime_2=ZETA_PRIME_2, pi_sq=pi2, log2=ln2)


def residual(n: int, value: int) -> float:
    """(F(n) - A n^4 ln n) / n^4, exactly split before any float rounding.

    The integer part of value / n^4 is taken with exact arithmetic so the
    result keeps full double precision even when value has 50+ digits.
    """
    if n < 2:
        raise ValueError(f"residual needs n >= 2, got n={n}")
    n4 = n ** 4
    q, r = divmod(value, n4)
    A = constants().A
    return (q - A * math.log(n)) + r / n4
