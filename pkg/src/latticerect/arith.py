"""Exact integer arithmetic helpers: closed-form power sums and decimal I/O.

Python integers are arbitrary precision, so every count and accumulator in
this package is exact by construction.  The closed forms below are the only
place degree-r summation appears; all callers treat them as O(1).
"""

__all__ = ["power_sum", "power_sum_range", "to_decimal", "parse_decimal"]

MAX_POWER_SUM_DEGREE = 4


def power_sum(r: int, n: int) -> int:
    """Sum of x**r for x in [0, n), via closed form.

    Supports r in 0..4.  Exact for every n >= 0.
    """
    if not 0 <= r <= MAX_POWER_SUM_DEGREE:
        raise ValueError(f"unsupported degree r={r}; only 0..{MAX_POWER_SUM_DEGREE}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if r == 0:
        return n
    if r == 1:
        return n * (n - 1) // 2
    if r == 2:
        return n * (n - 1) * (2 * n - 1) // 6
    if r == 3:
        h = n * (n - 1) // 2
        return h * h
    return n * (n - 1) * (2 * n - 1) * (3 * n * n - 3 * n - 1) // 30


def power_sum_range(r: int, lo: int, hi: int) -> int:
    """Sum of x**r for lo <= x <= hi (0 if the interval is empty)."""
    if lo > hi:
        return 0
    if lo < 0:
        raise ValueError("power_sum_range requires lo >= 0")
    return power_sum(r, hi + 1) - power_sum(r, lo)


def to_decimal(x: int) -> str:
    """Canonical base-10 string: optional '-', no leading zeros except \"0\"."""
    return str(int(x))


def parse_decimal(s: str) -> int:
    """Inverse of to_decimal; rejects strings that are not canonical."""
    t = s.strip()
    if not t:
        raise ValueError("empty decimal string")
    body = t[1:] if t[0] == "-" else t
    if not body.isdigit():
        raise ValueError(f"not a decimal integer: {s!r}")
    if len(body) > 1 and body[0] == "0":
        raise ValueError(f"leading zeros are not canonical: {s!r}")
    if t[0] == "-" and body == "0":
        raise ValueError('"-0" is not canonical')
    return int(t)
