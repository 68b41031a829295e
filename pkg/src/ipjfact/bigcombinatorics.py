"""Exact factorials and general binomial coefficients over the integers.

Python's ``int`` is already an arbitrary-precision signed integer, so it
serves directly as the big-integer type throughout the package.
"""
from __future__ import annotations

import math


def factorial(n: int) -> int:
    """Return ``n!`` exactly. Raises ``ValueError`` for negative ``n``."""
    if n < 0:
        raise ValueError(f"factorial is undefined for negative n={n}")
    return math.factorial(n)


def binom(t: int, m: int) -> int:
    """General binomial coefficient ``t(t-1)...(t-m+1) / m!``.

    ``t`` may be any integer, including negative ones. A negative lower
    index ``m`` gives 0, as does ``0 <= t < m``.

    The value is built one factor at a time: after step ``i`` the running
    value is the falling factorial of length ``i`` divided by ``i!``, which
    is always an integer, so every division is exact.
    """
    if m < 0:
        return 0
    acc = 1
    for i in range(1, m + 1):
        acc *= t + 1 - i
        if acc == 0:
            return 0
        q, r = divmod(acc, i)
        if r:
            raise ArithmeticError(
                f"falling factorial not divisible by {i}! in binom({t}, {m})")
        acc = q
    return acc


def sign(e: int) -> int:
    """``(-1)**e`` from the parity of ``e``; ``e`` may be negative."""
    return -1 if e % 2 else 1


def check_reflection(t: int, m: int) -> bool:
    """True iff ``binom(t, m) == (-1)**m * binom(m - t - 1, m)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return binom(t, m) == sign(m) * binom(m - t - 1, m)


def check_chu_vandermonde(s: int, t: int, m: int) -> bool:
    """True iff ``binom(s + t, m)`` equals the convolution sum over k."""
    if m < 0:
        raise ValueError("m must be non-negative")
    rhs = sum(binom(s, k) * binom(t, m - k) for k in range(m + 1))
    return binom(s + t, m) == rhs
