"""The factorial Hankel matrix ``H[i][j] = 1/(i+j-1)!`` and its integer inverse.

Indices in the formulas below are 1-based, matching the usual statement;
the returned matrices are indexed from 0 as Python sequences are.

Three closed forms are provided for the inverse and are expected to agree
entry by entry:

* ``inverse_closed_form``: a double sum of binomial products,
* ``inverse_gover_factorial``: Gover's single sum of factorial ratios,
* ``inverse_gover_binomial``: the same sum rewritten with ``m = i+j-1``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import bigcombinatorics as bc
from . import exact_matrix as em
from .bigcombinatorics import sign


class ConsistencyError(ArithmeticError):
    """An intermediate quantity that must be an exact integer was not."""


def _check_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix order must be a positive integer, got {n!r}")


def _tables(n: int):
    fact = [1] * (2 * n + 1)
    for k in range(1, 2 * n + 1):
        fact[k] = fact[k - 1] * k
    binom = lru_cache(maxsize=None)(bc.binom)
    return fact, binom


def hankel(n: int) -> em.RationalMatrix:
    _check_order(n)
    fact, _ = _tables(n)
    return em.RationalMatrix(
        (Fraction(1, fact[i + j - 1]) for j in range(1, n + 1))
        for i in range(1, n + 1))


def inverse_closed_form(n: int) -> em.IntegerMatrix:
    """Integer inverse of ``hankel(n)``::

        M_ij = (-1)^(n+i+j+1) (i-1)! j! C(n-1, i-1) C(n+j-1, j)
               * sum_{k=0}^{i-1} C(n-i+k, j-1) C(n+k-1, k)
    """
    _check_order(n)
    fact, binom = _tables(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            s = 0
            for k in range(i):
                s += binom(n - i + k, j - 1) * binom(n + k - 1, k)
            row.append(sign(n + i + j + 1) * fact[i - 1] * fact[j]
                       * binom(n - 1, i - 1) * binom(n + j - 1, j) * s)
        rows.append(row)
    return em.IntegerMatrix(rows)


def inverse_gover_factorial(n: int) -> em.IntegerMatrix:
    """Gover's factorial-ratio form of the inverse.

    Every summand is checked to be an exact integer; a remainder raises
    ``ConsistencyError``.
    """
    _check_order(n)
    fact, _ = _tables(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            lo, hi = max(0, i + j - 1 - n), i - 1
            assert lo <= hi, (n, i, j)
            s = 0
            for k in range(lo, hi + 1):
                assert n + k - i - j + 1 >= 0 and n - k >= 1
                num = (fact[n + i + j - k - 2] * fact[n + k - 1]
                       * (i + j - 2 * k - 1))
                den = (fact[i + j - k - 1] * fact[k]
                       * fact[n + k - i - j + 1] * fact[n - k])
                q, r = divmod(num, den)
                if r:
                    raise ConsistencyError(
                        f"inexact summand at n={n}, i={i}, j={j}, k={k}")
                s += q
            row.append(n * sign(n - i - j - 1) * s)
        rows.append(row)
    return em.IntegerMatrix(rows)


def inverse_gover_binomial(n: int) -> em.IntegerMatrix:
    """Gover's binomial form, with ``m = i + j - 1``.

    The ``k = 0`` term contains ``C(m-1, -1)``, taken as 0.
    """
    _check_order(n)
    fact, binom = _tables(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            m = i + j - 1
            lo, hi = max(0, m - n), i - 1
            assert lo <= hi, (n, i, j)
            s = 0
            for k in range(lo, hi + 1):
                s += (binom(n + m - k - 1, n - k) * binom(n + k - 1, n + k - m)
                      * (binom(m - 1, k) - binom(m - 1, k - 1)))
            row.append(sign(n - m) * n * fact[m - 1] * s)
        rows.append(row)
    return em.IntegerMatrix(rows)


def _check_indices(n: int, *idx: int) -> None:
    _check_order(n)
    for v in idx:
        if not 1 <= v <= n:
            raise ValueError(f"index {v} outside 1..{n}")


def lemma1_sides(n: int, i: int, l: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the inner-sum identity used to contract ``M @ H``.

    LHS = sum_{j=1}^n (-1)^j j!/(l+j-1)! C(n+j-1, j) C(n-i+k, j-1)
    RHS = (-1)^(n+i+k+1) (n-l)!/(n-1)! C(n, n+l-i+k)
    """
    _check_indices(n, i, l)
    if not 0 <= k <= i - 1:
        raise ValueError(f"k={k} outside 0..{i - 1}")
    fact, binom = _tables(n)
    lhs = Fraction(0)
    for j in range(1, n + 1):
        lhs += sign(j) * Fraction(fact[j], fact[l + j - 1]) \
            * binom(n + j - 1, j) * binom(n - i + k, j - 1)
    rhs = sign(n + i + k + 1) * Fraction(fact[n - l], fact[n - 1]) \
        * binom(n, n + l - i + k)
    return lhs, rhs


def lemma1_check(n: int, i: int, l: int, k: int) -> bool:
    lhs, rhs = lemma1_sides(n, i, l, k)
    return lhs == rhs


def lemma2_sum(n: int, i: int, l: int) -> int:
    """``sum_{k=0}^{i-1} (-1)^k C(n, n+l-i+k) C(n+k-1, k)``; equals 1 iff i == l."""
    _check_indices(n, i, l)
    return sum(sign(k) * bc.binom(n, n + l - i + k) * bc.binom(n + k - 1, k)
               for k in range(i))


def verify_inverse(n: int) -> bool:
    """Check ``M @ H == I`` and ``H @ M == I`` exactly."""
    _check_order(n)
    m = inverse_closed_form(n)
    h = hankel(n)
    return em.is_identity(em.mat_mul(m, h)) and em.is_identity(em.mat_mul(h, m))


def formulas_agree(n: int) -> bool:
    m = inverse_closed_form(n)
    return m == inverse_gover_factorial(n) == inverse_gover_binomial(n)
