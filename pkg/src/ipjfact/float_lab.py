"""Floating-point behaviour of the factorial Hankel matrix.

Exact infinity-norm condition numbers come from the integer inverse.
Two binary64 computations are measured against it: LU inversion of the
rounded matrix, and direct evaluation of the closed-form inverse formula
in floating point.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
import scipy.linalg

from . import exact_matrix as em
from . import hankel_inverse as hi


class NumericallySingularError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ErrorReport:
    n: int
    cond_inf: Fraction
    lu_max_rel_err: float
    formula_max_rel_err: float


def to_float(a: em.Matrix) -> np.ndarray:
    """Round every entry to the nearest binary64 (ties to even).

    ``float(Fraction)`` performs a correctly rounded integer division.
    Entries beyond the binary64 range raise ``OverflowError``.
    """
    return np.array([[float(x) for x in row] for row in a.rows], dtype=np.float64)


def lu_inverse(a: np.ndarray) -> np.ndarray:
    """Inverse via LU with partial pivoting (LAPACK getrf/getrs)."""
    a = np.asarray(a, dtype=np.float64)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a, check_finite=True)
    if np.any(np.diag(lu) == 0.0):
        raise NumericallySingularError("numerically singular")
    return scipy.linalg.lu_solve((lu, piv), np.eye(a.shape[0]))


def max_rel_error(approx: np.ndarray, exact: em.Matrix) -> float:
    """max |approx - exact| / max(|exact|, 1), differenced exactly.

    Each float is converted to its exact rational value before the
    subtraction, so the only rounding is the final conversion. Non-finite
    approximations give ``inf``.
    """
    approx = np.asarray(approx, dtype=np.float64)
    if approx.shape != (exact.n, exact.n):
        raise ValueError(f"dimension mismatch: {approx.shape} vs {exact.n}")
    # worst error kept as an integer pair (num, den); compared by cross-multiplying
    wnum, wden = 0, 1
    for i, row in enumerate(exact.rows):
        for j, x in enumerate(row):
            y = float(approx[i, j])
            if not math.isfinite(y):
                return math.inf
            p, q = y.as_integer_ratio()
            a, b = (x, 1) if isinstance(x, int) else (x.numerator, x.denominator)
            num = abs(p * b - a * q)
            den = q * max(abs(a), b)
            if num * wden > wnum * den:
                wnum, wden = num, den
    try:
        return float(Fraction(wnum, wden))
    except OverflowError:
        return math.inf


def cond_inf_exact(n: int) -> Fraction:
    return em.inf_norm(hi.hankel(n)) * em.inf_norm(hi.inverse_closed_form(n))


def _fbinom(t: int, m: int) -> float:
    if m < 0:
        return 0.0
    r = 1.0
    for i in range(1, m + 1):
        r *= (t + 1 - i) / i
    return r


def inverse_closed_form_float(n: int) -> np.ndarray:
    """The closed-form inverse evaluated entirely in binary64.

    Same term order as the exact version: inner sum over k ascending,
    then the sign and prefactors. Overflow shows up as ``inf``.
    """
    fact = [1.0]
    for k in range(1, 2 * n + 1):
        fact.append(fact[-1] * k)
    fbinom = lru_cache(maxsize=None)(_fbinom)
    out = np.empty((n, n), dtype=np.float64)
    with np.errstate(over="ignore", invalid="ignore"):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                s = 0.0
                for k in range(i):
                    s += fbinom(n - i + k, j - 1) * fbinom(n + k - 1, k)
                sgn = -1.0 if (n + i + j + 1) % 2 else 1.0
                out[i - 1, j - 1] = (sgn * fact[i - 1] * fact[j]
                                     * fbinom(n - 1, i - 1)
                                     * fbinom(n + j - 1, j) * s)
    return out


def study(n_max: int) -> list[ErrorReport]:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    reports = []
    for n in range(1, n_max + 1):
        m = hi.inverse_closed_form(n)
        cond = em.inf_norm(hi.hankel(n)) * em.inf_norm(m)
        try:
            lu_err = max_rel_error(lu_inverse(to_float(hi.hankel(n))), m)
        except (NumericallySingularError, OverflowError, ValueError):
            lu_err = math.inf
        formula_err = max_rel_error(inverse_closed_form_float(n), m)
        reports.append(ErrorReport(n, cond, lu_err, formula_err))
    return reports
