"""Dense exact matrices over the rationals and the integers.

Entries are ``fractions.Fraction`` (always normalized, positive
denominator) or plain ``int``. Matrices are immutable once built.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class SingularMatrixError(ArithmeticError):
    pass


class Matrix:
    """Square matrix stored row-major as a tuple of tuples."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        rows = tuple(tuple(self._coerce(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix order must be positive")
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        self._rows = rows

    @staticmethod
    def _coerce(x):
        return x

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[list(map(str, r)) for r in self._rows]})"

    def transpose(self):
        return type(self)(zip(*self._rows))

    def to_rational(self) -> "RationalMatrix":
        return RationalMatrix(self._rows)

    def is_integral(self) -> bool:
        return all(Fraction(x).denominator == 1 for r in self._rows for x in r)


class RationalMatrix(Matrix):
    __slots__ = ()

    @staticmethod
    def _coerce(x):
        return x if isinstance(x, Fraction) else Fraction(x)

    def to_integer(self) -> "IntegerMatrix":
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return IntegerMatrix(
            (x.numerator for x in r) for r in self.rows)


class IntegerMatrix(Matrix):
    __slots__ = ()

    @staticmethod
    def _coerce(x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"integer entry expected, got {x!r}")
        return x


def identity(n: int) -> RationalMatrix:
    return RationalMatrix(
        (1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n: int) -> RationalMatrix:
    return RationalMatrix((0 for _ in range(n)) for _ in range(n))


def _scaled(vec: Sequence[Scalar]) -> tuple[list[int], int]:
    """Write ``vec`` as ``ints / d`` with a single common denominator."""
    d = lcm(*(Fraction(x).denominator for x in vec))
    ints = [x * d if isinstance(x, int) else x.numerator * (d // x.denominator)
            for x in vec]
    return ints, d


def mat_mul(a: Matrix, b: Matrix) -> RationalMatrix:
    """Exact product ``a @ b``.

    Each row of ``a`` and column of ``b`` is brought to a common
    denominator once, so the inner products run on plain integers and
    only the final entry is normalized.
    """
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    arows = [_scaled(r) for r in a.rows]
    bcols = [_scaled(c) for c in zip(*b.rows)]
    out = []
    for ra, da in arows:
        row = []
        for cb, db in bcols:
            s = sum(x * y for x, y in zip(ra, cb))
            row.append(Fraction(s, da * db))
        out.append(row)
    return RationalMatrix(out)


def gauss_inverse(a: Matrix) -> RationalMatrix:
    """Inverse by exact Gauss-Jordan elimination on ``[a | I]``.

    Pivots are chosen by largest absolute value in the column. Raises
    ``SingularMatrixError`` when a column has no nonzero pivot.
    """
    n = a.n
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a.rows)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(aug[r][col]))
        if aug[piv][col] == 0:
            raise SingularMatrixError("singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        inv_p = 1 / prow[col]
        prow[:] = [x * inv_p for x in prow]
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if f:
                row = aug[r]
                for c in range(col, 2 * n):
                    if prow[c]:
                        row[c] -= f * prow[c]
    return RationalMatrix(row[n:] for row in aug)


def is_identity(a: Matrix) -> bool:
    """Exact test: no tolerance."""
    return all(x == (1 if i == j else 0)
               for i, row in enumerate(a.rows) for j, x in enumerate(row))


def inf_norm(a: Matrix) -> Fraction:
    """Maximum absolute row sum."""
    return max(Fraction(sum(abs(x) for x in row)) for row in a.rows)
