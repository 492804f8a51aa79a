"""Exact rational scalars and small dense linear algebra.

The scalar type is :class:`fractions.Fraction`, which already keeps values
in lowest terms with a positive denominator and hashes canonically.  The
:class:`Matrix` type is an immutable row-major container; determinants use
fraction-free (Bareiss) elimination over the integers whenever every entry
is integral and ordinary rational elimination otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import InvalidInput, NonSquare, Singular

Rational = Fraction
Scalar = Union[int, Fraction]


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3"`` or ``"-2/5"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidInput(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"not a rational: {x!r}") from exc
    raise InvalidInput(f"not a rational: {x!r}")


def format_rational(x: Scalar) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_to_json(x: Scalar):
    """Integers stay JSON numbers; everything else becomes ``"p/q"``."""
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def is_integral(x: Scalar) -> bool:
    return Fraction(x).denominator == 1


@dataclass(frozen=True)
class Matrix:
    rows: tuple

    @classmethod
    def of(cls, rows: Iterable[Iterable]) -> "Matrix":
        data = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if not data:
            raise InvalidInput("matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise InvalidInput("ragged or empty matrix")
        return cls(data)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls(tuple(tuple(Fraction(0) for _ in range(c)) for _ in range(r)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    T = property(transpose)

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-x for x in r) for r in self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise InvalidInput("shape mismatch in matrix product")
            cols = list(zip(*other.rows))
            return Matrix(tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols)
                                for r in self.rows))
        vec = tuple(other)
        if len(vec) != self.ncols:
            raise InvalidInput("shape mismatch in matrix-vector product")
        return tuple(sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self.rows)

    def __pow__(self, p: int) -> "Matrix":
        if not self.is_square:
            raise NonSquare("power of a non-square matrix")
        base = self if p >= 0 else self.inverse()
        p = abs(p)
        out = Matrix.identity(self.nrows)
        while p:
            if p & 1:
                out = out @ base
            base = base @ base
            p >>= 1
        return out

    def inverse(self) -> "Matrix":
        return Matrix(_inverse(self.rows))

    def determinant(self) -> Fraction:
        return determinant(self)

    def is_symmetric(self) -> bool:
        return self.is_square and all(self.rows[i][j] == self.rows[j][i]
                                      for i in range(self.nrows) for j in range(i))

    def tolist(self) -> list:
        return [list(r) for r in self.rows]


def _bareiss(rows: list) -> int:
    """Fraction-free elimination on a list of integer rows (mutated)."""
    n = len(rows)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if rows[c][c] == 0:
            for r in range(c + 1, n):
                if rows[r][c] != 0:
                    rows[c], rows[r] = rows[r], rows[c]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[c][c]
        for r in range(c + 1, n):
            rr, rc = rows[r], rows[c]
            lead = rr[c]
            for k in range(c + 1, n):
                rr[k] = (rr[k] * pivot - lead * rc[k]) // prev
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _rational_det(rows: list) -> Fraction:
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        pivot = rows[c][c]
        det *= pivot
        for r in range(c + 1, n):
            f = rows[r][c] / pivot
            if f:
                rr, rc = rows[r], rows[c]
                for k in range(c + 1, n):
                    rr[k] -= f * rc[k]
    return det


def det_rows(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square list-of-rows; the empty matrix has det 1."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise NonSquare(f"{n} rows but row lengths {[len(r) for r in rows]}")
    if n == 1:
        return Fraction(rows[0][0])
    if all(isinstance(x, int) or Fraction(x).denominator == 1 for r in rows for x in r):
        return Fraction(_bareiss([[int(x) for x in r] for r in rows]))
    return _rational_det([[Fraction(x) for x in r] for r in rows])


def determinant(M: Union[Matrix, Sequence[Sequence]]) -> Fraction:
    rows = M.rows if isinstance(M, Matrix) else M
    if isinstance(M, Matrix) and not M.is_square:
        raise NonSquare(f"{M.nrows}x{M.ncols} matrix")
    return det_rows(rows)


def _inverse(rows) -> tuple:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NonSquare("inverse of a non-square matrix")
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(rows)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise Singular("matrix is not invertible")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(r[n:]) for r in aug)


def matrix_order(M: Matrix, max_order: int = 256) -> Optional[int]:
    """Smallest p <= max_order with M^p = I, or None."""
    if not M.is_square:
        raise NonSquare(f"{M.nrows}x{M.ncols} matrix")
    if determinant(M) == 0:
        raise Singular("matrix_order of a singular matrix")
    ident = Matrix.identity(M.nrows)
    power = M
    for p in range(1, max_order + 1):
        if power == ident:
            return p
        power = power @ M
    return None


def continuant(a: Sequence[Scalar]) -> Fraction:
    """Tridiagonal determinant with diagonal ``a`` and unit off-diagonals.

    K() = 1, K(a1) = a1, K_j = a_j K_{j-1} - K_{j-2}.
    """
    prev, cur = Fraction(0), Fraction(1)
    for x in a:
        prev, cur = cur, x * cur - prev
    return cur


def tridiagonal(a: Sequence[Scalar]) -> Matrix:
    n = len(a)
    return Matrix.of([[a[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n)]
                      for i in range(n)])


def adjacent_minor(view: Callable[[int, int], Scalar], i: int, j: int, r: int) -> Fraction:
    """Determinant of the r x r window of ``view`` with top-left corner (i, j)."""
    if r < 0:
        raise InvalidInput("minor order must be non-negative")
    return det_rows([[view(i + a, j + b) for b in range(r)] for a in range(r)])


def exact_sqrt(x: Fraction) -> Optional[Fraction]:
    """Rational square root of ``x`` if it exists."""
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None
