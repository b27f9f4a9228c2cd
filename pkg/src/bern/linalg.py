"""Exact dense matrices, determinants and the quotient-derivative formula."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .combinatorics import binomial
from .rational import RationalPolynomial, Scalar


class RationalMatrix:
    """Immutable dense matrix of Fractions stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar]):
        entries = tuple(Fraction(x) for x in entries)
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> RationalMatrix:
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(
            self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows,
            other.cols,
            (
                sum((self[i, t] * other[t, j] for t in range(self.cols)), Fraction(0))
                for i in range(self.rows)
                for j in range(other.cols)
            ),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"RationalMatrix({self.to_rows()!r})"


def _bareiss(a: list[list[Any]], exact_div: Callable[[Any, Any], Any], zero: Any, one: Any) -> Any:
    """Fraction-free elimination on a square matrix (modified in place)."""
    n = len(a)
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            for r in range(k + 1, n):
                if a[r][k] != zero:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - aik * row_k[j]
                row_i[j] = exact_div(num, prev) if num != zero else zero
            row_i[k] = zero
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    assert r == 0, "Bareiss division not exact"
    return q


def determinant(m: RationalMatrix | Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant by integer Bareiss elimination.

    Each row is scaled by the lcm of its denominators so that elimination runs
    over the integers; the scale is divided back out at the end.
    """
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix.from_rows(m)
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    scale = 1
    rows: list[list[int]] = []
    for i in range(m.rows):
        r = m.row(i)
        l = 1
        for x in r:
            l = math.lcm(l, x.denominator)
        scale *= l
        rows.append([x.numerator * (l // x.denominator) for x in r])
    return Fraction(_bareiss(rows, _int_exact_div, 0, 1), scale)


def poly_determinant_bareiss(rows: Sequence[Sequence[RationalPolynomial]]) -> RationalPolynomial:
    """Fraction-free elimination over Q[u] with exact polynomial division."""
    a = [list(r) for r in rows]
    if any(len(r) != len(a) for r in a):
        raise ValueError("determinant of non-square matrix")
    return _bareiss(a, lambda x, y: x / y, RationalPolynomial(), RationalPolynomial((1,)))


def cofactor_determinant(rows: Sequence[Sequence[Any]], zero: Any = 0) -> Any:
    """Laplace expansion along the first row, skipping zero entries.

    Works over any commutative ring whose elements support ``+ - *``.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of non-square matrix")

    def rec(r: int, cols: tuple[int, ...]) -> Any:
        if r == n:
            return 1
        total = zero
        for idx, c in enumerate(cols):
            x = rows[r][c]
            if x == 0:
                continue
            sub = rec(r + 1, cols[:idx] + cols[idx + 1 :])
            term = x * sub
            total = total - term if idx % 2 else total + term
        return total

    return rec(0, tuple(range(n)))


def quotient_matrix(ud: Sequence[Scalar], vd: Sequence[Scalar], k: int) -> RationalMatrix:
    """The (k+1)x(k+1) matrix [A | B]: A_l = u^(l), B_{l,m} = C(l,m) v^(l-m)."""
    rows = []
    for ell in range(k + 1):
        row = [Fraction(ud[ell])]
        for m in range(k):
            row.append(binomial(ell, m) * Fraction(vd[ell - m]) if ell >= m else Fraction(0))
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def quotient_derivatives(ud: Sequence[Scalar], vd: Sequence[Scalar], k: int) -> Fraction:
    """k-th derivative of u/v at a point from the derivative values of u and v."""
    if k < 1:
        raise ValueError("quotient_derivatives: k must be >= 1")
    if len(ud) < k + 1 or len(vd) < k + 1:
        raise ValueError(f"quotient_derivatives: need {k + 1} derivatives of u and v")
    v0 = Fraction(vd[0])
    if v0 == 0:
        raise ZeroDivisionError("quotient_derivatives: v vanishes at the point")
    det = determinant(quotient_matrix(ud, vd, k))
    return (-1) ** k * det / v0 ** (k + 1)
