"""Reciprocals of truncated power series with constant term 1.

Two independent routes: forward substitution (long division) and the
Hessenberg determinant
::

    b_n = (-1)^n det | a_1  1    0   ... 0   |
                     | a_2  a_1  1   ... 0   |
                     | ...                   |
                     | a_n  a_{n-1}  ... a_1 |
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import RationalMatrix, determinant
from .rational import Scalar


@dataclass(frozen=True, init=False)
class SeriesPrefix:
    """Coefficients a_0..a_N of a formal power series, with a_0 = 1."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence[Scalar]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs or cs[0] != 1:
            raise ValueError("series prefix must have constant term exactly 1")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]


def series_mul(a: Sequence[Scalar], b: Sequence[Scalar], order: int) -> list[Fraction]:
    """Truncated Cauchy product up to and including ``t**order``."""
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += x * y
    return out


def series_reciprocal_division(f: SeriesPrefix) -> SeriesPrefix:
    a = f.coeffs
    b = [Fraction(1)]
    for n in range(1, len(a)):
        b.append(-sum((a[j] * b[n - j] for j in range(1, n + 1)), Fraction(0)))
    return SeriesPrefix(b)


def hessenberg_matrix(f: SeriesPrefix, n: int) -> RationalMatrix:
    """n x n matrix with a_{i-j+1} on and below the diagonal, 1 on the superdiagonal."""
    a = f.coeffs
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j == i + 1:
                row.append(Fraction(1))
            elif j <= i:
                row.append(a[i - j + 1])
            else:
                row.append(Fraction(0))
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def series_reciprocal_determinant(f: SeriesPrefix, n: int) -> Fraction:
    """b_n of 1/f as a signed Hessenberg determinant."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > f.order:
        raise ValueError(f"n={n} exceeds series order {f.order}")
    return (-1) ** n * determinant(hessenberg_matrix(f, n))


def lower_toeplitz(coeffs: Sequence[Scalar], size: int) -> RationalMatrix:
    return RationalMatrix(
        size, size, (coeffs[i - j] if i >= j else 0 for i in range(size) for j in range(size))
    )


def toeplitz_inverse_check(f: SeriesPrefix, n: int) -> bool:
    """Check that the Toeplitz matrices of a and of the determinant-route b are inverse."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > f.order:
        raise ValueError(f"n={n} exceeds series order {f.order}")
    b = [Fraction(1)] + [series_reciprocal_determinant(f, j) for j in range(1, n + 1)]
    ta = lower_toeplitz(f.coeffs, n + 1)
    tb = lower_toeplitz(b, n + 1)
    return ta @ tb == RationalMatrix.identity(n + 1)
