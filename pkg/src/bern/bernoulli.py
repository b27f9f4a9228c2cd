"""Bernoulli numbers and polynomials by three independent methods.

``recurrence``
    sum_{k=0}^{n} C(n+1, k) B_k = 0 with B_0 = 1, and
    B_n(u) = sum_k C(n, k) B_k u^(n-k).  This is the reference engine.
``stirling``
    Closed forms built from Stirling numbers of the second kind.
``determinant``
    Signed k x k determinants of binomial-weighted moments
    int_0^1 (t-u)^j dt.

Conventions: B_1 = -1/2, and both closed-form engines return 1 for n = 0.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .combinatorics import binomial, stirling2
from .combinatorics import clear_caches as _clear_comb_caches
from .linalg import RationalMatrix, cofactor_determinant, determinant, poly_determinant_bareiss
from .rational import ONE, ZERO, RationalPolynomial, format_polynomial, format_rational, poly_eval

METHODS = ("recurrence", "stirling", "determinant")
POLY_CAP = 25
COFACTOR_MAX_SIZE = 8

_ONE_MINUS_U = RationalPolynomial((1, -1))
_MINUS_U = RationalPolynomial((0, -1))

_rec_lock = threading.Lock()
_rec_table: list[Fraction] = [Fraction(1)]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a nonnegative integer, got {n!r}")


# --- recurrence ------------------------------------------------------------


def bern_number_recurrence(n: int) -> Fraction:
    _check_n(n)
    with _rec_lock:
        table = _rec_table
        for m in range(len(table), n + 1):
            s = sum((binomial(m + 1, k) * table[k] for k in range(m)), Fraction(0))
            table.append(-s / (m + 1))
        return table[n]


def bern_poly_recurrence(n: int) -> RationalPolynomial:
    _check_n(n)
    bern_number_recurrence(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binomial(n, k) * bern_number_recurrence(k)
    return RationalPolynomial(coeffs)


# --- Stirling closed forms -------------------------------------------------


def bern_number_stirling(n: int) -> Fraction:
    """B_n = sum_{i=1}^n (-1)^i C(n+1, i+1) / C(n+i, i) * S(n+i, i)."""
    _check_n(n)
    if n == 0:
        return Fraction(1)
    return sum(
        (
            (-1) ** i * Fraction(binomial(n + 1, i + 1), binomial(n + i, i)) * stirling2(n + i, i)
            for i in range(1, n + 1)
        ),
        Fraction(0),
    )


def _stirling_bracket(ell: int, r: int, m: int, s: int) -> int:
    return sum(
        (-1) ** (i + j)
        * binomial(ell + r, r - i)
        * binomial(m + s, s - j)
        * stirling2(ell + i, i)
        * stirling2(m + j, j)
        for i in range(r + 1)
        for j in range(s + 1)
    )


@lru_cache(maxsize=None)
def _u_pow_one_minus_u(a: int, b: int) -> RationalPolynomial:
    """u^a (1-u)^b."""
    return RationalPolynomial.monomial(a) * _ONE_MINUS_U**b


def bern_poly_stirling(n: int) -> RationalPolynomial:
    """Quadruple Stirling sum over k, r+s=k, l+m=n, collected by powers of u and 1-u."""
    _check_n(n)
    if n == 0:
        return ONE
    f = math.factorial
    by_basis: dict[tuple[int, int], Fraction] = {}
    for k in range(1, n + 1):
        for r in range(k + 1):
            s = k - r
            for ell in range(n + 1):
                m = n - ell
                bracket = _stirling_bracket(ell, r, m, s)
                if bracket == 0:
                    continue
                coef = (
                    f(k)
                    * (-1) ** m
                    * binomial(n, ell)
                    * Fraction(f(ell), f(ell + r))
                    * Fraction(f(m), f(m + s))
                    * bracket
                )
                key = (m + s, ell + r)
                by_basis[key] = by_basis.get(key, Fraction(0)) + coef
    total = ZERO
    for (a, b), c in sorted(by_basis.items()):
        if c:
            total = total + _u_pow_one_minus_u(a, b) * c
    return total


# --- determinant closed forms ----------------------------------------------


def number_matrix(k: int) -> RationalMatrix:
    """Rows l = 1..k, columns m = 0..k-1, entry C(l+1, m)/(l+1) for m <= l, else 0.

    This is the polynomial matrix at u = 0: for m = l + 1 the bracket
    (1-u)^0 - (-u)^0 vanishes, so that entry is 0 even though
    C(l+1, l+1)/(l+1) is not.
    """
    return RationalMatrix(
        k,
        k,
        (
            Fraction(binomial(ell + 1, m), ell + 1) if m <= ell else 0
            for ell in range(1, k + 1)
            for m in range(k)
        ),
    )


def bern_number_determinant(k: int) -> Fraction:
    _check_n(k)
    if k == 0:
        return Fraction(1)
    return (-1) ** k * determinant(number_matrix(k))


def _moment_poly(j: int) -> RationalPolynomial:
    """(1-u)^j - (-u)^j."""
    return _ONE_MINUS_U**j - _MINUS_U**j


def poly_matrix(k: int) -> list[list[RationalPolynomial]]:
    rows = []
    for ell in range(1, k + 1):
        row = []
        for m in range(k):
            c = binomial(ell + 1, m)
            if c == 0:
                row.append(ZERO)
            else:
                row.append(_moment_poly(ell - m + 1) * Fraction(c, ell + 1))
        rows.append(row)
    return rows


def bern_poly_determinant(k: int) -> RationalPolynomial:
    _check_n(k)
    if k == 0:
        return ONE
    rows = poly_matrix(k)
    if k <= COFACTOR_MAX_SIZE:
        det = cofactor_determinant(rows, zero=ZERO)
    else:
        det = poly_determinant_bareiss(rows)
    return det * (-1) ** k


NUMBER_ENGINES: dict[str, Callable[[int], Fraction]] = {
    "recurrence": bern_number_recurrence,
    "stirling": bern_number_stirling,
    "determinant": bern_number_determinant,
}

POLY_ENGINES: dict[str, Callable[[int], RationalPolynomial]] = {
    "recurrence": bern_poly_recurrence,
    "stirling": bern_poly_stirling,
    "determinant": bern_poly_determinant,
}


def bern_number(n: int, method: str = "recurrence") -> Fraction:
    try:
        return NUMBER_ENGINES[method](n)
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None


def bern_poly(n: int, method: str = "recurrence") -> RationalPolynomial:
    try:
        return POLY_ENGINES[method](n)
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None


def clear_caches() -> None:
    """Drop every memo table (used by the benchmark for cold timings)."""
    with _rec_lock:
        del _rec_table[1:]
    _u_pow_one_minus_u.cache_clear()
    _clear_comb_caches()


# --- cross-method verification ---------------------------------------------


@dataclass
class Divergence:
    n: int
    kind: str
    methods: tuple[str, str]
    values: tuple[str, str]


@dataclass
class VerifyReport:
    max_n: int
    poly_max_n: int
    numbers_checked: int = 0
    polys_checked: int = 0
    numbers: dict[int, str] = field(default_factory=dict)
    divergence: Divergence | None = None

    @property
    def ok(self) -> bool:
        return self.divergence is None

    def to_dict(self) -> dict:
        d = {
            "ok": self.ok,
            "max_n": self.max_n,
            "poly_max_n": self.poly_max_n,
            "numbers_checked": self.numbers_checked,
            "polys_checked": self.polys_checked,
            "numbers": {str(k): v for k, v in self.numbers.items()},
            "divergence": None,
        }
        if self.divergence is not None:
            dv = self.divergence
            d["divergence"] = {
                "n": dv.n,
                "kind": dv.kind,
                "methods": list(dv.methods),
                "values": list(dv.values),
            }
        return d


def verify_all(max_n: int, poly_cap: int = POLY_CAP) -> VerifyReport:
    """Run every engine and stop at the first pairwise disagreement."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    report = VerifyReport(max_n=max_n, poly_max_n=min(max_n, poly_cap))
    for n in range(max_n + 1):
        vals = {name: fn(n) for name, fn in NUMBER_ENGINES.items()}
        ref = vals["recurrence"]
        for name in ("stirling", "determinant"):
            if vals[name] != ref:
                report.divergence = Divergence(
                    n, "number", ("recurrence", name),
                    (format_rational(ref), format_rational(vals[name])),
                )
                return report
        report.numbers[n] = format_rational(ref)
        report.numbers_checked += 1
    for n in range(report.poly_max_n + 1):
        polys = {name: fn(n) for name, fn in POLY_ENGINES.items()}
        ref_p = polys["recurrence"]
        for name in ("stirling", "determinant"):
            if polys[name] != ref_p:
                report.divergence = Divergence(
                    n, "polynomial", ("recurrence", name),
                    (format_polynomial(ref_p), format_polynomial(polys[name])),
                )
                return report
        at_zero = format_rational(poly_eval(ref_p, 0))
        if at_zero != report.numbers[n]:
            report.divergence = Divergence(
                n, "evaluation", ("poly(0)", "number"), (at_zero, report.numbers[n])
            )
            return report
        report.polys_checked += 1
    return report
