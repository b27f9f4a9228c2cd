"""Exact rational scalars and dense univariate polynomials over them.

Scalars are :class:`fractions.Fraction`, which is kept in lowest terms with a
positive denominator after every operation.  Polynomials store ascending
coefficients with trailing zeros trimmed; the zero polynomial stores nothing.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

NEG_INF = float("-inf")

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def rat_add(a: Scalar, b: Scalar) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_mul(a: Scalar, b: Scalar) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_neg(a: Scalar) -> Fraction:
    return -Fraction(a)


def rat_div(a: Scalar, b: Scalar) -> Fraction:
    """Exact quotient; raises ZeroDivisionError when ``b`` is zero."""
    b = Fraction(b)
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return Fraction(a) / b


def format_rational(x: Scalar) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the strict ``p`` / ``p/q`` form (q > 0)."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def bit_size(x: Scalar) -> int:
    """Bit length of numerator plus denominator."""
    x = Fraction(x)
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


class RationalPolynomial:
    """Immutable dense polynomial in ``u`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``u**i``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> RationalPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> RationalPolynomial:
        return cls([0] * degree + [c])

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar) -> RationalPolynomial:
        return cls((c0, c1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == RationalPolynomial.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({format_polynomial(self)})"

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self._coeffs)

    def __add__(self, other: object) -> RationalPolynomial:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other: object) -> RationalPolynomial:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other: object) -> RationalPolynomial:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other: object) -> RationalPolynomial:
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        if isinstance(other, RationalPolynomial):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RationalPolynomial:
        if e < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = poly_mul(result, base)
            e >>= 1
            if e:
                base = poly_mul(base, base)
        return result

    def __truediv__(self, other: object) -> RationalPolynomial:
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, rat_div(1, other))
        if isinstance(other, RationalPolynomial):
            return poly_exact_div(self, other)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._coeffs)


def _coerce(x: object) -> RationalPolynomial | None:
    if isinstance(x, RationalPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalPolynomial.constant(x)
    return None


ZERO = RationalPolynomial()
ONE = RationalPolynomial((1,))
U = RationalPolynomial((0, 1))


def poly_eval(p: RationalPolynomial, x: Scalar) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_add(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return RationalPolynomial([x + y for x, y in zip(a, b)] + list(a[len(b):]))


def poly_scale(p: RationalPolynomial, c: Scalar) -> RationalPolynomial:
    c = Fraction(c)
    return RationalPolynomial(x * c for x in p.coeffs)


def poly_mul(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return RationalPolynomial(out)


def poly_divmod(
    p: RationalPolynomial, q: RationalPolynomial
) -> tuple[RationalPolynomial, RationalPolynomial]:
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = len(q) - 1
    lead = q.leading()
    if len(rem) <= dq:
        return ZERO, p
    quot = [Fraction(0)] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i] / lead
        if c == 0:
            continue
        quot[i - dq] = c
        for j, y in enumerate(q.coeffs):
            rem[i - dq + j] -= c * y
    return RationalPolynomial(quot), RationalPolynomial(rem[:dq])


def poly_exact_div(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero():
        raise ArithmeticError("polynomial division is not exact")
    return quot


def format_polynomial(p: RationalPolynomial) -> str:
    """Ascending coefficient list, e.g. ``[1/6, -1, 1]``."""
    return "[" + ", ".join(format_rational(c) for c in p.coeffs) + "]"


def parse_polynomial(text: str) -> RationalPolynomial:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"not a coefficient list: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ZERO
    return RationalPolynomial(parse_rational(tok) for tok in body.split(","))

