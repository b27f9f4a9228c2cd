"""Independent reference computations for the test-suite.

Nothing here imports from ``bern``; each oracle takes a different route from
the code it checks.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction


def pascal_binomial(p: int, q: int) -> int:
    row = [1]
    for _ in range(p):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[q] if 0 <= q <= p else 0


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def stirling2_bruteforce(n: int, k: int) -> int:
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == k)


def bell_partial_bruteforce(n: int, k: int, xs) -> Fraction:
    """Sum over set partitions of {1..n} into k blocks of prod x_{|block|}."""
    total = Fraction(0)
    for p in set_partitions(list(range(n))):
        if len(p) == k:
            term = Fraction(1)
            for block in p:
                term *= Fraction(xs[len(block) - 1])
            total += term
    return total


def leibniz_det(rows) -> Fraction:
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if term == 0:
                break
        total += -term if inversions % 2 else term
    return total


def laplace_det(rows) -> Fraction:
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * laplace_det(minor)
    return total


def series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i in range(min(len(a), order + 1)):
        for j in range(min(len(b), order + 1 - i)):
            out[i + j] += Fraction(a[i]) * Fraction(b[j])
    return out


def series_div(a, b, order):
    """Long division a / b of truncated series (b[0] != 0)."""
    a = [Fraction(x) for x in a] + [Fraction(0)] * (order + 1)
    q = []
    for n in range(order + 1):
        c = (a[n] - sum(q[j] * Fraction(b[n - j]) for j in range(n) if n - j < len(b))) / Fraction(b[0])
        q.append(c)
    return q


def series_compose(f, g, order):
    """f(g(t)) where g[0] == 0, truncated at ``order``."""
    assert g[0] == 0
    out = [Fraction(0)] * (order + 1)
    power = [Fraction(1)] + [Fraction(0)] * order
    for k in range(min(len(f), order + 1)):
        for i in range(order + 1):
            out[i] += Fraction(f[k]) * power[i]
        power = series_mul(power, g, order)
    return out


def derivs_to_taylor(d):
    return [Fraction(x) / math.factorial(i) for i, x in enumerate(d)]


def taylor_to_derivs(c):
    return [Fraction(x) * math.factorial(i) for i, x in enumerate(c)]


def bernoulli_from_egf(n_max: int):
    """B_0..B_n from z/(e^z - 1) = 1 / ((e^z - 1)/z) by series division."""
    denom = [Fraction(1, math.factorial(k + 1)) for k in range(n_max + 1)]
    coeffs = series_div([1], denom, n_max)
    return [c * math.factorial(i) for i, c in enumerate(coeffs)]


def bernoulli_poly_from_egf(n: int, u: Fraction) -> Fraction:
    """B_n(u) from z e^{uz} / (e^z - 1), evaluated at rational u."""
    num = [Fraction(u) ** k / math.factorial(k) for k in range(n + 1)]
    denom = [Fraction(1, math.factorial(k + 1)) for k in range(n + 1)]
    return series_div(num, denom, n)[n] * math.factorial(n)
