"""Binomials, Stirling numbers of the second kind, partial Bell polynomials.

Boundary conventions used throughout:

* ``binomial(p, q) = 0`` for ``q < 0`` or ``q > p``; ``binomial(0, 0) = 1``.
* ``S(0, 0) = 1``, ``S(n, 0) = 0`` for ``n >= 1``, ``S(n, k) = 0`` for ``k > n``.
* ``B_{0,0} = 1``, ``B_{n,0} = 0`` for ``n >= 1``, ``B_{n,k} = 0`` for ``k > n``.

Sums over ``r + s = k`` and ``l + m = n`` include the zero endpoints.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .rational import Scalar


@lru_cache(maxsize=None)
def binomial(p: int, q: int) -> int:
    if p < 0:
        raise ValueError(f"binomial: negative upper index {p}")
    if q < 0 or q > p:
        return 0
    return math.comb(p, q)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """S(n, k) from the alternating explicit sum, divided exactly by k!."""
    if n < 0 or k < 0:
        raise ValueError(f"stirling2: negative argument ({n}, {k})")
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    total = sum((-1) ** (k - ell) * math.comb(k, ell) * ell**n for ell in range(1, k + 1))
    q, r = divmod(total, math.factorial(k))
    assert r == 0, f"k! does not divide the Stirling sum for ({n}, {k})"
    return q


def clear_caches() -> None:
    binomial.cache_clear()
    stirling2.cache_clear()


def partition_types(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield ``(l_1, ..., l_n)`` with sum i*l_i = n and sum l_i = k.

    Depth-first over ``l_n`` down to ``l_1``; ``l_1`` is forced at the leaf.
    """
    if n == 0:
        if k == 0:
            yield ()
        return
    counts = [0] * (n + 1)

    def rec(i: int, weight_left: int, parts_left: int) -> Iterator[tuple[int, ...]]:
        if i == 1:
            if weight_left == parts_left:
                counts[1] = parts_left
                yield tuple(counts[1:])
                counts[1] = 0
            return
        # each remaining part has size >= 1, so parts of size i use at most
        # (weight_left - parts_left) // (i - 1) slots
        top = min(parts_left, weight_left // i, (weight_left - parts_left) // (i - 1))
        for c in range(top, -1, -1):
            counts[i] = c
            yield from rec(i - 1, weight_left - i * c, parts_left - c)
        counts[i] = 0

    if k > n or k < 0:
        return
    yield from rec(n, n, k)


def partition_weight(ls: Sequence[int]) -> int:
    """n! / (prod l_i! * prod (i!)^l_i) for a partition type vector."""
    n = sum((i + 1) * l for i, l in enumerate(ls))
    den = 1
    for i, l in enumerate(ls, start=1):
        den *= math.factorial(l) * math.factorial(i) ** l
    q, r = divmod(math.factorial(n), den)
    assert r == 0 and q > 0
    return q


def bell_partial(n: int, k: int, xs: Sequence[Scalar]) -> Fraction:
    """Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) by enumeration.

    ``xs[0]`` is ``x_1``.
    """
    if n < 0 or k < 0:
        raise ValueError("bell_partial: negative index")
    if k > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    if k == 0:
        return Fraction(0)
    need = n - k + 1
    if len(xs) < need:
        raise ValueError(f"bell_partial({n}, {k}) needs {need} arguments, got {len(xs)}")
    xs = [Fraction(x) for x in xs[:need]]
    total = Fraction(0)
    for ls in partition_types(n, k):
        term = Fraction(partition_weight(ls))
        for i, l in enumerate(ls[:need]):
            if l:
                term *= xs[i] ** l
        total += term
    return total


def bell_fractions(n: int, k: int) -> Fraction:
    """B_{n,k}(1/2, 1/3, ..., 1/(n-k+2)) through its Stirling-number closed form."""
    if k < 1 or n < k:
        raise ValueError(f"bell_fractions requires n >= k >= 1, got ({n}, {k})")
    return _bell_fractions_sum(n, k)


def _bell_fractions_sum(n: int, k: int) -> Fraction:
    # closed form evaluated as written, without range checks
    s = sum(
        (-1) ** (k - i) * binomial(n + k, k - i) * stirling2(n + i, i)
        for i in range(k + 1)
    )
    return Fraction(math.factorial(n), math.factorial(n + k)) * s


def faa_di_bruno(fd: Sequence[Scalar], gd: Sequence[Scalar], n: int) -> Fraction:
    """n-th derivative of f(g(x)) at x0.

    ``fd[j]`` is f^(j) at g(x0) and ``gd[j]`` is g^(j) at x0.
    """
    if n < 1:
        raise ValueError("faa_di_bruno: n must be >= 1")
    if len(fd) < n + 1 or len(gd) < n + 1:
        raise ValueError(f"faa_di_bruno: need {n + 1} derivatives of f and g")
    inner = list(gd[1 : n + 1])
    return sum(
        (Fraction(fd[k]) * bell_partial(n, k, inner) for k in range(1, n + 1)),
        Fraction(0),
    )
