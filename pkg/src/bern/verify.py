"""Executable identity suites behind ``bern verify``.

Each suite counts passing and failing cases and keeps the first
counterexample.  Random inputs come from a seeded :class:`random.Random`.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .bernoulli import bern_poly_recurrence, verify_all
from .combinatorics import bell_fractions, bell_partial, binomial, stirling2
from .rational import format_rational, poly_eval
from .series import (
    SeriesPrefix,
    series_reciprocal_determinant,
    series_reciprocal_division,
    toeplitz_inverse_check,
)

DEFAULT_SEED = 20150526


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: dict | None = None

    def record(self, ok: bool, **case) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = {k: _jsonable(v) for k, v in case.items()}

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "passed": self.passed,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def random_rational(rng: random.Random, bound: int = 20, max_den: int = 12) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_sequence(rng: random.Random, length: int) -> list[Fraction]:
    return [random_rational(rng) for _ in range(length)]


def random_series(rng: random.Random, order: int) -> SeriesPrefix:
    return SeriesPrefix([1] + random_sequence(rng, order))


def stirling_recurrence_suite(max_n: int = 25) -> SuiteResult:
    res = SuiteResult("stirling_recurrence")
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            lhs = stirling2(n, k)
            rhs = k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
            res.record(lhs == rhs, n=n, k=k, lhs=lhs, rhs=rhs)
    return res


def bell_convolution_holds(n: int, k: int, x: list[Fraction], y: list[Fraction]) -> tuple[Fraction, Fraction]:
    """Both sides of B_{n,k}(x+y) = sum C(n,l) B_{l,r}(x) B_{m,s}(y)."""
    lhs = bell_partial(n, k, [a + b for a, b in zip(x, y)])
    rhs = Fraction(0)
    for r in range(k + 1):
        for ell in range(n + 1):
            rhs += binomial(n, ell) * bell_partial(ell, r, x) * bell_partial(n - ell, k - r, y)
    return lhs, rhs


def bell_convolution_suite(rng: random.Random, max_n: int = 9, samples: int = 5) -> SuiteResult:
    res = SuiteResult("bell_convolution")
    for _ in range(samples):
        x = random_sequence(rng, max_n)
        y = random_sequence(rng, max_n)
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                lhs, rhs = bell_convolution_holds(n, k, x, y)
                res.record(lhs == rhs, n=n, k=k, x=x, y=y, lhs=lhs, rhs=rhs)
    return res


def bell_scaling_suite(rng: random.Random, max_n: int = 9, samples: int = 5) -> SuiteResult:
    res = SuiteResult("bell_scaling")
    for _ in range(samples):
        a = random_rational(rng)
        b = random_rational(rng)
        x = random_sequence(rng, max_n)
        scaled = [a * b**i * xi for i, xi in enumerate(x, start=1)]
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                lhs = bell_partial(n, k, scaled)
                rhs = a**k * b**n * bell_partial(n, k, x)
                res.record(lhs == rhs, n=n, k=k, a=a, b=b, x=x, lhs=lhs, rhs=rhs)
    return res


def bell_fractions_suite(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("bell_fractions")
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            args = [Fraction(1, i + 1) for i in range(1, n - k + 2)]
            lhs = bell_fractions(n, k)
            rhs = bell_partial(n, k, args)
            res.record(lhs == rhs, n=n, k=k, closed_form=lhs, enumeration=rhs)
    return res


def series_reciprocal_suite(rng: random.Random, samples: int = 50, max_order: int = 8) -> SuiteResult:
    res = SuiteResult("series_reciprocal")
    for _ in range(samples):
        order = rng.randint(1, max_order)
        f = random_series(rng, order)
        g = series_reciprocal_division(f)
        for n in range(1, order + 1):
            d = series_reciprocal_determinant(f, n)
            res.record(d == g[n], f=list(f.coeffs), n=n, determinant=d, division=g[n])
        res.record(toeplitz_inverse_check(f, order), f=list(f.coeffs), check="toeplitz")
    return res


def moment_series(u: Fraction, order: int) -> SeriesPrefix:
    """Coefficients of ((e^{(1-u)t} - e^{-ut}) / t): a_n = ((1-u)^{n+1} - (-u)^{n+1}) / (n+1)!."""
    return SeriesPrefix(
        [((1 - u) ** (n + 1) - (-u) ** (n + 1)) / math.factorial(n + 1) for n in range(order + 1)]
    )


def second_proof_suite(max_n: int = 15, points: tuple[Fraction, ...] = (Fraction(0), Fraction(1, 2), Fraction(-1))) -> SuiteResult:
    res = SuiteResult("reciprocal_route")
    for u in points:
        f = moment_series(u, max_n)
        g = series_reciprocal_division(f)
        for n in range(1, max_n + 1):
            want = poly_eval(bern_poly_recurrence(n), u) / math.factorial(n)
            by_det = series_reciprocal_determinant(f, n)
            res.record(g[n] == want and by_det == want, u=u, n=n, division=g[n], determinant=by_det, expected=want)
    return res


@dataclass
class FullReport:
    seed: int
    max_n: int
    engines: dict
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.engines["ok"] and all(s.ok for s in self.suites)

    def first_failure(self) -> dict | None:
        if not self.engines["ok"]:
            return {"suite": "engines", **self.engines["divergence"]}
        for s in self.suites:
            if not s.ok:
                return {"suite": s.name, **s.counterexample}
        return None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "seed": self.seed,
            "max_n": self.max_n,
            "engines": self.engines,
            "suites": [s.to_dict() for s in self.suites],
            "first_failure": self.first_failure(),
        }


def run_all(max_n: int, seed: int = DEFAULT_SEED) -> FullReport:
    rng = random.Random(seed)
    engines = verify_all(max_n).to_dict()
    suites: list[Callable[[], SuiteResult]] = [
        lambda: stirling_recurrence_suite(),
        lambda: bell_convolution_suite(rng),
        lambda: bell_scaling_suite(rng),
        lambda: bell_fractions_suite(),
        lambda: series_reciprocal_suite(rng),
        lambda: second_proof_suite(),
    ]
    return FullReport(seed=seed, max_n=max_n, engines=engines, suites=[s() for s in suites])
