"""Exit criteria for the package.  Every check is exact; time limits are wall-clock."""
import csv
import io
import math
import random
from fractions import Fraction

from acceptance_log import criterion
from bern.bernoulli import METHODS, NUMBER_ENGINES, POLY_ENGINES, bern_number_determinant, clear_caches
from bern.cli import main
from bern.combinatorics import bell_fractions, bell_partial, binomial, faa_di_bruno
from bern.linalg import determinant, quotient_derivatives
from bern.rational import RationalPolynomial, poly_eval
from bern.series import (
    SeriesPrefix,
    series_reciprocal_determinant,
    series_reciprocal_division,
    toeplitz_inverse_check,
)
from bern.verify import moment_series
from oracles import (
    derivs_to_taylor,
    laplace_det,
    series_compose,
    series_div,
    taylor_to_derivs,
)

F = Fraction
SEED = 20150526


def rand_q(rng, bound=20, den=12):
    return F(rng.randint(-bound, bound), rng.randint(1, den))


def test_table_reproduction():
    expected = {
        0: F(1), 1: F(-1, 2), 2: F(1, 6), 4: F(-1, 30), 6: F(1, 42), 8: F(-1, 30),
        10: F(5, 66), 12: F(-691, 2730), 14: F(7, 6), 16: F(-3617, 510),
    }
    expected.update({n: F(0) for n in range(3, 17, 2)})
    clear_caches()
    with criterion("number table B_0..B_16, all engines", limit_s=1.0):
        for method in METHODS:
            for n, v in expected.items():
                assert NUMBER_ENGINES[method](n) == v, (method, n)


def test_polynomial_reproduction():
    expected = {
        0: [1],
        1: [F(-1, 2), 1],
        2: [F(1, 6), -1, 1],
        3: [0, F(1, 2), F(-3, 2), 1],
        4: [F(-1, 30), 0, 1, -2, 1],
    }
    clear_caches()
    with criterion("polynomials B_0(u)..B_4(u), all engines", limit_s=1.0):
        for method in METHODS:
            for n, cs in expected.items():
                assert POLY_ENGINES[method](n) == RationalPolynomial(cs), (method, n)


def test_cross_method_sweep():
    clear_caches()
    with criterion("cross-method sweep (numbers n<=60, polynomials n<=25)", limit_s=300.0):
        for n in range(0, 61):
            vals = {m: NUMBER_ENGINES[m](n) for m in METHODS}
            assert len(set(vals.values())) == 1, (n, vals)
        for n in range(0, 26):
            polys = [POLY_ENGINES[m](n) for m in METHODS]
            assert polys[0] == polys[1] == polys[2], n


def test_bell_fractions_equivalence():
    with criterion("Bell values at 1/2..1/(n-k+2) vs closed form, k<=n<=12", limit_s=30.0):
        for n in range(1, 13):
            for k in range(1, n + 1):
                args = [F(1, j) for j in range(2, n - k + 3)]
                assert bell_fractions(n, k) == bell_partial(n, k, args), (n, k)


def test_bell_convolution_and_scaling():
    rng = random.Random(SEED)
    with criterion("Bell convolution and scaling identities, k<=n<=9, 5 samples each", limit_s=60.0):
        for _ in range(5):
            x = [rand_q(rng) for _ in range(9)]
            y = [rand_q(rng) for _ in range(9)]
            xy = [a + b for a, b in zip(x, y)]
            for n in range(1, 10):
                for k in range(1, n + 1):
                    rhs = sum(
                        binomial(n, ell) * bell_partial(ell, r, x) * bell_partial(n - ell, k - r, y)
                        for r in range(k + 1)
                        for ell in range(n + 1)
                    )
                    assert bell_partial(n, k, xy) == rhs, ("convolution", n, k)
        for _ in range(5):
            a, b = rand_q(rng), rand_q(rng)
            x = [rand_q(rng) for _ in range(9)]
            scaled = [a * b**i * xi for i, xi in enumerate(x, start=1)]
            for n in range(1, 10):
                for k in range(1, n + 1):
                    assert bell_partial(n, k, scaled) == a**k * b**n * bell_partial(n, k, x), ("scaling", n, k)


def test_reciprocal_oracle_equivalence():
    rng = random.Random(SEED + 1)
    with criterion("series reciprocal: Hessenberg determinant vs long division, 50 series, Toeplitz check"):
        for _ in range(50):
            order = rng.randint(1, 8)
            f = SeriesPrefix([1] + [rand_q(rng) for _ in range(order)])
            g = series_reciprocal_division(f)
            for n in range(1, order + 1):
                assert series_reciprocal_determinant(f, n) == g[n]
            assert toeplitz_inverse_check(f, order)


def test_second_proof_route():
    with criterion("reciprocal route gives B_n(u)/n! at u in {0, 1/2, -1}, n<=15"):
        for u in (F(0), F(1, 2), F(-1)):
            f = moment_series(u, 15)
            g = series_reciprocal_division(f)
            for n in range(1, 16):
                want = {poly_eval(POLY_ENGINES[m](n), u) / math.factorial(n) for m in METHODS}
                assert len(want) == 1
                want = want.pop()
                assert g[n] == want and series_reciprocal_determinant(f, n) == want, (u, n)


def test_faa_and_quotient_examples():
    order = 8
    rng = random.Random(SEED + 2)
    with criterion("Faa di Bruno and quotient-derivative examples (order 8)"):
        fd = [F(i * i - 3, i + 1) for i in range(order + 1)]
        gd_id = [F(5), F(1)] + [F(0)] * (order - 1)
        gd = [F(2 * i - 7, i + 2) for i in range(order + 1)]
        fd_id = [gd[0], F(1)] + [F(0)] * (order - 1)
        ones = [F(1)] * (order + 1)
        exp_minus_one = [F(0)] + [F(1)] * order
        composed = taylor_to_derivs(
            series_compose(derivs_to_taylor(ones), derivs_to_taylor(exp_minus_one), order)
        )
        for n in range(1, order + 1):
            assert faa_di_bruno(fd, gd_id, n) == fd[n]
            assert faa_di_bruno(fd_id, gd, n) == gd[n]
            assert faa_di_bruno(ones, exp_minus_one, n) == composed[n]
        assert composed[3] == 5

        d = [rand_q(rng) for _ in range(order + 1)]
        d[0] = F(3, 2)
        unit = [F(1)] + [F(0)] * order
        for k in range(1, order + 1):
            assert quotient_derivatives(d, d, k) == 0
            assert quotient_derivatives(d, unit, k) == d[k]
        for _ in range(10):
            u = [rand_q(rng, 6, 4) for _ in range(5)] + [F(0)] * 4
            v = [F(rng.choice([-2, -1, 1, 3]))] + [rand_q(rng, 6, 4) for _ in range(4)] + [F(0)] * 4
            q = taylor_to_derivs(series_div(u, v, order))
            for k in range(1, order + 1):
                assert quotient_derivatives(taylor_to_derivs(u), taylor_to_derivs(v), k) == q[k]


def test_determinant_kernel():
    rng = random.Random(SEED + 3)
    with criterion("fraction-free determinant vs cofactor expansion, 100 matrices up to 6x6"):
        for i in range(100):
            n = 1 + i % 6
            rows = [
                [F(0) if rng.random() < 0.2 else rand_q(rng, 30, 15) for _ in range(n)]
                for _ in range(n)
            ]
            assert determinant(rows) == laplace_det(rows)


def test_performance_and_bench():
    clear_caches()
    with criterion("determinant engine B_100 under 60 s", limit_s=60.0):
        assert bern_number_determinant(100) == NUMBER_ENGINES["recurrence"](100)
    with criterion("benchmark CSV well-formed"):
        buf = io.StringIO()
        assert main(["bench", "--max-n", "20", "-r", "3"], stream=buf) == 0
        text = buf.getvalue()
        assert text.splitlines()[0] == "n,method,median_ns,value_bits"
        rows = list(csv.DictReader(io.StringIO(text)))
        assert len(rows) == 60
        seen = set()
        for r in rows:
            n, m = int(r["n"]), r["method"]
            assert 1 <= n <= 20 and m in METHODS
            assert int(r["median_ns"]) >= 0 and int(r["value_bits"]) >= 1
            seen.add((n, m))
        assert len(seen) == 60
