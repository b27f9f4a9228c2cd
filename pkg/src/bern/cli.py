"""``bern`` command line: compute, verify and benchmark.

    bern number <n> [--method recurrence|stirling|determinant|all] [--format text|json]
    bern poly <n> [...]
    bern verify --max-n <N> [--seed <s>]
    bern bench --max-n <N> [-r <reps>]
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import statistics
import sys
import time
from dataclasses import asdict, dataclass
from typing import Sequence, TextIO

from .bernoulli import METHODS, NUMBER_ENGINES, POLY_ENGINES, clear_caches
from .rational import bit_size, format_polynomial, format_rational
from .verify import DEFAULT_SEED, run_all

BENCH_HEADER = ["n", "method", "median_ns", "value_bits"]


@dataclass
class OutputRecord:
    n: int
    kind: str
    method: str
    value: str
    elapsed_ns: int


def _compute(kind: str, n: int, methods: Sequence[str]) -> list[OutputRecord]:
    engines = NUMBER_ENGINES if kind == "number" else POLY_ENGINES
    fmt = format_rational if kind == "number" else format_polynomial
    out = []
    for m in methods:
        t0 = time.perf_counter_ns()
        value = engines[m](n)
        out.append(OutputRecord(n, kind, m, fmt(value), time.perf_counter_ns() - t0))
    return out


def _emit(records: list[OutputRecord], fmt: str, with_verdict: bool, stream: TextIO) -> bool:
    agree = len({r.value for r in records}) == 1
    verdict = "agree" if agree else "disagree"
    if fmt == "json":
        for r in records:
            stream.write(json.dumps(asdict(r), separators=(",", ":")) + "\n")
        if with_verdict:
            stream.write(json.dumps({"n": records[0].n, "kind": records[0].kind, "verdict": verdict}, separators=(",", ":")) + "\n")
    elif with_verdict:
        for r in records:
            stream.write(f"{r.method} {r.value}\n")
        stream.write(verdict + "\n")
    else:
        stream.write(records[0].value + "\n")
    return agree


def cmd_compute(args: argparse.Namespace, stream: TextIO) -> int:
    methods = METHODS if args.method == "all" else (args.method,)
    records = _compute(args.kind, args.n, methods)
    agree = _emit(records, args.format, args.method == "all", stream)
    return 0 if agree else 1


def cmd_verify(args: argparse.Namespace, stream: TextIO) -> int:
    report = run_all(args.max_n, seed=args.seed)
    stream.write(json.dumps(report.to_dict(), indent=2) + "\n")
    return 0 if report.ok else 1


def bench_rows(max_n: int, repetitions: int) -> list[dict]:
    rows = []
    for n in range(1, max_n + 1):
        values = {}
        timings: dict[str, list[int]] = {m: [] for m in METHODS}
        for _ in range(repetitions):
            for m in METHODS:
                clear_caches()
                t0 = time.perf_counter_ns()
                values[m] = NUMBER_ENGINES[m](n)
                timings[m].append(time.perf_counter_ns() - t0)
        if len(set(values.values())) != 1:
            raise AssertionError(f"engines disagree at n={n}: {values}")
        for m in METHODS:
            rows.append(
                {
                    "n": n,
                    "method": m,
                    "median_ns": int(statistics.median(timings[m])),
                    "value_bits": bit_size(values[m]),
                }
            )
    return rows


def cmd_bench(args: argparse.Namespace, stream: TextIO) -> int:
    writer = csv.DictWriter(stream, fieldnames=BENCH_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(bench_rows(args.max_n, args.repetitions))
    return 0


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _default_seed() -> int:
    env = os.environ.get("BERN_SEED")
    return int(env) if env else DEFAULT_SEED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bern", description="Exact Bernoulli numbers and polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    for kind, help_text in (("number", "Bernoulli number B_n"), ("poly", "Bernoulli polynomial B_n(u)")):
        p = sub.add_parser(kind, help=help_text)
        p.add_argument("n", type=_nonnegative_int)
        p.add_argument("--method", choices=METHODS + ("all",), default="recurrence")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=cmd_compute, kind="number" if kind == "number" else "polynomial")

    p = sub.add_parser("verify", help="cross-check engines and identity suites")
    p.add_argument("--max-n", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the three number engines (CSV)")
    p.add_argument("--max-n", type=_positive_int, required=True)
    p.add_argument("-r", "--repetitions", type=_positive_int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None, stream: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = _default_seed()
    return args.func(args, stream or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
