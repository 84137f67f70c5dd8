#!/usr/bin/env python3
"""Compare the compiled GF(q) kernel against the pure-Python fallback.

Times the row-reduction microkernel and two oracle macro-benchmarks under
each backend and prints per-backend timings with the speedup.  Run from a
checkout with the extension built:

    python benchmarks/bench_backends.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time

from splitcount import _backend, oracle
from splitcount.fields import FieldSpec, find_irreducible
from splitcount.labels import iter_chain_labels
from splitcount.oracle import count_flag_tuple, count_splitting


def bench_rref(repeat: int) -> float:
    field = FieldSpec(3)
    add, mul, neg, inv = field.tables
    rng = random.Random(42)
    mats = [
        bytes(rng.randrange(3) for _ in range(8 * 12)) for _ in range(2000)
    ]
    kern = _backend.active()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in mats:
            kern.rref_in_place(bytearray(m), 8, 12, add, mul, neg, inv, 3)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_splitting(repeat: int) -> float:
    field = FieldSpec(2)
    f = find_irreducible(field, 6)
    best = float("inf")
    for _ in range(repeat):
        oracle._CONTEXTS.clear()
        t0 = time.perf_counter()
        got = count_splitting(field, f, 2, 3).count
        assert got == 336
        best = min(best, time.perf_counter() - t0)
    return best


def bench_flag_sweep(repeat: int) -> float:
    field = FieldSpec(3)
    f = find_irreducible(field, 4)
    best = float("inf")
    for _ in range(repeat):
        oracle._CONTEXTS.clear()
        t0 = time.perf_counter()
        for label in iter_chain_labels(4):
            count_flag_tuple(field, f, label)
        best = min(best, time.perf_counter() - t0)
    return best


BENCHES = [
    ("rref 8x12 over F_3 (x2000)", bench_rref),
    ("splitting count q=2, m=2, n=3", bench_splitting),
    ("flag-count sweep q=3, N=4", bench_flag_sweep),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args()

    backends = _backend.available()
    if "compiled" not in backends:
        print("compiled kernel not built; benchmarking pure backend only")
    results: dict[str, dict[str, float]] = {}
    original = _backend.name()
    try:
        for name in backends:
            _backend.use(name)
            for label, fn in BENCHES:
                results.setdefault(label, {})[name] = fn(args.repeat)
    finally:
        _backend.use(original)
        oracle._CONTEXTS.clear()

    width = max(len(label) for label, _ in BENCHES)
    header = f"{'benchmark':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, _ in BENCHES:
        row = f"{label:<{width}}  "
        for b in backends:
            row += f"{results[label][b] * 1000:>10.1f}ms"
        if len(backends) == 2:
            row += f"{results[label]['pure'] / results[label]['compiled']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
