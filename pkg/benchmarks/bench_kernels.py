"""Compare the compiled and pure-Python kernels on representative inputs.

Run with ``python3 benchmarks/bench_kernels.py``.  Each kernel is timed on
both backends and the outputs are checked to be identical.
"""

from __future__ import annotations

import argparse
import random
import time

from multalg import kernels


def _rref_input(rng, nrows, ncols, p, density):
    return [[rng.randrange(p) if rng.random() < density else 0 for _ in range(ncols)] for _ in range(nrows)]


def _timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if "cython" not in kernels.BACKENDS:
        print("compiled extension not built; only the Python backend is available")
        return 1
    rng = random.Random(args.seed)
    cases = [
        ("rref_modp 80x160 GF(2) sparse", "rref_modp", (_rref_input(rng, 80, 160, 2, 0.1), 160, 2)),
        ("rref_modp 120x120 GF(7) dense", "rref_modp", (_rref_input(rng, 120, 120, 7, 0.9), 120, 7)),
        ("match_pairs 2000x2000", "match_pairs",
         ([rng.randrange(500) for _ in range(2000)], [rng.randrange(500) for _ in range(2000)])),
    ]
    print(f"{'case':36} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, name, inputs in cases:
        times, results = {}, {}
        for backend in ("python", "cython"):
            fn = getattr(kernels.BACKENDS[backend], name)
            times[backend], results[backend] = _timed(lambda: fn(*inputs), args.repeat)
        if results["python"] != results["cython"]:
            raise SystemExit(f"{label}: backends disagree")
        print(f"{label:36} {times['python']:10.4f} {times['cython']:10.4f} {times['python'] / times['cython']:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
