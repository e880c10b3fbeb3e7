"""Compare the compiled kernels against the pure-Python fallback.

Times the batched measurement kernel and the entropy row kernels on
random inputs of realistic sweep sizes, printing per-kernel medians and
the speedup. Run from a checkout with the extension built:

    python3 benchmarks/bench_kernels.py [--states 4096] [--d 6] [--repeats 7]

The two backends are imported directly (not through the dispatch module)
so both are always exercised regardless of MUMKIT_PURE_PYTHON.
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from mumkit import _kernels_py
from mumkit import build_mums
from mumkit.bounds import sample_states

try:
    from mumkit import _kernels
except ImportError:
    _kernels = None


def _median_time(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--states", type=int, default=4096)
    parser.add_argument("--d", type=int, default=6)
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()

    d, n = args.d, args.states
    mums = build_mums(d, "max")
    ops = np.ascontiguousarray(mums.elements.reshape(-1, d, d))
    rhos = sample_states(d, 0, n, "mixed", seed=0)

    probs = _kernels_py.measure_batch(ops, rhos)
    rows = np.ascontiguousarray(probs.reshape(n * (d + 1), d))

    cases = [
        ("measure_batch", lambda k: k.measure_batch(ops, rhos)),
        ("shannon_rows", lambda k: k.shannon_rows(rows)),
        ("renyi_rows(a=3)", lambda k: k.renyi_rows(rows, 3.0)),
        ("min_entropy_rows", lambda k: k.min_entropy_rows(rows)),
        ("tsallis_rows(a=0.5)", lambda k: k.tsallis_rows(rows, 0.5)),
        ("coincidence_rows", lambda k: k.coincidence_rows(rows)),
    ]

    print(f"d={d} states={n} rows={rows.shape[0]} repeats={args.repeats}")
    if _kernels is None:
        print("compiled extension not importable; timing the fallback only")
    header = f"{'kernel':<20} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, call in cases:
        t_py = _median_time(lambda: call(_kernels_py), args.repeats)
        if _kernels is not None:
            out_py = call(_kernels_py)
            out_cy = call(_kernels)
            worst = float(np.max(np.abs(np.asarray(out_py) - np.asarray(out_cy))))
            if worst > 1e-12:
                raise AssertionError(f"{name}: backends disagree by {worst:.3e}")
            t_cy = _median_time(lambda: call(_kernels), args.repeats)
            print(f"{name:<20} {t_py * 1e3:>12.3f} {t_cy * 1e3:>12.3f} {t_py / t_cy:>7.1f}x")
        else:
            print(f"{name:<20} {t_py * 1e3:>12.3f} {'n/a':>12} {'n/a':>8}")


if __name__ == "__main__":
    main()
