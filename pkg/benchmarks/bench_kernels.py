"""Compare the pure-Python and compiled coefficient kernels.

Two levels:

* micro — the raw term-dict kernels (``kadd``/``kmul``) imported side by
  side from both backend modules, on dense two-variable Laurent operands
  of growing size, with results cross-checked for equality; and
* end-to-end — a representative verification workload run in a
  subprocess per backend (``IQSL2_KERNEL=py`` vs ``IQSL2_KERNEL=c``),
  since the backend is chosen once at import time.

Usage: python3 benchmarks/bench_kernels.py [--repeats R] [--skip-e2e]
"""

import argparse
import os
import statistics
import subprocess
import sys
import time

from iqsl2 import _kernel_py

try:
    from iqsl2 import _kernel_cy
except ImportError:
    _kernel_cy = None

MICRO_SIZES = (8, 32, 128, 512)

E2E_SNIPPET = (
    "import time, iqsl2; "
    "from iqsl2.verify import run_suite; "
    "t = time.perf_counter(); "
    "r = run_suite('mult-even', 10); "
    "assert r.passed; "
    "print(iqsl2.KERNEL_BACKEND, round(time.perf_counter() - t, 3))"
)


def dense_operand(size, seed):
    """A dense two-variable term dict with `size` entries."""
    side = max(1, int(size ** 0.5))
    out = {}
    value = seed
    for i in range(-(side // 2), side - side // 2):
        for j in range(side):
            value = (value * 48271 + 11) % 2147483647
            out[(i, j)] = value - 2147483647 // 2
            if len(out) == size:
                return out
    return out


def time_call(fn, a, b, repeats):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(a, b)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def run_micro(repeats):
    print(f"{'op':<6}{'size':>6}{'python':>12}{'cython':>12}{'speedup':>9}")
    for size in MICRO_SIZES:
        a = dense_operand(size, 1)
        b = dense_operand(size, 7)
        for op in ("kadd", "kmul"):
            py_fn = getattr(_kernel_py, op)
            t_py = time_call(py_fn, a, b, repeats)
            if _kernel_cy is None:
                print(f"{op:<6}{size:>6}{t_py * 1e6:>10.1f}us"
                      f"{'-':>12}{'-':>9}")
                continue
            cy_fn = getattr(_kernel_cy, op)
            if py_fn(a, b) != cy_fn(a, b):
                raise AssertionError(
                    f"backends disagree on {op} at size {size}")
            t_cy = time_call(cy_fn, a, b, repeats)
            ratio = t_py / t_cy if t_cy > 0 else float("inf")
            print(f"{op:<6}{size:>6}{t_py * 1e6:>10.1f}us"
                  f"{t_cy * 1e6:>10.1f}us{ratio:>8.2f}x")


def run_e2e():
    print("\nend-to-end: full mult-even suite, bound 10, per backend")
    for choice in ("py", "c"):
        if choice == "c" and _kernel_cy is None:
            print("  c: compiled kernel not built; skipped")
            continue
        env = dict(os.environ, IQSL2_KERNEL=choice)
        proc = subprocess.run(
            [sys.executable, "-c", E2E_SNIPPET],
            env=env, capture_output=True, text=True, check=True,
        )
        backend, seconds = proc.stdout.split()
        print(f"  {backend:<8}{seconds}s")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=9,
                        help="timing repetitions per point (median taken)")
    parser.add_argument("--skip-e2e", action="store_true",
                        help="only run the in-process micro benchmarks")
    args = parser.parse_args(argv)
    if _kernel_cy is None:
        print("note: compiled kernel unavailable, timing python only\n")
    run_micro(args.repeats)
    if not args.skip_e2e:
        run_e2e()
    return 0


if __name__ == "__main__":
    sys.exit(main())
