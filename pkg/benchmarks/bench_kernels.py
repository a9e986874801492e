"""Timing comparison of the compiled kernel extension against the pure-Python
fallback. Run as: python3 benchmarks/bench_kernels.py [n]

Both backends produce bit-identical output, so the only difference worth
measuring is speed.
"""

import sys
import time

import numpy as np

from volasym import _kernels_py

try:
    from volasym import _kernels
except ImportError:
    _kernels = None


def _best_of(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(n: int = 200_000) -> None:
    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    z = _kernels_py.fill_normals(42, n)

    cases = [
        ("fill_uint64", lambda m: (lambda: m.fill_uint64(42, n))),
        ("fill_normals", lambda m: (lambda: m.fill_normals(42, n))),
        ("ar1_path", lambda m: (lambda: m.ar1_path(z, 0.5, 0.0))),
        ("gjr_returns",
         lambda m: (lambda: m.gjr_returns(z, 5e-6, 0.05, 0.10, 0.85, 5e-5))),
    ]
    print(f"n = {n}")
    header = "kernel".ljust(14) + "".join(name.rjust(12) for name, _ in backends)
    if len(backends) == 2:
        header += "speedup".rjust(10)
    print(header)
    for case_name, make in cases:
        times = [_best_of(make(mod)) for _, mod in backends]
        line = case_name.ljust(14) + "".join(
            f"{t * 1e3:9.2f} ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            line += f"{times[0] / times[1]:9.1f}x"
        print(line)

    if _kernels is not None:
        a = _kernels.fill_normals(42, n)
        b = _kernels_py.fill_normals(42, n)
        assert np.array_equal(a.view(np.uint64), b.view(np.uint64))
        print("cross-backend output: bit-identical")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 200_000)
