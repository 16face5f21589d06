"""Timing harness: compiled vs pure-Python kernels, and the two partial-sum routes.

Results are informational only.
"""

from __future__ import annotations

import time

from . import _kernel_py, lucas
from .series import SeriesSpec, partial_sum

FIB_SIZES = (10**3, 10**4, 10**5)
SERIES_CASES = (SeriesSpec("T1"), SeriesSpec("T3", m=1), SeriesSpec("T9", p=2))


def _kernels():
    found = {"python": _kernel_py}
    try:
        from . import _kernel  # type: ignore[attr-defined]

        found["cython"] = _kernel
    except ImportError:
        pass
    return found


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_fib(sizes=FIB_SIZES, repeat: int = 3) -> list[dict]:
    rows = []
    for name, mod in _kernels().items():
        for n in sizes:
            ref = mod.fib_lucas_pair(n)
            if mod.fib_lucas_naive(n) != ref:
                raise AssertionError(f"{name} kernels disagree at n={n}")
            rows.append({
                "kernel": name,
                "n": n,
                "fast_doubling_s": _best(lambda: mod.fib_lucas_pair(n), repeat),
                "naive_s": _best(lambda: mod.fib_lucas_naive(n), repeat),
            })
    return rows


def bench_partial_sums(N: int = 12, cases=SERIES_CASES, repeat: int = 1) -> list[dict]:
    rows = []
    for spec in cases:
        row = {"series": str(spec), "N": N}
        for mode in ("direct", "telescoped"):
            def run():
                lucas.clear_cache()
                partial_sum(spec, N, mode)

            row[f"{mode}_s"] = _best(run, repeat)
        rows.append(row)
    return rows


def run_all(repeat: int = 3) -> dict:
    return {
        "active_kernel": lucas.KERNEL,
        "fib": bench_fib(repeat=repeat),
        "partial_sums": bench_partial_sums(),
    }
