"""Benchmark: compiled kernels vs the pure numpy fallback.

Usage:  python benchmarks/bench_kernels.py

Times the two hot kernels behind the scattering amplitude (the
oscillatory triple-integral reduction) and the grid evaluation of the
orthogonal polynomials, for both backends, and prints the speedup.
"""

import time

import numpy as np

from nckepler.kernels import _pure

try:
    from nckepler.kernels import _fast
except ImportError:
    _fast = None


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def rows():
    x = np.linspace(-0.999, 0.999, 200_000)
    u = np.linspace(0.0, 80.0, 200_000)
    cases = [
        ("jacobi n=24, 2e5 pts", lambda b: b.jacobi_values(24, 3.0, 1.0, x)),
        ("laguerre n=16, 2e5 pts", lambda b: b.laguerre_values(16, 6.0, u)),
        ("oscillatory sum 64^3", lambda b: b.oscillatory_power_sum(
            0.21, 0.33, 0.18, 1.0, 1, 1, 1, 64)),
        ("oscillatory sum 128^3", lambda b: b.oscillatory_power_sum(
            0.21, 0.33, 0.18, 1.0, 1, 1, 1, 128)),
        ("oscillatory sum 256^3", lambda b: b.oscillatory_power_sum(
            0.21, 0.33, 0.18, 1.0, 1, 1, 1, 256)),
    ]
    for name, call in cases:
        t_pure, r_pure = best_of(lambda: call(_pure))
        if _fast is None:
            yield name, t_pure, None, None, 0.0
            continue
        t_fast, r_fast = best_of(lambda: call(_fast))
        r_pure = np.asarray(r_pure, dtype=complex).ravel()
        r_fast = np.asarray(r_fast, dtype=complex).ravel()
        drift = float(np.max(np.abs(r_pure - r_fast) / np.maximum(1.0, np.abs(r_pure))))
        yield name, t_pure, t_fast, t_pure / t_fast, drift


def main():
    if _fast is None:
        print("compiled backend not available; timing the pure backend only")
    print(f"{'kernel':<26}{'pure [ms]':>12}{'compiled [ms]':>15}{'speedup':>9}{'max drift':>12}")
    for name, t_pure, t_fast, speedup, drift in rows():
        if t_fast is None:
            print(f"{name:<26}{1e3 * t_pure:>12.2f}{'-':>15}{'-':>9}{'-':>12}")
        else:
            print(f"{name:<26}{1e3 * t_pure:>12.2f}{1e3 * t_fast:>15.2f}"
                  f"{speedup:>9.2f}{drift:>12.2e}")


if __name__ == "__main__":
    main()
