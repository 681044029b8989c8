"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--log2 24] [--repeat 3]

Times the direct pseudo-Gamma factor sum at N = 2^log2 factors and the
inner binomial sum of the zeta series, for every available backend, and
reports the largest disagreement between backends.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from pseudogamma import kernels
from pseudogamma.pseudo_gamma import toy_params


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = math.inf, None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--log2", type=int, default=24, help="log2 of the number of factors")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--hasse-n", type=int, default=400)
    args = ap.parse_args(argv)

    p = toy_params(100.0, args.log2 - 1)
    z = complex(1.2, 0.7)
    k = np.arange(1, args.hasse_n + 2, dtype=float)
    powers = np.exp(-complex(0.5, 14.0) * np.log(k))
    pr, pi = np.ascontiguousarray(powers.real), np.ascontiguousarray(powers.imag)

    results = {}
    print(f"direct factor sum, N = 2^{args.log2}; zeta inner sum, n = {args.hasse_n}")
    print(f"{'backend':8s} {'direct [s]':>11s} {'inner [ms]':>11s}")
    for name in kernels.available_backends():
        mod = kernels.backend(name)
        t_direct, direct = best_of(lambda: mod.direct_log_sum(z.real, z.imag, p.d, p.w2, args.log2), args.repeat)
        t_inner, inner = best_of(lambda: mod.hasse_inner(pr, pi, args.hasse_n), max(args.repeat, 20))
        results[name] = (direct, inner)
        print(f"{name:8s} {t_direct:11.3f} {1e3 * t_inner:11.3f}")
    if len(results) == 2:
        (d1, i1), (d2, i2) = results["cython"], results["python"]
        print(f"direct sum difference: {abs(complex(*d1) - complex(*d2)):.3g} (value {complex(*d1):.6g})")
        print(f"inner sum difference:  {abs(i1 - i2):.3g} (value {abs(i1):.3g})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
