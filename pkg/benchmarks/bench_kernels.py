"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from cyclo2adic import _fallback, build_partition, generate, make_params
from cyclo2adic.circulant import word_primes

try:
    from cyclo2adic import _core
except ImportError:
    _core = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--pairs", default="5:7,13:11,17:19")
    args = ap.parse_args()
    prime = word_primes(1)[0]
    backends = [("python", _fallback)] + ([("compiled", _core)] if _core else [])
    print(f"{'kernel':<22}{'N':>6}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for item in args.pairs.split(","):
        p, q = map(int, item.split(":"))
        bits = generate(build_partition(make_params(p, q))).bits
        for label, call in (
            ("det_mod_prime", lambda mod: mod.det_mod_prime(bits, prime)),
            ("berlekamp_massey", lambda mod: mod.berlekamp_massey(bits + bits)),
        ):
            results = [best_of(lambda: call(mod), args.repeat) for _, mod in backends]
            speedup = f"{results[0] / results[-1]:.1f}x" if len(results) > 1 else "-"
            print(f"{label:<22}{len(bits):>6}" + "".join(f"{t * 1e3:>10.2f}ms" for t in results) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
