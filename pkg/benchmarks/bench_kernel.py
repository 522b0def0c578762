"""Time the compiled polynomial kernel against the pure-Python fallback.

Both kernels are imported directly (ignoring the DL_PURE switch that
dyerlashof.kernels honors at import time) so one run compares them
side by side and checks that their outputs are identical dicts.

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time

from dyerlashof import _purekernel, kernels
from dyerlashof.arith import Context
from dyerlashof.invariants import dickson_to_borel

try:
    from dyerlashof import _fastkernel
except ImportError:
    _fastkernel = None


def random_poly(rng, nvars, nterms, max_exp, p):
    out = {}
    while len(out) < nterms:
        key = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        out[key] = rng.randint(1, p - 1)
    return out


def workloads(p=3, n=3):
    rng = random.Random(97)
    ctx = Context(p, n)
    out = []
    for nterms in (20, 100, 400):
        a = random_poly(rng, n, nterms, 12, p)
        b = random_poly(rng, n, nterms, 12, p)
        out.append((f"random {nterms}x{nterms} terms, {n} vars", a, b))
    # the shape expand_dickson_monomial produces: powers of a generator
    gen = dickson_to_borel(n - 1, ctx).terms
    acc = dict(gen)
    for _ in range(7):
        acc = _purekernel.poly_mul(acc, gen, p)
    out.append((f"d_{{{n},{n-1}}}^8 * d_{{{n},{n-1}}} at p={p}", acc, gen))
    return out


def time_kernel(fn, a, b, p, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(a, b, p)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    ap.add_argument("--p", type=int, default=3)
    args = ap.parse_args()

    print(f"active kernel in this process: {kernels.IMPL_NAME}")
    print("(set DL_PURE=1 to force the fallback at import time)")
    if _fastkernel is None:
        print("compiled kernel not built; timing the fallback only")
    print()
    header = f"{'workload':<38} {'pure (ms)':>10} {'fast (ms)':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, a, b in workloads(p=args.p):
        t_pure, r_pure = time_kernel(_purekernel.poly_mul, a, b, args.p, args.repeat)
        if _fastkernel is None:
            print(f"{label:<38} {t_pure * 1e3:>10.3f} {'-':>10} {'-':>8}")
            continue
        t_fast, r_fast = time_kernel(_fastkernel.poly_mul, a, b, args.p, args.repeat)
        assert r_pure == r_fast, f"kernels disagree on {label}"
        print(
            f"{label:<38} {t_pure * 1e3:>10.3f} {t_fast * 1e3:>10.3f}"
            f" {t_pure / t_fast:>7.1f}x"
        )
    print()
    print("outputs compared equal on every workload")


if __name__ == "__main__":
    main()
