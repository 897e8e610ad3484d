"""Time the compiled F_p kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--sizes 16 64 144] [--prime 3] [--repeat 5]

Both backends are imported directly, so the comparison does not depend on
COENDKIT_PURE_PYTHON. Results are also cross-checked for equality.
"""
import argparse
import timeit

import numpy as np

from coendkit.linalg import _fallback

try:
    from coendkit.linalg import _ckernels
except ImportError:
    _ckernels = None


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 64, 144, 256])
    ap.add_argument("--prime", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run `python3 setup.py build_ext --inplace` first")
        return 1
    rng = np.random.default_rng(args.seed)
    p = args.prime
    print(f"p = {p}, best of {args.repeat}")
    print(f"{'kernel':<8}{'n':>6}{'cython s':>12}{'python s':>12}{'ratio':>8}")
    for n in args.sizes:
        # sparse-ish like structure maps: most entries zero
        a = rng.integers(0, p, (n, n)) * (rng.random((n, n)) < 0.3)
        b = rng.integers(0, p, (n, n)) * (rng.random((n, n)) < 0.3)
        assert np.array_equal(_ckernels.matmul_mod(a, b, p), _fallback.matmul_mod(a, b, p))
        rc, pc = _ckernels.rref_mod(a, p)
        rf, pf = _fallback.rref_mod(a, p)
        assert np.array_equal(rc, rf) and tuple(pc) == tuple(pf)
        for name, fc, ff in [("matmul", lambda: _ckernels.matmul_mod(a, b, p), lambda: _fallback.matmul_mod(a, b, p)),
                             ("rref", lambda: _ckernels.rref_mod(a, p), lambda: _fallback.rref_mod(a, p))]:
            tc, tf = _best(fc, args.repeat), _best(ff, args.repeat)
            print(f"{name:<8}{n:>6}{tc:>12.5f}{tf:>12.5f}{tf / tc:>8.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
