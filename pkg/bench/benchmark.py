"""Compare the numba and numpy kernel backends on realistic batch shapes.

Usage: python3 bench/benchmark.py [--batch N] [--n DIM] [--repeat R]
"""

import argparse
import time

import numpy as np

from zclass import ff
from zclass.kernels import _numpy

try:
    from zclass.kernels import _numba
except ImportError:
    _numba = None


def invertible_batch(spec, n, count, seed):
    rng = np.random.default_rng(seed)
    mats = rng.integers(0, spec.order, size=(count * 2, n, n)).astype(np.int16)
    dets = _numpy.mat_det(mats, spec.mul_t, spec.add_t, spec.neg_t)
    mats = mats[dets != 0]
    while len(mats) < count:
        extra = rng.integers(0, spec.order, size=(count, n, n)).astype(np.int16)
        dets = _numpy.mat_det(extra, spec.mul_t, spec.add_t, spec.neg_t)
        mats = np.concatenate([mats, extra[dets != 0]])
    return np.ascontiguousarray(mats[:count])


def bench(label, fn, repeat):
    fn()  # warm-up; also triggers numba compilation
    best = min(timed(fn) for _ in range(repeat))
    print(f"  {label:<14} {best * 1e3:9.2f} ms")
    return best


def timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--batch", type=int, default=25000)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    spec = ff.field_make(3)
    a = invertible_batch(spec, args.n, args.batch, seed=11)
    b = invertible_batch(spec, args.n, args.batch, seed=12)
    g = a[0]
    tabs = (spec.mul_t, spec.add_t)

    impls = [("numpy", _numpy)]
    if _numba is not None:
        impls.append(("numba", _numba))
    else:
        print("numba not installed; benchmarking numpy only")

    results = {}
    for name, impl in impls:
        print(f"{name} backend, batch={args.batch}, n={args.n}:")
        results[name] = {
            "mat_mul": bench("mat_mul", lambda: impl.mat_mul(a, b, *tabs),
                             args.repeat),
            "mat_inv": bench("mat_inv", lambda: impl.mat_inv(
                a, spec.mul_t, spec.add_t, spec.neg_t, spec.inv_t), args.repeat),
            "mat_det": bench("mat_det", lambda: impl.mat_det(
                a, spec.mul_t, spec.add_t, spec.neg_t), args.repeat),
            "commute_mask": bench("commute_mask", lambda: impl.commute_mask(
                a, g, *tabs), args.repeat),
        }

    if len(results) == 2:
        print("speedup (numpy time / numba time):")
        for key in results["numpy"]:
            ratio = results["numpy"][key] / results["numba"][key]
            print(f"  {key:<14} {ratio:6.2f}x")

    for name, impl in impls[1:]:
        same = all(
            np.array_equal(impl.mat_mul(a, b, *tabs),
                           _numpy.mat_mul(a, b, *tabs))
            for _ in range(1))
        print(f"agreement with numpy: {'ok' if same else 'MISMATCH'}")


if __name__ == "__main__":
    main()
