"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both implementations are imported directly, so one process covers both.
Results are checked for agreement before any timing is reported.
"""

import argparse
import timeit

import numpy as np

from qabel import _purepy

try:
    from qabel import _kernels
except ImportError:  # pragma: no cover
    _kernels = None


def cases():
    rng = np.random.default_rng(0)
    c = rng.normal(size=19201)
    f = rng.normal(size=19201) * 0.01
    return [
        ("partition_histograms(45)", lambda m: m.partition_histograms(45)),
        ("mul_poch_range(N=19200, 1..19200)", lambda m: m.mul_poch_range(c, 1, 19200)),
        ("div_poch_range(N=19200, 1..2000)", lambda m: m.div_poch_range(c, 1, 2000)),
        ("descending_product_sum(N=2400)", lambda m: m.descending_product_sum(f[:2401])),
        ("horner(N=19200)", lambda m: m.horner(c, 0.999 + 0.0005j)),
    ]


def same(a, b) -> bool:
    if isinstance(a, dict):
        return a.keys() == b.keys() and all(np.array_equal(a[k], b[k]) for k in a)
    return bool(np.allclose(a, b, rtol=1e-9, atol=1e-9))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        raise SystemExit("compiled extension not built; run pip install -e . --no-build-isolation")
    print(f"{'kernel':36s} {'python ms':>11s} {'cython ms':>11s} {'speedup':>9s}")
    for name, fn in cases():
        if not same(fn(_purepy), fn(_kernels)):
            raise SystemExit(f"{name}: implementations disagree")
        tp = min(timeit.repeat(lambda: fn(_purepy), number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:36s} {tp:11.2f} {tc:11.3f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
