"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs once per backend on identical inputs; the table shows the
best wall time over the repeats and the speedup of the compiled module.
"""

import argparse
import math
import random
import timeit

from curvatura import _pykernels as py

try:
    from curvatura import _ckernels as cy
except ImportError:
    cy = None


def _points(rng, k, n):
    pts = []
    for _ in range(n):
        r, a = rng.uniform(0, 1.2), rng.uniform(-math.pi, math.pi)
        c, s = (math.cos(r), math.sin(r)) if k > 0 else (math.cosh(r), math.sinh(r))
        pts.append((c, s * math.cos(a), s * math.sin(a)))
    return pts


def workloads(mod, k):
    rng = random.Random(1)
    pts = _points(rng, k, 2000)
    pairs = list(zip(pts, pts[1:]))
    tris = [pts[i : i + 3] for i in range(0, 60, 3)]

    def distances():
        for p, q in pairs:
            mod.distance(k, 1.0, p, q)

    def walks():
        for p, q in pairs:
            v = mod.tangent_unit(k, 1.0, p, q)
            mod.exp_point(k, 1.0, p, v, 0.3)

    def quadrature():
        for p, q, r in tris:
            mod.triangle_area_quadrature(k, 1.0, p, q, r)

    return {"distance x2000": distances, "tangent+exp x2000": walks, "area quadrature x20": quadrature}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        raise SystemExit("compiled extension not built; run: pip install --no-build-isolation -e .")
    print(f"{'workload':<28}{'model':<12}{'python ms':>12}{'compiled ms':>14}{'speedup':>10}")
    for k, model in ((1, "sphere"), (-1, "hyperboloid")):
        slow, fast = workloads(py, k), workloads(cy, k)
        for name in slow:
            t_py = min(timeit.repeat(slow[name], number=1, repeat=args.repeat)) * 1e3
            t_cy = min(timeit.repeat(fast[name], number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<28}{model:<12}{t_py:>12.2f}{t_cy:>14.2f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
