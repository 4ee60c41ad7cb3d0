"""Time the numba and numpy kernels on basic builds of random presentations.

    python benchmarks/bench_kernels.py [--sizes 10 20 40 80] [--repeat 5]
"""
import argparse
import random
import time

import numpy as np

from knotforge import _kernels
from knotforge.grid import Arc, ArcPresentation
from knotforge.lattice import build_basic
from knotforge.verify import shear_scale


def random_presentation(rng, n):
    order = list(range(1, n + 1))
    pages = list(range(1, n + 1))
    rng.shuffle(order)
    rng.shuffle(pages)
    arcs = []
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        arcs.append(Arc(pages[i], min(a, b), max(a, b)))
    return ArcPresentation(tuple(arcs))


def inputs(n, rng):
    k = build_basic(random_presentation(rng, n)).translated_to_origin()
    segs = k.segments()
    lo = np.array([[min(p[a], q[a]) for a in range(3)] for p, q in segs], dtype=np.int64)
    hi = np.array([[max(p[a], q[a]) for a in range(3)] for p, q in segs], dtype=np.int64)
    s = shear_scale(k)
    pts = [(x * s * s + z * s, y * s * s + z) for x, y, z in k.vertices]
    p = np.array(pts, dtype=object)
    q = np.roll(p, -1, axis=0)
    return lo, hi, p, q


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 30, 60, 120])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = random.Random(0)
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    # compile once outside the timings
    lo, hi, p, q = inputs(6, rng)
    for b in backends:
        _kernels.box_overlap_pairs(lo, hi, backend=b)
        _kernels.segment_pair_classes(p, q, backend=b)

    print(f"{'arcs':>5} {'sticks':>7} {'kernel':<9} " + " ".join(f"{b:>10}" for b in backends) + "  speedup")
    for n in args.sizes:
        lo, hi, p, q = inputs(n, rng)
        exact_path = "int64" if np.abs(p.astype(float)).max() < _kernels.INT64_SAFE_COORD else "object"
        for name, call in (
            ("boxes", lambda b: _kernels.box_overlap_pairs(lo, hi, backend=b)),
            (f"segs/{exact_path}", lambda b: _kernels.segment_pair_classes(p, q, backend=b)),
        ):
            t = {b: best_of(lambda: call(b), args.repeat) for b in backends}
            ref = call("numpy").tolist()
            assert all(call(b).tolist() == ref for b in backends)
            speed = f"{t['numpy'] / t['numba']:.1f}x" if "numba" in t else "-"
            cells = " ".join(f"{t[b] * 1e3:>8.3f}ms" for b in backends)
            print(f"{n:>5} {len(lo):>7} {name:<9} {cells}  {speed}")


if __name__ == "__main__":
    main()
