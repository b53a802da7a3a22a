"""Compare the compiled and pure-Python kernels on the fan workloads.

Run with ``python benchmarks/bench_kernels.py [--depth 8]``.
"""

import argparse
import time

from markov_gfan import kernels
from markov_gfan.exchange import SignPattern
from markov_gfan.gfan import all_complements, enumerate_fan, subtree_nodes
from markov_gfan.pattern import seed
from markov_gfan.walk import initial_kst


def _time(fn, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--depth", type=int, default=8)
    args = parser.parse_args()
    if not kernels.compiled_available():
        print("compiled kernels are not built; only the Python backend is available")
    backends = ["python"] + (["c"] if kernels.compiled_available() else [])

    pattern = SignPattern.CYCLIC_A
    st = seed(pattern, 1)
    c0 = tuple(x for v in st.c_roles for x in v)
    g0 = tuple(x for v in st.g_roles for x in v)
    tris = [c.planar() for c in enumerate_fan(pattern, args.depth)]
    rays = [r.planar() for r in all_complements(pattern, args.depth)]
    subtree_nodes(pattern, 1, args.depth)  # warm caches outside the timings

    workloads = {
        f"expand_tree({args.depth + 3} levels)": lambda b: kernels.expand_tree(
            c0, g0, initial_kst(pattern, 1), True, args.depth + 3, b
        ),
        f"triangle_pairs({len(tris)} triangles)": lambda b: kernels.triangle_pairs(tris, b),
        f"rays_vs_triangles({len(rays)} x {len(tris)})": lambda b: kernels.rays_vs_triangles(rays, tris, b),
    }
    print(f"{'workload':45s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup")
    for name, fn in workloads.items():
        times, outs = [], []
        for b in backends:
            t, out = _time(lambda: fn(b))
            times.append(t)
            outs.append(out)
        if len(outs) == 2 and outs[0] != outs[1]:
            raise SystemExit(f"backends disagree on {name}")
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{name:45s} " + " ".join(f"{t * 1000:8.1f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
