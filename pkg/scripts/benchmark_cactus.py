"""
Time the cactus colorer on chains of triangles to check that it runs in
linear time.

Triangle i sits on vertices 2i, 2i+1, 2i+2, so consecutive triangles share
one vertex and the maximum degree is 4.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from signed_coloring.colorers import color_cactus, decompose_cactus
from signed_coloring.generators import generate_signature, SignatureMode
from signed_coloring.models import Graph, SignedGraph, verify_coloring


def triangle_chain(n: int) -> Graph:
    """Chain of (n - 1) // 2 triangles on n (rounded down to odd) vertices."""
    triangles = max(1, (n - 1) // 2)
    edges = []
    for i in range(triangles):
        a, b, c = 2 * i, 2 * i + 1, 2 * i + 2
        edges.extend(((a, b), (b, c), (a, c)))
    return Graph(2 * triangles + 1, tuple(edges))


def time_coloring(n: int, seed: int, repeats: int) -> float:
    """Best wall time over ``repeats`` runs of decomposition plus coloring."""
    g = triangle_chain(n)
    sg = SignedGraph(g, generate_signature(g, SignatureMode.RANDOM, seed=seed))
    best = float("inf")
    coloring = None
    for _ in range(repeats):
        start = time.perf_counter()
        coloring = color_cactus(sg, decompose_cactus(g))
        best = min(best, time.perf_counter() - start)
    if not verify_coloring(sg, coloring).valid:
        raise RuntimeError(f"invalid coloring on the {n}-vertex chain")
    return best


def main():
    """Main entry point."""
    parser = argparse.ArgumentParser(
        description="Measure cactus colorer scaling on chains of triangles"
    )
    parser.add_argument(
        "--sizes",
        type=int,
        nargs="+",
        default=[1_000, 10_000, 100_000],
        help="Vertex counts, each 10x the previous (default: 1000 10000 100000)"
    )
    parser.add_argument("--seed", type=int, default=0, help="Signature seed (default: 0)")
    parser.add_argument("--repeats", type=int, default=3, help="Runs per size, best is kept (default: 3)")
    parser.add_argument(
        "--band",
        type=float,
        nargs=2,
        default=[6.0, 16.0],
        help="Allowed growth factor per 10x size step (default: 6 16)"
    )
    parser.add_argument(
        "--limit",
        type=float,
        default=2.0,
        help="Maximum seconds for the largest size (default: 2.0)"
    )

    args = parser.parse_args()

    try:
        times = []
        for n in args.sizes:
            seconds = time_coloring(n, args.seed, args.repeats)
            times.append(seconds)
            print(f"n={n:>8}  {seconds:.4f}s")
    except Exception as e:
        print(f"Error during benchmark: {e}")
        return 1

    low, high = args.band
    ok = True
    for (n1, t1), (n2, t2) in zip(zip(args.sizes, times), zip(args.sizes[1:], times[1:])):
        factor = t2 / t1 if t1 > 0 else float("inf")
        inside = low <= factor <= high
        ok = ok and inside
        print(f"{n1} -> {n2}: x{factor:.2f} {'ok' if inside else 'outside band'}")

    if times[-1] > args.limit:
        print(f"Largest size took {times[-1]:.2f}s, limit {args.limit:.2f}s")
        ok = False

    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    exit(main())
