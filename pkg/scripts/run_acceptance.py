"""
Desk-scale acceptance sweeps for the signed coloring library.

Each check prints one PASS/FAIL line with a short count; the script exits
non-zero if any check fails. ``--quick`` shrinks every corpus for a smoke
run. The cactus timing check lives in benchmark_cactus.py.
"""

import argparse
from fractions import Fraction
import logging
import sys
import time
from pathlib import Path
from typing import Callable

sys.path.insert(0, str(Path(__file__).parent.parent))

import networkx as nx
import numpy as np

from signed_coloring.classify import (
    ClassVerdict,
    brute_force_matching_reduces,
    class_ratio,
    covering_matching,
    is_class_2pm_structural,
    probe_conjecture,
    signed_class,
)
from signed_coloring.colorers import (
    bipartite_paths,
    color_cactus,
    color_complete_bipartite,
    color_necklace,
    color_wheel,
    decompose_cactus,
    recognize_complete_bipartite,
)
from signed_coloring.exact import exact_chromatic_index, extract_decomposition, verify_regular_decomposition
from signed_coloring.generators import (
    Family,
    FamilySpec,
    generate,
    generate_class2pm,
    random_cactus,
    random_signatures,
)
from signed_coloring.models import Graph, SignedGraph, Signature, max_degree, negate_at, verify_coloring
from signed_coloring.switching import (
    SwitchSet,
    all_signatures,
    is_balanced,
    switch,
    switching_class_representatives,
)

logger = logging.getLogger("acceptance")


def corpus(count: int, max_vertices: int, seed: int) -> list[Graph]:
    """Seeded G(n, 1/2) graphs with at least one edge."""
    out = []
    i = 0
    while len(out) < count:
        n = 2 + i % (max_vertices - 1)
        nxg = nx.gnp_random_graph(n, 0.5, seed=seed + i)
        i += 1
        if nxg.number_of_edges():
            edges = sorted((min(u, v), max(u, v)) for u, v in nxg.edges())
            out.append(Graph(n, tuple(edges)))
    return out


def signatures_for(g: Graph, count: int, seed: int, exhaustive_edges: int = 12):
    if g.edge_count <= exhaustive_edges:
        return list(all_signatures(g))
    return list(random_signatures(g, count, seed))


def check_colorer(g: Graph, colorer: Callable[[SignedGraph], object], signatures) -> tuple[int, int]:
    """(checked, failures): colorings must be valid and use Δ colors."""
    delta = max_degree(g)
    failures = 0
    for s in signatures:
        sg = SignedGraph(g, s)
        c = colorer(sg)
        if c.n != delta or not verify_coloring(sg, c).valid:
            failures += 1
    return len(signatures), failures


# -------------------------------------------------------------------
# Checks
# -------------------------------------------------------------------

def ac_behr(args) -> tuple[bool, str]:
    checked = bad = 0
    for g in corpus(args.corpus, 6, args.seed):
        delta = max_degree(g)
        for s in switching_class_representatives(g):
            chi = exact_chromatic_index(SignedGraph(g, s)).chi
            checked += 1
            bad += not delta <= chi <= delta + 1
    return bad == 0, f"{checked} class representatives, {bad} outside [Δ, Δ+1]"


def ac_cycles(args) -> tuple[bool, str]:
    checked = bad = 0
    for n in range(3, 8):
        g = Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
        for s in all_signatures(g):
            sg = SignedGraph(g, s)
            checked += 1
            bad += exact_chromatic_index(sg).chi != (2 if is_balanced(sg) else 3)
    return bad == 0, f"{checked} signed cycles, {bad} mismatches"


def ac_cacti(args) -> tuple[bool, str]:
    checked = bad = graphs = 0
    seed = args.seed
    while graphs < args.cacti:
        seed += 1
        g = random_cactus(int(np.random.default_rng(seed).integers(8, 31)), seed)
        if max_degree(g) < 3:
            continue
        graphs += 1
        decomposition = decompose_cactus(g)
        n, f = check_colorer(g, lambda sg: color_cactus(sg, decomposition), signatures_for(g, 20, seed))
        checked, bad = checked + n, bad + f
    return bad == 0, f"{graphs} cacti, {checked} signatures, {bad} failures"


def ac_wheels(args) -> tuple[bool, str]:
    w4 = generate(FamilySpec(Family.WHEEL, sizes=(4,))).graph
    checked = bad = 0
    for s in all_signatures(w4):
        sg = SignedGraph(w4, s)
        c = color_wheel(sg, 0)
        checked += 1
        bad += c.n != exact_chromatic_index(sg).chi or not verify_coloring(sg, c).valid
    for n in range(5, 10):
        g = generate(FamilySpec(Family.WHEEL, sizes=(n,))).graph
        k, f = check_colorer(g, lambda sg: color_wheel(sg, 0), list(random_signatures(g, args.samples, args.seed + n)))
        checked, bad = checked + k, bad + f
    return bad == 0, f"{checked} signed wheels, {bad} failures"


def ac_necklaces(args) -> tuple[bool, str]:
    checked = bad = 0
    vectors = []
    for k in range(3, 7):
        vectors.append((1,) + tuple(2 + (i % 3) for i in range(k - 1)))
        vectors.append(tuple(2 + (i % 3) for i in range(k)))
    for lengths in vectors:
        g = generate(FamilySpec(Family.NECKLACE, lengths=lengths)).graph
        n, f = check_colorer(g, lambda sg: color_necklace(sg, (0, 1)), signatures_for(g, args.samples, args.seed))
        checked, bad = checked + n, bad + f
    return bad == 0, f"{len(vectors)} necklaces, {checked} signatures, {bad} failures"


def ac_bipartite(args) -> tuple[bool, str]:
    checked = bad = 0
    for r, t in ((1, 2), (2, 3), (3, 4), (2, 5), (3, 5), (4, 5)):
        g = generate(FamilySpec(Family.COMPLETE_BIPARTITE, sizes=(r, t))).graph
        paths, matching = bipartite_paths(recognize_complete_bipartite(g))
        covered = [g.edge_id(a, b) for p in paths for a, b in zip(p, p[1:])]
        covered += [g.edge_id(a, b) for a, b in matching]
        if sorted(covered) != list(range(g.edge_count)):
            bad += 1
        n, f = check_colorer(g, color_complete_bipartite, signatures_for(g, args.samples, args.seed))
        checked, bad = checked + n, bad + f
    return bad == 0, f"{checked} signed K_r,t, {bad} failures"


def ac_class2pm(args) -> tuple[bool, str]:
    report = signed_class(generate_class2pm(1).graph, jobs=args.jobs)
    structural = all(is_class_2pm_structural(generate_class2pm(k).graph) for k in (1, 2, 3))
    ok = report.verdict == ClassVerdict.CLASS_2PM and report.total_classes == 64 and structural
    return ok, f"{report.classes_at_delta}/{report.total_classes} classes at Δ, structural={structural}"


def ac_switching(args) -> tuple[bool, str]:
    rng = np.random.default_rng(args.seed)
    graphs = corpus(args.corpus, 6, args.seed)
    bad = 0
    for trial in range(args.triples):
        g = graphs[trial % len(graphs)]
        sg = SignedGraph(g, next(random_signatures(g, 1, args.seed + trial)))
        s = SwitchSet.of(int(v) for v in np.flatnonzero(rng.integers(0, 2, size=g.vertex_count)))
        result = exact_chromatic_index(sg)
        switched = switch(sg, s)
        moved = negate_at(result.witness, s.vertices)
        bad += exact_chromatic_index(switched).chi != result.chi or not verify_coloring(switched, moved).valid
    return bad == 0, f"{args.triples} triples, {bad} failures"


def ac_even_delta(args) -> tuple[bool, str]:
    checked = bad = 0
    for g in corpus(args.corpus, 6, args.seed):
        delta = max_degree(g)
        if delta % 2:
            continue
        checked += 1
        bad += exact_chromatic_index(SignedGraph(g, Signature.all_positive(g.edge_count))).chi != delta
    return bad == 0, f"{checked} even-Δ graphs, {bad} above Δ"


def ac_decomposition(args) -> tuple[bool, str]:
    regular = {
        "C6": nx.cycle_graph(6),
        "K4": nx.complete_graph(4),
        "K3,3": nx.complete_bipartite_graph(3, 3),
        "Q3": nx.hypercube_graph(3),
        "K5": nx.complete_graph(5),
    }
    checked = bad = flagged = 0
    for nxg in regular.values():
        nxg = nx.convert_node_labels_to_integers(nxg)
        g = Graph(nxg.number_of_nodes(), tuple(sorted((min(u, v), max(u, v)) for u, v in nxg.edges())))
        delta = max_degree(g)
        for s in switching_class_representatives(g):
            sg = SignedGraph(g, s)
            result = exact_chromatic_index(sg)
            if result.chi != delta:
                continue
            check = verify_regular_decomposition(sg, extract_decomposition(sg, result.witness))
            checked += 1
            flagged += check.small_degree
            bad += not check.valid
    return bad == 0, f"{checked} Δ-colorable regular signatures, {bad} rejected, {flagged} checked at k <= 3"


def ac_structural(args) -> tuple[bool, str]:
    checked = matched = 0
    for g in corpus(args.corpus // 2, 7, args.seed + 1000):
        if g.edge_count > 14:
            continue
        signed_class(g, jobs=args.jobs)
        checked += 1
        matched += brute_force_matching_reduces(g) == (covering_matching(g) is not None)
    return matched == checked, f"{checked} graphs, {checked - matched} matching disagreements"


def ac_ratio(args) -> tuple[bool, str]:
    checked = bad = 0
    for g in corpus(args.corpus, 6, args.seed):
        if g.edge_count > 10:
            continue
        checked += 1
        bad += class_ratio(g, jobs=args.jobs).ratio != class_ratio(g, naive=True, jobs=args.jobs).ratio
    c4 = class_ratio(Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))).ratio
    tree = class_ratio(Graph(4, ((0, 1), (1, 2), (1, 3)))).ratio
    ok = bad == 0 and c4 == Fraction(1, 2) and tree == 1
    return ok, f"{checked} graphs, {bad} mismatches, C4={c4}, tree={tree}"


def ac_probe(args) -> tuple[bool, str]:
    r2 = probe_conjecture(2, jobs=args.jobs)
    r3 = probe_conjecture(3, jobs=args.jobs)
    ok = not r2.proven_direction_violations and not r3.proven_direction_violations and r2.exhaustive
    return ok, (
        f"r=2 {r2.confirmed}/{r2.predicted_delta} confirmed; "
        f"r=3 {r3.confirmed}/{r3.predicted_delta} confirmed, {len(r3.counterexamples)} open-direction failures"
    )


CHECKS: dict[str, Callable] = {
    "behr": ac_behr,
    "cycles": ac_cycles,
    "cacti": ac_cacti,
    "wheels": ac_wheels,
    "necklaces": ac_necklaces,
    "bipartite": ac_bipartite,
    "class2pm": ac_class2pm,
    "switching": ac_switching,
    "even-delta": ac_even_delta,
    "decomposition": ac_decomposition,
    "structural": ac_structural,
    "ratio": ac_ratio,
    "probe": ac_probe,
}


def main():
    """Main entry point."""
    parser = argparse.ArgumentParser(description="Run the acceptance sweeps")
    parser.add_argument("checks", nargs="*", help=f"Checks to run (default: all of {', '.join(CHECKS)})")
    parser.add_argument("--quick", action="store_true", help="Small corpora for a smoke run")
    parser.add_argument("--seed", type=int, default=0, help="Corpus seed (default: 0)")
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes for sweeps (default: 1)")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log library progress")

    args = parser.parse_args()
    unknown = [name for name in args.checks if name not in CHECKS]
    if unknown:
        print(f"Error: unknown checks: {', '.join(unknown)}")
        return 1
    args.corpus = 30 if args.quick else 200
    args.cacti = 10 if args.quick else 50
    args.samples = 20 if args.quick else 200
    args.triples = 50 if args.quick else 500

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )

    failed = 0
    for name in args.checks or CHECKS:
        start = time.perf_counter()
        try:
            ok, detail = CHECKS[name](args)
        except Exception as e:
            logger.exception(f"{name} raised")
            ok, detail = False, f"error: {e}"
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name:<12} {time.perf_counter() - start:7.1f}s  {detail}")

    print(f"\n{len(args.checks or CHECKS) - failed} passed, {failed} failed")
    return 1 if failed else 0


if __name__ == "__main__":
    exit(main())
