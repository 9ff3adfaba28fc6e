"""
Signed classes 1± / 2±, the class ratio and the equal-parts bipartite probe.

The class ratio counts signatures whose chromatic index equals Δ. Chromatic
index is invariant under switching and every switching class has the same
size 2^(n-c), so it is enough to test one representative per class.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from itertools import islice
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional

from .config import Config
from .exact import is_colorable
from .exceptions import BudgetExceeded, InternalInvariantError, InvalidInput
from .generators import Family, FamilySpec, generate, random_signatures
from .models import NEGATIVE, Graph, Signature, SignedGraph, max_degree
from .switching import all_signatures, class_count_exponent, switching_class_representatives

logger = logging.getLogger(__name__)


class ClassVerdict(Enum):
    CLASS_1PM = "1pm"
    CLASS_2PM = "2pm"
    MIXED = "mixed"

    @classmethod
    def from_string(cls, value: str) -> "ClassVerdict":
        for verdict in cls:
            if verdict.value == value:
                return verdict
        raise ValueError(f"unknown class verdict: {value}")

    @classmethod
    def from_ratio(cls, ratio: Fraction) -> "ClassVerdict":
        if ratio == 1:
            return cls.CLASS_1PM
        if ratio == 0:
            return cls.CLASS_2PM
        return cls.MIXED

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ClassSample:
    """Chromatic index of one enumerated signature."""

    index: int
    signature: Signature
    chi: int


@dataclass(frozen=True)
class ClassReport:
    delta: int
    verdict: ClassVerdict
    classes_at_delta: int
    total_classes: int
    ratio: Fraction
    naive: bool = False
    structural_2pm: Optional[bool] = None
    witness_matching: Optional[tuple[tuple[int, int], ...]] = None
    ordinary_class_hint: Optional[int] = None
    samples: tuple[ClassSample, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class StructuralVerdict:
    """Structural 2± test result; a covering matching is the witness against 2±."""

    class_2pm: bool
    witness_matching: Optional[tuple[int, ...]] = None

    def __bool__(self):
        return self.class_2pm


@dataclass(frozen=True)
class ProbeReport:
    r: int
    samples: int
    exhaustive: bool
    predicted_delta: int
    confirmed: int
    proven_direction_checked: int
    counterexamples: tuple[str, ...]
    proven_direction_violations: tuple[str, ...]
    rows: tuple[ClassSample, ...] = field(default=(), repr=False)


# -------------------------------------------------------------------
# Signature sweeps
# -------------------------------------------------------------------

def _achieves_delta(
    graph: Graph, delta: int, signs: tuple[int, ...], components: list[list[int]]
) -> bool:
    """True when every component of maximum degree Δ (given by its edges) is Δ-colorable."""
    sg = SignedGraph(graph, Signature(signs))
    return all(is_colorable(sg, delta, edges) is not None for edges in components)


def _critical_components(graph: Graph, delta: int) -> list[list[int]]:
    out = []
    for comp in graph.components():
        if max(graph.degree(v) for v in comp) == delta and delta > 0:
            out.append(sorted({e for v in comp for e in graph.incident[v]}))
    return out


# (graph, delta, critical components) of the sweep a pool worker serves
_worker_sweep: Optional[tuple[Graph, int, list[list[int]]]] = None


def _init_worker(graph: Graph, delta: int, components: list[list[int]]) -> None:
    global _worker_sweep
    _worker_sweep = (graph, delta, components)


def _worker_achieves_delta(signs: tuple[int, ...]) -> bool:
    graph, delta, components = _worker_sweep
    return _achieves_delta(graph, delta, signs, components)


def _sweep(
    graph: Graph, delta: int, signatures: Iterable[Signature], jobs: int
) -> Iterator[tuple[Signature, bool]]:
    """
    Stream (signature, Δ-colorable) pairs in input order.

    Signatures are pulled lazily; with jobs > 1 at most Config.SWEEP_BATCH
    of them are held at a time.
    """
    components = _critical_components(graph, delta)
    if jobs <= 1:
        for s in signatures:
            yield s, _achieves_delta(graph, delta, s.signs, components)
        return

    source = iter(signatures)
    with Pool(jobs, initializer=_init_worker, initargs=(graph, delta, components)) as pool:
        while True:
            batch = list(islice(source, Config.SWEEP_BATCH))
            if not batch:
                break
            chunksize = max(1, len(batch) // (4 * jobs))
            hits = pool.map(_worker_achieves_delta, [s.signs for s in batch], chunksize=chunksize)
            yield from zip(batch, hits)


def class_ratio(
    g: Graph,
    budget: Optional[int] = None,
    naive: bool = False,
    jobs: Optional[int] = None,
    keep_samples: bool = False,
) -> ClassReport:
    """
    Exact class ratio C(G) as a Fraction.

    Enumerates one signature per switching class (or all 2^m with naive)
    and counts those with chromatic index Δ. For m up to
    Config.NAIVE_CROSSCHECK_EDGES the accelerated result is compared against
    the naive count.

    Args:
        g: Underlying graph
        budget: Maximum log2 of the number of signatures to sweep
        naive: Sweep all 2^m signatures instead of one per switching class
        jobs: Worker processes
        keep_samples: Keep one ClassSample per swept signature

    Returns:
        ClassReport with the ratio, verdict and class counts

    Raises:
        BudgetExceeded: the enumeration exponent exceeds the budget
        InternalInvariantError: accelerated and naive ratios disagree
    """
    budget = Config.RATIO_BUDGET if budget is None else budget
    jobs = Config.JOBS if jobs is None else jobs
    delta = max_degree(g)
    exponent = g.edge_count if naive else class_count_exponent(g)
    if exponent > budget:
        raise BudgetExceeded(f"2^{exponent} signatures to enumerate exceeds budget 2^{budget}")
    total = 2 ** exponent

    if delta <= 1:
        # a matching is colored by 0 under any signature
        logger.info(f"Class ratio shortcut for delta={delta}")
        return ClassReport(delta, ClassVerdict.CLASS_1PM, total, total, Fraction(1), naive=naive)

    signatures = all_signatures(g) if naive else switching_class_representatives(g)
    logger.info(f"Sweeping {total} signatures (naive={naive}, jobs={jobs})")
    count = 0
    kept: list[ClassSample] = []
    for i, (s, hit) in enumerate(_sweep(g, delta, signatures, jobs)):
        count += hit
        if keep_samples:
            kept.append(ClassSample(i, s, delta if hit else delta + 1))
    ratio = Fraction(count, total)

    if not naive and g.edge_count <= Config.NAIVE_CROSSCHECK_EDGES:
        naive_hits = sum(hit for _, hit in _sweep(g, delta, all_signatures(g), jobs))
        if Fraction(naive_hits, 2 ** g.edge_count) != ratio:
            raise InternalInvariantError(
                f"switching-class ratio {ratio} differs from naive ratio {naive_hits}/{2 ** g.edge_count}"
            )
        logger.debug(f"Naive cross-check agrees on {2 ** g.edge_count} signatures")

    verdict = ClassVerdict.from_ratio(ratio)
    logger.info(f"Class ratio {ratio} ({verdict})")
    return ClassReport(delta, verdict, count, total, ratio, naive=naive, samples=tuple(kept))


# -------------------------------------------------------------------
# Structural test
# -------------------------------------------------------------------

def covering_matching(g: Graph) -> Optional[tuple[int, ...]]:
    """
    A matching covering every vertex of maximum degree, or None.

    Branches on the first uncovered Δ-vertex, trying each of its edges to a
    still unmatched vertex (edges to other Δ-vertices first). Matched-vertex
    sets already known to fail are memoized.
    """
    delta = max_degree(g)
    if delta == 0:
        return None
    targets = [v for v in range(g.vertex_count) if g.degree(v) == delta]
    is_target = set(targets)
    failed: set[frozenset[int]] = set()

    def options(v: int, matched: frozenset[int]) -> list[int]:
        edges = [e for e in g.incident[v] if g.other_end(e, v) not in matched]
        return sorted(edges, key=lambda e: (g.other_end(e, v) not in is_target, e))

    def extend(matched: frozenset[int], chosen: list[int]) -> bool:
        nxt = next((v for v in targets if v not in matched), None)
        if nxt is None:
            return True
        if matched in failed:
            return False
        for e in options(nxt, matched):
            chosen.append(e)
            if extend(matched | set(g.edges[e]), chosen):
                return True
            chosen.pop()
        failed.add(matched)
        return False

    chosen: list[int] = []
    if extend(frozenset(), chosen):
        logger.debug(f"Covering matching found with {len(chosen)} edges")
        return tuple(sorted(chosen))
    return None


def is_class_2pm_structural(g: Graph) -> StructuralVerdict:
    """
    2± iff Δ is odd and no matching covers every Δ-vertex.

    Removing a matching lowers Δ exactly when every Δ-vertex loses an edge.
    """
    delta = max_degree(g)
    if delta % 2 == 0:
        return StructuralVerdict(False)
    matching = covering_matching(g)
    return StructuralVerdict(matching is None, matching)


def brute_force_matching_reduces(g: Graph, edge_limit: int = 14) -> bool:
    """
    Exhaustive check: is there a matching M with Δ(G - M) < Δ(G)?

    Raises:
        BudgetExceeded: more than edge_limit edges
    """
    if g.edge_count > edge_limit:
        raise BudgetExceeded(f"{g.edge_count} edges exceed the brute-force matching limit {edge_limit}")
    delta = max_degree(g)
    if delta == 0:
        return False

    def reduces(matching: list[int]) -> bool:
        degrees = g.degrees()
        for e in matching:
            for w in g.edges[e]:
                degrees[w] -= 1
        return max(degrees) < delta

    def search(i: int, used: set[int], matching: list[int]) -> bool:
        if i == g.edge_count:
            return reduces(matching)
        if search(i + 1, used, matching):
            return True
        u, v = g.edges[i]
        if u in used or v in used:
            return False
        matching.append(i)
        found = search(i + 1, used | {u, v}, matching)
        matching.pop()
        return found

    return search(0, set(), [])


def _ordinary_class_hint(verdict: ClassVerdict) -> Optional[int]:
    # an all-negative signature is an ordinary edge coloring in disguise
    if verdict == ClassVerdict.CLASS_1PM:
        return 1
    if verdict == ClassVerdict.CLASS_2PM:
        return 2
    return None


def signed_class(
    g: Graph,
    budget: Optional[int] = None,
    naive: bool = False,
    jobs: Optional[int] = None,
    keep_samples: bool = False,
) -> ClassReport:
    """
    Class verdict by enumeration, checked against the structural test.

    Raises:
        BudgetExceeded
        InternalInvariantError: enumeration and structure disagree on 2±, or
            an even-Δ graph came out 2±
    """
    report = class_ratio(g, budget=budget, naive=naive, jobs=jobs, keep_samples=keep_samples)
    structural = is_class_2pm_structural(g)
    is_2pm = report.verdict == ClassVerdict.CLASS_2PM
    if is_2pm and report.delta % 2 == 0:
        raise InternalInvariantError(f"even maximum degree {report.delta} but every signature needs Δ+1")
    if is_2pm != structural.class_2pm:
        raise InternalInvariantError(
            f"enumeration verdict {report.verdict} disagrees with structural test ({structural.class_2pm})"
        )
    witness = None
    if structural.witness_matching is not None:
        witness = tuple(g.edges[e] for e in structural.witness_matching)
    return replace(
        report,
        structural_2pm=structural.class_2pm,
        witness_matching=witness,
        ordinary_class_hint=_ordinary_class_hint(report.verdict),
    )


# -------------------------------------------------------------------
# Equal-parts complete bipartite probe
# -------------------------------------------------------------------

def predicts_delta(r: int, signature: Signature) -> bool:
    """Conjectured Δ-colorability of a signed K_{r,r}: r odd, or an even number of negative edges."""
    return r % 2 == 1 or signature.negative_count() % 2 == 0


def probe_conjecture(
    r: int,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    jobs: Optional[int] = None,
    keep_samples: bool = False,
) -> ProbeReport:
    """
    Check Δ-colorability of signed K_{r,r} against the conjectured rule.

    All 2^m signatures are tried when m is small, one per switching class
    when there are at most ``trials`` classes, and ``trials`` seeded random
    signatures otherwise. A prediction of Δ that fails is reported as a
    counterexample; a Δ-coloring where the regular-decomposition argument
    forbids one (even r, odd negative count) is a proven-direction violation.

    Raises:
        InvalidInput: r < 1
        BudgetExceeded: r^2 edges exceed the exact solver limit
    """
    if r < 1:
        raise InvalidInput(f"r must be positive, got {r}")
    trials = Config.PROBE_TRIALS if trials is None else trials
    seed = Config.DEFAULT_SEED if seed is None else seed
    jobs = Config.JOBS if jobs is None else jobs

    g = generate(FamilySpec(Family.COMPLETE_BIPARTITE, sizes=(r, r))).graph
    if g.edge_count > Config.SOLVER_EDGE_LIMIT:
        raise BudgetExceeded(f"K_{{{r},{r}}} has {g.edge_count} edges, solver limit {Config.SOLVER_EDGE_LIMIT}")

    exponent = class_count_exponent(g)
    if g.edge_count <= Config.NAIVE_CROSSCHECK_EDGES:
        signatures, exhaustive, planned = all_signatures(g), True, 2 ** g.edge_count
    elif 2 ** exponent <= trials:
        signatures, exhaustive, planned = switching_class_representatives(g), True, 2 ** exponent
    else:
        signatures, exhaustive, planned = random_signatures(g, trials, seed), False, trials

    logger.info(f"Probing K_{{{r},{r}}} on {planned} signatures (exhaustive={exhaustive})")

    samples = predicted = confirmed = proven_checked = 0
    counterexamples: list[str] = []
    violations: list[str] = []
    rows: list[ClassSample] = []
    for i, (s, hit) in enumerate(_sweep(g, r, signatures, jobs)):
        samples += 1
        if predicts_delta(r, s):
            predicted += 1
            if hit:
                confirmed += 1
            else:
                counterexamples.append(str(s))
        else:
            proven_checked += 1
            if hit:
                violations.append(str(s))
        if keep_samples:
            rows.append(ClassSample(i, s, r if hit else r + 1))

    if counterexamples:
        logger.warning(f"{len(counterexamples)} signatures contradict the conjectured rule")
    return ProbeReport(
        r=r,
        samples=samples,
        exhaustive=exhaustive,
        predicted_delta=predicted,
        confirmed=confirmed,
        proven_direction_checked=proven_checked,
        counterexamples=tuple(counterexamples),
        proven_direction_violations=tuple(violations),
        rows=tuple(rows),
    )


def negative_edges(signature: Signature) -> list[int]:
    """0-indexed ids of the negative edges."""
    return [e for e, s in enumerate(signature.signs) if s == NEGATIVE]
