"""
Exact chromatic index of signed graphs and regular decompositions.

The solver is a plain backtracking search over edges. For edge uv it branches
on f(u:uv) = c, which forces f(v:uv) = -sigma(uv) * c, and prunes on repeated
colors at a vertex. Color pairs that have not been used yet are
interchangeable (and each may be negated), so only the lowest unused pair is
tried, with its positive color.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .config import Config
from .exceptions import (
    BudgetExceeded,
    InternalInvariantError,
    InvalidColoring,
    InvalidDecomposition,
    NotRegular,
)
from .models import (
    ColorSet,
    Incidence,
    IncidenceColoring,
    SignedGraph,
    embed_coloring,
    max_degree,
    merge_colorings,
    restrict,
    verify_coloring,
    walk_coloring,
)
from .switching import potentials

logger = logging.getLogger(__name__)


class PartKind(Enum):
    PATH = "path"
    CYCLE = "cycle"
    MATCHING = "matching"
    TWO_REGULAR_SPANNING = "two_regular_spanning"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DecompositionPart:
    kind: PartKind
    edges: frozenset[int]

    @classmethod
    def of(cls, kind: PartKind, edges: Iterable[int]) -> "DecompositionPart":
        return cls(kind, frozenset(edges))


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[DecompositionPart, ...]

    def is_edge_disjoint(self) -> bool:
        seen: set[int] = set()
        for part in self.parts:
            if seen & part.edges:
                return False
            seen |= part.edges
        return True

    def covered(self) -> set[int]:
        out: set[int] = set()
        for part in self.parts:
            out |= part.edges
        return out

    def covers(self, edge_ids: Iterable[int]) -> bool:
        return self.is_edge_disjoint() and self.covered() == set(edge_ids)

    def of_kind(self, kind: PartKind) -> list[DecompositionPart]:
        return [p for p in self.parts if p.kind == kind]


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    witness: IncidenceColoring
    delta: int

    def __post_init__(self):
        # Behr: delta <= chi <= delta + 1 for every signed graph
        if not self.delta <= self.chi <= self.delta + 1:
            raise InternalInvariantError(
                f"chromatic index {self.chi} outside [{self.delta}, {self.delta + 1}]"
            )


class _Search:
    """Backtracking search for an n-coloring of the given edges."""

    def __init__(self, sg: SignedGraph, n: int, edge_ids: Sequence[int]):
        self.sg = sg
        self.palette = ColorSet(n)
        g = sg.graph
        self.order = sorted(
            edge_ids,
            key=lambda e: (
                -max(g.degree(g.edges[e][0]), g.degree(g.edges[e][1])),
                -min(g.degree(g.edges[e][0]), g.degree(g.edges[e][1])),
                e,
            ),
        )
        self.used: dict[int, set[int]] = {}
        self.local_degree: dict[int, int] = {}
        for e in edge_ids:
            for w in g.edges[e]:
                self.used.setdefault(w, set())
                self.local_degree[w] = self.local_degree.get(w, 0) + 1
        self.assignment: dict[Incidence, int] = {}
        self.nodes = 0

    def _candidates(self, introduced: int) -> list[int]:
        out = [0] if self.palette.has_zero else []
        for a in range(1, introduced + 1):
            out.extend((a, -a))
        if introduced < self.palette.pairs:
            out.append(introduced + 1)
        return out

    def _extend(self, i: int, introduced: int) -> bool:
        if i == len(self.order):
            return True
        self.nodes += 1
        e = self.order[i]
        u, v = self.sg.graph.edges[e]
        sign = self.sg.sign(e)
        used_u, used_v = self.used[u], self.used[v]
        for c in self._candidates(introduced):
            d = -sign * c
            if c in used_u or d in used_v:
                continue
            used_u.add(c)
            used_v.add(d)
            self.assignment[Incidence(u, e)] = c
            self.assignment[Incidence(v, e)] = d
            if self._extend(i + 1, max(introduced, abs(c))):
                return True
            used_u.discard(c)
            used_v.discard(d)
            del self.assignment[Incidence(u, e)]
            del self.assignment[Incidence(v, e)]
        return False

    def run(self) -> Optional[dict[Incidence, int]]:
        if any(deg > self.palette.n for deg in self.local_degree.values()):
            return None
        found = self._extend(0, 0)
        logger.debug(f"Search with n={self.palette.n} visited {self.nodes} nodes, found={found}")
        return dict(self.assignment) if found else None


def is_colorable(
    sg: SignedGraph, n: int, edge_ids: Optional[Sequence[int]] = None
) -> Optional[IncidenceColoring]:
    """Return an n-coloring of sg (restricted to edge_ids if given), or None."""
    ids = list(range(sg.edge_count)) if edge_ids is None else list(edge_ids)
    if not ids:
        return IncidenceColoring(n, {})
    if n < 1:
        return None
    assignment = _Search(sg, n, ids).run()
    return None if assignment is None else IncidenceColoring(n, assignment)


def _component_edges(sg: SignedGraph) -> list[list[int]]:
    g = sg.graph
    out = []
    for comp in g.components():
        edges = sorted({e for v in comp for e in g.incident[v]})
        if edges:
            out.append(edges)
    return out


def exact_chromatic_index(
    sg: SignedGraph, force: bool = False, edge_limit: Optional[int] = None
) -> ChromaticResult:
    """
    Minimum n admitting an n-edge-coloring, with a witness.

    Components are solved independently; chi is the maximum over them and the
    witnesses are embedded into M_chi.

    Args:
        sg: Signed graph to color
        force: Search components above the edge limit anyway
        edge_limit: Override for Config.SOLVER_EDGE_LIMIT

    Returns:
        ChromaticResult with chi, a chi-coloring and Δ

    Raises:
        BudgetExceeded: a component has more edges than the limit at n = Δ
        InternalInvariantError: no (Δ+1)-coloring exists (contradicts Behr)
    """
    limit = Config.SOLVER_EDGE_LIMIT if edge_limit is None else edge_limit
    delta = max_degree(sg.graph)
    if delta == 0:
        return ChromaticResult(0, IncidenceColoring(0, {}), 0)

    pieces: list[IncidenceColoring] = []
    for edges in _component_edges(sg):
        comp_delta = max(sg.graph.degree(w) for e in edges for w in sg.graph.edges[e])
        if len(edges) > limit and not force:
            raise BudgetExceeded(
                f"component with {len(edges)} edges exceeds solver limit {limit} (use force)"
            )
        coloring = is_colorable(sg, comp_delta, edges)
        if coloring is None:
            coloring = is_colorable(sg, comp_delta + 1, edges)
            if coloring is None:
                raise InternalInvariantError(
                    f"no {comp_delta + 1}-coloring found for a component with Δ={comp_delta}"
                )
        pieces.append(coloring)

    chi = max(p.n for p in pieces)
    witness = merge_colorings(chi, (embed_coloring(sg, p, chi).assignment for p in pieces))
    logger.info(f"Exact solver: delta={delta} chi={chi}")
    return ChromaticResult(chi, witness, delta)


def _regular_degree(sg: SignedGraph) -> int:
    degrees = set(sg.graph.degrees())
    if len(degrees) != 1 or 0 in degrees:
        raise NotRegular(f"underlying graph is not k-regular for k >= 1 (degrees {sorted(degrees)})")
    return degrees.pop()


def is_small_degree_extension(k: int) -> bool:
    """Degrees below 4, accepted by verify_regular_decomposition as a matching or a single 2-factor case."""
    return k <= 3


@dataclass(frozen=True)
class DecompositionCheck:
    """
    Outcome of verify_regular_decomposition. ``small_degree`` marks a k <= 3
    graph, checked by the same rule extended below two 2-regular parts.
    """

    valid: bool
    degree: int
    small_degree: bool

    def __bool__(self):
        return self.valid


def verify_regular_decomposition(sg: SignedGraph, d: Decomposition) -> DecompositionCheck:
    """
    Check a decomposition of a k-regular signed graph into r spanning,
    2-regular, balanced parts (k = 2r) plus one perfect matching (k = 2r+1).

    Args:
        sg: Regular signed graph
        d: Candidate decomposition over sg's edge ids

    Returns:
        DecompositionCheck, truthy when d is valid and flagged when k <= 3

    Raises:
        NotRegular: if the underlying graph is not regular
    """
    k = _regular_degree(sg)
    small = is_small_degree_extension(k)
    if small:
        logger.info(f"Regular decomposition check at k={k} uses the small-degree extension")
    return DecompositionCheck(_decomposition_holds(sg, d, k), k, small)


def _decomposition_holds(sg: SignedGraph, d: Decomposition, k: int) -> bool:
    g = sg.graph
    if not d.covers(range(g.edge_count)):
        logger.debug("Decomposition is not an edge-disjoint cover")
        return False

    cycles = d.of_kind(PartKind.TWO_REGULAR_SPANNING)
    matchings = d.of_kind(PartKind.MATCHING)
    if len(cycles) + len(matchings) != len(d.parts):
        return False
    if len(cycles) != k // 2 or len(matchings) != k % 2:
        return False

    for part in matchings:
        covered = [w for e in part.edges for w in g.edges[e]]
        if len(covered) != len(set(covered)) or len(covered) != g.vertex_count:
            logger.debug("Matching part is not perfect")
            return False

    for part in cycles:
        counts = [0] * g.vertex_count
        for e in part.edges:
            for w in g.edges[e]:
                counts[w] += 1
        if any(c != 2 for c in counts):
            logger.debug("Part is not spanning and 2-regular")
            return False
        if not potentials(restrict(sg, sorted(part.edges))).balanced:
            logger.debug("Part is unbalanced")
            return False
    return True


def extract_decomposition(sg: SignedGraph, c: IncidenceColoring) -> Decomposition:
    """
    Split a Δ-coloring of a regular signed graph by color pair: one spanning
    2-regular part per pair ±a, the 0-colored edges as a matching when Δ is odd.

    Raises:
        NotRegular, InvalidColoring
    """
    k = _regular_degree(sg)
    if c.n != k or not verify_coloring(sg, c).valid:
        raise InvalidColoring(f"expected a valid {k}-coloring")
    g = sg.graph
    by_pair: dict[int, list[int]] = {}
    for idx, (u, _) in enumerate(g.edges):
        by_pair.setdefault(abs(c.color(u, idx)), []).append(idx)

    parts = [
        DecompositionPart.of(PartKind.TWO_REGULAR_SPANNING, by_pair.get(a, ()))
        for a in range(1, k // 2 + 1)
    ]
    if k % 2:
        parts.append(DecompositionPart.of(PartKind.MATCHING, by_pair.get(0, ())))
    return Decomposition(tuple(parts))


def _cycles_of(sg: SignedGraph, edges: frozenset[int]) -> list[tuple[list[int], list[int]]]:
    """Closed walks (vertices, edges) of the cycle components of a 2-regular edge set."""
    g = sg.graph
    at: dict[int, list[int]] = {}
    for e in sorted(edges):
        for w in g.edges[e]:
            at.setdefault(w, []).append(e)
    remaining = set(edges)
    walks = []
    for e0 in sorted(edges):
        if e0 not in remaining:
            continue
        start = g.edges[e0][0]
        vertices, walk_edges = [start], []
        v, e = start, e0
        while e in remaining:
            remaining.discard(e)
            walk_edges.append(e)
            v = g.other_end(e, v)
            vertices.append(v)
            e = next((x for x in at[v] if x != e), e)
        walks.append((vertices, walk_edges))
    return walks


def coloring_from_decomposition(sg: SignedGraph, d: Decomposition) -> IncidenceColoring:
    """
    Assemble a Δ-coloring from a verified regular decomposition: the j-th
    2-regular part gets the pair ±j, the perfect matching gets 0.

    Raises:
        InvalidDecomposition: if verify_regular_decomposition rejects d
    """
    if not verify_regular_decomposition(sg, d):
        raise InvalidDecomposition("decomposition does not satisfy the regular-decomposition conditions")
    k = _regular_degree(sg)
    g = sg.graph
    pieces: list[dict] = []
    for j, part in enumerate(d.of_kind(PartKind.TWO_REGULAR_SPANNING), start=1):
        for vertices, edges in _cycles_of(sg, part.edges):
            pieces.append(walk_coloring(sg, vertices, edges, j))
    for part in d.of_kind(PartKind.MATCHING):
        pieces.append({Incidence(w, e): 0 for e in part.edges for w in g.edges[e]})
    return merge_colorings(k, pieces)
