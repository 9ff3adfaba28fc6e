"""
Balance, switching and switching equivalence.

Balance is decided by sign potentials on a spanning forest: p(root) = +1 and
p(child) = p(parent) * sigma(tree edge). The signed graph is balanced iff
every co-tree edge satisfies sigma(uv) = p(u) * p(v).
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .exceptions import NotACycle, UnderlyingGraphMismatch, VertexOutOfRange
from .models import NEGATIVE, POSITIVE, Graph, Signature, SignedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpanningForest:
    """BFS forest: tree edge ids, co-tree edge ids and the component of each vertex."""

    roots: tuple[int, ...]
    order: tuple[int, ...]
    parent_edge: tuple[Optional[int], ...]
    component: tuple[int, ...]
    tree_edges: tuple[int, ...]
    cotree_edges: tuple[int, ...]

    @property
    def component_count(self) -> int:
        return len(self.roots)


@dataclass(frozen=True)
class BalanceCheck:
    balanced: bool
    potentials: tuple[int, ...]
    conflicts: tuple[int, ...]


@dataclass(frozen=True)
class SwitchSet:
    vertices: frozenset[int]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "SwitchSet":
        return cls(frozenset(int(v) for v in vertices))

    def validate(self, g: Graph) -> None:
        for v in self.vertices:
            if not 0 <= v < g.vertex_count:
                raise VertexOutOfRange(f"switch vertex {v} not in 0..{g.vertex_count - 1}")

    def canonical(self, g: Graph) -> "SwitchSet":
        """Per component, keep the side that does not contain the lowest vertex."""
        self.validate(g)
        forest = spanning_forest(g)
        flip_component = set()
        for idx, root in enumerate(forest.roots):
            # roots are the lowest vertex of their component
            if root in self.vertices:
                flip_component.add(idx)
        members = set()
        for v in range(g.vertex_count):
            inside = v in self.vertices
            if forest.component[v] in flip_component:
                inside = not inside
            if inside:
                members.add(v)
        return SwitchSet(frozenset(members))

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __str__(self):
        return "{" + ", ".join(str(v) for v in sorted(self.vertices)) + "}"


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    witness: Optional[SwitchSet] = None

    def __bool__(self):
        return self.equivalent


def spanning_forest(g: Graph) -> SpanningForest:
    """BFS spanning forest rooted at the lowest vertex of every component."""
    parent_edge: list[Optional[int]] = [None] * g.vertex_count
    component = [-1] * g.vertex_count
    roots: list[int] = []
    order: list[int] = []
    tree: list[int] = []

    for start in range(g.vertex_count):
        if component[start] != -1:
            continue
        comp = len(roots)
        roots.append(start)
        component[start] = comp
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for e in g.incident[v]:
                w = g.other_end(e, v)
                if component[w] == -1:
                    component[w] = comp
                    parent_edge[w] = e
                    tree.append(e)
                    queue.append(w)

    tree_set = set(tree)
    cotree = tuple(e for e in range(g.edge_count) if e not in tree_set)
    return SpanningForest(
        roots=tuple(roots),
        order=tuple(order),
        parent_edge=tuple(parent_edge),
        component=tuple(component),
        tree_edges=tuple(sorted(tree)),
        cotree_edges=cotree,
    )


def potentials(sg: SignedGraph, forest: Optional[SpanningForest] = None) -> BalanceCheck:
    """Sign potentials along a spanning forest plus the co-tree edges violating them."""
    g = sg.graph
    forest = forest or spanning_forest(g)
    pot = [POSITIVE] * g.vertex_count
    for v in forest.order:
        e = forest.parent_edge[v]
        if e is not None:
            pot[v] = pot[g.other_end(e, v)] * sg.sign(e)
    conflicts = tuple(
        e for e in forest.cotree_edges if sg.sign(e) != pot[g.edges[e][0]] * pot[g.edges[e][1]]
    )
    return BalanceCheck(balanced=not conflicts, potentials=tuple(pot), conflicts=conflicts)


def is_balanced(sg: SignedGraph) -> bool:
    return potentials(sg).balanced


def switch(sg: SignedGraph, s: SwitchSet) -> SignedGraph:
    """Negate the sign of every edge with exactly one endpoint in s."""
    s.validate(sg.graph)
    signs = tuple(
        -sg.sign(idx) if ((u in s.vertices) != (v in s.vertices)) else sg.sign(idx)
        for idx, (u, v) in enumerate(sg.graph.edges)
    )
    return sg.with_signature(Signature(signs))


def cycle_edges(g: Graph, cycle: Sequence[int]) -> list[int]:
    """
    Edge ids of a closed vertex sequence (last vertex joins the first).

    Raises:
        NotACycle: repeated vertices, fewer than 3 vertices or a missing edge
    """
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle(f"{list(cycle)} is not a simple cycle")
    edges = []
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if not (0 <= a < g.vertex_count and 0 <= b < g.vertex_count):
            raise NotACycle(f"vertex of {list(cycle)} out of range")
        e = g.edge_id(a, b)
        if e is None:
            raise NotACycle(f"{a} and {b} are not adjacent")
        edges.append(e)
    return edges


def cycle_sign(sg: SignedGraph, cycle: Sequence[int]) -> int:
    product = POSITIVE
    for e in cycle_edges(sg.graph, cycle):
        product *= sg.sign(e)
    return product


def switching_equivalent(a: SignedGraph, b: SignedGraph) -> EquivalenceResult:
    """
    Decide whether b is a switching of a.

    b = switch(a, S) iff the edgewise product signature is balanced; S is
    the set of vertices with potential -1, canonicalized per component.
    """
    if a.graph != b.graph:
        raise UnderlyingGraphMismatch("switching equivalence needs a shared underlying graph")
    product = SignedGraph(a.graph, a.signature * b.signature)
    check = potentials(product)
    if not check.balanced:
        return EquivalenceResult(False)
    witness = SwitchSet.of(v for v, p in enumerate(check.potentials) if p == NEGATIVE)
    return EquivalenceResult(True, witness.canonical(a.graph))


def class_count_exponent(g: Graph) -> int:
    """log2 of the number of switching classes: m - n + c."""
    forest = spanning_forest(g)
    return g.edge_count - g.vertex_count + forest.component_count


def switching_class_representatives(g: Graph) -> Iterator[Signature]:
    """
    One signature per switching class.

    Forest edges are fixed to +1 and all 2^(m-n+c) sign patterns on co-tree
    edges are enumerated; each class holds exactly 2^(n-c) signatures.
    """
    forest = spanning_forest(g)
    cotree = forest.cotree_edges
    logger.debug(f"Enumerating 2^{len(cotree)} switching classes")
    for bits in itertools.product((POSITIVE, NEGATIVE), repeat=len(cotree)):
        signs = [POSITIVE] * g.edge_count
        for e, s in zip(cotree, bits):
            signs[e] = s
        yield Signature(tuple(signs))


def all_signatures(g: Graph) -> Iterator[Signature]:
    """All 2^m signatures; bit j of the index set means edge j is negative."""
    m = g.edge_count
    for index in range(2 ** m):
        yield Signature(tuple(NEGATIVE if (index >> j) & 1 else POSITIVE for j in range(m)))
