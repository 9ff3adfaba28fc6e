"""
Signed graph data model, the color sets M_n, incidence colorings and their
verification.

Vertices and edges are 0-indexed; an edge's id is its position in the input
list and an incidence is the pair (vertex, edge id).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

import networkx as nx

from .exceptions import (
    DomainMismatch,
    DuplicateEdge,
    InvalidColoring,
    InvalidInput,
    SelfLoop,
    VertexOutOfRange,
)

logger = logging.getLogger(__name__)

POSITIVE = 1
NEGATIVE = -1


class Incidence(NamedTuple):
    vertex: int
    edge: int


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with edges identified by their input index."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidInput(f"vertex_count must be positive, got {self.vertex_count}")
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        seen: set[frozenset[int]] = set()
        for idx, (u, v) in enumerate(self.edges):
            for w in (u, v):
                if not 0 <= w < self.vertex_count:
                    raise VertexOutOfRange(
                        f"edge {idx} ({u}, {v}) has endpoint outside 0..{self.vertex_count - 1}"
                    )
            if u == v:
                raise SelfLoop(f"edge {idx} is a loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise DuplicateEdge(f"edge {idx} ({u}, {v}) repeats an earlier edge")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at every vertex, in increasing id order."""
        lists: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for idx, (u, v) in enumerate(self.edges):
            lists[u].append(idx)
            lists[v].append(idx)
        return tuple(tuple(x) for x in lists)

    @cached_property
    def _edge_index(self) -> dict[frozenset[int], int]:
        return {frozenset(e): idx for idx, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incident]

    def other_end(self, edge: int, v: int) -> int:
        u, w = self.edges[edge]
        return w if v == u else u

    def neighbors(self, v: int) -> list[int]:
        return [self.other_end(e, v) for e in self.incident[v]]

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._edge_index.get(frozenset((u, v)))

    def incidences(self) -> Iterator[Incidence]:
        for idx, (u, v) in enumerate(self.edges):
            yield Incidence(u, idx)
            yield Incidence(v, idx)

    @cached_property
    def _networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.vertex_count))
        nxg.add_edges_from((u, v, {"id": idx}) for idx, (u, v) in enumerate(self.edges))
        return nx.freeze(nxg)

    def to_networkx(self) -> nx.Graph:
        """
        Underlying graph with the edge id stored as attribute ``id``.

        Built once per Graph and frozen; copy it before modifying.
        """
        return self._networkx

    def components(self) -> list[list[int]]:
        """Vertex lists of the connected components, ordered by lowest vertex."""
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=lambda c: c[0])

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())


@dataclass(frozen=True)
class Signature:
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        for idx, s in enumerate(self.signs):
            if s not in (POSITIVE, NEGATIVE):
                raise InvalidInput(f"sign of edge {idx} must be +1 or -1, got {s}")

    @classmethod
    def all_positive(cls, edge_count: int) -> "Signature":
        return cls((POSITIVE,) * edge_count)

    def __len__(self) -> int:
        return len(self.signs)

    def __getitem__(self, edge: int) -> int:
        return self.signs[edge]

    def negative_count(self) -> int:
        return sum(1 for s in self.signs if s == NEGATIVE)

    def __mul__(self, other: "Signature") -> "Signature":
        if len(self) != len(other):
            raise InvalidInput("signatures of different length cannot be multiplied")
        return Signature(tuple(a * b for a, b in zip(self.signs, other.signs)))

    def __str__(self):
        return "".join("+" if s == POSITIVE else "-" for s in self.signs)


@dataclass(frozen=True)
class SignedGraph:
    graph: Graph
    signature: Signature

    def __post_init__(self):
        if len(self.signature) != self.graph.edge_count:
            raise InvalidInput(
                f"signature has {len(self.signature)} signs for {self.graph.edge_count} edges"
            )

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def sign(self, edge: int) -> int:
        return self.signature.signs[edge]

    def with_signature(self, signature: Signature) -> "SignedGraph":
        return SignedGraph(self.graph, signature)


class ColorSet:
    """The symmetric color set M_n."""

    def __init__(self, n: int):
        if n < 1:
            raise InvalidInput(f"color count must be positive, got {n}")
        self.n = n
        k = n // 2
        # search order: 0, +1, -1, +2, -2, ...
        order = [0] if n % 2 else []
        for a in range(1, k + 1):
            order.extend((a, -a))
        self.order: tuple[int, ...] = tuple(order)
        self.members: frozenset[int] = frozenset(order)

    @property
    def pairs(self) -> int:
        return self.n // 2

    @property
    def has_zero(self) -> bool:
        return self.n % 2 == 1

    def __contains__(self, color: int) -> bool:
        return color in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __repr__(self):
        return f"ColorSet({self.n}: {sorted(self.members)})"


def color_set(n: int) -> ColorSet:
    return ColorSet(n)


@dataclass(frozen=True)
class IncidenceColoring:
    """
    Map from incidences to colors in M_n.

    ``n`` is stored explicitly: a 5-coloring that only uses ±1 is still
    checked against M_5. ``n = 0`` is reserved for the empty coloring of an
    edgeless graph.
    """

    n: int
    assignment: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0 or (self.n == 0 and self.assignment):
            raise InvalidColoring(f"invalid color count {self.n}")
        object.__setattr__(
            self,
            "assignment",
            {Incidence(int(v), int(e)): int(c) for (v, e), c in dict(self.assignment).items()},
        )

    @classmethod
    def from_incidences(cls, n: int, assignment: dict[Incidence, int]) -> "IncidenceColoring":
        """Wrap an assignment already keyed by Incidence with int colors, without copying it."""
        if n < 0 or (n == 0 and assignment):
            raise InvalidColoring(f"invalid color count {n}")
        coloring = cls.__new__(cls)
        object.__setattr__(coloring, "n", n)
        object.__setattr__(coloring, "assignment", assignment)
        return coloring

    def color(self, vertex: int, edge: int) -> int:
        return self.assignment[Incidence(vertex, edge)]

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def __len__(self) -> int:
        return len(self.assignment)


class ViolationKind(Enum):
    EDGE = "edge"
    VERTEX = "vertex"
    PALETTE = "palette"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str
    edge: Optional[int] = None
    vertex: Optional[int] = None

    def as_dict(self) -> dict:
        out: dict = {"kind": str(self.kind), "detail": self.detail}
        if self.edge is not None:
            out["edge"] = self.edge
        if self.vertex is not None:
            out["vertex"] = self.vertex
        return out


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[Violation, ...] = ()


def build_signed_graph(vertex_count: int, signed_edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """
    Build a signed graph from (u, v, sign) triples.

    Raises:
        SelfLoop, DuplicateEdge, VertexOutOfRange: simple-graph violations
    """
    triples = list(signed_edges)
    graph = Graph(vertex_count, tuple((u, v) for u, v, _ in triples))
    return SignedGraph(graph, Signature(tuple(s for _, _, s in triples)))


def max_degree(g: Graph) -> int:
    if g.edge_count == 0:
        return 0
    return max(g.degrees())


def verify_coloring(sg: SignedGraph, c: IncidenceColoring) -> VerificationReport:
    """
    Check the three conditions of a signed n-edge-coloring.

    Args:
        sg: Signed graph
        c: Coloring of every incidence of sg

    Returns:
        VerificationReport listing every violation found

    Raises:
        DomainMismatch: if c does not color exactly the incidences of sg
    """
    domain = set(sg.graph.incidences())
    keys = set(c.assignment)
    if keys != domain:
        missing = len(domain - keys)
        extra = len(keys - domain)
        raise DomainMismatch(f"coloring misses {missing} and adds {extra} incidences")

    violations: list[Violation] = []
    palette = ColorSet(c.n).members if c.n >= 1 else frozenset()

    for (v, e), color in sorted(c.assignment.items()):
        if color not in palette:
            violations.append(
                Violation(ViolationKind.PALETTE, f"color {color} not in M_{c.n}", edge=e, vertex=v)
            )

    for idx, (u, v) in enumerate(sg.graph.edges):
        fu = c.assignment[Incidence(u, idx)]
        fv = c.assignment[Incidence(v, idx)]
        if fu != -sg.sign(idx) * fv:
            violations.append(
                Violation(
                    ViolationKind.EDGE,
                    f"f({u}:e{idx})={fu} but -sigma*f({v}:e{idx})={-sg.sign(idx) * fv}",
                    edge=idx,
                )
            )

    for v in range(sg.vertex_count):
        seen: dict[int, int] = {}
        for e in sg.graph.incident[v]:
            color = c.assignment[Incidence(v, e)]
            if color in seen:
                violations.append(
                    Violation(
                        ViolationKind.VERTEX,
                        f"color {color} repeated on edges {seen[color]} and {e}",
                        vertex=v,
                    )
                )
            else:
                seen[color] = e

    if violations:
        logger.debug(f"Coloring rejected with {len(violations)} violations")
    return VerificationReport(valid=not violations, violations=tuple(violations))


def negate_at(c: IncidenceColoring, vertices: Iterable[int]) -> IncidenceColoring:
    """Negate every incidence color at the given vertices."""
    flip = set(vertices)
    return IncidenceColoring(
        c.n, {inc: (-col if inc[0] in flip else col) for inc, col in c.assignment.items()}
    )


def embed_coloring(sg: SignedGraph, c: IncidenceColoring, n: int) -> IncidenceColoring:
    """
    Re-express a valid c.n-coloring of sg as an n-coloring, n >= c.n.

    M_{c.n} is a subset of M_n except when c.n is odd and n even: then 0 is
    missing, the 0-colored edges form a matching and move to the fresh pair
    ±(c.n // 2 + 1).
    """
    if n < c.n:
        raise InvalidColoring(f"cannot embed a {c.n}-coloring into M_{n}")
    if c.n % 2 == 0 or n % 2 == 1 or not c.assignment:
        return IncidenceColoring(n, c.assignment)

    fresh = c.n // 2 + 1
    assignment = dict(c.assignment)
    for idx, (u, v) in enumerate(sg.graph.edges):
        if assignment.get(Incidence(u, idx)) == 0:
            assignment[Incidence(u, idx)] = fresh
            assignment[Incidence(v, idx)] = -sg.sign(idx) * fresh
    return IncidenceColoring(n, assignment)


def restrict(sg: SignedGraph, edge_ids: Iterable[int]) -> SignedGraph:
    """Signed subgraph on the given edges; vertex ids are kept, edge ids renumbered."""
    ids = list(edge_ids)
    graph = Graph(sg.vertex_count, tuple(sg.graph.edges[e] for e in ids))
    return SignedGraph(graph, Signature(tuple(sg.sign(e) for e in ids)))


def merge_colorings(n: int, parts: Iterable[Mapping[tuple[int, int], int]]) -> IncidenceColoring:
    """Union of partial colorings with disjoint incidence domains."""
    assignment: dict[tuple[int, int], int] = {}
    for part in parts:
        for inc, col in part.items():
            if inc in assignment:
                raise InvalidColoring(f"incidence {inc} colored twice")
            assignment[inc] = col
    return IncidenceColoring(n, assignment)


def walk_coloring(
    sg: SignedGraph, vertices: Sequence[int], edges: Sequence[int], first: int
) -> dict[Incidence, int]:
    """
    Color a walk with the pair {first, -first}.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]``. The far
    incidence of every edge is forced to -sigma times the near one and the
    next edge starts with the opposite color. A closed walk (last vertex equal
    to the first) is consistent iff its sign product is +1.
    """
    assignment: dict[Incidence, int] = {}
    color = first
    for i, e in enumerate(edges):
        near, far = vertices[i], vertices[i + 1]
        assignment[Incidence(near, e)] = color
        far_color = -sg.sign(e) * color
        assignment[Incidence(far, e)] = far_color
        color = -far_color
    return assignment
