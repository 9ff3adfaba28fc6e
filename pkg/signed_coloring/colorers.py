"""
Constructive Δ-colorings of signed graph families.

Every family colorer splits the graph into edge-disjoint paths (and, for odd
Δ, a matching colored 0), gives each path its own color pair ±a and colors
it by propagation along the walk. Cacti are colored part by part over a
block decomposition; necklaces are grown two paths at a time.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional, Sequence

import networkx as nx

from .exact import Decomposition, DecompositionPart, PartKind, exact_chromatic_index
from .exceptions import (
    AnchorNotInPair,
    Disconnected,
    EqualParts,
    InternalInvariantError,
    InvalidInput,
    IsACycle,
    NotACactus,
    NotACycle,
    NotANecklace,
    NotAPath,
    NotAWheel,
    NotCompleteBipartite,
)
from .models import (
    ColorSet,
    Graph,
    Incidence,
    IncidenceColoring,
    Signature,
    SignedGraph,
    embed_coloring,
    max_degree,
    merge_colorings,
    verify_coloring,
    walk_coloring,
)

logger = logging.getLogger(__name__)

PartialColoring = dict[Incidence, int]
Hints = Mapping[str, Any]


# -------------------------------------------------------------------
# Path and cycle primitives
# -------------------------------------------------------------------

def path_vertices(g: Graph, edge_ids: Sequence[int], start: Optional[int] = None) -> list[int]:
    """
    Vertex sequence of a simple path given as consecutive edges.

    Raises:
        NotAPath: if consecutive edges do not chain or a vertex repeats
    """
    if not edge_ids:
        raise NotAPath("empty edge sequence")
    first = g.edges[edge_ids[0]]
    if start is None:
        if len(edge_ids) == 1:
            start = first[0]
        else:
            shared = set(first) & set(g.edges[edge_ids[1]])
            if len(shared) != 1:
                raise NotAPath(f"edges {edge_ids[0]} and {edge_ids[1]} do not share one vertex")
            start = first[0] if first[1] in shared else first[1]

    vertices = [start]
    current = start
    for e in edge_ids:
        a, b = g.edges[e]
        if current == a:
            current = b
        elif current == b:
            current = a
        else:
            raise NotAPath(f"edge {e} does not continue the path at vertex {current}")
        vertices.append(current)
    if len(set(vertices)) != len(vertices):
        raise NotAPath("edge sequence revisits a vertex")
    return vertices


def color_path(
    sg: SignedGraph,
    edge_ids: Sequence[int],
    pair: int,
    anchor: Optional[int] = None,
    start: Optional[int] = None,
) -> PartialColoring:
    """
    Color a path with the pair {pair, -pair} (or {0} when pair == 0).

    The first incidence gets ``anchor`` (default ``pair``); every far
    incidence is -sigma times the near one and the next edge takes the
    opposite pair element.

    Raises:
        NotAPath: not a simple path, or a {0}-colored path longer than one edge
        AnchorNotInPair: anchor outside {pair, -pair}
    """
    if anchor is None:
        anchor = pair
    if anchor not in (pair, -pair):
        raise AnchorNotInPair(f"anchor {anchor} not in {{{pair}, {-pair}}}")
    if pair == 0 and len(edge_ids) > 1:
        raise NotAPath("the single color 0 only colors a path of length 1")
    vertices = path_vertices(sg.graph, edge_ids, start)
    return walk_coloring(sg, vertices, edge_ids, anchor)


def cycle_walk(g: Graph, edge_ids: Sequence[int]) -> tuple[list[int], list[int]]:
    """
    Closed walk (vertices with the start repeated at the end, edges) of a
    simple cycle given as an edge set.

    Raises:
        NotACycle
    """
    ids = sorted(set(edge_ids))
    if len(ids) < 3 or len(ids) != len(edge_ids):
        raise NotACycle("a cycle needs at least three distinct edges")
    at: dict[int, list[int]] = {}
    for e in ids:
        for w in g.edges[e]:
            at.setdefault(w, []).append(e)
    if any(len(x) != 2 for x in at.values()) or len(at) != len(ids):
        raise NotACycle("edge set is not 2-regular on its vertices")

    start = g.edges[ids[0]][0]
    vertices, walk = [start], []
    v, e = start, ids[0]
    while True:
        walk.append(e)
        v = g.other_end(e, v)
        vertices.append(v)
        if v == start:
            break
        e = at[v][0] if at[v][1] == e else at[v][1]
    if len(walk) != len(ids):
        raise NotACycle("edge set splits into several cycles")
    return vertices, walk


def color_cycle(sg: SignedGraph, edge_ids: Optional[Sequence[int]] = None) -> IncidenceColoring:
    """
    Two colors for a balanced cycle, three otherwise (one edge colored 0).

    Raises:
        NotACycle
    """
    ids = list(range(sg.edge_count)) if edge_ids is None else list(edge_ids)
    vertices, walk = cycle_walk(sg.graph, ids)
    product = 1
    for e in walk:
        product *= sg.sign(e)
    if product == 1:
        return IncidenceColoring(2, walk_coloring(sg, vertices, walk, 1))

    last = walk[-1]
    assignment = walk_coloring(sg, vertices[:-1], walk[:-1], 1)
    assignment[Incidence(vertices[-2], last)] = 0
    assignment[Incidence(vertices[-1], last)] = 0
    return IncidenceColoring(3, assignment)


def _is_cycle_graph(g: Graph) -> bool:
    return (
        g.edge_count >= 3
        and g.edge_count == g.vertex_count
        and all(d == 2 for d in g.degrees())
        and g.is_connected()
    )


def _path_order(g: Graph) -> tuple[list[int], list[int]]:
    """Vertices and edges of a path graph from its lowest end vertex."""
    if g.edge_count != g.vertex_count - 1 or max_degree(g) > 2 or not g.is_connected():
        raise NotAPath("graph is not a path")
    if g.edge_count == 0:
        return [0], []
    start = min(v for v in range(g.vertex_count) if g.degree(v) == 1)
    vertices, edges = [start], []
    prev_edge = None
    v = start
    while True:
        nxt = [e for e in g.incident[v] if e != prev_edge]
        if not nxt:
            break
        prev_edge = nxt[0]
        edges.append(prev_edge)
        v = g.other_end(prev_edge, v)
        vertices.append(v)
    return vertices, edges


def color_path_graph(sg: SignedGraph) -> IncidenceColoring:
    """Δ-coloring of a signed path: 0 for a single edge, ±1 otherwise."""
    vertices, edges = _path_order(sg.graph)
    if not edges:
        return IncidenceColoring(0, {})
    if len(edges) == 1:
        return IncidenceColoring(1, walk_coloring(sg, vertices, edges, 0))
    return IncidenceColoring(2, walk_coloring(sg, vertices, edges, 1))


# -------------------------------------------------------------------
# Cacti
# -------------------------------------------------------------------

@dataclass(frozen=True)
class CactusPart:
    """
    A single edge (kind PATH) or a cycle of the decomposition.

    ``vertices`` starts at the attachment vertex; ``edges[i]`` joins
    ``vertices[i]`` and ``vertices[i + 1]``, and for cycles the last edge
    closes back to ``vertices[0]``.
    """

    kind: PartKind
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    attachment: Optional[int]


@dataclass(frozen=True)
class CactusDecomposition:
    parts: tuple[CactusPart, ...]

    def is_valid(self, g: Graph) -> bool:
        """Parts are edges or cycles, each later part meets the prefix in one vertex, union is g."""
        seen_vertices: set[int] = set()
        seen_edges: set[int] = set()
        for i, part in enumerate(self.parts):
            vs = set(part.vertices)
            if i > 0 and len(vs & seen_vertices) != 1:
                return False
            if seen_edges & set(part.edges):
                return False
            seen_vertices |= vs
            seen_edges |= set(part.edges)
        return seen_edges == set(range(g.edge_count))


def _blocks(g: Graph) -> Optional[list[list[int]]]:
    """
    Biconnected blocks as edge-id lists, by an iterative low-point DFS from
    vertex 0. Returns None when some vertex is not reached.
    """
    incident, edges = g.incident, g.edges
    disc = [-1] * g.vertex_count
    low = [0] * g.vertex_count
    disc[0] = 0
    time = 1
    blocks: list[list[int]] = []
    edge_stack: list[int] = []
    # frame: vertex, edge it was entered by, next position in its incidence list
    stack = [[0, -1, 0]]
    while stack:
        frame = stack[-1]
        v, entry, i = frame
        if i < len(incident[v]):
            frame[2] = i + 1
            e = incident[v][i]
            if e == entry:
                continue
            a, b = edges[e]
            w = b if a == v else a
            if disc[w] == -1:
                disc[w] = low[w] = time
                time += 1
                edge_stack.append(e)
                stack.append([w, e, 0])
            elif disc[w] < disc[v]:
                edge_stack.append(e)
                if disc[w] < low[v]:
                    low[v] = disc[w]
            continue
        stack.pop()
        if not stack:
            break
        parent = stack[-1][0]
        if low[v] < low[parent]:
            low[parent] = low[v]
        if low[v] >= disc[parent]:
            block = []
            while True:
                e = edge_stack.pop()
                block.append(e)
                if e == entry:
                    break
            blocks.append(block)
    return blocks if time == g.vertex_count else None


def decompose_cactus(g: Graph) -> CactusDecomposition:
    """
    Decompose a cactus into edges and cycles in attachment order.

    Blocks come from a low-point DFS over edge ids (linear time); each must
    be a single edge or a cycle. Blocks are emitted breadth-first over
    the block-cut tree, so every part after the first meets the union of the
    earlier ones exactly at its attachment vertex.

    Args:
        g: Connected graph to decompose

    Returns:
        CactusDecomposition whose parts cover every edge once

    Raises:
        Disconnected, NotACactus
    """
    if g.edge_count == 0:
        if g.vertex_count == 1:
            return CactusDecomposition(())
        raise Disconnected("edgeless graph with several vertices")
    found = _blocks(g)
    if found is None:
        raise Disconnected("a cactus must be connected")

    blocks: list[list[int]] = []
    # per block: vertex -> block edges at that vertex
    adjacency: list[dict[int, list[int]]] = []
    blocks_at: dict[int, list[int]] = {}
    for block in found:
        edges = sorted(block)
        at: dict[int, list[int]] = {}
        for e in edges:
            u, v = g.edges[e]
            at.setdefault(u, []).append(e)
            at.setdefault(v, []).append(e)
        if len(edges) > 1 and (len(at) != len(edges) or any(len(x) != 2 for x in at.values())):
            raise NotACactus(f"block with {len(edges)} edges on {len(at)} vertices is not a cycle")
        b = len(blocks)
        blocks.append(edges)
        adjacency.append(at)
        for w in at:
            blocks_at.setdefault(w, []).append(b)

    start_block = min(range(len(blocks)), key=lambda b: blocks[b][0])
    parts: list[CactusPart] = []
    queued = {start_block}
    expanded: set[int] = set()
    queue: deque[tuple[int, Optional[int]]] = deque([(start_block, None)])
    while queue:
        b, attach = queue.popleft()
        parts.append(_cactus_part(g, blocks[b], adjacency[b], attach))
        for w in sorted(adjacency[b]):
            if w in expanded:
                continue
            expanded.add(w)
            for other in blocks_at[w]:
                if other not in queued:
                    queued.add(other)
                    queue.append((other, w))

    logger.debug(f"Cactus decomposition: {len(parts)} parts")
    return CactusDecomposition(tuple(parts))


def _cactus_part(
    g: Graph, edges: list[int], at: dict[int, list[int]], attach: Optional[int]
) -> CactusPart:
    if len(edges) == 1:
        u, v = g.edges[edges[0]]
        if attach is not None and attach == v:
            u, v = v, u
        return CactusPart(PartKind.PATH, (u, v), (edges[0],), attach)
    start = attach if attach is not None else min(at)
    # walk the cycle from the attachment vertex along its lowest edge there
    vertices, walk = [start], []
    v, e = start, at[start][0]
    while True:
        walk.append(e)
        v = g.other_end(e, v)
        if v == start:
            break
        vertices.append(v)
        a, b = at[v]
        e = b if a == e else a
    return CactusPart(PartKind.CYCLE, tuple(vertices), tuple(walk), attach)


class _CactusColoring:
    """Running coloring of G'_l with per-vertex free-color lookup."""

    def __init__(self, sg: SignedGraph, delta: int):
        self.sg = sg
        self.palette = ColorSet(delta)
        self.assignment: PartialColoring = {}
        self.used: list[set[int]] = [set() for _ in range(sg.vertex_count)]
        # every color before cursor[v] in palette order is used at v
        self.cursor = [0] * sg.vertex_count

    def put(self, colors: Mapping[Incidence, int]) -> None:
        for inc, col in colors.items():
            old = self.assignment.get(inc)
            if old is not None:
                self.used[inc.vertex].discard(old)
            self.assignment[inc] = col
            self.used[inc.vertex].add(col)

    def free(self, v: int, count: int) -> list[int]:
        order = self.palette.order
        used = self.used[v]
        while self.cursor[v] < len(order) and order[self.cursor[v]] in used:
            self.cursor[v] += 1
        out = []
        i = self.cursor[v]
        while len(out) < count:
            if i >= len(order):
                raise InternalInvariantError(f"vertex {v} ran out of colors")
            if order[i] not in used:
                out.append(order[i])
            i += 1
        return out

    def walk(self, vertices: Sequence[int], edges: Sequence[int], first: int) -> None:
        self.put(walk_coloring(self.sg, vertices, edges, first))


def color_cactus(
    sg: SignedGraph, decomposition: Optional[CactusDecomposition] = None
) -> IncidenceColoring:
    """
    Δ-coloring of a signed cactus that is not a cycle.

    Induction over the decomposition: after coloring the first part, a
    pendant edge takes any color free at its attachment vertex, and a cycle
    attached at u takes the two smallest free colors α, β at u:
      (a) α = -β and Δ = 3: edge v1·w gets 0, the rest of the cycle is a
          path through u colored ±α;
      (b) α = -β and Δ > 3: v1·u·v2 colored ±α, the rest with a fresh ±γ;
      (c) α ≠ -β: u·v1 gets α, the rest of the cycle is a path from u
          colored ±β with u:uv2 = β (β ≠ 0, as 0 leads the palette order).

    Raises:
        IsACycle, NotACactus, Disconnected
    """
    g = sg.graph
    if _is_cycle_graph(g):
        raise IsACycle("cycles are colored by color_cycle")
    decomposition = decomposition or decompose_cactus(g)
    delta = max_degree(g)
    if delta <= 2:
        return color_path_graph(sg)

    state = _CactusColoring(sg, delta)
    for index, part in enumerate(decomposition.parts):
        if index == 0:
            _color_first_part(state, part, delta)
        elif part.kind == PartKind.PATH:
            u, v = part.vertices
            alpha = state.free(u, 1)[0]
            state.walk((u, v), part.edges, alpha)
        else:
            _color_attached_cycle(state, part, delta)

    logger.info(f"Cactus colored with {delta} colors over {len(decomposition.parts)} parts")
    return IncidenceColoring.from_incidences(delta, state.assignment)


def _color_first_part(state: _CactusColoring, part: CactusPart, delta: int) -> None:
    if part.kind == PartKind.PATH:
        state.walk(part.vertices, part.edges, state.palette.order[0])
        return
    closed = list(part.vertices) + [part.vertices[0]]
    product = 1
    for e in part.edges:
        product *= state.sg.sign(e)
    if product == 1:
        state.walk(closed, part.edges, 1)
        return
    # unbalanced: all but the closing edge as a ±1 path, closing edge 0 (or ±2 for even Δ)
    state.walk(closed[:-1], part.edges[:-1], 1)
    state.walk(closed[-2:], part.edges[-1:], 0 if delta % 2 else 2)


def _color_attached_cycle(state: _CactusColoring, part: CactusPart, delta: int) -> None:
    vs, es = part.vertices, part.edges
    u, v1 = vs[0], vs[1]
    alpha, beta = state.free(u, 2)

    if alpha == -beta and delta == 3:
        # w follows v1 on the cycle; for a triangle w = v2
        state.walk(vs[1:3], es[1:2], 0)
        rest_vertices = list(vs[2:]) + [u, v1]
        rest_edges = list(es[2:]) + [es[0]]
        state.walk(rest_vertices, rest_edges, alpha)
    elif alpha == -beta:
        gamma = next(a for a in range(1, state.palette.pairs + 1) if a != abs(alpha))
        state.walk([v1, u, vs[-1]], [es[0], es[-1]], alpha)
        state.walk(vs[1:], es[1:-1], gamma)
    else:
        state.walk([u, v1], [es[0]], alpha)
        state.walk([u] + list(reversed(vs[1:])), list(reversed(es[1:])), beta)


# -------------------------------------------------------------------
# Wheels
# -------------------------------------------------------------------

@dataclass(frozen=True)
class WheelStructure:
    hub: int
    rim: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rim) + 1


def recognize_wheel(g: Graph, hub: Optional[int] = None) -> WheelStructure:
    """
    Identify the hub and the rim order of W_n.

    Raises:
        NotAWheel
    """
    n = g.vertex_count
    if n < 4 or g.edge_count != 2 * (n - 1):
        raise NotAWheel(f"{n} vertices and {g.edge_count} edges do not form a wheel")
    if hub is None:
        candidates = [v for v in range(n) if g.degree(v) == n - 1]
        if not candidates:
            raise NotAWheel("no vertex is adjacent to all others")
        hub = candidates[0]
    elif not 0 <= hub < n or g.degree(hub) != n - 1:
        raise NotAWheel(f"vertex {hub} is not adjacent to all others")

    rim_vertices = [v for v in range(n) if v != hub]
    if any(g.degree(v) != 3 for v in rim_vertices):
        raise NotAWheel("rim vertices must have degree 3")
    start = rim_vertices[0]
    rim = [start]
    prev, cur = None, start
    while True:
        nxt = sorted(w for w in g.neighbors(cur) if w != hub and w != prev)
        if not nxt:
            raise NotAWheel("rim is broken")
        prev, cur = cur, nxt[0]
        if cur == start:
            break
        rim.append(cur)
        if len(rim) > n - 1:
            raise NotAWheel("rim does not close")
    if len(rim) != n - 1:
        raise NotAWheel("rim is not a single cycle through all non-hub vertices")
    return WheelStructure(hub, tuple(rim))


def _odd_wheel_paths(hub: int, rim: Sequence[int]) -> list[list[int]]:
    """k paths of four edges covering W_{2k+1}; rim has 2k vertices."""
    k = len(rim) // 2
    r = list(rim)
    last = len(r) - 1
    paths = [[r[i + 1], r[i], hub, r[i + k], r[i + k + 1]] for i in range(k - 1)]
    paths.append([r[k], r[k - 1], hub, r[last], r[0]])
    return paths


def wheel_paths(ws: WheelStructure) -> tuple[list[list[int]], Optional[tuple[int, int]]]:
    """
    Path decomposition of a wheel with at least 5 vertices.

    Odd n = 2k+1: k paths. Even n = 2k: the k-1 paths of W_{n-1} on the
    first n-2 rim vertices, with the closing rim edge subdivided by the last
    rim vertex, plus the single spoke to that vertex.
    """
    n = ws.n
    if n < 5:
        raise NotAWheel("W_4 is decomposed into matchings, not paths")
    if n % 2 == 1:
        return _odd_wheel_paths(ws.hub, ws.rim), None
    inner_rim = ws.rim[:-1]
    extra = ws.rim[-1]
    paths = _odd_wheel_paths(ws.hub, inner_rim)
    closing = paths[-1]
    # closing path ends with rim[-2] -> rim[0]; route it through the new vertex
    paths[-1] = closing[:-1] + [extra, closing[-1]]
    return paths, (ws.hub, extra)


def _edges_along(g: Graph, vertices: Sequence[int]) -> list[int]:
    out = []
    for a, b in zip(vertices, vertices[1:]):
        e = g.edge_id(a, b)
        if e is None:
            raise InternalInvariantError(f"vertices {a} and {b} are not adjacent")
        out.append(e)
    return out


def _check_cover(g: Graph, parts: list[DecompositionPart]) -> Decomposition:
    decomposition = Decomposition(tuple(parts))
    if not decomposition.covers(range(g.edge_count)):
        raise InternalInvariantError("constructed decomposition is not an edge-disjoint cover")
    return decomposition


def color_wheel(sg: SignedGraph, hub: Optional[int] = None) -> IncidenceColoring:
    """
    Δ-coloring of any signed wheel.

    W_4 = K_4: one of its three perfect matchings has as many negative edges
    (mod 2) as the whole graph; it gets 0 and the remaining balanced 4-cycle
    gets ±1. Larger wheels: one pair per path of wheel_paths, 0 on the
    leftover spoke.

    Raises:
        NotAWheel
    """
    g = sg.graph
    ws = recognize_wheel(g, hub)
    delta = ws.n - 1

    if ws.n == 4:
        a, b, c, d = (ws.hub,) + ws.rim
        parity = sg.signature.negative_count() % 2
        for (x, y), (z, w) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            matching = [g.edge_id(x, y), g.edge_id(z, w)]
            if sum(1 for e in matching if sg.sign(e) == -1) % 2 == parity:
                break
        cycle = [x, z, y, w, x]
        assignment = walk_coloring(sg, cycle, _edges_along(g, cycle), 1)
        for e in matching:
            for v in g.edges[e]:
                assignment[Incidence(v, e)] = 0
        return IncidenceColoring(3, assignment)

    paths, spoke = wheel_paths(ws)
    edge_paths = [_edges_along(g, p) for p in paths]
    parts = [DecompositionPart.of(PartKind.PATH, ep) for ep in edge_paths]
    if spoke is not None:
        parts.append(DecompositionPart.of(PartKind.MATCHING, [g.edge_id(*spoke)]))
    _check_cover(g, parts)

    pieces = [walk_coloring(sg, p, ep, j + 1) for j, (p, ep) in enumerate(zip(paths, edge_paths))]
    if spoke is not None:
        pieces.append(walk_coloring(sg, list(spoke), [g.edge_id(*spoke)], 0))
    return merge_colorings(delta, pieces)


# -------------------------------------------------------------------
# Necklaces
# -------------------------------------------------------------------

@dataclass(frozen=True)
class NecklaceStructure:
    """Hubs u, v and the u-v paths (vertex sequences from u), shortest first."""

    u: int
    v: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.paths)


def recognize_necklace(g: Graph, hubs: Optional[Sequence[int]] = None) -> NecklaceStructure:
    """
    Recover the hubs and internally disjoint paths of a necklace.

    Without hints the hubs are the only two vertices of degree other than 2;
    a 2-regular graph is reported as a cycle. With hub hints a cycle through
    both hubs is accepted as a necklace with k = 2.

    Raises:
        NotANecklace, IsACycle
    """
    if g.edge_count == 0 or not g.is_connected():
        raise NotANecklace("a necklace is connected and has edges")
    degrees = g.degrees()
    if hubs is None:
        special = [w for w in range(g.vertex_count) if degrees[w] != 2]
        if not special:
            raise IsACycle("2-regular graph has no hubs")
        if len(special) != 2:
            raise NotANecklace(f"{len(special)} vertices have degree other than 2")
        u, v = special
        if degrees[u] != degrees[v] or degrees[u] < 3:
            raise NotANecklace("hubs must have equal degree k >= 3")
    else:
        if len(hubs) != 2:
            raise NotANecklace(f"expected two hubs, got {len(hubs)}")
        u, v = hubs
        if u == v or degrees[u] != degrees[v] or degrees[u] < 2:
            raise NotANecklace("hub hints must be two distinct vertices of equal degree")
        if any(degrees[w] != 2 for w in range(g.vertex_count) if w not in (u, v)):
            raise NotANecklace("non-hub vertices must have degree 2")

    paths = []
    for e in g.incident[u]:
        seq = [u]
        cur, came = g.other_end(e, u), e
        seq.append(cur)
        while cur != v:
            if cur == u or degrees[cur] != 2:
                raise NotANecklace(f"walk from hub {u} does not reach hub {v}")
            came = next(x for x in g.incident[cur] if x != came)
            cur = g.other_end(came, cur)
            seq.append(cur)
        paths.append(tuple(seq))

    if sum(len(p) - 1 for p in paths) != g.edge_count:
        raise NotANecklace("paths between the hubs do not cover all edges")
    paths.sort(key=lambda p: (len(p), p))
    return NecklaceStructure(u, v, tuple(paths))


def color_necklace(sg: SignedGraph, hubs: Optional[Sequence[int]] = None) -> IncidenceColoring:
    """
    Δ-coloring of a signed necklace with k >= 3 paths G_1..G_k (shortest first).

    Odd k: u·u_2^1 and v·v_3^1 get 0 and the rest of G_1..G_3 is one path in
    ±1; each further pair G_{2p+2}, G_{2p+3} moves the 0 at u to u·u_{2p+2}^1
    and recolors the old 0-edge with the new pair along one path.
    Even k: G_1..G_4 form two paths colored ±1 (with u:u·u_3^1 = 1) and ±2;
    each further pair G_{2p+3}, G_{2p+4} moves the incidence colored 1 at u
    and recolors the old edge with the new pair.

    Raises:
        NotANecklace, IsACycle
    """
    g = sg.graph
    ns = recognize_necklace(g, hubs)
    k = ns.k
    if k < 3:
        raise IsACycle("a necklace with two paths is a cycle")
    u = ns.u

    def path(i: int) -> list[int]:
        return list(ns.paths[i - 1])

    assignment: PartialColoring = {}

    def paint(vertices: list[int], first: int) -> None:
        assignment.update(walk_coloring(sg, vertices, _edges_along(g, vertices), first))

    if k % 2 == 1:
        g1, g2, g3 = path(1), path(2), path(3)
        paint(g2[:2], 0)
        paint(g3[-2:], 0)
        paint(g2[1:] + g1[::-1][1:] + g3[1:-1], 1)
        zero_at = 2
        for p in range(1, (k - 1) // 2):
            a, b = path(2 * p + 2), path(2 * p + 3)
            paint(a[:2], 0)
            paint([path(zero_at)[1]] + b + a[::-1][1:-1], p + 1)
            zero_at = 2 * p + 2
    else:
        g1, g2, g3, g4 = path(1), path(2), path(3), path(4)
        first_edge = g.edge_id(g3[1], u)
        paint([g3[1]] + g1 + [g2[-2]], -sg.sign(first_edge))
        paint(g3[1:] + g4[::-1][1:] + g2[1:-1], 2)
        one_at = 3
        for p in range(1, (k - 2) // 2):
            a, b = path(2 * p + 3), path(2 * p + 4)
            paint(a[:2], 1)
            paint([path(one_at)[1]] + b + a[::-1][1:-1], p + 2)
            one_at = 2 * p + 3

    coloring = IncidenceColoring(k, assignment)
    if not verify_coloring(sg, coloring).valid:
        raise InternalInvariantError(f"necklace construction produced an invalid {k}-coloring")
    return coloring


# -------------------------------------------------------------------
# Complete bipartite graphs
# -------------------------------------------------------------------

@dataclass(frozen=True)
class BipartiteStructure:
    """Parts of K_{r,t} with r = len(left) <= t = len(right)."""

    left: tuple[int, ...]
    right: tuple[int, ...]


def recognize_complete_bipartite(
    g: Graph, parts: Optional[tuple[Sequence[int], Sequence[int]]] = None
) -> BipartiteStructure:
    """
    Raises:
        NotCompleteBipartite
    """
    if g.edge_count == 0:
        raise NotCompleteBipartite("edgeless graph")
    if parts is None:
        nxg = g.to_networkx()
        if not nx.is_connected(nxg) or not nx.is_bipartite(nxg):
            raise NotCompleteBipartite("graph is not a connected bipartite graph")
        a, b = nx.bipartite.sets(nxg)
    else:
        a, b = parts
    a, b = sorted(a), sorted(b)
    if set(a) & set(b) or len(a) + len(b) != g.vertex_count:
        raise NotCompleteBipartite("parts must partition the vertex set")
    if g.edge_count != len(a) * len(b) or any(g.edge_id(x, y) is None for x in a for y in b):
        raise NotCompleteBipartite("some cross edge is missing")
    if len(a) > len(b):
        a, b = b, a
    return BipartiteStructure(tuple(a), tuple(b))


def bipartite_paths(bs: BipartiteStructure) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """
    Paths G_j (j < s, t = 2s or 2s+1) with edges u_i v_{i+2j}, u_i v_{i+2j+1}
    (indices mod t), and for odd t the matching u_i v_{i-1}.
    """
    u, v = bs.left, bs.right
    r, t = len(u), len(v)
    paths = []
    for j in range(t // 2):
        seq = [v[(2 * j) % t]]
        for i in range(r):
            seq.extend((u[i], v[(i + 2 * j + 1) % t]))
        paths.append(seq)
    matching = [(u[i], v[(i - 1) % t]) for i in range(r)] if t % 2 else []
    return paths, matching


def color_complete_bipartite(
    sg: SignedGraph, parts: Optional[tuple[Sequence[int], Sequence[int]]] = None
) -> IncidenceColoring:
    """
    Δ-coloring of K_{r,t}, r < t: pair ±(j+1) on path G_j, 0 on the matching.

    Raises:
        NotCompleteBipartite, EqualParts
    """
    g = sg.graph
    bs = recognize_complete_bipartite(g, parts)
    r, t = len(bs.left), len(bs.right)
    if r == t:
        raise EqualParts(f"K_{{{r},{r}}} has equal parts; only the exact solver applies")

    paths, matching = bipartite_paths(bs)
    edge_paths = [_edges_along(g, p) for p in paths]
    matching_edges = [g.edge_id(x, y) for x, y in matching]
    parts_list = [DecompositionPart.of(PartKind.PATH, ep) for ep in edge_paths]
    if matching_edges:
        parts_list.append(DecompositionPart.of(PartKind.MATCHING, matching_edges))
    _check_cover(g, parts_list)

    pieces = [walk_coloring(sg, p, ep, j + 1) for j, (p, ep) in enumerate(zip(paths, edge_paths))]
    pieces.append({Incidence(w, e): 0 for e in matching_edges for w in g.edges[e]})
    return merge_colorings(t, pieces)


# -------------------------------------------------------------------
# Dispatcher
# -------------------------------------------------------------------

@dataclass(frozen=True)
class AutoColoring:
    coloring: IncidenceColoring
    method: str


def _color_exact(sg: SignedGraph, hints: Hints) -> IncidenceColoring:
    return exact_chromatic_index(sg, force=bool(hints.get("force", True))).witness


def _bipartite_hint(hints: Hints):
    if "left" in hints and "right" in hints:
        return (hints["left"], hints["right"])
    return None


COLORER_REGISTRY: dict[str, Callable[[SignedGraph, Hints], IncidenceColoring]] = {
    "path": lambda sg, hints: color_path_graph(sg),
    "cycle": lambda sg, hints: color_cycle(sg),
    "cactus": lambda sg, hints: color_cactus(sg),
    "wheel": lambda sg, hints: color_wheel(sg, hints.get("hub")),
    "necklace": lambda sg, hints: color_necklace(sg, hints.get("hubs")),
    "bipartite": lambda sg, hints: color_complete_bipartite(sg, _bipartite_hint(hints)),
    "exact": _color_exact,
}

AUTO_ORDER = ("path", "cycle", "cactus", "wheel", "necklace", "bipartite", "exact")


def color_with(sg: SignedGraph, method: str, hints: Optional[Hints] = None) -> AutoColoring:
    """Run one named colorer (or ``auto``)."""
    if method == "auto":
        return auto_color(sg, hints)
    if method not in COLORER_REGISTRY:
        raise InvalidInput(f"unknown coloring method: {method}")
    return AutoColoring(COLORER_REGISTRY[method](sg, hints or {}), method)


def _component_graph(sg: SignedGraph, vertices: list[int]) -> tuple[SignedGraph, list[int], list[int]]:
    """Component relabeled to 0..len-1, with vertex and edge maps back to sg."""
    g = sg.graph
    index = {v: i for i, v in enumerate(vertices)}
    edge_map = sorted({e for v in vertices for e in g.incident[v]})
    graph = Graph(len(vertices), tuple((index[g.edges[e][0]], index[g.edges[e][1]]) for e in edge_map))
    return SignedGraph(graph, Signature(tuple(sg.sign(e) for e in edge_map))), vertices, edge_map


def _auto_connected(sg: SignedGraph, hints: Hints) -> AutoColoring:
    for method in AUTO_ORDER:
        try:
            coloring = COLORER_REGISTRY[method](sg, hints)
        except InvalidInput as e:
            logger.debug(f"auto: {method} not applicable ({e})")
            continue
        return AutoColoring(coloring, method)
    raise InternalInvariantError("exact fallback did not return a coloring")


def auto_color(sg: SignedGraph, hints: Optional[Hints] = None) -> AutoColoring:
    """
    First applicable colorer in the order path, cycle, cactus, wheel,
    necklace, complete bipartite, exact. Disconnected graphs are colored per
    component and merged into M_n for the largest n used.
    """
    hints = hints or {}
    g = sg.graph
    if g.edge_count == 0:
        return AutoColoring(IncidenceColoring(0, {}), "exact")
    if g.is_connected():
        result = _auto_connected(sg, hints)
    else:
        pieces = []
        methods = []
        for comp in g.components():
            if len(comp) == 1:
                continue
            sub, vmap, emap = _component_graph(sg, comp)
            # hints refer to whole-graph vertex ids
            part = _auto_connected(sub, {})
            methods.append(part.method)
            pieces.append((sub, part.coloring, vmap, emap))
        n = max(c.n for _, c, _, _ in pieces)
        merged: PartialColoring = {}
        for sub, coloring, vmap, emap in pieces:
            for (v, e), col in embed_coloring(sub, coloring, n).assignment.items():
                merged[Incidence(vmap[v], emap[e])] = col
        result = AutoColoring(IncidenceColoring(n, merged), "+".join(sorted(set(methods))))

    if not verify_coloring(sg, result.coloring).valid:
        raise InternalInvariantError(f"{result.method} produced an invalid coloring")
    logger.info(f"auto_color: method={result.method} colors={result.coloring.n}")
    return result
