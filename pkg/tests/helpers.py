"""
Shared fixtures: small named graphs, a seeded random corpus and hypothesis
strategies.
"""

import itertools
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).parent.parent))

import networkx as nx
from hypothesis import strategies as st

from signed_coloring.models import Graph, Signature, SignedGraph


def graph(n, edges):
    return Graph(n, tuple(edges))


def signed(n, edges, signs=None):
    edges = tuple(edges)
    if signs is None:
        signs = (1,) * len(edges)
    return SignedGraph(Graph(n, edges), Signature(tuple(signs)))


def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def complete_edges(n):
    return list(itertools.combinations(range(n), 2))


def from_networkx(nxg):
    nxg = nx.convert_node_labels_to_integers(nxg)
    return Graph(nxg.number_of_nodes(), tuple(sorted((min(u, v), max(u, v)) for u, v in nxg.edges())))


def corpus(count=40, max_vertices=6, seed=0):
    """Seeded G(n, p) graphs with at least one edge."""
    out = []
    i = 0
    while len(out) < count:
        n = 2 + i % (max_vertices - 1)
        nxg = nx.gnp_random_graph(n, 0.5, seed=seed + i)
        i += 1
        if nxg.number_of_edges():
            out.append(from_networkx(nxg))
    return out


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6, connected=False):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return Graph(n, ())
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    g = Graph(n, tuple(chosen))
    if connected and not g.is_connected():
        # close the gaps with a spanning path
        extra = [(i, i + 1) for i in range(n - 1) if g.edge_id(i, i + 1) is None]
        g = Graph(n, tuple(chosen) + tuple(extra))
    return g


@st.composite
def signed_graphs(draw, min_vertices=1, max_vertices=6, connected=False):
    g = draw(graphs(min_vertices, max_vertices, connected))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=g.edge_count, max_size=g.edge_count))
    return SignedGraph(g, Signature(tuple(signs)))
