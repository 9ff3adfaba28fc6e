"""
Unit tests for models module.
"""

import unittest
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).parent.parent))

import networkx as nx
from hypothesis import given, settings, strategies as st

from signed_coloring.exact import exact_chromatic_index
from signed_coloring.exceptions import (
    DomainMismatch,
    DuplicateEdge,
    InvalidColoring,
    SelfLoop,
    VertexOutOfRange,
)
from signed_coloring.models import (
    Incidence,
    IncidenceColoring,
    ViolationKind,
    build_signed_graph,
    color_set,
    embed_coloring,
    max_degree,
    merge_colorings,
    negate_at,
    restrict,
    verify_coloring,
    walk_coloring,
)
from signed_coloring.switching import SwitchSet, switch
from tests.helpers import cycle_edges, signed, signed_graphs


def p3_coloring():
    """Valid 2-coloring of the all-positive path 0-1-2."""
    return IncidenceColoring(2, {(0, 0): 1, (1, 0): -1, (1, 1): 1, (2, 1): -1})


class TestColorSet(unittest.TestCase):
    """Tests for the color sets M_n."""

    def test_odd_contains_zero(self):
        """M_3 is {0, 1, -1}."""
        self.assertEqual(color_set(3).members, frozenset({0, 1, -1}))

    def test_even_has_no_zero(self):
        """M_4 is {1, -1, 2, -2}."""
        self.assertEqual(color_set(4).members, frozenset({1, -1, 2, -2}))

    def test_single_color(self):
        """M_1 is {0}."""
        self.assertEqual(color_set(1).members, frozenset({0}))

    def test_cardinality_and_symmetry(self):
        """|M_n| = n and M_n is closed under negation."""
        for n in range(1, 12):
            cs = color_set(n)
            self.assertEqual(len(cs), n)
            self.assertEqual({-c for c in cs}, set(cs.members))
            self.assertEqual(0 in cs, n % 2 == 1)

    def test_order_starts_with_zero_then_pairs(self):
        """Search order lists 0 first, then +a before -a."""
        self.assertEqual(color_set(5).order, (0, 1, -1, 2, -2))


class TestBuildSignedGraph(unittest.TestCase):
    """Tests for build_signed_graph."""

    def test_single_edge(self):
        """Two vertices and one edge."""
        sg = build_signed_graph(2, [(0, 1, 1)])
        self.assertEqual(sg.vertex_count, 2)
        self.assertEqual(sg.edge_count, 1)

    def test_edge_ids_follow_input_order(self):
        """Edge ids are input positions."""
        sg = build_signed_graph(3, [(0, 1, 1), (1, 2, 1), (2, 0, -1)])
        self.assertEqual(sg.graph.edges[2], (2, 0))
        self.assertEqual(sg.sign(2), -1)
        self.assertEqual(sg.graph.edge_id(0, 2), 2)

    def test_duplicate_edge_rejected(self):
        """A repeated pair raises DuplicateEdge."""
        with self.assertRaises(DuplicateEdge):
            build_signed_graph(3, [(0, 1, 1), (0, 1, -1)])

    def test_reversed_duplicate_rejected(self):
        """(u, v) and (v, u) are the same edge."""
        with self.assertRaises(DuplicateEdge):
            build_signed_graph(3, [(0, 1, 1), (1, 0, 1)])

    def test_self_loop_rejected(self):
        """Loops are not allowed."""
        with self.assertRaises(SelfLoop):
            build_signed_graph(2, [(1, 1, 1)])

    def test_vertex_out_of_range(self):
        """Endpoints must be below vertex_count."""
        with self.assertRaises(VertexOutOfRange):
            build_signed_graph(2, [(0, 2, 1)])

    def test_bad_sign_is_value_error(self):
        """Signs other than +1/-1 are input errors."""
        with self.assertRaises(ValueError):
            build_signed_graph(2, [(0, 1, 0)])


class TestMaxDegree(unittest.TestCase):
    """Tests for max_degree."""

    def test_edgeless(self):
        self.assertEqual(max_degree(signed(3, []).graph), 0)

    def test_star(self):
        self.assertEqual(max_degree(signed(4, [(0, 1), (0, 2), (0, 3)]).graph), 3)


class TestGraphNetworkx(unittest.TestCase):
    """Tests for Graph.to_networkx."""

    def test_built_once_and_frozen(self):
        g = signed(3, [(0, 1), (1, 2)]).graph
        nxg = g.to_networkx()
        self.assertIs(g.to_networkx(), nxg)
        self.assertTrue(nx.is_frozen(nxg))
        self.assertEqual(nxg[1][2]["id"], 1)

    def test_components(self):
        g = signed(5, [(3, 4), (0, 1)]).graph
        self.assertEqual(g.components(), [[0, 1], [2], [3, 4]])
        self.assertFalse(g.is_connected())


class TestVerifyColoring(unittest.TestCase):
    """Tests for verify_coloring."""

    def setUp(self):
        self.p3 = signed(3, [(0, 1), (1, 2)])

    def test_valid_path(self):
        """The standard P3 coloring is valid."""
        self.assertTrue(verify_coloring(self.p3, p3_coloring()).valid)

    def test_edge_condition(self):
        """Equal colors on a positive edge break f(u) = -sigma f(v)."""
        c = IncidenceColoring(2, {(0, 0): 1, (1, 0): 1, (1, 1): -1, (2, 1): 1})
        report = verify_coloring(self.p3, c)
        self.assertFalse(report.valid)
        self.assertIn(ViolationKind.EDGE, {v.kind for v in report.violations})

    def test_vertex_condition(self):
        """Vertex 1 seeing the same color twice is reported."""
        c = IncidenceColoring(2, {(0, 0): 1, (1, 0): -1, (1, 1): -1, (2, 1): 1})
        report = verify_coloring(self.p3, c)
        kinds = {v.kind for v in report.violations}
        self.assertIn(ViolationKind.VERTEX, kinds)
        self.assertEqual([v.vertex for v in report.violations if v.kind == ViolationKind.VERTEX], [1])

    def test_palette_condition(self):
        """Color 0 is not in M_2."""
        c = IncidenceColoring(2, {(0, 0): 0, (1, 0): 0, (1, 1): 1, (2, 1): -1})
        report = verify_coloring(self.p3, c)
        self.assertIn(ViolationKind.PALETTE, {v.kind for v in report.violations})

    def test_negative_edge_takes_equal_colors(self):
        """On a negative edge both ends carry the same color."""
        sg = signed(2, [(0, 1)], [-1])
        self.assertTrue(verify_coloring(sg, IncidenceColoring(2, {(0, 0): 1, (1, 0): 1})).valid)

    def test_domain_mismatch(self):
        """Missing incidences raise DomainMismatch."""
        with self.assertRaises(DomainMismatch):
            verify_coloring(self.p3, IncidenceColoring(2, {(0, 0): 1, (1, 0): -1}))

    def test_empty_coloring_of_edgeless_graph(self):
        """n = 0 is the empty coloring."""
        self.assertTrue(verify_coloring(signed(2, []), IncidenceColoring(0, {})).valid)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(min_vertices=2, max_vertices=5), st.data())
    def test_verdict_survives_edge_relabelling(self, sg, data):
        """Renumbering edge ids (and the coloring with them) keeps the verdict."""
        c = exact_chromatic_index(sg).witness
        if sg.edge_count and data.draw(st.booleans()):
            # break the coloring at one incidence
            e = data.draw(st.integers(0, sg.edge_count - 1))
            u = sg.graph.edges[e][0]
            broken = dict(c.assignment)
            broken[Incidence(u, e)] = -sg.sign(e) * c.color(sg.graph.edges[e][1], e) + 1
            c = IncidenceColoring(c.n + 2, broken)
        order = data.draw(st.permutations(range(sg.edge_count)))
        new_id = {old: new for new, old in enumerate(order)}
        relabelled = signed(sg.vertex_count, [sg.graph.edges[e] for e in order], [sg.sign(e) for e in order])
        moved = IncidenceColoring(c.n, {(v, new_id[e]): col for (v, e), col in c.assignment.items()})
        self.assertEqual(verify_coloring(relabelled, moved).valid, verify_coloring(sg, c).valid)

    def test_violation_as_dict(self):
        """Violations serialise kind and location."""
        c = IncidenceColoring(2, {(0, 0): 1, (1, 0): 1, (1, 1): -1, (2, 1): 1})
        first = verify_coloring(self.p3, c).violations[0].as_dict()
        self.assertEqual(first["kind"], "edge")
        self.assertIn("edge", first)


class TestIncidenceColoring(unittest.TestCase):
    """Tests for IncidenceColoring construction."""

    def test_keys_normalised(self):
        c = p3_coloring()
        self.assertIsInstance(next(iter(c.assignment)), Incidence)
        self.assertEqual(c.color(1, 1), 1)

    def test_zero_colors_only_when_empty(self):
        with self.assertRaises(InvalidColoring):
            IncidenceColoring(0, {(0, 0): 0})

    def test_from_incidences_keeps_assignment(self):
        """Colorer output is wrapped as is."""
        assignment = {Incidence(0, 0): 1, Incidence(1, 0): -1}
        c = IncidenceColoring.from_incidences(2, assignment)
        self.assertIs(c.assignment, assignment)
        self.assertEqual(c, IncidenceColoring(2, {(0, 0): 1, (1, 0): -1}))
        self.assertTrue(verify_coloring(signed(2, [(0, 1)]), c).valid)

    def test_from_incidences_checks_count(self):
        with self.assertRaises(InvalidColoring):
            IncidenceColoring.from_incidences(0, {Incidence(0, 0): 0})


class TestEmbedColoring(unittest.TestCase):
    """Tests for embed_coloring."""

    def test_odd_into_even_moves_zero(self):
        """An unbalanced triangle's 3-coloring embeds into M_4."""
        sg = signed(3, cycle_edges(3), [1, 1, -1])
        c = exact_chromatic_index(sg).witness
        self.assertEqual(c.n, 3)
        embedded = embed_coloring(sg, c, 4)
        self.assertEqual(embedded.n, 4)
        self.assertNotIn(0, embedded.colors_used())
        self.assertTrue(verify_coloring(sg, embedded).valid)

    def test_smaller_target_rejected(self):
        with self.assertRaises(InvalidColoring):
            embed_coloring(signed(3, [(0, 1), (1, 2)]), p3_coloring(), 1)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(min_vertices=2, max_vertices=5))
    def test_embedding_stays_valid(self, sg):
        """Embedding a witness into M_{chi+1} and M_{chi+2} keeps it valid."""
        c = exact_chromatic_index(sg).witness
        if c.n == 0:
            return
        for n in (c.n + 1, c.n + 2):
            self.assertTrue(verify_coloring(sg, embed_coloring(sg, c, n)).valid)


class TestNegateAt(unittest.TestCase):
    """Tests for negate_at as the transport of colorings under switching."""

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(min_vertices=2, max_vertices=5))
    def test_transport_under_switching(self, sg):
        """Negating at S colors the graph switched at S."""
        c = exact_chromatic_index(sg).witness
        s = SwitchSet.of(range(0, sg.vertex_count, 2))
        switched = switch(sg, s)
        self.assertTrue(verify_coloring(switched, negate_at(c, s.vertices)).valid)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(min_vertices=2, max_vertices=5))
    def test_global_negation_stays_valid(self, sg):
        """Negating every color of a valid coloring keeps it valid."""
        c = exact_chromatic_index(sg).witness
        negated = negate_at(c, range(sg.vertex_count))
        self.assertTrue(verify_coloring(sg, negated).valid)
        self.assertEqual(negated.colors_used(), {-x for x in c.colors_used()})


class TestRestrictAndMerge(unittest.TestCase):
    """Tests for restrict, merge_colorings and walk_coloring."""

    def test_restrict_keeps_vertices(self):
        sg = signed(4, [(0, 1), (1, 2), (2, 3)], [1, -1, 1])
        sub = restrict(sg, [2, 1])
        self.assertEqual(sub.vertex_count, 4)
        self.assertEqual(sub.graph.edges, ((2, 3), (1, 2)))
        self.assertEqual(sub.signature.signs, (1, -1))

    def test_merge_rejects_overlap(self):
        with self.assertRaises(InvalidColoring):
            merge_colorings(2, [{(0, 0): 1}, {(0, 0): -1}])

    def test_walk_coloring_balanced_cycle_closes(self):
        """A closed walk with sign product +1 is a valid 2-coloring."""
        sg = signed(4, cycle_edges(4), [1, -1, -1, 1])
        c = IncidenceColoring(2, walk_coloring(sg, [0, 1, 2, 3, 0], [0, 1, 2, 3], 1))
        self.assertTrue(verify_coloring(sg, c).valid)


if __name__ == "__main__":
    unittest.main()
