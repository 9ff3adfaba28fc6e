"""
Unit tests for exact module.
"""

import unittest
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).parent.parent))

from hypothesis import given, settings, strategies as st

from signed_coloring.exact import (
    ChromaticResult,
    Decomposition,
    DecompositionPart,
    PartKind,
    coloring_from_decomposition,
    exact_chromatic_index,
    extract_decomposition,
    is_colorable,
    verify_regular_decomposition,
)
from signed_coloring.exceptions import (
    BudgetExceeded,
    InternalInvariantError,
    InvalidDecomposition,
    NotRegular,
)
from signed_coloring.models import IncidenceColoring, max_degree, verify_coloring
from signed_coloring.switching import SwitchSet, all_signatures, is_balanced, switch
from tests.helpers import complete_edges, corpus, cycle_edges, signed, signed_graphs


class TestExactChromaticIndex(unittest.TestCase):
    """Tests for exact_chromatic_index."""

    def test_single_edge(self):
        result = exact_chromatic_index(signed(2, [(0, 1)]))
        self.assertEqual((result.delta, result.chi), (1, 1))
        self.assertEqual(result.witness.colors_used(), {0})

    def test_edgeless(self):
        result = exact_chromatic_index(signed(3, []))
        self.assertEqual((result.delta, result.chi), (0, 0))

    def test_balanced_c4(self):
        self.assertEqual(exact_chromatic_index(signed(4, cycle_edges(4))).chi, 2)

    def test_unbalanced_c4(self):
        self.assertEqual(exact_chromatic_index(signed(4, cycle_edges(4), [1, 1, 1, -1])).chi, 3)

    def test_cycles_exhaustive(self):
        """Every signed cycle needs 2 colors iff balanced, else 3."""
        for n in range(3, 7):
            base = signed(n, cycle_edges(n))
            for signature in all_signatures(base.graph):
                sg = base.with_signature(signature)
                expected = 2 if is_balanced(sg) else 3
                self.assertEqual(exact_chromatic_index(sg).chi, expected)

    def test_k4_all_signatures(self):
        """K4 = W4 is Δ-colorable under every signature."""
        base = signed(4, complete_edges(4))
        for signature in all_signatures(base.graph):
            result = exact_chromatic_index(base.with_signature(signature))
            self.assertEqual(result.chi, 3)

    def test_disconnected_takes_maximum(self):
        """An unbalanced triangle next to an edge needs 3 colors overall."""
        sg = signed(5, cycle_edges(3) + [(3, 4)], [1, 1, -1, 1])
        result = exact_chromatic_index(sg)
        self.assertEqual(result.chi, 3)
        self.assertTrue(verify_coloring(sg, result.witness).valid)

    def test_budget(self):
        sg = signed(5, complete_edges(5))
        with self.assertRaises(BudgetExceeded):
            exact_chromatic_index(sg, edge_limit=5)
        self.assertEqual(exact_chromatic_index(sg, force=True, edge_limit=5).delta, 4)

    def test_behr_breach_is_internal_error(self):
        """A result outside [Δ, Δ+1] cannot be constructed."""
        with self.assertRaises(InternalInvariantError):
            ChromaticResult(5, IncidenceColoring(5, {}), 2)

    def test_corpus_bounds(self):
        """Δ <= chi <= Δ+1 with a valid witness on the seeded corpus."""
        for g in corpus(count=30, max_vertices=6):
            sg = signed(g.vertex_count, g.edges)
            result = exact_chromatic_index(sg)
            self.assertIn(result.chi, (result.delta, result.delta + 1))
            self.assertTrue(verify_coloring(sg, result.witness).valid)

    def test_even_delta_all_positive_achieves_delta(self):
        """All-positive signatures of even-Δ corpus graphs are Δ-colorable."""
        for g in corpus(count=30, max_vertices=6):
            delta = max_degree(g)
            if delta % 2 == 0:
                sg = signed(g.vertex_count, g.edges)
                self.assertEqual(exact_chromatic_index(sg).chi, delta)

    @settings(max_examples=60, deadline=None)
    @given(signed_graphs(min_vertices=2, max_vertices=6))
    def test_behr_bounds(self, sg):
        result = exact_chromatic_index(sg)
        self.assertLessEqual(result.delta, result.chi)
        self.assertLessEqual(result.chi, result.delta + 1)
        self.assertTrue(verify_coloring(sg, result.witness).valid)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(min_vertices=2, max_vertices=6), st.data())
    def test_switching_invariance(self, sg, data):
        vertices = data.draw(st.sets(st.integers(0, sg.vertex_count - 1)))
        switched = switch(sg, SwitchSet.of(vertices))
        self.assertEqual(exact_chromatic_index(sg).chi, exact_chromatic_index(switched).chi)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(min_vertices=2, max_vertices=6), st.data())
    def test_edge_order_does_not_change_chi(self, sg, data):
        """Relisting the edges in another order keeps chi."""
        order = data.draw(st.permutations(range(sg.edge_count)))
        relisted = signed(sg.vertex_count, [sg.graph.edges[e] for e in order], [sg.sign(e) for e in order])
        self.assertEqual(exact_chromatic_index(relisted).chi, exact_chromatic_index(sg).chi)

    def test_repeated_runs_agree(self):
        """The same input gives the same witness."""
        sg = signed(5, complete_edges(5), [1, -1, 1, 1, -1, 1, 1, -1, 1, 1])
        first, second = exact_chromatic_index(sg), exact_chromatic_index(sg)
        self.assertEqual(first.chi, second.chi)
        self.assertEqual(first.witness.assignment, second.witness.assignment)


class TestIsColorable(unittest.TestCase):
    """Tests for is_colorable."""

    def test_unbalanced_triangle(self):
        sg = signed(3, cycle_edges(3), [1, 1, -1])
        self.assertIsNone(is_colorable(sg, 2))
        self.assertIsNotNone(is_colorable(sg, 3))

    def test_restricted_edges(self):
        """Only the listed edges are colored."""
        sg = signed(4, [(0, 1), (1, 2), (2, 3)])
        c = is_colorable(sg, 1, [0, 2])
        self.assertEqual(len(c.assignment), 4)


class TestRegularDecomposition(unittest.TestCase):
    """Tests for the regular decomposition functions."""

    def test_extract_from_k4(self):
        sg = signed(4, complete_edges(4), [1, -1, 1, 1, 1, -1])
        c = exact_chromatic_index(sg).witness
        d = extract_decomposition(sg, c)
        self.assertEqual(len(d.of_kind(PartKind.TWO_REGULAR_SPANNING)), 1)
        self.assertEqual(len(d.of_kind(PartKind.MATCHING)), 1)
        self.assertTrue(verify_regular_decomposition(sg, d))

    def test_rebuild_coloring(self):
        sg = signed(4, complete_edges(4), [1, -1, 1, 1, 1, -1])
        d = extract_decomposition(sg, exact_chromatic_index(sg).witness)
        c = coloring_from_decomposition(sg, d)
        self.assertEqual(c.n, 3)
        self.assertTrue(verify_coloring(sg, c).valid)

    def test_unbalanced_cycle_part_rejected(self):
        """An unbalanced C4 is not its own balanced 2-factor."""
        sg = signed(4, cycle_edges(4), [1, 1, 1, -1])
        d = Decomposition((DecompositionPart.of(PartKind.TWO_REGULAR_SPANNING, range(4)),))
        self.assertFalse(verify_regular_decomposition(sg, d))
        with self.assertRaises(InvalidDecomposition):
            coloring_from_decomposition(sg, d)

    def test_balanced_cycle_accepted(self):
        sg = signed(4, cycle_edges(4), [1, -1, 1, -1])
        d = Decomposition((DecompositionPart.of(PartKind.TWO_REGULAR_SPANNING, range(4)),))
        self.assertTrue(verify_regular_decomposition(sg, d))

    def test_overlapping_parts_rejected(self):
        sg = signed(4, complete_edges(4))
        d = Decomposition((
            DecompositionPart.of(PartKind.TWO_REGULAR_SPANNING, [0, 3, 5, 2]),
            DecompositionPart.of(PartKind.MATCHING, [0, 5]),
        ))
        self.assertFalse(verify_regular_decomposition(sg, d))

    def test_k5_splits_into_two_spanning_parts(self):
        """All-positive K5 is 4-colorable and splits into two balanced 5-cycles."""
        sg = signed(5, complete_edges(5))
        d = extract_decomposition(sg, exact_chromatic_index(sg).witness)
        parts = d.of_kind(PartKind.TWO_REGULAR_SPANNING)
        self.assertEqual(len(parts), 2)
        self.assertEqual(d.of_kind(PartKind.MATCHING), [])
        self.assertEqual(sorted(len(p.edges) for p in parts), [5, 5])
        check = verify_regular_decomposition(sg, d)
        self.assertTrue(check.valid)
        self.assertEqual(check.degree, 4)
        self.assertFalse(check.small_degree)

    def test_small_degree_flagged(self):
        """A cubic graph is checked and marked as a small-degree case."""
        sg = signed(4, complete_edges(4))
        check = verify_regular_decomposition(sg, extract_decomposition(sg, exact_chromatic_index(sg).witness))
        self.assertTrue(check)
        self.assertTrue(check.small_degree)
        self.assertEqual(check.degree, 3)

    def test_rejection_keeps_flag(self):
        sg = signed(4, cycle_edges(4), [1, 1, 1, -1])
        d = Decomposition((DecompositionPart.of(PartKind.TWO_REGULAR_SPANNING, range(4)),))
        check = verify_regular_decomposition(sg, d)
        self.assertFalse(check)
        self.assertTrue(check.small_degree)

    def test_not_regular(self):
        with self.assertRaises(NotRegular):
            verify_regular_decomposition(signed(3, [(0, 1), (1, 2)]), Decomposition(()))

    def test_decomposition_matches_colorability_on_k4(self):
        """Δ-colorable iff extraction yields a verified decomposition."""
        base = signed(4, complete_edges(4))
        for signature in all_signatures(base.graph):
            sg = base.with_signature(signature)
            c = is_colorable(sg, 3)
            self.assertIsNotNone(c)
            self.assertTrue(verify_regular_decomposition(sg, extract_decomposition(sg, c)))


if __name__ == "__main__":
    unittest.main()
