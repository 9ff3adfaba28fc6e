"""
Unit tests for reports module.
"""

import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).parent.parent))

import pandas as pd

from signed_coloring.classify import ClassReport, ClassSample, ClassVerdict, probe_conjecture
from signed_coloring.models import Signature, verify_coloring, IncidenceColoring
from signed_coloring.reports import (
    SAMPLE_COLUMNS,
    class_report_summary,
    class_report_table,
    export_csv,
    format_ratio,
    probe_table,
    render_json,
    render_text,
    verification_summary,
)
from tests.helpers import signed


def mixed_report():
    samples = (
        ClassSample(0, Signature((1, 1, 1, 1)), 2),
        ClassSample(1, Signature((-1, 1, 1, 1)), 3),
    )
    return ClassReport(
        2, ClassVerdict.MIXED, 1, 2, Fraction(1, 2),
        structural_2pm=False, witness_matching=((0, 1), (2, 3)), samples=samples,
    )


class TestSummaries(unittest.TestCase):
    """Tests for the summary dictionaries."""

    def test_format_ratio(self):
        """Whole ratios keep their denominator."""
        report = mixed_report()
        self.assertEqual(format_ratio(report), "1/2")
        whole = ClassReport(1, ClassVerdict.CLASS_1PM, 1, 1, Fraction(1))
        self.assertEqual(format_ratio(whole), "1/1")

    def test_class_summary_one_indexed_witness(self):
        summary = class_report_summary(mixed_report())
        self.assertEqual(summary["verdict"], "mixed")
        self.assertEqual(summary["ratio"], "1/2")
        self.assertEqual(summary["witness_matching"], [[1, 2], [3, 4]])
        self.assertNotIn("ordinary_class_hint", summary)

    def test_verification_summary(self):
        sg = signed(2, [(0, 1)])
        report = verify_coloring(sg, IncidenceColoring(1, {(0, 0): 0, (1, 0): 0}))
        self.assertEqual(verification_summary(report), {"valid": True, "violations": []})

    def test_verification_summary_one_indexed(self):
        """Vertex 1 seeing -1 twice is reported as vertex 2."""
        sg = signed(3, [(0, 1), (1, 2)])
        c = IncidenceColoring(2, {(0, 0): 1, (1, 0): -1, (1, 1): -1, (2, 1): 1})
        violations = verification_summary(verify_coloring(sg, c))["violations"]
        self.assertIn(2, [v["vertex"] for v in violations if v["kind"] == "vertex"])


class TestTables(unittest.TestCase):
    """Tests for the pandas tables."""

    def test_class_report_table(self):
        table = class_report_table(mixed_report())
        self.assertEqual(list(table.columns), SAMPLE_COLUMNS)
        self.assertEqual(table["signature"].tolist(), ["++++", "-+++"])
        self.assertEqual(table["negative_edges"].tolist(), ["", "1"])
        self.assertEqual(table["chi"].tolist(), [2, 3])

    def test_empty_table_keeps_columns(self):
        report = ClassReport(1, ClassVerdict.CLASS_1PM, 1, 1, Fraction(1))
        self.assertEqual(list(class_report_table(report).columns), SAMPLE_COLUMNS)

    def test_probe_table(self):
        report = probe_conjecture(2, keep_samples=True)
        table = probe_table(report)
        self.assertEqual(len(table), 16)
        self.assertEqual(int(table["predicted_delta"].sum()), 8)
        # on K_{2,2} the prediction is exact
        self.assertTrue(((table["chi"] == 2) == table["predicted_delta"]).all())

    def test_export_csv(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "samples.csv"
            export_csv(class_report_table(mixed_report()), path)
            again = pd.read_csv(path)
            self.assertEqual(list(again.columns), SAMPLE_COLUMNS)
            self.assertEqual(len(again), 2)


class TestRendering(unittest.TestCase):
    """Tests for render_text and render_json."""

    def test_classify_line(self):
        self.assertEqual(render_text("classify", class_report_summary(mixed_report())), "class=mixed ratio=1/2")

    def test_structural_only_line(self):
        text = render_text("classify", {"verdict": None, "structural_2pm": True})
        self.assertEqual(text, "structural_2pm=true")

    def test_chromatic_index_line(self):
        self.assertEqual(render_text("chromatic-index", {"delta": 2, "chi": 3}), "delta=2 chi=3")

    def test_verify_lines(self):
        payload = {"valid": False, "violations": [{"kind": "edge", "edge": 1, "detail": "colors 1 and 1"}]}
        self.assertEqual(render_text("verify", payload).splitlines(), ["invalid", "  edge edge=1: colors 1 and 1"])
        self.assertEqual(render_text("verify", {"valid": True, "violations": []}), "valid")

    def test_json_carries_command(self):
        out = json.loads(render_json("ratio", class_report_summary(mixed_report())))
        self.assertEqual(out["command"], "ratio")
        self.assertEqual(out["ratio"], "1/2")


if __name__ == "__main__":
    unittest.main()
