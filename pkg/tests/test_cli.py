"""
Unit tests for the command-line interface.
"""

import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).parent.parent))

import pandas as pd

from signed_coloring.cli import COMMAND_REGISTRY, run_cli
from signed_coloring.parsers import load_signed_graph

UNBALANCED_C4 = """p signed 4 4
e 1 2 +
e 2 3 +
e 3 4 +
e 4 1 -
"""

TRIANGLE_ALL_ZERO = """p coloring 3 6
i 1 1 2 0
i 2 1 2 0
i 2 2 3 0
i 3 2 3 0
i 1 1 3 0
i 3 1 3 0
"""

TRIANGLE = """p signed 3 3
e 1 2 +
e 2 3 +
e 3 1 +
"""


class CliTestCase(unittest.TestCase):
    """Runs commands in a scratch directory and captures their output."""

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name, text):
        path = self.tmp / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    def run_command(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = run_cli([str(a) for a in argv])
        return code, out.getvalue()


class TestCommands(CliTestCase):
    """Tests for the individual subcommands."""

    def test_registry_covers_commands(self):
        self.assertEqual(
            set(COMMAND_REGISTRY),
            {"color", "chromatic-index", "classify", "ratio", "gen", "verify", "switch", "probe-conjecture"},
        )

    def test_chromatic_index_unbalanced_c4(self):
        code, out = self.run_command("chromatic-index", self.write("c4.sg", UNBALANCED_C4))
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "delta=2 chi=3")

    def test_chromatic_index_json(self):
        code, out = self.run_command("chromatic-index", self.write("c4.sg", UNBALANCED_C4), "--json")
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload["command"], "chromatic-index")
        self.assertEqual((payload["delta"], payload["chi"]), (2, 3))
        self.assertTrue(payload["valid"])

    def test_classify_wheel(self):
        wheel = self.tmp / "w5.sg"
        self.assertEqual(self.run_command("gen", "wheel", "5", "-o", wheel)[0], 0)
        code, out = self.run_command("classify", wheel)
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "class=1pm ratio=1/1")

    def test_classify_structural_only(self):
        code, out = self.run_command("gen", "class2pm", "1")
        graph_path = self.write("h.sg", out)
        code, out = self.run_command("classify", graph_path, "--structural-only")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "structural_2pm=true")

    def test_ratio_with_csv(self):
        csv_path = self.tmp / "samples.csv"
        code, out = self.run_command("ratio", self.write("c4.sg", UNBALANCED_C4), "--csv", csv_path)
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "class=mixed ratio=1/2")
        self.assertEqual(sorted(pd.read_csv(csv_path)["chi"].tolist()), [2, 3])

    def test_ratio_budget_exceeded(self):
        code, _ = self.run_command("ratio", self.write("c4.sg", UNBALANCED_C4), "--budget", "0")
        self.assertEqual(code, 2)

    def test_switch(self):
        out_path = self.tmp / "switched.sg"
        code, _ = self.run_command("switch", self.write("c4.sg", UNBALANCED_C4), "--vertices", "1", "-o", out_path)
        self.assertEqual(code, 0)
        signs = load_signed_graph(out_path).signed_graph.signature.signs
        self.assertEqual(signs, (-1, 1, 1, 1))

    def test_probe(self):
        code, out = self.run_command("probe-conjecture", "2")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("r=2 samples=16 exhaustive=true confirmed=8/8"))

    def test_color_prints_coloring_file(self):
        code, out = self.run_command("color", self.write("t.sg", TRIANGLE))
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("p coloring 2 6"))


class TestPipeline(CliTestCase):
    """gen, color and verify chained through files."""

    def test_gen_color_verify(self):
        for family, params in (("wheel", ["6"]), ("necklace", ["1", "2", "3"]), ("random_cactus", ["15"])):
            graph_path = self.tmp / f"{family}.sg"
            coloring_path = self.tmp / f"{family}.col"
            code, _ = self.run_command("gen", family, *params, "--sign", "random", "--seed", "3", "-o", graph_path)
            self.assertEqual(code, 0)
            code, out = self.run_command("color", graph_path, "-o", coloring_path)
            self.assertEqual(code, 0)
            self.assertTrue(out.startswith("method="))
            code, out = self.run_command("verify", graph_path, coloring_path)
            self.assertEqual(code, 0)
            self.assertEqual(out.strip(), "valid")

    def test_repeated_invocations_are_identical(self):
        """The same command line gives byte-identical output."""
        code, generated = self.run_command("gen", "random_cactus", "20", "--sign", "random", "--seed", "5")
        self.assertEqual(code, 0)
        self.assertEqual(self.run_command("gen", "random_cactus", "20", "--sign", "random", "--seed", "5")[1], generated)
        graph_path = self.write("cactus.sg", generated)
        for argv in (
            ("color", graph_path),
            ("color", graph_path, "--json"),
            ("chromatic-index", self.write("c4.sg", UNBALANCED_C4), "--json"),
            ("ratio", self.write("c4.sg", UNBALANCED_C4), "--json"),
        ):
            first, second = self.run_command(*argv), self.run_command(*argv)
            self.assertEqual(first[0], 0)
            self.assertEqual(first, second)

        outputs = []
        for name in ("a.col", "b.col"):
            self.run_command("color", graph_path, "-o", self.tmp / name)
            outputs.append((self.tmp / name).read_bytes())
        self.assertEqual(outputs[0], outputs[1])

    def test_gen_keeps_metadata(self):
        graph_path = self.tmp / "k.sg"
        self.run_command("gen", "complete_bipartite", "2", "3", "-o", graph_path)
        metadata = load_signed_graph(graph_path).metadata
        self.assertEqual(metadata["left"], [0, 1])
        self.assertEqual(metadata["signature"], "all_positive")


class TestExitCodes(CliTestCase):
    """Tests for error handling and exit codes."""

    def test_invalid_coloring(self):
        code, out = self.run_command(
            "verify", self.write("t.sg", TRIANGLE), self.write("t.col", TRIANGLE_ALL_ZERO)
        )
        self.assertEqual(code, 2)
        self.assertTrue(out.startswith("invalid"))

    def test_incomplete_coloring(self):
        partial = "p coloring 3 1\ni 1 1 2 0\n"
        code, out = self.run_command("verify", self.write("t.sg", TRIANGLE), self.write("t.col", partial), "--json")
        self.assertEqual(code, 2)
        self.assertFalse(json.loads(out)["valid"])

    def test_missing_file(self):
        code, _ = self.run_command("color", self.tmp / "absent.sg")
        self.assertEqual(code, 1)

    def test_malformed_file(self):
        code, _ = self.run_command("color", self.write("bad.sg", "p signed 2 1\ne 1 2 ?\n"))
        self.assertEqual(code, 1)

    def test_usage_errors(self):
        self.assertEqual(self.run_command("color")[0], 1)
        self.assertEqual(self.run_command("paint", "x.sg")[0], 1)
        self.assertEqual(self.run_command("gen", "wheel", "3")[0], 1)

    def test_bad_signature_index(self):
        code, _ = self.run_command("gen", "path", "3", "--sign", "index:4")
        self.assertEqual(code, 1)


if __name__ == "__main__":
    unittest.main()
