#!/usr/bin/env python

"""Unit testing for the command-line front end"""

from contextlib import redirect_stdout
import io
import json
from pathlib import Path
import tempfile
import unittest

import crownlab as cl
from crownlab.cli import EXIT_FAILED, EXIT_INVALID, EXIT_OK, main


def run(*argv):
    out = io.StringIO()
    with redirect_stdout(out):
        code = main(list(argv))
    text = out.getvalue()
    return code, json.loads(text) if text.strip() else None


class _TestWithDocument:
    """Writes ``DOCUMENT`` to a temporary file for each test"""

    DOCUMENT = None

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = str(Path(self.tmp.name) / "instance.json")
        Path(self.path).write_text(json.dumps(self.DOCUMENT))

    def tearDown(self):
        self.tmp.cleanup()


class TestSquareCommands(_TestWithDocument, unittest.TestCase):
    # 2-path 0 1 2 on the square 0 1 2 3 with the chord 0-2.
    DOCUMENT = {
        "rotation": {"0": [1, 2, 3], "1": [2, 0], "2": [3, 0, 1], "3": [0, 2]},
        "outer": [0, 1, 2, 3],
        "lists": {"0": [0], "1": [0, 1, 2, 3, 4], "2": [1], "3": [0, 1, 2]},
        "path": [0, 1, 2],
    }

    def test_solve(self):
        code, out = run("solve", self.path)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out["extendable"])
        self.assertEqual(out["coloring"]["3"], 2)

    def test_solve_with_phi(self):
        code, out = run("solve", self.path, "--phi", '{"3": 4}')
        self.assertEqual(code, EXIT_INVALID)
        self.assertIsNone(out)
        code, out = run("solve", self.path, "--phi", '{"1": 2}')
        self.assertEqual(out["coloring"]["1"], 2)

    def test_lambda(self):
        code, out = run("lambda", self.path, "--colors", "[0, null, 1]")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out["lambda"], [2, 3, 4])

    def test_lambda_bad_colors(self):
        code, _ = run("lambda", self.path, "--colors", "[0, null")
        self.assertEqual(code, EXIT_INVALID)

    def test_end_and_crown(self):
        code, out = run("end", self.path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out["end"], [{"0": 0, "2": 1}])
        code, out = run("crown", self.path)
        self.assertEqual(out["crown"], [{"0": 0, "2": 1}, {"0": 0, "2": 1, "3": 2}])


class TestClassifyCommand(_TestWithDocument, unittest.TestCase):
    DOCUMENT = {
        "rotation": {str(v): list(nbrs) for v, nbrs in cl.fan_rotation(5).items()},
        "outer": [0, 1, 2, 3, 4],
        "lists": {str(v): [0, 1, 2] for v in range(5)},
        "path": [0, 1, 2],
    }

    def test_broken_wheel(self):
        code, out = run("classify", self.path, "--principal", "0,1,2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out["kind"], "broken-wheel")
        self.assertEqual(out["rim_edge_count"], 3)

    def test_bad_principal(self):
        code, _ = run("classify", self.path, "--principal", "0,x")
        self.assertEqual(code, EXIT_INVALID)


class TestInvalidInput(_TestWithDocument, unittest.TestCase):
    DOCUMENT = {"rotation": {"0": []}, "outer": [0], "lists": {}, "path": [0], "extra": 1}

    def test_schema_violation(self):
        code, out = run("end", self.path)
        self.assertEqual(code, EXIT_INVALID)
        self.assertIsNone(out)

    def test_missing_file(self):
        code, _ = run("solve", self.path + ".missing")
        self.assertEqual(code, EXIT_INVALID)


class TestVerifyCommand(unittest.TestCase):
    def test_passing(self):
        code, out = run("verify", "thomassen", "--max-n", "5", "--palette", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out["violations"], [])
        self.assertNotIn("wall_time", out)
        self.assertEqual(out["caps"]["min_interior_degree"], 0)

    def test_timing(self):
        code, out = run("--timing", "verify", "thomassen", "--max-n", "4", "--palette", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("wall_time", out)

    def test_unknown_theorem(self):
        code, out = run("verify", "T9")
        self.assertEqual(code, EXIT_INVALID)
        self.assertIsNone(out)

    def test_sampled_needs_seed(self):
        code, _ = run("verify", "T1", "--mode", "sampled")
        self.assertEqual(code, EXIT_INVALID)

    def test_cap_exceeded(self):
        code, _ = run("verify", "T1", "--max-n", "20")
        self.assertEqual(code, EXIT_INVALID)


class TestFixtureCommand(unittest.TestCase):
    def test_fixture(self):
        code, out = run("fixture", "fig10")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out["passed"])

    def test_t4_hexagon(self):
        code, out = run("fixture", "t4-hexagon")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out["facts"]["x"], [5, 5])

    def test_unknown_fixture(self):
        code, _ = run("fixture", "fig8")
        self.assertEqual(code, EXIT_INVALID)

    def test_exit_codes_distinct(self):
        self.assertEqual(len({EXIT_OK, EXIT_FAILED, EXIT_INVALID}), 3)


if __name__ == "__main__":
    unittest.main()
