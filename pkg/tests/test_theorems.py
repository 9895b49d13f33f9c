#!/usr/bin/env python

"""Unit testing for the theorems module"""

import unittest

import numpy as np

import crownlab as cl


def polygon(n, chords, extra=None, extra_edges=()):
    angles = 2 * np.pi * np.arange(n) / n
    positions = {v: (np.cos(t), np.sin(t)) for v, t in enumerate(angles)}
    positions.update(extra or {})
    edges = [(v, (v + 1) % n) for v in range(n)] + list(chords) + list(extra_edges)
    return cl.embedding_from_positions(edges, positions, tuple(range(n)))


def square_with_chord():
    positions = {0: (0, 0), 1: (0, 2), 2: (2, 2), 3: (2, 0)}
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]
    return cl.embedding_from_positions(edges, positions, (0, 1, 2, 3))


class _TestSmallRun:
    """One check over a small exhaustive stream of its own shape"""

    THEOREM = None
    MAX_VERTICES = 5
    PALETTE = 3

    @classmethod
    def setUpClass(cls):
        cls.shape = cl.CHECKS[cls.THEOREM][1]
        cls.gen = cl.InstanceGenerator(
            shape=cls.shape, max_vertices=cls.MAX_VERTICES, palette_cap=cls.PALETTE
        )
        cls.report = cl.verify(cls.THEOREM, cls.gen)

    def test_passes(self):
        self.assertTrue(self.report.passed, self.report.violations)
        self.assertGreater(self.report.checked, 0)

    def test_report_fields(self):
        report = self.report
        self.assertEqual(report.theorem, self.THEOREM)
        self.assertIsNone(report.seed)
        self.assertEqual(report.caps["shape"], self.shape)
        self.assertEqual(report.caps["max_vertices"], self.MAX_VERTICES)
        self.assertEqual(report.caps["min_interior_degree"], 0)

    def test_json_is_reproducible(self):
        again = cl.verify(self.THEOREM, self.gen)
        self.assertEqual(cl.dumps(self.report.to_json()), cl.dumps(again.to_json()))
        self.assertNotIn("wall_time", self.report.to_json())
        self.assertIn("wall_time", self.report.to_json(timing=True))


class TestEnd2(_TestSmallRun, unittest.TestCase):
    THEOREM = "end2"

    def test_wrapper(self):
        report = cl.verify_end_2path(self.gen)
        self.assertEqual(report.to_json(), self.report.to_json())


class TestT1(_TestSmallRun, unittest.TestCase):
    THEOREM = "T1"


class TestT2(_TestSmallRun, unittest.TestCase):
    THEOREM = "T2"


class TestT3(_TestSmallRun, unittest.TestCase):
    THEOREM = "T3"


class TestT4(_TestSmallRun, unittest.TestCase):
    THEOREM = "T4"


class TestMain(_TestSmallRun, unittest.TestCase):
    THEOREM = "main"
    PALETTE = 5


class TestFivePathCrown(_TestSmallRun, unittest.TestCase):
    THEOREM = "5path-crown"
    MAX_VERTICES = 6
    PALETTE = 5


class TestFivePathNonequal(_TestSmallRun, unittest.TestCase):
    THEOREM = "5path-nonequal"
    MAX_VERTICES = 6
    PALETTE = 5


class TestThomassen(_TestSmallRun, unittest.TestCase):
    THEOREM = "thomassen"


class TestShortCycles(_TestSmallRun, unittest.TestCase):
    THEOREM = "cor15"
    PALETTE = 5


class TestTwoLists(_TestSmallRun, unittest.TestCase):
    THEOREM = "two-lists"


class TestBohme(_TestSmallRun, unittest.TestCase):
    THEOREM = "bohme"
    MAX_VERTICES = 6
    PALETTE = 5


class TestWheelParity(_TestSmallRun, unittest.TestCase):
    THEOREM = "wheel-parity"


class TestFanPath(_TestSmallRun, unittest.TestCase):
    THEOREM = "fan-path"


class TestProp29(_TestSmallRun, unittest.TestCase):
    THEOREM = "prop29"


class TestLemma27(_TestSmallRun, unittest.TestCase):
    THEOREM = "lemma27"


class TestObs41(_TestSmallRun, unittest.TestCase):
    THEOREM = "obs41"


class TestObs42(_TestSmallRun, unittest.TestCase):
    THEOREM = "obs42"


class TestBackground(unittest.TestCase):
    def test_merged_run(self):
        gen = cl.InstanceGenerator(max_vertices=5, palette_cap=3)
        report = cl.verify("background", gen)
        self.assertEqual(report.theorem, "background")
        self.assertTrue(report.passed, report.violations)
        self.assertGreater(report.checked, 0)
        self.assertNotIn("shape", report.caps)


class TestT4Counterexample(unittest.TestCase):
    """The six-vertex stream holds instances where no endpoint coloring is a
    base-coloring; the hexagon fixture is one of them."""

    def test_stream_reports_it(self):
        gen = cl.InstanceGenerator(shape="3-path", max_vertices=6, palette_cap=4)
        report = cl.verify("T4", gen)
        self.assertFalse(report.passed)
        for record in report.violations:
            self.assertTrue(record["replayed"])
            self.assertEqual(record["detail"], ["No endpoint coloring is a base-coloring"])

    def test_fixture_replays(self):
        R = cl.load_fixture("t4-hexagon")
        record = {
            "instance": cl.rainbow_to_document(R),
            "detail": ["No endpoint coloring is a base-coloring"],
        }
        self.assertTrue(cl.replay("T4", record))


class TestProp29BrokenWheel(unittest.TestCase):
    """Fan at q = 1 over the 6-cycle, rim 2 3 4 5 0 of even length"""

    def setUp(self):
        G = polygon(6, [(1, 3), (1, 4), (1, 5)])
        lists = {0: {0, 1}, 1: range(5), 2: {0, 2}, 3: {0, 1, 2}, 4: {0, 1, 2}, 5: {0, 1, 2}}
        self.R = cl.Rainbow(G, (0, 1, 2), lists)

    def test_even_broken_wheel(self):
        wheel = cl.classify_wheel(self.R.graph, self.R.path)
        self.assertIs(wheel.kind, cl.WheelKind.BROKEN_WHEEL)
        self.assertEqual(wheel.rim_edge_count, 4)

    def test_failing_colorings(self):
        failing = sorted((psi[0], psi[1], psi[2]) for psi in cl.failing_colorings(self.R))
        self.assertEqual(failing, [(0, 1, 2), (1, 0, 2), (1, 2, 0)])

    def test_two_per_endpoint_color(self):
        # Three failing colorings overall, but two once the color on p0 or p1
        # is fixed, and those two swap colors between q and the other end.
        self.assertEqual(cl.CHECKS["prop29"][0](self.R), [])


class TestObs41SeparatingTriangle(unittest.TestCase):
    """5-cycle with chord 1-4 and vertex 5 inside the triangle 0 1 4"""

    def setUp(self):
        angles = 2 * np.pi * np.array([0, 1, 4]) / 5
        center = (float(np.mean(np.cos(angles))), float(np.mean(np.sin(angles))))
        G = polygon(5, [(1, 4)], extra={5: center}, extra_edges=[(5, 0), (5, 1), (5, 4)])
        self.R = cl.Rainbow(G, (0, 1, 2, 3), {v: range(5) for v in range(6)})

    def test_exterior_drops_the_inside(self):
        H = cl.exterior(self.R.graph, (0, 1, 4))
        self.assertEqual(sorted(H.vertices), [0, 1, 2, 3, 4])
        self.assertIn((1, 4), H.edges)

    def test_signature_unchanged(self):
        self.assertEqual(cl.CHECKS["obs41"][0](self.R), [])

    def test_short_inseparable(self):
        self.assertFalse(cl.is_short_inseparable(self.R.graph))


class TestShapeOverride(unittest.TestCase):
    def test_generator_shape_replaced(self):
        gen = cl.InstanceGenerator(shape="2-path", max_vertices=4, palette_cap=3)
        report = cl.verify("thomassen", gen)
        self.assertEqual(report.caps["shape"], "edge")
        self.assertEqual(gen.shape, "2-path")


class TestParallel(unittest.TestCase):
    def test_jobs_agree(self):
        gen = cl.InstanceGenerator(shape="edge", max_vertices=5, palette_cap=3)
        serial = cl.verify("thomassen", gen, jobs=1)
        parallel = cl.verify("thomassen", gen, jobs=2)
        self.assertEqual(serial.to_json(), parallel.to_json())


class TestVerificationReport(unittest.TestCase):
    def test_merge(self):
        a = cl.VerificationReport("cor15", checked=3, skipped=1, violations=[{"detail": ["b"]}])
        b = cl.VerificationReport("obs41", checked=2, violations=[{"detail": ["a"]}])
        merged = a.merge(b, theorem="background")
        self.assertEqual(merged.theorem, "background")
        self.assertEqual((merged.checked, merged.skipped), (5, 1))
        self.assertEqual(merged.violations, [{"detail": ["a"]}, {"detail": ["b"]}])
        self.assertFalse(merged.passed)

    def test_passed(self):
        self.assertTrue(cl.VerificationReport("T1").passed)


class TestRegistry(unittest.TestCase):
    def test_ids(self):
        self.assertIn("background", cl.THEOREM_IDS)
        for theorem in cl.BACKGROUND:
            self.assertIn(theorem, cl.CHECKS)
        for theorem in ("end2", "T1", "T2", "T3", "T4", "main", "5path-crown", "5path-nonequal"):
            self.assertIn(theorem, cl.THEOREM_IDS)

    def test_every_check_has_a_run(self):
        runs = {cls.THEOREM for cls in _TestSmallRun.__subclasses__()}
        self.assertEqual(runs, set(cl.CHECKS))

    def test_unknown(self):
        with self.assertRaises(cl.UnknownTheorem):
            cl.verify("T9")
        with self.assertRaises(KeyError):
            cl.replay("T9", {})


class TestReplay(unittest.TestCase):
    def test_replay_passing_instance(self):
        R = cl.Rainbow(square_with_chord(), (0, 1), {0: {0}, 1: {1}, 2: {2}, 3: {1}})
        record = {"instance": cl.rainbow_to_document(R), "detail": []}
        self.assertTrue(cl.replay("cor15", record))

    def test_replay_detects_changed_detail(self):
        R = cl.Rainbow(square_with_chord(), (0, 1), {0: {0}, 1: {1}, 2: {2}, 3: {1}})
        record = {"instance": cl.rainbow_to_document(R), "detail": ["made up"]}
        self.assertFalse(cl.replay("cor15", record))

    def test_hypothesis_miss(self):
        R = cl.Rainbow(square_with_chord(), (0, 1, 2), {v: {0, 1, 2} for v in range(4)})
        self.assertIsNone(cl.CHECKS["T1"][0](R))


if __name__ == "__main__":
    unittest.main()
