#!/usr/bin/env python

"""Unit testing for the obstructions module"""

import unittest

import numpy as np

import crownlab as cl


def polygon(n, chords):
    angles = 2 * np.pi * np.arange(n) / n
    positions = {v: (np.cos(t), np.sin(t)) for v, t in enumerate(angles)}
    edges = [(v, (v + 1) % n) for v in range(n)] + list(chords)
    return cl.embedding_from_positions(edges, positions, tuple(range(n)))


def triangle_rainbow(lists):
    """3-path 0 1 2 3 on the 5-cycle with 4 seeing both terminal vertices"""
    return cl.Rainbow(polygon(5, [(4, 1), (4, 2)]), (0, 1, 2, 3), lists)


def hub_rainbow():
    """3-path 0 1 2 3 on the 7-cycle; hub 7 sees 1, 2 and the path 6 5 4"""
    angles = 2 * np.pi * np.arange(7) / 7
    positions = {v: (np.cos(t), np.sin(t)) for v, t in enumerate(angles)}
    positions[7] = (0.0, 0.0)
    edges = [(v, (v + 1) % 7) for v in range(7)]
    edges += [(7, v) for v in (1, 2, 4, 5, 6)] + [(1, 6), (2, 4)]
    G = cl.embedding_from_positions(edges, positions, tuple(range(7)))
    return cl.Rainbow(G, (0, 1, 2, 3), {v: range(5) for v in range(8)})


class TestTriangleObstruction(unittest.TestCase):
    def setUp(self):
        self.lists = {0: {0}, 1: {0, 1, 2}, 2: {0, 1, 2}, 3: {1}, 4: {0, 1, 2, 3}}
        self.R = triangle_rainbow(self.lists)

    def test_x_vertices(self):
        self.assertEqual(cl.x_vertices(self.R), (4, 4))

    def test_single_vertex(self):
        (found,) = cl.find_obstructions(self.R)
        self.assertEqual(found.path.vertices, (4,))
        self.assertTrue(found.triangle_type)
        self.assertIsNone(found.witness_hub)
        self.assertEqual(found.length_parity, cl.EVEN)

    def test_tilts(self):
        first, second = cl.edge_tilt(self.R, 0), cl.edge_tilt(self.R, 1)
        self.assertEqual(first.edge, (0, 1))
        self.assertEqual(first.parities, {cl.ODD})
        self.assertEqual(second.edge, (3, 2))
        self.assertTrue(second.odd_tilted)
        self.assertFalse(second.even_tilted)
        with self.assertRaises(IndexError):
            cl.edge_tilt(self.R, 2)

    def test_fully_even(self):
        (found,) = cl.find_obstructions(self.R)
        self.assertFalse(cl.is_fully_even(self.R, found))

    def test_auxiliary_paths(self):
        paths = cl.auxiliary_paths(self.R)
        self.assertEqual(paths["P0"].vertices, (0, 1, 4))
        self.assertEqual(paths["P1"].vertices, (4, 2, 3))
        self.assertEqual(paths["M"].vertices, (4, 1, 2))
        self.assertTrue(paths["M"].closed)
        self.assertEqual(paths["R0"].vertices, (0, 1, 2, 4))
        self.assertEqual(paths["R1"].vertices, (4, 1, 2, 3))

    def test_signature(self):
        obstructions, tilts = cl.obstruction_signature(self.R)
        self.assertEqual(obstructions, {((4,), True)})
        self.assertEqual(tilts, ({cl.ODD}, {cl.ODD}))

    def test_requires_3path(self):
        R = cl.Rainbow(self.R.graph, (0, 1, 2), self.lists)
        with self.assertRaises(ValueError):
            cl.x_vertices(R)


class TestBaseColoringVerdict(unittest.TestCase):
    def test_b1(self):
        lists = {0: {0}, 1: {0, 1, 2}, 2: {0, 1, 2}, 3: {1}, 4: {0, 1, 2, 3}}
        verdict = cl.base_coloring_verdict(triangle_rainbow(lists), {0: 0, 3: 1})
        self.assertEqual(verdict.case, "B1")
        self.assertTrue(verdict.is_base)
        self.assertEqual(verdict.failing_extensions, ())

    def test_two_failures_without_tilt(self):
        lists = {0: {0}, 1: {0, 1, 2}, 2: {0, 1, 2}, 3: {1}, 4: {0, 1, 2}}
        verdict = cl.base_coloring_verdict(triangle_rainbow(lists), {0: 0, 3: 1})
        self.assertEqual(len(verdict.failing_extensions), 2)
        self.assertEqual(verdict.case, "none")
        self.assertFalse(verdict.is_base)
        self.assertEqual(len(verdict.to_json()["failing"]), 2)

    def test_wrong_domain(self):
        lists = {0: {0}, 1: {0, 1, 2}, 2: {0, 1, 2}, 3: {1}, 4: {0, 1, 2}}
        with self.assertRaises(ValueError):
            cl.base_coloring_verdict(triangle_rainbow(lists), {0: 0})


class TestHubObstruction(unittest.TestCase):
    def setUp(self):
        self.R = hub_rainbow()

    def test_x_vertices(self):
        self.assertEqual(cl.x_vertices(self.R), (6, 4))

    def test_path_obstruction(self):
        found = cl.find_obstructions(self.R)
        self.assertEqual([o.path.vertices for o in found], [(6, 5, 4)])
        self.assertEqual(found[0].witness_hub, 7)
        self.assertFalse(found[0].triangle_type)
        self.assertEqual(found[0].length_parity, cl.EVEN)

    def test_not_fully_even(self):
        (found,) = cl.find_obstructions(self.R)
        self.assertEqual(cl.edge_tilt(self.R, 0).parities, {cl.ODD})
        self.assertFalse(cl.is_fully_even(self.R, found))


class TestFivePathObstruction(unittest.TestCase):
    def test_vertex_sees_p0_v1_q1(self):
        G = polygon(7, [(6, 3), (6, 4)])
        R = cl.Rainbow(G, (0, 1, 2, 3, 4, 5), {v: range(5) for v in range(7)})
        self.assertEqual(cl.g_obstruction_5path(R), {6})
        self.assertTrue(cl.has_g_obstruction(R))

    def test_bare_cycle(self):
        R = cl.Rainbow(polygon(7, []), (0, 1, 2, 3, 4, 5), {v: range(5) for v in range(7)})
        self.assertFalse(cl.has_g_obstruction(R))

    def test_requires_5path(self):
        R = cl.Rainbow(polygon(7, []), (0, 1, 2), {v: range(5) for v in range(7)})
        with self.assertRaises(ValueError):
            cl.g_obstruction_5path(R)


if __name__ == "__main__":
    unittest.main()
