#!/usr/bin/env python

"""Unit testing for the coloring module"""

from itertools import product
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st
import numpy as np

import crownlab as cl


def cycle_graph(n):
    rotation = {i: ((i - 1) % n, (i + 1) % n) for i in range(n)}
    return cl.PlanarEmbedding(rotation, tuple(range(n)))


def wheel5():
    """5-cycle 0..4 around the hub 5"""
    positions = {0: (0, 3), 1: (3, 1), 2: (2, -3), 3: (-2, -3), 4: (-3, 1), 5: (0, 0)}
    edges = [(v, (v + 1) % 5) for v in range(5)] + [(v, 5) for v in range(5)]
    return cl.embedding_from_positions(edges, positions, (0, 1, 2, 3, 4))


def square_with_chord():
    positions = {0: (0, 0), 1: (0, 2), 2: (2, 2), 3: (2, 0)}
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]
    return cl.embedding_from_positions(edges, positions, (0, 1, 2, 3))


def brute_force_colorable(G, L):
    vertices = list(G.vertices)
    for colors in product(*(sorted(L[v]) for v in vertices)):
        phi = dict(zip(vertices, colors))
        if all(phi[u] != phi[v] for u, v in G.edges):
            return True
    return False


def cycle_count(n, k):
    """Proper k-colorings of the n-cycle by transfer matrix"""
    T = np.ones((k, k), dtype=np.int64) - np.eye(k, dtype=np.int64)
    return int(np.trace(np.linalg.matrix_power(T, n)))


wheel_lists = st.lists(
    st.frozensets(st.integers(0, 4), min_size=1, max_size=5), min_size=6, max_size=6
)


class TestCheckProper(unittest.TestCase):
    def setUp(self):
        self.G = cycle_graph(4)
        self.L = {v: frozenset({0, 1}) for v in range(4)}

    def test_proper(self):
        cl.check_proper(self.G, self.L, {0: 0, 1: 1, 2: 0})

    def test_improper(self):
        with self.assertRaises(cl.ImproperColoring):
            cl.check_proper(self.G, self.L, {0: 0, 1: 0})

    def test_not_in_list(self):
        with self.assertRaises(cl.ColorNotInList):
            cl.check_proper(self.G, self.L, {0: 2})

    def test_residual_lists(self):
        residual = cl.residual_lists(self.G, self.L, {0: 0})
        self.assertEqual(residual[1], {1})
        self.assertEqual(residual[3], {1})
        self.assertEqual(residual[2], {0, 1})
        self.assertNotIn(0, residual)


class TestExtensionSolver(unittest.TestCase):
    def test_cycle_counts(self):
        for n in range(3, 8):
            for k in (2, 3, 4):
                G = cycle_graph(n)
                solver = cl.ExtensionSolver(G, {v: range(k) for v in range(n)})
                found = sum(1 for _ in solver.enumerate({}, G.vertices))
                self.assertEqual(found, cycle_count(n, k))

    def test_odd_cycle_two_colors(self):
        G = cycle_graph(5)
        L = {v: {0, 1} for v in range(5)}
        self.assertIsNone(cl.extend_coloring(G, L, {}))
        G = cycle_graph(6)
        self.assertIsNotNone(cl.extend_coloring(G, {v: {0, 1} for v in range(6)}, {}))

    def test_extend_respects_phi(self):
        G = wheel5()
        L = {v: range(4) for v in range(6)}
        found = cl.extend_coloring(G, L, {5: 3, 0: 0})
        self.assertEqual(found[5], 3)
        self.assertEqual(found[0], 0)
        cl.check_proper(G, cl.normalize_lists(G, L), found)

    def test_extend_rejects_improper(self):
        G = wheel5()
        solver = cl.ExtensionSolver(G, {v: range(4) for v in range(6)})
        self.assertIsNone(solver.extend({0: 1, 5: 1}))
        self.assertFalse(solver.is_proper({0: 1, 5: 1}))

    def test_targets(self):
        G = wheel5()
        L = {v: range(3) for v in range(6)}
        # The hub with a 3-colored rim has no color left, but the rim alone is fine.
        found = cl.extend_coloring(G, L, {}, targets=(0, 1, 2, 3, 4))
        self.assertEqual(set(found), {0, 1, 2, 3, 4})
        self.assertIsNone(cl.extend_coloring(G, L, {}))

    def test_enumerate_order(self):
        G = cycle_graph(3)
        solver = cl.ExtensionSolver(G, {v: range(3) for v in range(3)})
        colorings = list(solver.enumerate({0: 0}, (1, 2)))
        self.assertEqual(colorings, [{0: 0, 1: 1, 2: 2}, {0: 0, 1: 2, 2: 1}])

    @settings(max_examples=200, deadline=None)
    @given(wheel_lists)
    def test_against_brute_force(self, lists):
        G = wheel5()
        L = dict(enumerate(lists))
        found = cl.extend_coloring(G, L, {})
        self.assertEqual(found is not None, brute_force_colorable(G, L))
        if found is not None:
            cl.check_proper(G, L, found)

    @settings(max_examples=100, deadline=None)
    @given(wheel_lists, st.integers(0, 5), st.integers(0, 4))
    def test_residual_shrinks(self, lists, v, c):
        G = wheel5()
        solver = cl.ExtensionSolver(G, dict(enumerate(lists)))
        u = G.neighbors(v)[0]
        before = solver.residual_mask(u, {})
        after = solver.residual_mask(u, {v: c})
        self.assertEqual(after & ~before, 0)
        self.assertEqual(after, before & ~(1 << c))


class TestLambdaSet(unittest.TestCase):
    def setUp(self):
        self.G = cycle_graph(3)
        self.L = {v: frozenset(range(3)) for v in range(3)}

    def test_middle(self):
        self.assertEqual(cl.lambda_set(self.G, self.L, (0, 1, 2), [0, None, 1]), {2})

    def test_end(self):
        found = cl.lambda_set(self.G, self.L, (0, 1, 2), [None, 0, 1])
        self.assertEqual(found, {2})

    def test_non_extendable_choices_dropped(self):
        G = square_with_chord()
        L = {0: {0, 1}, 1: {0, 1, 2}, 2: {1, 2}, 3: {0, 2}}
        # 3 sees 0 and 2; coloring them 0 and 2 leaves it nothing.
        self.assertEqual(cl.lambda_set(G, L, (0, 1, 2), [0, None, 2]), set())
        self.assertEqual(cl.lambda_set(G, L, (0, 1, 2), [0, None, 1]), {2})
        self.assertEqual(cl.lambda_set(G, L, (0, 1, 2), [0, 2, None]), {1})

    @settings(max_examples=100, deadline=None)
    @given(wheel_lists, st.data())
    def test_reversal_symmetry(self, lists, data):
        G = wheel5()
        L = dict(enumerate(lists))
        c = data.draw(st.sampled_from(sorted(L[0])))
        c2 = data.draw(st.sampled_from(sorted(L[2])))
        self.assertEqual(
            cl.lambda_set(G, L, (0, 5, 2), [c, None, c2]),
            cl.lambda_set(G, L, (2, 5, 0), [c2, None, c]),
        )

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            cl.lambda_set(self.G, self.L, (0, 1, 2), [0, None, None])
        with self.assertRaises(ValueError):
            cl.lambda_set(self.G, self.L, (0, 1), [0, None])
        with self.assertRaises(cl.ColorNotInList):
            cl.lambda_set(self.G, self.L, (0, 1, 2), [5, None, 1])


class TestRainbow(unittest.TestCase):
    def setUp(self):
        self.G = square_with_chord()
        self.lists = {0: {0}, 1: {0, 1, 2}, 2: {1}, 3: {0, 1, 2}}
        self.R = cl.Rainbow(self.G, (0, 1, 2), self.lists)

    def test_properties(self):
        R = self.R
        self.assertEqual((R.p0, R.p1), (0, 2))
        self.assertEqual(R.terminal, (1, 1))
        self.assertEqual(R.interior_path, (1,))
        self.assertEqual(R.rest, (0, 3, 2))
        self.assertEqual(R.off_cycle, ())
        self.assertFalse(R.end_linked)
        self.assertIs(cl.check_rainbow(R), R)

    def test_floor_violation(self):
        R = self.R.with_lists({**self.lists, 3: {0, 1}})
        with self.assertRaises(cl.RainbowError):
            cl.check_rainbow(R)

    def test_path_off_graph(self):
        with self.assertRaises(ValueError):
            cl.Rainbow(self.G, (1, 3), self.lists)

    def test_sub_rainbow(self):
        R = cl.Rainbow(self.G, (1, 2), self.lists)
        sub = cl.sub_rainbow(R, (0, 2))
        self.assertEqual(sorted(sub.graph.vertices), [0, 2, 3])
        self.assertEqual(sub.path.vertices, (0, 2))
        self.assertEqual(sub.lists[3], {0, 1, 2})


if __name__ == "__main__":
    unittest.main()
