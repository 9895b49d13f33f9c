#!/usr/bin/env python

"""Counterexample fixtures

Small rainbows drawn with straight lines, each paired with the facts it
is expected to exhibit:

fig7
    3-path p0 q0 q1 p1 whose endpoints carry 2-lists, with a hub w inside
    the 6-cycle p0 u1 u2 p1 q1 q0. Symbolic colors c0, c1, d0, d1, s map to
    0..4 by first appearance over p0, q0, q1, p1, u2, u1, w.
fig10
    4-path p0 q0 z q1 p1 where q0 and q1 share the neighbor u1 on C - P.
    Symbolic colors a, b, c, f, r, s, d map to 0..6 by first appearance over
    p0, u1, p1, q0, q1, z.
t4-hexagon
    3-path p0 q0 q1 p1 on the 6-cycle p0 q0 q1 p1 u4 u5 with chords q0 u5,
    q1 u5 and q1 u4, so x0 = x1 = u5. L(p0) = {0, 1, 2}, L(p1) = {3},
    L(u4) = {0, 1, 3}, L(u5) = {0, 1, 2}, and q0, q1 carry 5-lists. Every
    coloring of the endpoints has at least three failing extensions to V(P),
    so none is a base-coloring although p0 has a 3-list.

"""

from dataclasses import dataclass, field

from .coloring import Rainbow
from .obstructions import base_coloring_verdict, x_vertices
from .planar import embedding_from_positions
from .sufficiency import end_set, find_crown_member
from .util import coloring_to_json


class UnknownFixture(KeyError):
    """Fixture id outside FIXTURES"""


def _palette(order, labels):
    """Integer colors by first appearance of each symbol along ``order``"""
    ids = {}
    for v in order:
        for name in labels[v]:
            ids.setdefault(name, len(ids))
    return ids, {v: frozenset(ids[name] for name in labels[v]) for v in order}


def _fig7():
    p0, q0, q1, p1, u2, u1, w = range(7)
    positions = {
        p0: (0, 0), q0: (0, 2), u1: (2, 0), u2: (4, 0),
        p1: (6, 0), q1: (6, 2), w: (4, 1),
    }
    edges = [
        (p0, u1), (u1, u2), (u2, p1), (p1, q1), (q1, q0), (q0, p0),
        (q0, u1), (u1, w), (u2, w), (p1, w), (q1, w), (q0, w),
    ]
    labels = {
        p0: ("c0", "c1"),
        q0: ("c0", "c1"),
        q1: ("c0", "c1"),
        p1: ("d0", "d1"),
        u2: ("d0", "d1", "s"),
        u1: ("c0", "c1", "s"),
        w: ("c0", "c1", "d0", "d1", "s"),
    }
    _, lists = _palette((p0, q0, q1, p1, u2, u1, w), labels)
    G = embedding_from_positions(edges, positions, (p0, u1, u2, p1, q1, q0))
    return Rainbow(G, (p0, q0, q1, p1), lists)


def _fig10():
    p0, q0, z, q1, p1, u1 = range(6)
    positions = {p0: (0, 0), u1: (2, 0), p1: (4, 0), q0: (0, 2), q1: (4, 2), z: (2, 3)}
    edges = [
        (p1, u1), (u1, p0), (p0, q0), (q0, z), (z, q1), (q1, p1),
        (z, u1), (q0, u1), (u1, q1),
    ]
    labels = {
        p0: ("a",),
        u1: ("a", "b", "c"),
        p1: ("b", "c", "f"),
        q0: ("a", "b", "c", "r", "s"),
        q1: ("b", "c", "d", "f", "s"),
        z: ("b", "c", "d", "r", "s"),
    }
    _, lists = _palette((p0, u1, p1, q0, q1, z), labels)
    G = embedding_from_positions(edges, positions, (p0, q0, z, q1, p1, u1))
    return Rainbow(G, (p0, q0, z, q1, p1), lists)


def _t4_hexagon():
    p0, q0, q1, p1, u4, u5 = range(6)
    positions = {p0: (0, 0), q0: (0, 2), q1: (2, 3), p1: (4, 2), u4: (4, 0), u5: (2, -1)}
    edges = [
        (p0, q0), (q0, q1), (q1, p1), (p1, u4), (u4, u5), (u5, p0),
        (q0, u5), (q1, u5), (q1, u4),
    ]
    five = frozenset(range(5))
    lists = {
        p0: {0, 1, 2},
        q0: five,
        q1: five,
        p1: {3},
        u4: {0, 1, 3},
        u5: {0, 1, 2},
    }
    G = embedding_from_positions(edges, positions, (p0, q0, q1, p1, u4, u5))
    return Rainbow(G, (p0, q0, q1, p1), lists)


FIXTURES = {"fig7": _fig7, "fig10": _fig10, "t4-hexagon": _t4_hexagon}


def load_fixture(name):
    try:
        build = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"Unknown fixture {name!r}; expected one of {sorted(FIXTURES)}") from None
    return build()


@dataclass
class FixtureResult:
    """Facts computed on a fixture and whether the expected ones hold"""

    fixture: str
    passed: bool
    facts: dict = field(default_factory=dict)

    def to_json(self):
        return {"fixture": self.fixture, "passed": self.passed, "facts": self.facts}


def _check_fig7(R):
    end = end_set(R)
    verdicts = [
        base_coloring_verdict(R, phi) for phi in R.solver.enumerate({}, (R.p0, R.p1))
    ]
    failing = [len(v.failing_extensions) for v in verdicts]
    facts = {
        "end": [coloring_to_json(phi) for phi in end],
        "endpoint_colorings": [
            {
                "coloring": coloring_to_json(v.coloring),
                "failing": len(v.failing_extensions),
                "case": v.case,
            }
            for v in verdicts
        ],
    }
    return not end and all(n == 1 for n in failing), facts


def _check_fig10(R):
    q0, q1 = R.terminal
    off_path = set(R.cycle) - set(R.path.vertices)
    shared = sorted(set(R.graph.neighbors(q0)) & set(R.graph.neighbors(q1)) & off_path)
    member = find_crown_member(R)
    facts = {
        "shared_neighbors": shared,
        "crown_member": None if member is None else coloring_to_json(member),
    }
    return member is None and bool(shared), facts


def _check_t4_hexagon(R):
    verdicts = [
        base_coloring_verdict(R, phi) for phi in R.solver.enumerate({}, (R.p0, R.p1))
    ]
    facts = {
        "x": list(x_vertices(R)),
        "endpoint_colorings": [
            {
                "coloring": coloring_to_json(v.coloring),
                "failing": len(v.failing_extensions),
                "case": v.case,
            }
            for v in verdicts
        ],
    }
    hypotheses = max(len(R.lists[R.p0]), len(R.lists[R.p1])) >= 3
    none_base = all(len(v.failing_extensions) > 2 and not v.is_base for v in verdicts)
    return hypotheses and bool(verdicts) and none_base, facts


CHECKS = {"fig7": _check_fig7, "fig10": _check_fig10, "t4-hexagon": _check_t4_hexagon}


def check_fixture(name):
    R = load_fixture(name)
    passed, facts = CHECKS[name](R)
    return FixtureResult(name, passed, facts)
