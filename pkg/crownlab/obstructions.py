#!/usr/bin/env python

"""Obstructions, tilted edges and base-colorings of 3-path rainbows, and the
vertex obstructions of 5-path rainbows

Everything here is read off the rainbow R = (G, C, P, L) with
P = p0 q0 q1 p1 (or p0 q0 v0 v1 q1 p1 for 5-paths). Paths are taken in the
subgraph of G induced by C minus the interior of P, so chords of C between
vertices of that path are allowed as path edges.

"""

from dataclasses import dataclass, field
import logging

import networkx as nx

from .coloring import check_proper
from .planar import PathSpec

log = logging.getLogger(__name__)

EVEN = "even"
ODD = "odd"


def _parity(n_edges):
    return EVEN if n_edges % 2 == 0 else ODD


def _require_length(R, length):
    if R.path.length != length:
        raise ValueError(f"Expected a path with {length} edges, got {list(R.path)}")


@dataclass(frozen=True)
class Obstruction:
    """A (P, G)-obstruction Q* with endpoints x0 and x1

    Attributes
    ----------
    path : PathSpec
        Q*, a path on C minus the interior of P
    triangle_type : bool
        Q* is a single vertex of C - P
    witness_hub : int
        Smallest vertex off C adjacent to Q* and to q0, q1 (None for a
        single-vertex Q*)

    """

    path: PathSpec
    triangle_type: bool = False
    witness_hub: int = None

    @property
    def length(self):
        return self.path.length

    @property
    def length_parity(self):
        return _parity(self.path.length)

    def to_json(self):
        return {
            "path": list(self.path),
            "triangle_type": self.triangle_type,
            "witness_hub": self.witness_hub,
            "parity": self.length_parity,
        }


@dataclass(frozen=True)
class TiltReport:
    """Parities of the q_k-dominated paths from p_k to x_k on C minus P̊"""

    edge: tuple
    parities: frozenset
    witness_paths: tuple = field(default=(), repr=False)

    @property
    def even_tilted(self):
        return EVEN in self.parities

    @property
    def odd_tilted(self):
        return ODD in self.parities

    def to_json(self):
        return {
            "edge": list(self.edge),
            "parities": sorted(self.parities),
            "witness_paths": [list(Q) for Q in self.witness_paths],
        }


@dataclass(frozen=True)
class BaseColoringVerdict:
    """Which base-coloring case (if any) an endpoint coloring falls under

    ``case`` is one of "B1", "B2", "B3" or "none"; ``failing_extensions``
    lists the L-colorings of V(P) extending the endpoint coloring that do
    not extend to G.
    """

    coloring: dict
    case: str
    failing_extensions: tuple = ()

    CASES = ("B1", "B2", "B3", "none")

    @property
    def is_base(self):
        return self.case != "none"

    def to_json(self):
        return {
            "coloring": {str(v): c for v, c in sorted(self.coloring.items())},
            "case": self.case,
            "failing": [
                {str(v): c for v, c in sorted(psi.items())} for psi in self.failing_extensions
            ],
        }


def x_vertices(R):
    """(x0, x1): the neighbors of q0, q1 on C - P̊ farthest from p0, p1"""

    _require_length(R, 3)
    rest = R.rest
    q0, q1 = R.terminal
    x0 = max(i for i, v in enumerate(rest) if R.graph.adjacent(q0, v))
    x1 = min(i for i, v in enumerate(rest) if R.graph.adjacent(q1, v))
    return rest[x0], rest[x1]


def _rest_graph(R, within=None):
    keep = set(R.rest) if within is None else set(R.rest) & set(within)
    return R.graph.to_networkx().subgraph(keep)


def _paths_between(H, x, y):
    """Simple x-y paths of H, shortest first"""
    if x not in H or y not in H:
        return []
    if x == y:
        return [PathSpec((x,))]
    return sorted(
        (PathSpec(tuple(p)) for p in nx.all_simple_paths(H, x, y)),
        key=lambda Q: (Q.length, Q.vertices),
    )


def hub_paths(G, hub, within, x, y):
    """Paths from x to y on ``within`` whose vertices all see ``hub``"""
    keep = set(within) & set(G.neighbors(hub))
    return _paths_between(G.to_networkx().subgraph(keep), x, y)


def find_obstructions(R):
    """All (P, G)-obstructions, single-vertex ones first then by length"""

    x0, x1 = x_vertices(R)
    q0, q1 = R.terminal

    if x0 == x1:
        triangle = x0 in R.rest[1:-1]
        if not triangle:
            log.debug(f"x0 = x1 = {x0} sits at an endpoint of P; not triangle-type")
        return [Obstruction(PathSpec((x0,)), triangle_type=triangle)]

    on_cycle = set(R.cycle)
    found = {}
    for w in sorted(R.graph.vertices):
        if w in on_cycle:
            continue
        nbrs = set(R.graph.neighbors(w))
        if not {q0, q1, x0, x1} <= nbrs:
            continue
        for Q in _paths_between(_rest_graph(R, nbrs), x0, x1):
            if Q.length >= 2 and Q.vertices not in found:
                found[Q.vertices] = Obstruction(Q, witness_hub=w)
    return sorted(found.values(), key=lambda o: (o.length, o.path.vertices))


def edge_tilt(R, k):
    """Tilt parities of the terminal edge p_k q_k"""

    if k not in (0, 1):
        raise IndexError(f"Terminal edge index must be 0 or 1, got {k}")
    x = x_vertices(R)[k]
    p = (R.p0, R.p1)[k]
    q = R.terminal[k]
    paths = tuple(hub_paths(R.graph, q, R.rest, p, x))
    return TiltReport((p, q), frozenset(_parity(Q.length) for Q in paths), paths)


def is_fully_even(R, obstruction):
    if obstruction.length_parity != EVEN:
        return False
    return edge_tilt(R, 0).even_tilted and edge_tilt(R, 1).even_tilted


def _failing_extensions(R, phi):
    solver = R.solver
    return tuple(psi for psi in solver.enumerate(phi, R.path.vertices) if not solver.extends(psi))


def base_coloring_verdict(R, phi):
    """Classify the L-coloring phi of {p0, p1} against cases B1, B2 and B3"""

    _require_length(R, 3)
    if set(phi) != {R.p0, R.p1}:
        raise ValueError(f"Expected a coloring of {{{R.p0}, {R.p1}}}, got {phi}")
    check_proper(R.graph, R.lists, phi)

    failing = _failing_extensions(R, phi)
    if len(failing) <= 1:
        return BaseColoringVerdict(dict(phi), "B1", failing)
    if len(failing) > 2:
        return BaseColoringVerdict(dict(phi), "none", failing)

    if not any(o.triangle_type for o in find_obstructions(R)):
        return BaseColoringVerdict(dict(phi), "none", failing)

    tilts = edge_tilt(R, 0), edge_tilt(R, 1)
    q = R.terminal
    for j in (0, 1):
        if tilts[j].even_tilted and len({psi[q[1 - j]] for psi in failing}) == 1:
            return BaseColoringVerdict(dict(phi), "B2", failing)

    pairs = {frozenset((psi[q[0]], psi[q[1]])) for psi in failing}
    if len(pairs) == 1 and (tilts[0].odd_tilted or tilts[1].odd_tilted):
        return BaseColoringVerdict(dict(phi), "B3", failing)
    return BaseColoringVerdict(dict(phi), "none", failing)


def auxiliary_paths(R):
    """The paths P0, P1, M, R0 and R1 built from P and the x vertices"""

    x0, x1 = x_vertices(R)
    p0, q0, q1, p1 = R.path.vertices

    def walk(*vertices):
        # x_i = p_i collapses a repeated vertex; M may close into a triangle.
        out = []
        for v in vertices:
            if not out or out[-1] != v:
                out.append(v)
        if len(out) > 2 and out[0] == out[-1]:
            out.pop()
            return PathSpec(tuple(out), closed=len(out) >= 3)
        return PathSpec(tuple(out))

    return {
        "P0": walk(p0, q0, x0),
        "P1": walk(x1, q1, p1),
        "M": walk(x0, q0, q1, x1),
        "R0": walk(p0, q0, q1, x1),
        "R1": walk(x0, q0, q1, p1),
    }


def obstruction_signature(R):
    """Obstructions as (path, triangle_type) pairs, and both tilt parity sets"""
    obstructions = frozenset((o.path.vertices, o.triangle_type) for o in find_obstructions(R))
    return obstructions, (edge_tilt(R, 0).parities, edge_tilt(R, 1).parities)


def g_obstruction_5path(R):
    """Vertices of C that are obstructions of the 5-path rainbow R"""

    _require_length(R, 5)
    p0, q0, v0, v1, q1, p1 = R.path.vertices
    G = R.graph

    def sees(x, *targets):
        return all(G.adjacent(x, t) for t in targets)

    found = set()
    for x in R.cycle:
        if (
            sees(x, q0, v0, v1, q1)
            or sees(x, p0, v1, q1)
            or sees(x, p1, v0, q0)
        ):
            found.add(x)
    return frozenset(found)


def has_g_obstruction(R):
    return bool(g_obstruction_5path(R))
