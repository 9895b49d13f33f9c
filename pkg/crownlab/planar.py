#!/usr/bin/env python

"""Plane graphs as rotation systems with a designated outer face

Every structural query of the workbench (faces, chords, interiors, natural
partitions, G^Q, wheels and short-inseparability) is answered from the
rotation system alone. Rotations are clockwise and a face is traced by
leaving each vertex along the neighbor that follows the arrival neighbor in
the rotation.

"""

from dataclasses import dataclass
from enum import Enum
import logging

import networkx as nx
import numpy as np

log = logging.getLogger(__name__)


class NonPlanarRotation(ValueError):
    """The rotation system is not a connected plane graph"""


class BadOuterFace(ValueError):
    """The designated outer face is not traced by the rotation system"""


class NotAChord(ValueError):
    """A path that should be a k-chord of the outer cycle is not one"""


class BadIntersection(ValueError):
    """A path meets C minus the interior of P in the wrong vertices"""


@dataclass(frozen=True)
class PathSpec:
    """Path (or, when ``closed``, cycle) given by its vertex sequence"""

    vertices: tuple
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"Repeated vertex in path {self.vertices}")
        if not self.vertices:
            raise ValueError("Empty path")
        if self.closed and len(self.vertices) < 3:
            raise ValueError(f"A cycle needs three vertices: {self.vertices}")

    @property
    def length(self):
        """Number of edges"""
        return len(self.vertices) if self.closed else len(self.vertices) - 1

    @property
    def ends(self):
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self):
        return self.vertices[1:-1]

    def edges(self):
        pairs = list(zip(self.vertices, self.vertices[1:]))
        if self.closed:
            pairs.append((self.vertices[-1], self.vertices[0]))
        return [tuple(sorted(e)) for e in pairs]

    def reversed(self):
        return PathSpec(self.vertices[::-1], self.closed)

    def subpath(self, x, y):
        """The subpath xQy"""
        i, j = self.vertices.index(x), self.vertices.index(y)
        if i <= j:
            return PathSpec(self.vertices[i : j + 1])
        return PathSpec(self.vertices[j : i + 1][::-1])

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices


class PlanarEmbedding:
    """Connected plane graph given by a clockwise rotation system

    Attributes
    ----------
    rotation : dict
        Vertex id to the clockwise tuple of its neighbors
    faces : list
        Every face as the tuple of darts (u, v) traced around it
    outer_index : int
        Index into ``faces`` of the unbounded face

    """

    def __init__(self, rotation, outer_face=None):
        self.rotation = {
            int(v): tuple(int(u) for u in nbrs) for v, nbrs in sorted(rotation.items())
        }
        self._position = {
            v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in self.rotation.items()
        }
        self._graph = None
        self._edges = sorted(
            (v, u) for v, nbrs in self.rotation.items() for u in nbrs if v < u
        )
        self._check_simple()
        self.faces = self._trace_faces()
        self._check_euler()
        self.outer_index = self._locate_outer(outer_face)

    def _check_simple(self):
        for v, nbrs in self.rotation.items():
            if v < 0:
                raise NonPlanarRotation(f"Vertex ids must be nonnegative, got {v}")
            if v in nbrs:
                raise NonPlanarRotation(f"Loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise NonPlanarRotation(f"Parallel edges at vertex {v}: {nbrs}")
            for u in nbrs:
                if v not in self.rotation.get(u, ()):
                    raise NonPlanarRotation(f"Rotation is not symmetric on edge {v}-{u}")

    def _trace_faces(self):
        faces = []
        seen = set()
        for v, nbrs in self.rotation.items():
            for u in nbrs:
                if (v, u) in seen:
                    continue
                darts = []
                dart = (v, u)
                while dart not in seen:
                    seen.add(dart)
                    darts.append(dart)
                    dart = self.next_dart(dart)
                faces.append(tuple(darts))
        if not faces:
            # Edgeless: a lone vertex bounds the single face.
            faces.append(tuple((v, v) for v in self.rotation))
        return faces

    def _check_euler(self):
        if not self.rotation:
            raise NonPlanarRotation("Empty rotation system")
        if not nx.is_connected(self.to_networkx()):
            raise NonPlanarRotation("Rotation system is disconnected")
        n_v, n_e, n_f = len(self.rotation), len(self.edges), len(self.faces)
        if n_v - n_e + n_f != 2:
            raise NonPlanarRotation(
                f"Euler check failed: |V|-|E|+|F| = {n_v}-{n_e}+{n_f} != 2"
            )

    def _locate_outer(self, outer_face):
        if outer_face is None:
            if len(self.faces) == 1:
                return 0
            raise BadOuterFace("An outer face is required when there are several faces")

        outer = tuple(int(v) for v in outer_face)
        if not outer:
            raise BadOuterFace("Empty outer face")
        walks = [self.face_vertices(i) for i in range(len(self.faces))]
        for candidate in (outer, outer[::-1]):
            for i, walk in enumerate(walks):
                if _same_cyclic(walk, candidate):
                    return i
        raise BadOuterFace(f"{list(outer)} is not a face of the rotation system")

    def next_dart(self, dart):
        """Dart that follows ``dart`` around its face"""
        u, v = dart
        nbrs = self.rotation[v]
        return v, nbrs[(self._position[v][u] + 1) % len(nbrs)]

    @property
    def vertices(self):
        return tuple(self.rotation)

    @property
    def edges(self):
        return self._edges

    def neighbors(self, v):
        return self.rotation[v]

    def degree(self, v):
        return len(self.rotation[v])

    def adjacent(self, u, v):
        return v in self._position.get(u, {})

    def face_vertices(self, i):
        return tuple(u for u, _ in self.faces[i])

    @property
    def outer_face(self):
        return self.face_vertices(self.outer_index)

    @property
    def outer_cycle(self):
        """The outer face as a vertex tuple when it is a simple cycle, else None"""
        walk = self.outer_face
        if len(walk) >= 3 and len(set(walk)) == len(walk):
            return walk
        return None

    def to_networkx(self):
        if self._graph is None:
            graph = nx.Graph()
            graph.add_nodes_from(self.rotation)
            graph.add_edges_from(self.edges)
            self._graph = graph
        return self._graph

    def restrict(self, vertices, edges=None, outer_face=None):
        """Sub-embedding on ``vertices`` keeping the cyclic order of what remains"""
        keep = set(vertices)
        if edges is None:
            edge_set = {e for e in self.edges if e[0] in keep and e[1] in keep}
        else:
            edge_set = {tuple(sorted(e)) for e in edges}
        rotation = {
            v: tuple(u for u in self.rotation[v] if tuple(sorted((u, v))) in edge_set)
            for v in sorted(keep)
        }
        return PlanarEmbedding(rotation, outer_face)

    def check_path(self, Q):
        for u, v in Q.edges():
            if not self.adjacent(u, v):
                raise ValueError(f"{u} and {v} are not adjacent in {Q.vertices}")

    def __repr__(self):
        return (
            f"{type(self).__name__}(n={len(self.rotation)}, m={len(self.edges)}, "
            f"outer={list(self.outer_face)})"
        )


def _same_cyclic(walk, candidate):
    if len(walk) != len(candidate):
        return False
    n = len(walk)
    return any(walk[i:] + walk[:i] == candidate for i in range(n))


def build_embedding(rotation, outer_face):
    """Validate and build an embedding from neighbor cycles and an outer face"""
    return PlanarEmbedding(rotation, outer_face)


def embedding_from_positions(edges, positions, outer_face):
    """Embedding of a straight-line drawing, rotations sorted clockwise by angle"""

    nbrs = {v: [] for v in positions}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    rotation = {}
    for v, around in nbrs.items():
        if not around:
            rotation[v] = ()
            continue
        origin = np.asarray(positions[v], dtype=float)
        offsets = np.array([positions[u] for u in around], dtype=float) - origin
        angles = np.arctan2(offsets[:, 1], offsets[:, 0])
        order = np.argsort(-angles, kind="stable")
        rotation[v] = tuple(around[i] for i in order)

    return build_embedding(rotation, outer_face)


def _cycle_of(C):
    if isinstance(C, PathSpec):
        return C if C.closed else PathSpec(C.vertices, closed=True)
    return PathSpec(tuple(C), closed=True)


def chords_of_cycle(G, C):
    """Edges of G joining two vertices of C that are not edges of C"""
    C = _cycle_of(C)
    on_cycle = set(C.vertices)
    cycle_edges = set(C.edges())
    return frozenset(
        e for e in G.edges if e[0] in on_cycle and e[1] in on_cycle and e not in cycle_edges
    )


def _sides(G, F):
    """Face indices inside and outside the cycle F"""

    f_edges = set(F.edges())
    face_of = {dart: i for i, darts in enumerate(G.faces) for dart in darts}
    dual = nx.Graph()
    dual.add_nodes_from(range(len(G.faces)))
    for (u, v), i in face_of.items():
        if tuple(sorted((u, v))) not in f_edges:
            dual.add_edge(i, face_of[(v, u)])

    outside = nx.node_connected_component(dual, G.outer_index)
    inside = set(range(len(G.faces))) - outside
    return inside, outside


def _face_parts(G, face_ids):
    vertices, edges = set(), set()
    for i in face_ids:
        for u, v in G.faces[i]:
            vertices.add(u)
            edges.add(tuple(sorted((u, v))))
    return vertices, edges


def side_vertices(G, F):
    """Vertex sets of Int_G(F) and Ext_G(F)"""
    F = _cycle_of(F)
    inside, outside = _sides(G, F)
    return _face_parts(G, inside)[0], _face_parts(G, outside)[0]


def interior(G, F):
    """Int_G(F): F together with everything drawn inside it"""
    F = _cycle_of(F)
    inside, _ = _sides(G, F)
    vertices, edges = _face_parts(G, inside)
    return G.restrict(vertices, edges, F.vertices)


def exterior(G, F):
    """Ext_G(F): F together with everything drawn outside it"""
    F = _cycle_of(F)
    _, outside = _sides(G, F)
    vertices, edges = _face_parts(G, outside)
    return G.restrict(vertices, edges, G.outer_face)


def rest_path(C, P):
    """Vertices of C minus the interior of P, in order from p0 to p1"""

    C = tuple(C.vertices if isinstance(C, PathSpec) else C)
    P = tuple(P.vertices if isinstance(P, PathSpec) else P)
    i = C.index(P[0])
    walk = C[i:] + C[:i]
    if len(P) > 1 and walk[1] != P[1]:
        walk = (walk[0],) + walk[1:][::-1]
    if walk[: len(P)] != P:
        raise ValueError(f"{list(P)} is not a subpath of the cycle {list(C)}")
    if len(P) == 1:
        return P
    return (P[0],) + walk[len(P) :][::-1] + (P[-1],)


def is_induced_cycle(G, C):
    return not chords_of_cycle(G, C)


def cycles_up_to(G, length):
    """All cycles of G with at most ``length`` vertices, as closed PathSpecs"""
    cycles = nx.simple_cycles(G.to_networkx(), length_bound=length)
    return sorted(
        (PathSpec(tuple(c), closed=True) for c in cycles if len(c) >= 3),
        key=lambda F: (len(F), sorted(F.vertices)),
    )


def natural_partition(G, Q, keep=None):
    """Split G along the k-chord Q into the two interiors meeting in Q

    ``G1`` is the part holding more edges of ``keep`` when it is given;
    otherwise ``G0`` is the part whose outer cycle runs forward along C from
    the last vertex of Q back to its first.
    """

    C = G.outer_cycle
    if C is None:
        raise NotAChord("The outer face is not a cycle")
    Q = Q if isinstance(Q, PathSpec) else PathSpec(tuple(Q))
    on_cycle = set(C)
    a, b = Q.ends
    if Q.length < 1 or a == b or a not in on_cycle or b not in on_cycle:
        raise NotAChord(f"{list(Q)} does not join two vertices of C")
    if any(v in on_cycle for v in Q.interior):
        raise NotAChord(f"{list(Q)} has an interior vertex on C")
    if Q.length == 1 and Q.edges()[0] not in chords_of_cycle(G, C):
        raise NotAChord(f"{list(Q)} is an edge of C or missing from G")
    G.check_path(Q)

    n = len(C)
    i, j = C.index(a), C.index(b)
    forward = [C[(j + k) % n] for k in range(1, (i - j) % n)]
    backward = [C[(j - k) % n] for k in range(1, (j - i) % n)]
    parts = [
        interior(G, PathSpec(Q.vertices + tuple(arc), closed=True))
        for arc in (forward, backward)
    ]

    if keep is not None:
        keep_edges = set(keep.edges())
        counts = [len(keep_edges & set(part.edges)) for part in parts]
        if counts[0] > counts[1]:
            parts.reverse()
    return tuple(parts)


def subgraph_GQ(G, C, P, Q):
    """The plane graph G^Q and its outer walk C^Q

    Q meets C minus the interior of P either in exactly its two endpoints, or
    (as a path or a cycle) in a single vertex.
    """

    rest = rest_path(C, P)
    on_rest = set(rest)
    meet = [v for v in Q.vertices if v in on_rest]

    if Q.closed:
        if len(meet) != 1:
            raise BadIntersection(f"Cycle {list(Q)} meets C\\P in {meet}")
        return interior(G, Q), Q.vertices

    if len(meet) == 1:
        H = G.restrict(Q.vertices, Q.edges())
        return H, Q.vertices

    if len(meet) == 2 and set(meet) == set(Q.ends) and Q.ends[0] != Q.ends[1]:
        i, j = sorted(rest.index(v) for v in Q.ends)
        arc = rest[i : j + 1]
        back = Q.vertices if Q.ends[0] == arc[-1] else Q.vertices[::-1]
        cycle = PathSpec(arc + back[1:-1], closed=True)
        return interior(G, cycle), cycle.vertices

    raise BadIntersection(f"{list(Q)} meets C\\P in {meet}")


def is_short_inseparable(G):
    """No cycle of length at most four has vertices strictly on both sides"""
    for F in cycles_up_to(G, 4):
        inside, outside = side_vertices(G, F)
        if inside != set(F.vertices) and outside != set(F.vertices):
            log.debug(f"Separating short cycle {list(F)}")
            return False
    return True


class WheelKind(Enum):
    BROKEN_WHEEL = "broken-wheel"
    WHEEL = "wheel"
    NEITHER = "neither"


@dataclass(frozen=True)
class WheelClass:
    kind: WheelKind
    principal_path: PathSpec = None
    central_vertex: int = None
    rim_edge_count: int = 0


def _rim(G, hub):
    """G minus ``hub`` when ``hub`` sees every other vertex, else None"""
    others = set(G.vertices) - {hub}
    if set(G.neighbors(hub)) != others:
        return None
    return G.to_networkx().subgraph(others)


def _is_path_between(H, x, y):
    if x == y or len(H) < 2 or not nx.is_connected(H):
        return False
    if H.number_of_edges() != len(H) - 1:
        return False
    ends = sorted(v for v in H if H.degree(v) == 1)
    return ends == sorted((x, y)) and all(H.degree(v) <= 2 for v in H)


def _broken_wheel(G, P):
    q1, p, qn = P.vertices
    H = _rim(G, p)
    if H is None or not _is_path_between(H, q1, qn):
        return None
    return WheelClass(WheelKind.BROKEN_WHEEL, principal_path=P, rim_edge_count=len(H) - 1)


def _wheel(G):
    for c in G.vertices:
        H = _rim(G, c)
        if H is None or len(H) < 3 or not nx.is_connected(H):
            continue
        if all(H.degree(v) == 2 for v in H):
            return WheelClass(WheelKind.WHEEL, central_vertex=c, rim_edge_count=len(H))
    return None


def classify_wheel(G, P=None):
    """Broken wheel with principal path P, wheel, or neither"""

    if P is not None:
        P = P if isinstance(P, PathSpec) else PathSpec(tuple(P))
        if P.length != 2:
            raise ValueError(f"A principal path has two edges, got {list(P)}")
        found = _broken_wheel(G, P) or _wheel(G)
        return found or WheelClass(WheelKind.NEITHER)

    found = _wheel(G)
    if found:
        return found
    for p in G.vertices:
        H = _rim(G, p)
        if H is None:
            continue
        ends = sorted(v for v in H if H.degree(v) == 1)
        if len(ends) == 2:
            found = _broken_wheel(G, PathSpec((ends[0], p, ends[1])))
            if found:
                return found
    return WheelClass(WheelKind.NEITHER)
