#!/usr/bin/env python

"""Enumeration and sampling of small rainbows

Plane graphs are grown inside a labeled outer cycle 0, 1, ..., k-1 by two
moves on an interior face: join two corners by an edge, or add a vertex
joined to a set of corners. Every map is kept once up to isomorphisms that
fix the cycle labels, mirror images included, by comparing breadth-first
codes. For a path 0, 1, ..., m the stream also folds in the reflection
v -> (m - v) mod k, which reverses the path. List assignments are generated
orderly, one per orbit of color relabelings and of the symmetries of the
map, with every list pinned to the floor its shape requires.

"""

from dataclasses import dataclass
from itertools import combinations
import logging

import numpy as np

from .coloring import Rainbow
from .planar import PathSpec, PlanarEmbedding, embedding_from_positions

log = logging.getLogger(__name__)


class CapExceeded(ValueError):
    """Generator caps beyond what the enumerators support"""


@dataclass(frozen=True)
class ShapeProfile:
    """List-size profile of one family of rainbows

    Attributes
    ----------
    path_edges : int
        |E(P)| with P = 0, 1, ..., path_edges along the outer cycle (None when
        the family ranges over every arc length)
    endpoint_sizes : tuple
        Allowed (|L(p0)|, |L(p1)|) pairs
    inner_size : int
        |L(v)| on the interior of P; None gives the whole palette
    cycle_lengths : tuple
        Inclusive (min, max) outer cycle length; max None means unbounded
    precolored : bool
        Every outer vertex carries a singleton list and the lists form a
        proper coloring of C

    """

    path_edges: int = None
    endpoint_sizes: tuple = ()
    inner_size: int = None
    cycle_lengths: tuple = (3, None)
    precolored: bool = False
    distinct_ends: bool = False
    fan: bool = False


SHAPES = {
    "2-path": ShapeProfile(2, ((1, 3), (2, 2), (3, 1))),
    "3-path": ShapeProfile(
        3, tuple((a, b) for a in (1, 2, 3) for b in (1, 2, 3)), cycle_lengths=(4, None)
    ),
    "4-path": ShapeProfile(4, ((1, 3), (3, 1)), inner_size=5, cycle_lengths=(5, None)),
    "5-path": ShapeProfile(5, ((1, 3), (3, 1), (3, 3)), inner_size=5, cycle_lengths=(6, None)),
    "edge": ShapeProfile(1, ((1, 1),), distinct_ends=True),
    "cycle-3-4": ShapeProfile(1, cycle_lengths=(3, 4), precolored=True),
    "cycle-5-6": ShapeProfile(1, cycle_lengths=(5, 6), precolored=True),
    "broken-wheel": ShapeProfile(2, ((3, 3),), inner_size=3, fan=True),
    "two-2-lists": ShapeProfile(None, ((2, 2),), inner_size=3),
}

FLOOR_OFF_PATH = 3
FLOOR_INTERIOR = 5


@dataclass
class InstanceGenerator:
    """Configuration of one instance stream

    ``max_vertices`` and ``palette_cap`` default per mode; ``samples`` and
    ``seed`` only matter in sampled mode.

    Constants
    ---------
    MAX_VERTICES, MAX_PALETTE : int
        Hard caps on the stream configuration
    DEFAULT_CAPS : dict
        Mode to (max_vertices, palette_cap)

    """

    shape: str = "2-path"
    mode: str = "exhaustive"
    max_vertices: int = None
    palette_cap: int = None
    seed: int = None
    samples: int = 10_000
    min_interior_degree: int = 0

    MAX_VERTICES = 14
    MAX_PALETTE = 8
    DEFAULT_CAPS = {"exhaustive": (9, 6), "sampled": (12, 7)}

    def __post_init__(self):
        if self.mode not in self.DEFAULT_CAPS:
            raise ValueError(f"Unknown mode {self.mode!r}")
        if self.shape not in SHAPES:
            raise ValueError(f"Unknown shape {self.shape!r}; expected one of {sorted(SHAPES)}")
        n, palette = self.DEFAULT_CAPS[self.mode]
        if self.max_vertices is None:
            self.max_vertices = n
        if self.palette_cap is None:
            self.palette_cap = palette
        if self.max_vertices > self.MAX_VERTICES:
            raise CapExceeded(f"max_vertices={self.max_vertices} > {self.MAX_VERTICES}")
        if self.palette_cap > self.MAX_PALETTE:
            raise CapExceeded(f"palette_cap={self.palette_cap} > {self.MAX_PALETTE}")
        if self.palette_cap < 3 or self.max_vertices < 3:
            raise ValueError(f"Caps too small: {self.max_vertices} vertices, {self.palette_cap} colors")
        if self.mode == "sampled" and self.seed is None:
            raise ValueError("Sampled mode needs an explicit seed")
        inner = self.profile.inner_size
        if inner is not None and inner > self.palette_cap:
            raise ValueError(f"Shape {self.shape} needs a palette of at least {inner} colors")

    @property
    def profile(self):
        return SHAPES[self.shape]

    @property
    def caps(self):
        return {
            "shape": self.shape,
            "mode": self.mode,
            "max_vertices": self.max_vertices,
            "palette_cap": self.palette_cap,
            "samples": self.samples if self.mode == "sampled" else None,
            "min_interior_degree": self.min_interior_degree,
        }

    def __iter__(self):
        return enumerate_instances(self)


# Rotation systems under construction are plain dicts of neighbor tuples.


def _trace_faces(rotation):
    position = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()}
    seen = set()
    faces = []
    for v, nbrs in rotation.items():
        for u in nbrs:
            if (v, u) in seen:
                continue
            darts = []
            dart = (v, u)
            while dart not in seen:
                seen.add(dart)
                darts.append(dart)
                a, b = dart
                around = rotation[b]
                dart = (b, around[(position[b][a] + 1) % len(around)])
            faces.append(tuple(darts))
    return faces


def _interior_faces(faces):
    return [f for f in faces if (0, 1) not in f]


def _insert_after(nbrs, u, x):
    i = nbrs.index(u)
    return nbrs[: i + 1] + (x,) + nbrs[i + 1 :]


def _base_cycle(k):
    return {i: ((i - 1) % k, (i + 1) % k) for i in range(k)}


def _map_code(rotation, k, mirror=False):
    """Breadth-first code with the cycle labels fixed, and the labeling used"""

    label = {v: v for v in range(k)}
    order = list(range(k))
    ref = {v: (v + 1) % k for v in range(k)}
    code = []
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        nbrs = rotation[v][::-1] if mirror else rotation[v]
        s = nbrs.index(ref[v])
        walk = nbrs[s:] + nbrs[:s]
        for u in walk:
            if u not in label:
                label[u] = len(order)
                order.append(u)
                ref[u] = v
        code.append(tuple(label[u] for u in walk))
    return tuple(code), label


def _certificate(rotation, k):
    """The smaller of the map's and its mirror image's codes, with its labeling"""
    return min(_map_code(rotation, k), _map_code(rotation, k, mirror=True), key=lambda t: t[0])


def canonical_code(rotation, k):
    """Certificate shared by a map and its mirror image"""
    return _certificate(rotation, k)[0]


def reflection(rotation, k, m):
    """Vertex map v -> (m - v) mod k on the cycle, fixing interior vertices

    It carries the path 0, 1, ..., m onto itself reversed.
    """
    return {v: (m - v) % k if v < k else v for v in rotation}


def reflect_rotation(rotation, k, m):
    """The map relabeled by ``reflection``, with the outer cycle kept in order"""
    r = reflection(rotation, k, m)
    return {r[v]: tuple(r[u] for u in nbrs[::-1]) for v, nbrs in rotation.items()}


def reflection_code(rotation, k, m):
    """Certificate of a map up to isomorphisms preserving the cycle and the
    path 0, 1, ..., m (possibly reversing the path)"""
    return min(canonical_code(rotation, k), canonical_code(reflect_rotation(rotation, k, m), k))


def reflection_permutation(rotation, k, m):
    """Vertex permutation carrying the map onto its reflection, or None"""

    code, label = _certificate(rotation, k)
    code_r, label_r = _certificate(reflect_rotation(rotation, k, m), k)
    if code != code_r:
        return None
    back = {i: v for v, i in label_r.items()}
    r = reflection(rotation, k, m)
    return {v: r[back[label[v]]] for v in rotation}


def _closure(perms):
    """Nontrivial elements of the group generated by ``perms``"""
    if not perms:
        return []
    identity = {v: v for v in perms[0]}
    key = lambda p: tuple(sorted(p.items()))
    group = {key(identity): identity}
    frontier = [identity]
    while frontier:
        following = []
        for a in frontier:
            for b in perms:
                c = {v: a[b[v]] for v in a}
                if key(c) not in group:
                    group[key(c)] = c
                    following.append(c)
        frontier = following
    return [p for p in group.values() if p != identity]


def mirror_permutation(rotation, k):
    """Vertex permutation carrying the map onto its mirror image, or None"""

    code, label = _map_code(rotation, k)
    code_m, label_m = _map_code(rotation, k, mirror=True)
    if code != code_m:
        return None
    back = {i: v for v, i in label_m.items()}
    perm = {v: back[label[v]] for v in rotation}
    if all(v == u for v, u in perm.items()):
        return None
    return perm


def _corner_walk(face):
    return [a for a, _ in face]


def _children(rotation, faces, max_vertices):
    n = len(rotation)
    for face in _interior_faces(faces):
        walk = _corner_walk(face)
        size = len(walk)

        for i, j in combinations(range(size), 2):
            a, b = walk[i], walk[j]
            if a == b or b in rotation[a]:
                continue
            child = dict(rotation)
            child[a] = _insert_after(rotation[a], walk[i - 1], b)
            child[b] = _insert_after(rotation[b], walk[j - 1], a)
            yield child

        if n >= max_vertices:
            continue
        x = n
        for d in range(1, size + 1):
            for corners in combinations(range(size), d):
                vertices = [walk[j] for j in corners]
                if len(set(vertices)) != d:
                    continue
                child = dict(rotation)
                for j in corners:
                    child[walk[j]] = _insert_after(rotation[walk[j]], walk[j - 1], x)
                child[x] = tuple(vertices[::-1])
                yield child


def _degree_reachable(rotation, faces, k, budget, need):
    """Every interior vertex could still reach degree ``need``"""
    if need <= 0:
        return True
    mates = {}
    for face in faces:
        around = {a for a, _ in face}
        for v in around:
            if v >= k:
                mates.setdefault(v, set()).update(around)
    return all(len(m) - 1 + budget >= need for m in mates.values())


def _interior_degrees_ok(rotation, k, need):
    return all(len(nbrs) >= need for v, nbrs in rotation.items() if v >= k)


def grow_maps(k, max_vertices, min_interior_degree=0):
    """Every map inside the labeled k-cycle with at most ``max_vertices``
    vertices and interior degrees at least ``min_interior_degree``, once each
    """

    base = _base_cycle(k)
    seen = {canonical_code(base, k)}
    frontier = [(base, _trace_faces(base))]
    emitted = 0
    while frontier:
        following = []
        for rotation, faces in frontier:
            if _interior_degrees_ok(rotation, k, min_interior_degree):
                emitted += 1
                yield rotation
            for child in _children(rotation, faces, max_vertices):
                code = canonical_code(child, k)
                if code in seen:
                    continue
                seen.add(code)
                child_faces = _trace_faces(child)
                budget = max_vertices - len(child)
                if _degree_reachable(child, child_faces, k, budget, min_interior_degree):
                    following.append((child, child_faces))
        frontier = following
    log.debug(f"k={k}: {emitted} maps emitted, {len(seen)} codes seen")


def fan_rotation(k):
    """Broken wheel on the k-cycle 0..k-1 with hub 1 and principal path 0 1 2"""
    angles = 2 * np.pi * np.arange(k) / k
    positions = {v: (np.cos(t), np.sin(t)) for v, t in enumerate(angles)}
    edges = [(v, (v + 1) % k) for v in range(k)]
    edges += [(1, v) for v in range(3, k)]
    return embedding_from_positions(edges, positions, tuple(range(k))).rotation


# List assignments.


def _compositions(total, caps):
    """Tuples t with 0 <= t[i] <= caps[i] summing to ``total``"""
    if not caps:
        if total == 0:
            yield ()
        return
    for t in range(min(total, caps[0]), -1, -1):
        for rest in _compositions(total - t, caps[1:]):
            yield (t,) + rest


def orderly_lists(sizes, palette, fixed=None):
    """One list assignment per orbit under relabelings of ``palette``

    ``sizes`` maps vertices (in the order they are decided) to list sizes;
    ``fixed`` lists are invariant under every relabeling and leave the
    color classes untouched.
    """

    order = list(sizes)
    fixed = dict(fixed or {})
    acc = {}

    def descend(i, classes):
        if i == len(order):
            out = dict(fixed)
            out.update(acc)
            yield out
            return
        v = order[i]
        for counts in _compositions(sizes[v], [len(c) for c in classes]):
            chosen, refined = [], []
            for cls, t in zip(classes, counts):
                chosen.extend(cls[:t])
                refined.extend(part for part in (cls[:t], cls[t:]) if part)
            acc[v] = frozenset(chosen)
            yield from descend(i + 1, refined)
        acc.pop(v, None)

    yield from descend(0, [list(palette)])


def orderly_form(lists, order, palette):
    """The orderly representative of the orbit of ``lists``"""

    classes = [(list(palette), list(palette))]
    out = {}
    for v in order:
        picked = set(lists[v])
        chosen, refined = [], []
        for canon, actual in classes:
            inside = [c for c in actual if c in picked]
            outside = [c for c in actual if c not in picked]
            t = len(inside)
            chosen.extend(canon[:t])
            if inside:
                refined.append((canon[:t], inside))
            if outside:
                refined.append((canon[t:], outside))
        out[v] = frozenset(chosen)
        classes = refined
    return out


def _lists_key(lists, order):
    return tuple(tuple(sorted(lists[v])) for v in order)


def _path_for(profile, k, arc=None):
    m = profile.path_edges if arc is None else arc
    return PathSpec(tuple(range(m + 1)))


def _arcs(profile, k):
    if profile.path_edges is not None:
        return [profile.path_edges]
    return list(range(1, k // 2 + 1))


def _sizes_for(profile, k, n, path, ends, palette_cap):
    """Per-vertex list sizes in decision order; None marks the full palette"""
    sizes = {}
    on_path = set(path.vertices)
    for v in range(n):
        if profile.precolored and v < k:
            sizes[v] = 1
        elif v == path.vertices[0]:
            sizes[v] = ends[0]
        elif v == path.vertices[-1]:
            sizes[v] = ends[1]
        elif v in on_path:
            sizes[v] = profile.inner_size
        elif v < k:
            sizes[v] = FLOOR_OFF_PATH
        else:
            sizes[v] = FLOOR_INTERIOR
    return sizes


def _valid_lists(profile, G, path, lists):
    if profile.distinct_ends:
        a, b = path.ends
        if lists[a] == lists[b]:
            return False
    if profile.precolored:
        for u, v in G.edges:
            if lists[u] == lists[v] and len(lists[u]) == 1:
                return False
    return True


def _symmetries(rotation, k, m):
    """Nontrivial vertex permutations preserving the map, C and P setwise"""
    perms = [
        p
        for p in (mirror_permutation(rotation, k), reflection_permutation(rotation, k, m))
        if p is not None
    ]
    return _closure(perms)


def _assignments(profile, G, k, path, palette_cap):
    palette = range(palette_cap)
    n = len(G.vertices)
    ends_options = profile.endpoint_sizes or ((1, 1),)
    perms = _symmetries(G.rotation, k, path.length)
    order = list(range(n))
    for ends in ends_options:
        sizes = _sizes_for(profile, k, n, path, ends, palette_cap)
        if any(s is not None and s > palette_cap for s in sizes.values()):
            continue
        fixed = {v: frozenset(palette) for v, s in sizes.items() if s is None}
        decided = {v: s for v, s in sizes.items() if s is not None}
        for lists in orderly_lists(decided, palette, fixed):
            if not _valid_lists(profile, G, path, lists):
                continue
            if perms:
                key = _lists_key(orderly_form(lists, order, palette), order)
                if any(
                    key > _lists_key(orderly_form({v: lists[p[v]] for v in order}, order, palette), order)
                    for p in perms
                ):
                    continue
            yield lists


def _exhaustive(gen):
    profile = gen.profile
    low, high = profile.cycle_lengths
    high = gen.max_vertices if high is None else min(high, gen.max_vertices)
    room_inside = gen.palette_cap >= FLOOR_INTERIOR

    for k in range(low, high + 1):
        if profile.fan:
            maps = [fan_rotation(k)]
        else:
            limit = gen.max_vertices if room_inside else k
            maps = grow_maps(k, limit, gen.min_interior_degree)
        for rotation in maps:
            G = PlanarEmbedding(rotation, tuple(range(k)))
            for arc in _arcs(profile, k):
                path = _path_for(profile, k, arc)
                if path.length >= k:
                    continue
                if reflection_code(rotation, k, path.length) != canonical_code(rotation, k):
                    continue
                for lists in _assignments(profile, G, k, path, gen.palette_cap):
                    yield Rainbow(G, path, lists)


# Sampling.


def _random_subset(rng, size, palette_cap):
    return frozenset(int(c) for c in rng.choice(palette_cap, size=size, replace=False))


def _random_map(rng, k, n_inner, n_edges):
    rotation = _base_cycle(k)
    for _ in range(n_inner):
        faces = _interior_faces(_trace_faces(rotation))
        face = faces[rng.integers(len(faces))]
        walk = _corner_walk(face)
        corners, used = [], set()
        for j in rng.permutation(len(walk)):
            if walk[j] not in used and (not corners or rng.random() < 0.75):
                corners.append(int(j))
                used.add(walk[j])
        corners.sort()
        x = len(rotation)
        child = dict(rotation)
        for j in corners:
            child[walk[j]] = _insert_after(rotation[walk[j]], walk[j - 1], x)
        child[x] = tuple(walk[j] for j in corners[::-1])
        rotation = child
    for _ in range(n_edges):
        faces = _interior_faces(_trace_faces(rotation))
        face = faces[rng.integers(len(faces))]
        walk = _corner_walk(face)
        pairs = [
            (i, j)
            for i, j in combinations(range(len(walk)), 2)
            if walk[i] != walk[j] and walk[j] not in rotation[walk[i]]
        ]
        if not pairs:
            continue
        i, j = pairs[rng.integers(len(pairs))]
        a, b = walk[i], walk[j]
        child = dict(rotation)
        child[a] = _insert_after(rotation[a], walk[i - 1], b)
        child[b] = _insert_after(rotation[b], walk[j - 1], a)
        rotation = child
    return rotation


def _prune_interior(rotation, k, need):
    """Drop interior vertices of degree below ``need`` until none remain,
    keep the part attached to the cycle, and relabel densely"""

    rotation = dict(rotation)
    while True:
        low = {v for v, nbrs in rotation.items() if v >= k and len(nbrs) < need}
        if not low:
            break
        rotation = {
            v: tuple(u for u in nbrs if u not in low)
            for v, nbrs in rotation.items()
            if v not in low
        }

    reached = set(range(k))
    stack = list(range(k))
    while stack:
        v = stack.pop()
        for u in rotation[v]:
            if u not in reached:
                reached.add(u)
                stack.append(u)
    kept = sorted(reached)
    relabel = {v: i for i, v in enumerate(kept)}
    return {relabel[v]: tuple(relabel[u] for u in rotation[v]) for v in kept}


def canonical_palette(lists):
    """Renumber colors by first appearance over ascending vertices"""
    relabel = {}
    for v in sorted(lists):
        for c in sorted(lists[v]):
            relabel.setdefault(c, len(relabel))
    return {v: frozenset(relabel[c] for c in L) for v, L in lists.items()}


def _sampled(gen):
    profile = gen.profile
    rng = np.random.default_rng(gen.seed)
    low, high = profile.cycle_lengths
    high = gen.max_vertices if high is None else min(high, gen.max_vertices)
    low = max(low, (profile.path_edges or 1) + 1)
    room_inside = gen.palette_cap >= FLOOR_INTERIOR
    if low > high:
        log.warning(f"No {gen.shape} instances fit in {gen.max_vertices} vertices")
        return

    for _ in range(gen.samples):
        k = int(rng.integers(low, high + 1))
        if profile.fan:
            rotation = fan_rotation(k)
        else:
            n_inner = int(rng.integers(0, gen.max_vertices - k + 1)) if room_inside else 0
            n_edges = int(rng.integers(0, k + 2 * n_inner + 1))
            rotation = _random_map(rng, k, n_inner, n_edges)
            rotation = _prune_interior(rotation, k, gen.min_interior_degree)
        G = PlanarEmbedding(rotation, tuple(range(k)))

        arcs = _arcs(profile, k)
        path = _path_for(profile, k, arcs[int(rng.integers(len(arcs)))])
        options = profile.endpoint_sizes or ((1, 1),)
        ends = options[int(rng.integers(len(options)))]
        sizes = _sizes_for(profile, k, len(rotation), path, ends, gen.palette_cap)

        while True:
            lists = {
                v: frozenset(range(gen.palette_cap))
                if s is None
                else _random_subset(rng, s, gen.palette_cap)
                for v, s in sizes.items()
            }
            if _valid_lists(profile, G, path, lists):
                break
        yield Rainbow(G, path, canonical_palette(lists))


def enumerate_instances(gen):
    """Stream of rainbows for ``gen``"""
    if gen.mode == "exhaustive":
        return _exhaustive(gen)
    return _sampled(gen)
