#!/usr/bin/env python

"""List assignments, partial colorings, and the extension oracle"""

from dataclasses import dataclass, field
from functools import cached_property
import logging

from .planar import PathSpec, rest_path, subgraph_GQ
from .util import coloring_key, colors_of, mask_of, popcount

log = logging.getLogger(__name__)


class ImproperColoring(ValueError):
    """Two adjacent colored vertices share a color"""


class ColorNotInList(ValueError):
    """A vertex is colored outside its list"""


class RainbowError(ValueError):
    """A list floor of the rainbow definition fails"""


def normalize_lists(G, lists):
    """Per-vertex frozensets, empty for vertices without an entry"""
    return {v: frozenset(int(c) for c in lists.get(v, ())) for v in G.vertices}


def check_proper(G, L, phi):
    for v, c in phi.items():
        if c not in L.get(v, ()):
            raise ColorNotInList(f"Color {c} is not in L({v}) = {sorted(L.get(v, ()))}")
        for u in G.neighbors(v):
            if phi.get(u) == c:
                raise ImproperColoring(f"Adjacent vertices {v} and {u} both use {c}")


def residual_lists(G, L, phi):
    """L_phi on the uncolored vertices"""
    check_proper(G, L, phi)
    return {
        v: frozenset(L.get(v, ())) - {phi[u] for u in G.neighbors(v) if u in phi}
        for v in G.vertices
        if v not in phi
    }


class ExtensionSolver:
    """Backtracking list-coloring oracle over one (G, L)

    Vertices are picked most-constrained first (ties by id), colors ascending,
    and every choice is forward-checked on the residual bit masks of the
    remaining vertices. Components of the uncolored part are solved apart.

    Attributes
    ----------
    G : PlanarEmbedding
        Host graph
    masks : dict
        Vertex id to the bit mask of its list

    Constants
    ---------
    CACHE_LIMIT : int
        Maximum number of memoized ``extends`` answers

    """

    CACHE_LIMIT = 500_000

    def __init__(self, G, L):
        self.G = G
        self.lists = normalize_lists(G, L)
        self.adj = {v: frozenset(G.neighbors(v)) for v in G.vertices}
        self.masks = {v: mask_of(self.lists[v]) for v in G.vertices}
        self._cache = {}

    def is_proper(self, phi):
        for v, c in phi.items():
            if not (self.masks[v] >> c) & 1:
                return False
            if any(phi.get(u) == c for u in self.adj[v]):
                return False
        return True

    def residual_mask(self, v, phi):
        m = self.masks[v]
        for u in self.adj[v]:
            c = phi.get(u)
            if c is not None:
                m &= ~(1 << c)
        return m

    def extend(self, phi, targets=None):
        """A proper L-coloring of ``targets`` extending phi, or None"""

        if not self.is_proper(phi):
            return None
        if targets is None:
            targets = self.G.vertices
        domains = {v: self.residual_mask(v, phi) for v in targets if v not in phi}
        if not all(domains.values()):
            return None

        result = dict(phi)
        for component in self._components(domains):
            part = self._search({v: domains[v] for v in component}, {})
            if part is None:
                return None
            result.update(part)
        return result

    def extends(self, phi):
        """Whether phi extends to an L-coloring of all of G (memoized)"""
        key = coloring_key(phi)
        known = self._cache.get(key)
        if known is None:
            known = self.extend(phi) is not None
            if len(self._cache) < self.CACHE_LIMIT:
                self._cache[key] = known
        return known

    def _components(self, domains):
        seen = set()
        components = []
        for v in sorted(domains):
            if v in seen:
                continue
            seen.add(v)
            stack, component = [v], []
            while stack:
                x = stack.pop()
                component.append(x)
                for u in self.adj[x]:
                    if u in domains and u not in seen:
                        seen.add(u)
                        stack.append(u)
            components.append(component)
        return sorted(components, key=len)

    def _search(self, domains, assignment):
        if not domains:
            return dict(assignment)

        v = min(domains, key=lambda u: (popcount(domains[u]), u))
        for c in colors_of(domains[v]):
            bit = 1 << c
            remaining = {}
            for u, m in domains.items():
                if u == v:
                    continue
                if m & bit and u in self.adj[v]:
                    m &= ~bit
                    if not m:
                        break
                remaining[u] = m
            else:
                assignment[v] = c
                found = self._search(remaining, assignment)
                if found is not None:
                    return found
                del assignment[v]
        return None

    def enumerate(self, phi, domain):
        """Every proper extension of phi to ``domain``, lexicographically"""

        order = sorted(v for v in set(domain) if v not in phi)
        current = dict(phi)

        def descend(k):
            if k == len(order):
                yield dict(current)
                return
            v = order[k]
            for c in colors_of(self.residual_mask(v, current)):
                current[v] = c
                yield from descend(k + 1)
                del current[v]

        yield from descend(0)


def extend_coloring(G, L, phi, targets=None, solver=None):
    solver = solver or ExtensionSolver(G, L)
    check_proper(G, solver.lists, phi)
    return solver.extend(phi, targets)


def enumerate_extensions(G, L, phi, domain, solver=None):
    solver = solver or ExtensionSolver(G, L)
    check_proper(G, solver.lists, phi)
    return solver.enumerate(phi, domain)


def lambda_set(G, L, P, colors, solver=None):
    """Colors d for the free position of the 2-path P such that P extends

    ``colors`` holds the fixed colors along P with ``None`` marking the free
    position, so ``(c, None, c2)`` asks for Lambda(c, *, c2).
    """

    P = P.vertices if isinstance(P, PathSpec) else tuple(P)
    if len(P) != 3 or len(colors) != 3 or list(colors).count(None) != 1:
        raise ValueError(f"Expected a 2-path and one free position, got {P}, {colors}")
    solver = solver or ExtensionSolver(G, L)

    free = colors.index(None)
    fixed = {v: c for v, c in zip(P, colors) if c is not None}
    for v, c in fixed.items():
        if c not in solver.lists[v]:
            raise ColorNotInList(f"Color {c} is not in L({v}) = {sorted(solver.lists[v])}")

    found = set()
    for d in sorted(solver.lists[P[free]]):
        phi = dict(fixed)
        phi[P[free]] = d
        if solver.is_proper(phi) and solver.extends(phi):
            found.add(d)
    return frozenset(found)


@dataclass(frozen=True, eq=False)
class Rainbow:
    """Plane graph with its outer cycle, a path on it, and a list assignment

    The outer cycle is read off the embedding; ``path`` runs from p0 to p1.
    """

    graph: object
    path: PathSpec
    lists: dict = field(repr=False)

    def __post_init__(self):
        path = self.path if isinstance(self.path, PathSpec) else PathSpec(tuple(self.path))
        object.__setattr__(self, "path", path)
        object.__setattr__(self, "lists", normalize_lists(self.graph, self.lists))
        self.graph.check_path(path)

    @property
    def cycle(self):
        return self.graph.outer_cycle

    @property
    def p0(self):
        return self.path.vertices[0]

    @property
    def p1(self):
        return self.path.vertices[-1]

    @property
    def terminal(self):
        """(q, q'), the neighbors of the endpoints along P"""
        return self.path.vertices[1], self.path.vertices[-2]

    @property
    def interior_path(self):
        return self.path.interior

    @cached_property
    def rest(self):
        """C minus the interior of P, from p0 to p1"""
        return rest_path(self.cycle, self.path)

    @property
    def off_cycle(self):
        on_cycle = set(self.cycle)
        return tuple(v for v in self.graph.vertices if v not in on_cycle)

    @property
    def end_linked(self):
        return len(self.lists[self.p0]) + len(self.lists[self.p1]) >= 4

    @cached_property
    def solver(self):
        return ExtensionSolver(self.graph, self.lists)

    def with_lists(self, lists):
        return Rainbow(self.graph, self.path, lists)

    def __repr__(self):
        return f"Rainbow(n={len(self.graph.vertices)}, C={list(self.cycle)}, P={list(self.path)})"


def check_rainbow(R):
    """Raise RainbowError unless R meets the list floors of a rainbow"""

    if R.cycle is None:
        raise RainbowError("The outer face is not a cycle")
    rest = R.rest
    for v in R.path.ends:
        if not R.lists[v]:
            raise RainbowError(f"Endpoint {v} of P has an empty list")
    for v in rest[1:-1]:
        if len(R.lists[v]) < 3:
            raise RainbowError(f"L({v}) has fewer than three colors on C\\P")
    for v in R.off_cycle:
        if len(R.lists[v]) < 5:
            raise RainbowError(f"L({v}) has fewer than five colors off C")
    return R


def sub_rainbow(R, Q):
    """The rainbow (G^Q, C^Q, Q, L)"""
    Q = Q if isinstance(Q, PathSpec) else PathSpec(tuple(Q))
    H, _ = subgraph_GQ(R.graph, R.cycle, R.path, Q)
    path = Q if not Q.closed else PathSpec(Q.vertices[:1])
    return Rainbow(H, path, {v: R.lists[v] for v in H.vertices})
