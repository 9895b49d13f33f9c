#!/usr/bin/env python

"""Sufficient colorings, End and Crown sets, universal colors, and the
classification of non-extendable 5- and 6-cycle precolorings

Sufficiency is always decided by double enumeration: every extension of a
partial coloring over the target vertices is handed to the extension oracle.

"""

from dataclasses import dataclass
import logging

import networkx as nx

from .coloring import ExtensionSolver, check_proper
from .planar import PathSpec, is_short_inseparable
from .util import sorted_colorings

log = logging.getLogger(__name__)


class HypothesisViolation(ValueError):
    """An input does not satisfy the hypotheses of the requested classifier"""


def _vertex_set(H):
    if isinstance(H, PathSpec):
        return set(H.vertices)
    if hasattr(H, "vertices") and not isinstance(H, (set, frozenset, list, tuple)):
        return set(H.vertices)
    return set(H)


def is_sufficient(G, L, H, phi, solver=None):
    """Every extension of phi to dom(phi) + V(H) extends to L-color G"""

    solver = solver or ExtensionSolver(G, L)
    check_proper(G, solver.lists, phi)
    domain = set(phi) | _vertex_set(H)
    return all(solver.extends(psi) for psi in solver.enumerate(phi, domain))


def _pair_colorings(R, x, y):
    """Proper L-colorings of {x, y}, ascending"""
    for a in sorted(R.lists[x]):
        if x == y:
            yield {x: a}
            continue
        for b in sorted(R.lists[y]):
            phi = {x: a, y: b}
            if R.solver.is_proper(phi):
                yield phi


def end_set(R):
    """End(P, G): the (P, G)-sufficient L-colorings of the endpoints of P"""
    return [
        phi
        for phi in _pair_colorings(R, R.p0, R.p1)
        if is_sufficient(R.graph, R.lists, R.path, phi, R.solver)
    ]


def failing_colorings(R):
    """L-colorings of V(P) that do not extend to G"""
    return [
        psi for psi in R.solver.enumerate({}, R.path.vertices) if not R.solver.extends(psi)
    ]


@dataclass(frozen=True)
class CrownMembershipReport:
    """Every clause of Crown membership evaluated for one partial coloring

    Attributes
    ----------
    coloring : dict
        The partial coloring under test
    in_domain : bool
        dom(phi) lies in V(C) minus {q, q'}
    condition_a : bool
        Both endpoints colored, plus a vertex of the interior of P other than
        q, q' when P has more than three edges
    condition_b : bool
        Every uncolored vertex of P keeps a residual list of size three
    sufficient : bool
        phi is (P, G)-sufficient
    residual_sizes : dict
        Residual list sizes of the uncolored vertices of P

    """

    coloring: dict
    in_domain: bool
    condition_a: bool
    condition_b: bool
    sufficient: bool
    residual_sizes: dict

    @property
    def member(self):
        return self.in_domain and self.condition_a and self.condition_b and self.sufficient


def _middle(R):
    """The interior of P minus {q, q'}"""
    q, q2 = R.terminal
    return tuple(v for v in R.interior_path if v not in (q, q2))


def _condition_a(R, phi):
    if R.p0 not in phi or R.p1 not in phi:
        return False
    return R.path.length <= 3 or any(v in phi for v in _middle(R))


def _residual_sizes(R, phi):
    return {
        v: len(R.lists[v] - {phi[u] for u in R.graph.neighbors(v) if u in phi})
        for v in R.path.vertices
        if v not in phi
    }


def crown_membership(R, phi):
    if R.path.length < 2:
        raise ValueError(f"Crown sets need a path of two or more edges, got {list(R.path)}")
    check_proper(R.graph, R.lists, phi)
    allowed = set(R.cycle) - set(R.terminal)
    sizes = _residual_sizes(R, phi)
    return CrownMembershipReport(
        coloring=dict(phi),
        in_domain=set(phi) <= allowed,
        condition_a=_condition_a(R, phi),
        condition_b=all(s >= 3 for s in sizes.values()),
        sufficient=is_sufficient(R.graph, R.lists, R.path, phi, R.solver),
        residual_sizes=sizes,
    )


def _crown_candidates(R):
    """Partial colorings of V(C) - {q, q'} that pass clauses a and b"""

    if R.path.length < 2:
        raise ValueError(f"Crown sets need a path of two or more edges, got {list(R.path)}")

    solver = R.solver
    q, q2 = R.terminal
    required = [R.p0, R.p1]
    optional = sorted(v for v in R.cycle if v not in (q, q2, R.p0, R.p1))
    order = sorted(required + optional)
    must = set(required)
    current = {}

    def descend(k):
        if k == len(order):
            if _condition_a(R, current) and all(
                s >= 3 for s in _residual_sizes(R, current).values()
            ):
                yield dict(current)
            return
        v = order[k]
        if v not in must:
            yield from descend(k + 1)
        for c in sorted(R.lists[v]):
            if any(current.get(u) == c for u in solver.adj[v]):
                continue
            current[v] = c
            yield from descend(k + 1)
            del current[v]

    yield from descend(0)


def crown_members(R):
    """Members of Crown(P, G), in candidate order"""
    for phi in _crown_candidates(R):
        if is_sufficient(R.graph, R.lists, R.path, phi, R.solver):
            yield phi


def crown_set(R):
    return sorted_colorings(crown_members(R))


def find_crown_member(R, predicate=None):
    """First member of Crown(P, G) accepted by ``predicate``, or None"""
    for phi in _crown_candidates(R):
        if predicate is not None and not predicate(phi):
            continue
        if is_sufficient(R.graph, R.lists, R.path, phi, R.solver):
            return phi
    return None


def crown_endpoint_profile(R):
    """Realized (phi(p0), phi(p1), colored middle vertices) over Crown(P, G)"""

    middle = _middle(R)
    found = set()
    for phi in _crown_candidates(R):
        key = (phi[R.p0], phi[R.p1], frozenset(v for v in middle if v in phi))
        if key in found:
            continue
        if is_sufficient(R.graph, R.lists, R.path, phi, R.solver):
            found.add(key)
    return found


def universal_colors(G, L, P, mode="universal", solver=None):
    """Colors of L(p0) that are (almost) (P, G)-universal for P = p0 q p1"""

    if mode not in ("universal", "almost"):
        raise ValueError(f"Unknown mode {mode!r}")
    P = P.vertices if isinstance(P, PathSpec) else tuple(P)
    p0, q, p1 = P
    solver = solver or ExtensionSolver(G, L)
    lists = solver.lists

    found = set()
    for a in sorted(lists[p0]):
        if mode == "universal":
            ok = all(
                solver.extends({p0: a, q: b, p1: c})
                for b in lists[q] - {a}
                for c in lists[p1] - {b}
            )
        else:
            need = len(lists[p1]) - 1
            ok = all(
                sum(solver.extends({p0: a, q: b, p1: c}) for c in lists[p1]) >= need
                for b in lists[q] - {a}
            )
        if ok:
            found.add(a)
    return frozenset(found)


@dataclass(frozen=True)
class BohmeVerdict:
    """Extendability of a precolored 5- or 6-cycle and the structure found

    ``structure`` is detected without consulting the solver, so a verdict
    ``agrees`` when a structure was found exactly when phi does not extend.
    """

    extendable: bool
    structure: str = None

    @property
    def case(self):
        if self.extendable:
            return "extendable"
        return self.structure or "unclassified"

    @property
    def agrees(self):
        return self.extendable == (self.structure is None)


def _is_path_of_length(graph, vertices, length):
    H = graph.subgraph(vertices)
    return (
        len(H) == length + 1
        and nx.is_connected(H)
        and H.number_of_edges() == length
        and all(d <= 2 for _, d in H.degree())
    )


def _bohme_structure(G, C, residual):
    inner = [v for v in G.vertices if v not in C]
    graph = G.to_networkx()
    on_cycle = set(C)

    def cycle_nbrs(v):
        return [u for u in G.neighbors(v) if u in on_cycle]

    if len(C) == 5:
        if len(inner) == 1 and len(cycle_nbrs(inner[0])) == 5 and not residual[inner[0]]:
            return "hub"
        return None

    if len(inner) == 1:
        v = inner[0]
        if len(cycle_nbrs(v)) >= 5 and not residual[v]:
            return "i"
    elif len(inner) == 2:
        u, v = inner
        if (
            G.adjacent(u, v)
            and len(residual[u]) == 1
            and residual[u] == residual[v]
            and all(_is_path_of_length(graph, cycle_nbrs(x), 3) for x in inner)
        ):
            return "ii"
    elif len(inner) == 3:
        a, b, c = inner
        if (
            G.adjacent(a, b)
            and G.adjacent(b, c)
            and G.adjacent(a, c)
            and len(residual[a]) == 2
            and residual[a] == residual[b] == residual[c]
            and all(_is_path_of_length(graph, cycle_nbrs(x), 2) for x in inner)
        ):
            return "iii"
    return None


def bohme_classify(G, L, phi, solver=None):
    """Classify an L-coloring phi of the outer 5- or 6-cycle of G"""

    C = G.outer_cycle
    if C is None or len(C) not in (5, 6):
        raise HypothesisViolation(f"Outer face {list(G.outer_face)} is not a 5- or 6-cycle")
    if set(phi) != set(C):
        raise HypothesisViolation("phi must color exactly the outer cycle")
    solver = solver or ExtensionSolver(G, L)
    check_proper(G, solver.lists, phi)
    for v in G.vertices:
        if v not in phi and len(solver.lists[v]) < 5:
            raise HypothesisViolation(f"Interior vertex {v} has fewer than five colors")
    if not is_short_inseparable(G):
        raise HypothesisViolation("G is not short-inseparable")

    residual = {
        v: solver.lists[v] - {phi[u] for u in G.neighbors(v) if u in phi}
        for v in G.vertices
        if v not in phi
    }
    verdict = BohmeVerdict(solver.extends(phi), _bohme_structure(G, C, residual))
    if not verdict.agrees:
        log.error(f"Cycle precoloring {phi} is {verdict.case} with structure {verdict.structure}")
    return verdict
