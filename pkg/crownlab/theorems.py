#!/usr/bin/env python

"""Brute-force checks of the extension theorems over instance streams

Every check takes one rainbow and returns None when the instance does not
meet the theorem's hypotheses, and otherwise the list of ways in which the
conclusion fails (empty on success). ``verify`` runs a check over an
``InstanceGenerator`` stream, optionally on a process pool, and collects a
``VerificationReport``. Each violation is written out as an instance
document, parsed back, and re-checked before it is reported.

"""

from dataclasses import dataclass, field, replace
from itertools import combinations
import logging
import multiprocessing as mp
from time import perf_counter as pc

from .coloring import RainbowError, Rainbow, check_rainbow, lambda_set
from .document import dumps, parse_document, rainbow_to_document
from .instances import InstanceGenerator, enumerate_instances
from .obstructions import (
    EVEN,
    base_coloring_verdict,
    find_obstructions,
    has_g_obstruction,
    hub_paths,
    is_fully_even,
    obstruction_signature,
    x_vertices,
)
from .planar import (
    PathSpec,
    WheelKind,
    chords_of_cycle,
    classify_wheel,
    cycles_up_to,
    exterior,
    is_induced_cycle,
    is_short_inseparable,
    natural_partition,
)
from .sufficiency import (
    HypothesisViolation,
    bohme_classify,
    crown_endpoint_profile,
    end_set,
    failing_colorings,
    find_crown_member,
    is_sufficient,
    universal_colors,
)
from .util import coloring_to_json, pbar, popcount

log = logging.getLogger(__name__)


class UnknownTheorem(KeyError):
    """Theorem id outside the fixed tag set"""


def _fmt(phi):
    return dumps(coloring_to_json(phi))


def _is_rainbow(R):
    try:
        check_rainbow(R)
    except RainbowError:
        return False
    return True


def _colorings(R, domain):
    """Proper L-colorings of ``domain``"""
    return R.solver.enumerate({}, domain)


def _sufficient(R, phi):
    return is_sufficient(R.graph, R.lists, R.path, phi, R.solver)


def _sufficient_colorings(R, domain):
    return (phi for phi in _colorings(R, domain) if _sufficient(R, phi))


def _three_path_rainbow(R):
    return R.path.length == 3 and _is_rainbow(R)


# Endpoints of 2-paths and the four 3-path items.


def check_end2(R):
    if R.path.length != 2 or not R.end_linked or not _is_rainbow(R):
        return None
    end = end_set(R)
    if not end:
        return ["End(P,G) is empty"]
    if len(end) >= 2:
        return []
    q = R.terminal[0]
    paths = hub_paths(R.graph, q, R.cycle, R.p0, R.p1)
    if any(Q.length % 2 == 0 for Q in paths):
        return []
    return [f"End(P,G) = [{_fmt(end[0])}] and no even path on C through N({q}) joins the ends"]


def check_T1(R):
    if not _three_path_rainbow(R) or not R.end_linked:
        return None
    x0, x1 = x_vertices(R)
    domain = {R.p0, x0, x1, R.p1}
    if next(_sufficient_colorings(R, domain), None) is None:
        return [f"No sufficient coloring of {sorted(domain)}"]
    return []


def check_T2(R):
    if not _three_path_rainbow(R):
        return None
    x0, x1 = x_vertices(R)
    part_a = len(R.lists[R.p1]) >= 3
    part_b = x0 == R.p0 and x1 == R.p1
    if not (part_a or part_b):
        return None

    out = []
    obstructions = find_obstructions(R)
    if part_a and not any(is_fully_even(R, o) for o in obstructions):
        domain = {R.p0, x0, x1, R.p1}
        on_p1 = set()
        for phi in _sufficient_colorings(R, domain):
            on_p1.add(phi[R.p1])
            if len(on_p1) >= 2:
                break
        if len(on_p1) < 2:
            out.append(
                f"No fully even obstruction and sufficient colorings of {sorted(domain)} "
                f"use only {sorted(on_p1)} on p1"
            )
    if part_b and not obstructions:
        bad = [phi for phi in _colorings(R, {R.p0, R.p1}) if not _sufficient(R, phi)]
        if len(bad) > 1:
            out.append(f"No obstruction and {len(bad)} endpoint colorings are not sufficient")
    return out


def check_T3(R):
    if not _three_path_rainbow(R) or len(R.lists[R.p1]) < 3:
        return None
    _, x1 = x_vertices(R)
    out = []
    domain = {R.p0, x1, R.p1}
    if next(_sufficient_colorings(R, domain), None) is None:
        out.append(f"No sufficient coloring of {sorted(domain)}")
    if next(_sufficient_colorings(R, {R.p0, R.p1}), None) is None:
        even = [o for o in find_obstructions(R) if o.length_parity == EVEN]
        if not (even and x1 not in (R.p0, R.p1)):
            out.append("No sufficient endpoint coloring and no even obstruction with x1 off P")
    return out


def check_T4(R):
    if not _three_path_rainbow(R):
        return None
    if max(len(R.lists[R.p0]), len(R.lists[R.p1])) < 3:
        return None
    for phi in _colorings(R, {R.p0, R.p1}):
        if base_coloring_verdict(R, phi).is_base:
            return []
    return ["No endpoint coloring is a base-coloring"]


# Crowns of 4- and 5-paths.


def check_main(R):
    if R.path.length != 4 or not _is_rainbow(R):
        return None
    q0, q1 = R.terminal
    off_path = set(R.cycle) - set(R.path.vertices)
    if set(R.graph.neighbors(q0)) & set(R.graph.neighbors(q1)) & off_path:
        return None
    if any(len(R.lists[v]) < 5 for v in R.interior_path):
        return None
    if max(len(R.lists[R.p0]), len(R.lists[R.p1])) < 3:
        return None
    if find_crown_member(R) is None:
        return ["Crown(P,G) is empty"]
    return []


def _five_path_floors(R):
    rest = set(R.rest)
    return all(
        len(R.lists[v]) >= 5 and any(u in rest for u in R.graph.neighbors(v))
        for v in R.interior_path
    )


def check_5path_crown(R):
    if R.path.length != 5 or not _is_rainbow(R) or not _five_path_floors(R):
        return None
    if max(len(R.lists[R.p0]), len(R.lists[R.p1])) < 3:
        return None
    out = []
    for y in R.path.vertices[2:4]:
        if find_crown_member(R, lambda phi: y in phi) is None:
            out.append(f"No member of Crown(P,G) colors {y}")
    return out


def check_5path_nonequal(R):
    if R.path.length != 5 or not _is_rainbow(R) or not _five_path_floors(R):
        return None
    if has_g_obstruction(R):
        return []

    profile = crown_endpoint_profile(R)
    ends = (R.p0, R.p1)
    out = []
    for v in R.path.vertices[2:4]:
        realized = {(a, b) for a, b, middle in profile if v in middle}
        found = any(
            all(((a, b) if i == 0 else (b, a)) in realized for b in R.lists[ends[1 - i]])
            for i in (0, 1)
            for a in R.lists[ends[i]]
        )
        if not found:
            out.append(f"No obstruction and no color pinning the crown through {v}")
    return out


# Background results.


def check_thomassen(R):
    if R.path.length != 1 or R.cycle is None:
        return None
    x, y = R.path.ends
    on_cycle = set(R.cycle)
    if any(len(R.lists[v]) < 3 for v in on_cycle - {x, y}):
        return None
    if any(len(R.lists[v]) < 5 for v in R.off_cycle):
        return None
    if next(_colorings(R, {x, y}), None) is None:
        return None
    if R.solver.extend({}) is None:
        return ["G is not L-colorable"]
    return []


def check_cor15(R):
    if R.cycle is None or len(R.cycle) > 4:
        return None
    if any(len(R.lists[v]) < 5 for v in R.off_cycle):
        return None
    return [
        f"{_fmt(phi)} does not extend"
        for phi in _colorings(R, R.cycle)
        if not R.solver.extends(phi)
    ]


def check_two_lists(R):
    if R.cycle is None:
        return None
    v, w = R.path.ends
    if v == w or len(R.lists[v]) < 2 or len(R.lists[w]) < 2:
        return None
    if any(len(R.lists[u]) < 3 for u in R.cycle if u not in (v, w)):
        return None
    if any(len(R.lists[u]) < 5 for u in R.off_cycle):
        return None
    if R.solver.extend({}) is None:
        return ["G is not L-colorable"]
    return []


def check_bohme(R):
    if R.cycle is None or len(R.cycle) not in (5, 6):
        return None
    out = []
    try:
        for phi in _colorings(R, R.cycle):
            verdict = bohme_classify(R.graph, R.lists, phi, R.solver)
            if not verdict.agrees:
                out.append(f"{_fmt(phi)}: extendable={verdict.extendable}, structure={verdict.structure}")
    except HypothesisViolation:
        return None
    return out


def _rim_walk(G, hub, start):
    """Vertices of the path G - hub starting at ``start``"""
    walk = [start]
    prev = None
    while True:
        step = [u for u in G.neighbors(walk[-1]) if u != hub and u != prev]
        if not step:
            return walk
        prev = walk[-1]
        walk.append(step[0])


def check_wheel_parity(R):
    if R.path.length != 2:
        return None
    G, L = R.graph, R.lists
    wheel = classify_wheel(G, R.path)
    if wheel.kind is not WheelKind.BROKEN_WHEEL:
        return None
    p, hub, pp = R.path.vertices
    if any(len(L[v]) < 3 for v in G.vertices if v not in (p, hub)):
        return None

    rim_even = wheel.rim_edge_count % 2 == 0
    pairs = list(_colorings(R, {p, hub}))
    S = [lambda_set(G, L, R.path, (phi[p], phi[hub], None), R.solver) for phi in pairs]
    out = []

    for i, j in combinations(range(len(pairs)), 2):
        if len(S[i]) != 1 or len(S[j]) != 1:
            continue
        f0, f1 = pairs[i], pairs[j]
        tag = f"{_fmt(f0)} / {_fmt(f1)}"
        if f0[p] == f1[p] and S[i] == S[j] and not rim_even:
            out.append(f"{tag}: equal singleton Lambda sets on an odd rim")
        if f0[p] == f1[p] and S[i] != S[j]:
            if rim_even or S[i] != {f1[hub]} or S[j] != {f0[hub]}:
                out.append(f"{tag}: distinct singleton Lambda sets without the swap on an odd rim")
        if f0[p] != f1[p] and S[i] == S[j]:
            if rim_even or (f0[p], f0[hub]) != (f1[hub], f1[p]):
                out.append(f"{tag}: equal Lambda sets without the crossed pattern on an odd rim")

    for q in (p, hub):
        narrow = {}
        for phi, s in zip(pairs, S):
            if len(s) < 2:
                narrow.setdefault(phi[q], []).append(phi)
        for c, family in sorted(narrow.items()):
            if len(family) >= 3:
                out.append(f"{len(family)} colorings with {c} on {q} all have |Lambda| < 2")

    if len(G.vertices) >= 4:
        rim = _rim_walk(G, hub, p)
        u1, x = rim[1], rim[2]
        almost = universal_colors(G, L, R.path, "almost", R.solver)
        full = universal_colors(G, L, R.path, "universal", R.solver)
        for a in sorted(L[p]):
            if (L[u1] - {a}) <= L[x]:
                continue
            if a not in almost:
                out.append(f"Color {a} on {p} is not almost universal")
            if len(G.vertices) > 4 and a not in full:
                out.append(f"Color {a} on {p} is not universal")
    return out


def check_fan_path(R):
    if R.path.length != 2 or not _is_rainbow(R):
        return None
    failing = failing_colorings(R)
    if len(failing) <= 1:
        return None
    q = R.terminal[0]
    G, C = R.graph, R.cycle
    out = []
    if not hub_paths(G, q, set(C) - {q}, R.p0, R.p1):
        out.append(f"{len(failing)} failing colorings and no path on C - {q} through N({q})")
    if is_short_inseparable(G) and all(q in e for e in chords_of_cycle(G, C)):
        if classify_wheel(G, R.path).kind is not WheelKind.BROKEN_WHEEL:
            out.append("Short-inseparable with chords at q, but not a broken wheel on P")
    return out


def _is_bare_cycle(R):
    return len(R.graph.vertices) == len(R.cycle) and len(R.graph.edges) == len(R.cycle)


def check_prop29(R):
    if R.path.length != 2 or not _is_rainbow(R):
        return None
    G, L, C = R.graph, R.lists, R.cycle
    p0, q, p1 = R.path.vertices
    if not all(q in e for e in chords_of_cycle(G, C)):
        return None
    if not (len(C) > 3 or _is_bare_cycle(R)):
        return None
    if not is_short_inseparable(G):
        return None

    wheel = classify_wheel(G, R.path)
    broken = wheel.kind is WheelKind.BROKEN_WHEEL
    failing = failing_colorings(R)
    rest = R.rest
    out = []

    for i, (p, path) in enumerate(((p0, R.path), (p1, R.path.reversed()))):
        if len(L[p]) < 2 or universal_colors(G, L, path, "universal", R.solver):
            continue
        if not broken:
            out.append(f"No universal color on p{i} but G is not a broken wheel on P")
            continue
        if len(G.vertices) > 4:
            x, y = (rest[1], rest[2]) if i == 0 else (rest[-2], rest[-3])
            if not L[p] <= (L[x] & L[y]):
                out.append(f"No universal color on p{i} but L({p}) is not inside L({x}) and L({y})")

    for i, (pi, pj) in enumerate(((p0, p1), (p1, p0))):
        for psi, psi2 in combinations(failing, 2):
            if psi[pi] != psi2[pi] or psi[pj] == psi2[pj]:
                continue
            tag = f"{_fmt(psi)} / {_fmt(psi2)}"
            if {psi[q], psi2[q]} != {psi[pj], psi2[pj]}:
                out.append(f"{tag}: colors on q are not the swapped colors on p{1 - i}")
            # Read with the color on p_i fixed.
            fixed_end = [s for s in failing if s[pi] == psi[pi]]
            if len(fixed_end) != 2:
                out.append(
                    f"{tag}: {len(fixed_end)} failing colorings with {psi[pi]} on {pi}, "
                    "expected exactly these two"
                )
            if not broken or wheel.rim_edge_count % 2:
                out.append(f"{tag}: G is not a broken wheel on P with an even rim")

    for phi in _colorings(R, {p0, p1}):
        free = L[q] - {phi[p0], phi[p1]}
        S = free - lambda_set(G, L, R.path, (phi[p0], None, phi[p1]), R.solver)
        if len(S) < 2:
            continue
        tag = _fmt(phi)
        if len(S) != 2 or not broken or wheel.rim_edge_count % 2 == 0:
            out.append(f"{tag}: {len(S)} missing colors on q, expected 2 on an odd broken wheel")
        for psi in failing:
            same_end = psi[p0] == psi[p1] and psi[p0] in S
            if not same_end and (psi[p0], psi[p1]) != (phi[p0], phi[p1]):
                out.append(f"{tag}: failing coloring {_fmt(psi)} has neither allowed form")

    if failing and is_induced_cycle(G, C) and not broken:
        kind = classify_wheel(G).kind
        if kind is not WheelKind.BROKEN_WHEEL:
            if kind is not WheelKind.WHEEL or len(C) % 2 == 0:
                out.append("Induced outer cycle with failing colorings, but not an odd wheel")
    return out


def check_lemma27(R):
    if R.path.length < 2 or not _is_rainbow(R):
        return None
    G, C = R.graph, R.cycle
    inner = R.interior_path
    off_path = set(R.rest[1:-1])
    chord_ends = {
        v for e in chords_of_cycle(G, C) for v, u in (e, e[::-1]) if v in inner and u in off_path
    }
    out = []
    for d in range(len(inner) + 1):
        for chosen in combinations(inner, d):
            domain = {R.p0, R.p1, *chosen}
            for phi in _colorings(R, domain):
                if R.solver.extends(phi):
                    continue
                if chord_ends & set(chosen):
                    continue
                watch = set(R.off_cycle) | (set(inner) - set(chosen))
                if any(popcount(R.solver.residual_mask(v, phi)) <= 2 for v in watch):
                    continue
                out.append(f"{_fmt(phi)} fails with no chord into C\\P and no narrow list")
    return out


def _restricted(R, H):
    return Rainbow(H, R.path, {v: R.lists[v] for v in H.vertices})


def check_obs41(R):
    if not _three_path_rainbow(R):
        return None
    G, C = R.graph, R.cycle
    chords = chords_of_cycle(G, C)
    here = obstruction_signature(R)
    out = []

    for D in cycles_up_to(G, 4):
        if set(D.vertices) == set(C):
            continue
        H = exterior(G, D)
        if not chords <= set(H.edges) or H.outer_cycle is None or set(H.outer_cycle) != set(C):
            continue
        if obstruction_signature(_restricted(R, H)) != here:
            out.append(f"Obstructions or tilts change in Ext({list(D)})")

    inner = set(R.interior_path)
    for x, y in sorted(chords):
        if x in inner or y in inner:
            continue
        _, G1 = natural_partition(G, PathSpec((x, y)), keep=R.path)
        if not set(R.path.edges()) <= set(G1.edges):
            continue
        if obstruction_signature(_restricted(R, G1)) != here:
            out.append(f"Obstructions or tilts change across the chord {x}-{y}")
    return out


def check_obs42(R):
    G, C = R.graph, R.cycle
    if C is None or len(C) < 4 or not is_short_inseparable(G):
        return None
    n = len(C)
    walks = [tuple(C[(s + k) % n] for k in range(4)) for s in range(n)]
    walks += [w[::-1] for w in walks]
    solver = R.solver
    out = []
    applies = False

    for x0, x1, x2, x3 in walks:
        if len(solver.lists[x1]) < 3 or len(solver.lists[x2]) < 3:
            continue
        hubs = [
            u for u in G.vertices
            if u not in (x0, x1, x2, x3) and all(G.adjacent(u, x) for x in (x0, x1, x2, x3))
        ]
        if not hubs:
            continue
        applies = True
        pair = {x1, x2}
        border = (set(G.neighbors(x1)) | set(G.neighbors(x2))) - pair
        others = [v for v in G.vertices if v not in pair]
        for sigma in solver.enumerate({}, border):
            if sigma[x0] == sigma[x3] or sigma[x0] not in solver.lists[x2]:
                continue
            if solver.extend(sigma, others) is None:
                continue
            if solver.extend(sigma, pair) is None:
                out.append(f"{x0}{x1}{x2}{x3} under {hubs[0]}: {_fmt(sigma)} does not extend")
    return out if applies else None


@dataclass
class VerificationReport:
    """Outcome of one check over one instance stream

    ``violations`` holds one record per failing instance: the instance
    document, the failure details and whether the replay reproduced them.
    ``wall_time`` is only serialized on request so that equal seeds and caps
    give identical JSON.
    """

    theorem: str
    checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    seed: int = None
    caps: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self):
        return not self.violations

    def merge(self, other, theorem=None):
        return VerificationReport(
            theorem=theorem or self.theorem,
            checked=self.checked + other.checked,
            skipped=self.skipped + other.skipped,
            violations=sorted(self.violations + other.violations, key=dumps),
            seed=self.seed,
            caps=self.caps,
            wall_time=self.wall_time + other.wall_time,
        )

    def to_json(self, timing=False):
        out = {
            "theorem": self.theorem,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations,
            "seed": self.seed,
            "caps": self.caps,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


CHECKS = {
    "end2": (check_end2, "2-path"),
    "T1": (check_T1, "3-path"),
    "T2": (check_T2, "3-path"),
    "T3": (check_T3, "3-path"),
    "T4": (check_T4, "3-path"),
    "main": (check_main, "4-path"),
    "5path-crown": (check_5path_crown, "5-path"),
    "5path-nonequal": (check_5path_nonequal, "5-path"),
    "thomassen": (check_thomassen, "edge"),
    "cor15": (check_cor15, "cycle-3-4"),
    "two-lists": (check_two_lists, "two-2-lists"),
    "bohme": (check_bohme, "cycle-5-6"),
    "wheel-parity": (check_wheel_parity, "broken-wheel"),
    "fan-path": (check_fan_path, "2-path"),
    "prop29": (check_prop29, "2-path"),
    "lemma27": (check_lemma27, "3-path"),
    "obs41": (check_obs41, "3-path"),
    "obs42": (check_obs42, "3-path"),
}

BACKGROUND = (
    "thomassen",
    "cor15",
    "two-lists",
    "bohme",
    "wheel-parity",
    "fan-path",
    "prop29",
    "lemma27",
    "obs41",
    "obs42",
)

THEOREM_IDS = tuple(CHECKS) + ("background",)


def _lookup(theorem_id):
    try:
        return CHECKS[theorem_id]
    except KeyError:
        raise UnknownTheorem(
            f"Unknown theorem {theorem_id!r}; expected one of {list(THEOREM_IDS)}"
        ) from None


def _check_instance(args):
    """Run one check on one rainbow; the document comes back on failure"""
    theorem_id, R = args
    detail = CHECKS[theorem_id][0](R)
    return detail, (rainbow_to_document(R) if detail else None)


def replay(theorem_id, record):
    """Re-run a check on a violation's parsed document"""
    check, _ = _lookup(theorem_id)
    R = parse_document(record["instance"])
    return check(R) == record["detail"]


def _generator_for(theorem_id, gen):
    _, shape = _lookup(theorem_id)
    if gen is None:
        return InstanceGenerator(shape=shape)
    if gen.shape != shape:
        log.debug(f"{theorem_id}: using shape {shape} in place of {gen.shape}")
        gen = replace(gen, shape=shape)
    return gen


def verify(theorem_id, gen=None, jobs=1, progress=False):
    """VerificationReport of ``theorem_id`` over the stream of ``gen``"""

    if theorem_id == "background":
        return verify_background(gen, jobs, progress)

    gen = _generator_for(theorem_id, gen)
    report = VerificationReport(theorem_id, seed=gen.seed, caps=gen.caps)
    args = ((theorem_id, R) for R in enumerate_instances(gen))
    t0 = pc()

    def collect(results):
        for detail, doc in pbar(results, desc=theorem_id, verbose=progress):
            if detail is None:
                report.skipped += 1
                continue
            report.checked += 1
            if detail:
                record = {"instance": doc, "detail": detail}
                record["replayed"] = replay(theorem_id, record)
                if not record["replayed"]:
                    log.error(f"{theorem_id}: violation did not replay from {dumps(doc)}")
                report.violations.append(record)

    if jobs > 1:
        with mp.Pool(processes=jobs) as pool:
            collect(pool.imap(_check_instance, args, chunksize=32))
    else:
        collect(map(_check_instance, args))

    report.violations.sort(key=dumps)
    report.wall_time = pc() - t0
    log.info(
        f"{theorem_id}: {report.checked} checked, {report.skipped} skipped by hypotheses, "
        f"{len(report.violations)} violations in {report.wall_time:.2f}s"
    )
    return report


def verify_background(gen=None, jobs=1, progress=False):
    reports = [verify(theorem_id, gen, jobs, progress) for theorem_id in BACKGROUND]
    merged = reports[0]
    for other in reports[1:]:
        merged = merged.merge(other)
    caps = {k: v for k, v in reports[0].caps.items() if k != "shape"}
    return replace(merged, theorem="background", caps=caps)


def verify_end_2path(gen=None, jobs=1, progress=False):
    return verify("end2", gen, jobs, progress)


def verify_T1(gen=None, jobs=1, progress=False):
    return verify("T1", gen, jobs, progress)


def verify_T2(gen=None, jobs=1, progress=False):
    return verify("T2", gen, jobs, progress)


def verify_T3(gen=None, jobs=1, progress=False):
    return verify("T3", gen, jobs, progress)


def verify_T4(gen=None, jobs=1, progress=False):
    return verify("T4", gen, jobs, progress)


def verify_main(gen=None, jobs=1, progress=False):
    return verify("main", gen, jobs, progress)


def verify_5path_crown(gen=None, jobs=1, progress=False):
    return verify("5path-crown", gen, jobs, progress)


def verify_5path_nonequal(gen=None, jobs=1, progress=False):
    return verify("5path-nonequal", gen, jobs, progress)
