"""Cutting along arcs, boundary-parallel arcs, cut systems and untouched
runs of marked points."""

from __future__ import annotations

from dataclasses import dataclass, field

from .surface import Triangulation, TriangulationError, boundary_cycle


class CutSystemError(TriangulationError):
    pass


@dataclass
class CutSurface:
    components: list
    # per component: new boundary label -> ("b", p) or ("cut", arc, side)
    origins: list
    # per component: list of original triangle indices, in order
    triangle_index: list
    # cut arc -> [(component, label) for side 0, (component, label) for side 1]
    trace: dict = field(default_factory=dict)

    def euler_characteristics(self) -> list:
        return [len(C.triangles) - C.num_arcs for C in self.components]


def cut(T: Triangulation, arcs) -> CutSurface:
    """Cut ``T`` along interior arcs; each arc side becomes a boundary arc.

    Arc ids of uncut arcs are kept. Boundary labels of each component are
    renumbered 1..N following its boundary cycles; ``origins`` records what
    each label was.
    """
    arcs = sorted(set(arcs))
    for k in arcs:
        if 2 * k not in T.where:
            raise TriangulationError(f"no such arc: {k}")
    nxt = max(T.boundary_labels, default=0) + 1
    fresh = {}
    origin = {p: ("b", p) for p in T.boundary_labels}
    for k in arcs:
        for s in (0, 1):
            fresh[2 * k + s] = -nxt
            origin[nxt] = ("cut", k, s)
            nxt += 1
    tris = [tuple(fresh.get(s, s) for s in tri) for tri in T.triangles]

    # components of the dual graph without the cut arcs
    comp = [-1] * len(tris)
    ncomp = 0
    for t0 in range(len(tris)):
        if comp[t0] >= 0:
            continue
        comp[t0] = ncomp
        stack = [t0]
        while stack:
            t = stack.pop()
            for s in tris[t]:
                if s >= 0:
                    u = T.where[s ^ 1][0]
                    if comp[u] < 0:
                        comp[u] = ncomp
                        stack.append(u)
        ncomp += 1

    components, origins, tindex = [], [], []
    where_label = {}
    for c in range(ncomp):
        idx = [t for t in range(len(tris)) if comp[t] == c]
        sub = [tris[t] for t in idx]
        labels = sorted(-s for tri in sub for s in tri if s < 0)
        raw = Triangulation(0, len(labels), sub, boundaries=2)
        cycles = boundary_cycle(raw)
        cycles.sort(key=min)
        order = []
        for cyc in cycles:
            i = cyc.index(min(cyc))
            order.extend(cyc[i:] + cyc[:i])
        relabel = {old: new for new, old in enumerate(order, start=1)}
        sub = [tuple(s if s >= 0 else -relabel[-s] for s in tri) for tri in sub]
        m = len({s >> 1 for tri in sub for s in tri if s >= 0})
        b = len(cycles)
        twice_g = 2 - b - len(sub) + m
        C = Triangulation(twice_g // 2, len(labels), sub, boundaries=b)
        components.append(C)
        origins.append({relabel[old]: origin[old] for old in labels})
        tindex.append(idx)
        for old in labels:
            where_label[old] = (c, relabel[old])
    trace = {k: [where_label[-fresh[2 * k]], where_label[-fresh[2 * k + 1]]] for k in arcs}
    return CutSurface(components, origins, tindex, trace)


def is_boundary_parallel(T: Triangulation, e: int) -> bool:
    """Whether arc ``e`` cuts off a disk together with part of the boundary.

    The disk must carry a proper part of the original boundary: a loop that
    encloses all of the topology (its outside holds every boundary arc) is
    not counted.
    """
    cs = cut(T, [e])
    if len(cs.components) != 2:
        return False
    n = len(T.boundary_labels)
    for C, org in zip(cs.components, cs.origins):
        if C.genus == 0 and C.boundaries == 1:
            kept = sum(1 for o in org.values() if o[0] == "b")
            if kept < n:
                return True
    return False


def _dual_connected(T: Triangulation, removed) -> bool:
    removed = set(removed)
    tris = T.triangles
    seen = {0}
    stack = [0]
    while stack:
        t = stack.pop()
        for s in tris[t]:
            if s >= 0 and (s >> 1) not in removed:
                u = T.where[s ^ 1][0]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return len(seen) == len(tris)


def find_cut_system(T: Triangulation, avoid_vertex: int | None = None) -> list:
    """2g arcs whose complement is a disk.

    Greedy: repeatedly take the smallest-id arc whose removal keeps the cut
    surface connected. With ``avoid_vertex`` arcs incident to that marked
    point are never cut; this succeeds exactly when its star is a forest in
    the dual graph, since every surviving arc is then a bridge of a tree.
    """
    if T.genus < 1:
        raise CutSystemError("cut systems need genus >= 1")
    chosen = []
    for k in T.arc_ids:
        if len(chosen) == 2 * T.genus:
            break
        if avoid_vertex is not None and avoid_vertex in T.arc_endpoints(k):
            continue
        if _dual_connected(T, chosen + [k]):
            chosen.append(k)
    if len(chosen) != 2 * T.genus:
        raise CutSystemError("cut system not found")
    cs = cut(T, chosen)
    C = cs.components[0]
    if len(cs.components) != 1 or C.genus != 0 or C.boundaries != 1:
        raise CutSystemError("cut system not found")
    return chosen


def all_cut_systems(T: Triangulation, limit: int = 10_000):
    """Enumerate cut systems (as sorted tuples) by depth-first search."""
    out = set()
    g = T.genus

    def rec(chosen, start):
        if len(out) >= limit:
            return
        if len(chosen) == 2 * g:
            out.add(tuple(chosen))
            return
        for k in T.arc_ids:
            if k >= start and _dual_connected(T, chosen + [k]):
                rec(chosen + [k], k + 1)

    rec([], 0)
    return sorted(out)


def cut_endpoints(T: Triangulation, arcs) -> set:
    pts = set()
    for k in arcs:
        pts.update(T.arc_endpoints(k))
    return pts


@dataclass(frozen=True)
class Run:
    """Consecutive marked points ``start, start+1, ..., start+length`` (mod n)
    with no cut endpoints strictly inside; ``length`` counts boundary arcs."""

    start: int
    length: int
    n: int

    def vertices(self) -> list:
        return [((self.start - 1 + i) % self.n) + 1 for i in range(self.length + 1)]

    def interior(self) -> list:
        return self.vertices()[1:-1]


def untouched_run(n: int, endpoints) -> Run:
    """Longest run between cyclically consecutive endpoints; ties go to the
    smallest starting label."""
    pts = sorted(set(endpoints))
    if not pts:
        raise TriangulationError("no endpoints given")
    if len(pts) == 1:
        return Run(pts[0], n, n)
    best = None
    for j, a in enumerate(pts):
        b = pts[(j + 1) % len(pts)]
        length = (b - a) % n
        if best is None or length > best.length:
            best = Run(a, length, n)
    return best


def untouched_run_for(T: Triangulation, T2: Triangulation, sys1, sys2) -> Run:
    if T.marks != T2.marks:
        raise TriangulationError("class mismatch")
    return untouched_run(T.marks, cut_endpoints(T, sys1) | cut_endpoints(T2, sys2))
