"""Breadth-first exploration of modular flip graphs.

Nodes are canonical codes; each node keeps one representative triangulation
for expansion. Distances, eccentricities and the diameter are computed on the
resulting sparse graph.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, shortest_path

from .canon import canonical_code, code_hex, decode, isomorphism
from .families import delete_vertex
from .flips import FlipPath, flip
from .surface import SurfaceClass, Triangulation, TriangulationError, mirror, relabel_boundary

FORMAT_VERSION = 1


class BudgetExceeded(RuntimeError):
    """Raised when a search runs out of its node or time budget.

    ``partial`` carries whatever was computed so far.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass
class Budget:
    max_nodes: int | None = None
    time_s: float | None = None

    def __post_init__(self):
        self._t0 = time.monotonic()

    def restart(self):
        self._t0 = time.monotonic()
        return self

    def exceeded(self, nodes: int) -> bool:
        if self.max_nodes is not None and nodes > self.max_nodes:
            return True
        return self.time_s is not None and time.monotonic() - self._t0 > self.time_s


@dataclass
class FlipGraphStore:
    surface: SurfaceClass
    codes: list = field(default_factory=list)
    reps: list = field(default_factory=list)
    adj: list = field(default_factory=list)
    partial: bool = False
    mirror_rule: bool | None = None
    index: dict = field(default_factory=dict)
    _csr: object = field(default=None, repr=False)
    _deleted: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.codes)

    @property
    def num_nodes(self) -> int:
        return len(self.codes)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def add(self, code, rep) -> tuple[int, bool]:
        """Insert-if-absent; returns (index, inserted)."""
        i = self.index.get(code)
        if i is not None:
            return i, False
        i = len(self.codes)
        self.index[code] = i
        self.codes.append(code)
        self.reps.append(rep)
        self.adj.append(set())
        self._csr = None
        return i, True

    def node_of(self, T: Triangulation) -> int:
        try:
            return self.index[canonical_code(T, self.mirror_rule)]
        except KeyError:
            raise TriangulationError("triangulation not in store") from None

    def csr(self):
        if self._csr is None:
            rows, cols = [], []
            for i, nb in enumerate(self.adj):
                for j in nb:
                    rows.append(i)
                    cols.append(j)
            N = len(self.codes)
            data = np.ones(len(rows), dtype=np.int8)
            self._csr = csr_matrix((data, (rows, cols)), shape=(N, N))
        return self._csr

    def distances_from(self, sources) -> np.ndarray:
        """Hop distances (float, inf when unreachable) from each source."""
        return shortest_path(self.csr(), directed=False, unweighted=True, indices=sources)

    def bfs(self, source: int) -> np.ndarray:
        """Integer hop distances from ``source``; -1 when unreachable.

        Depths are read off the BFS tree by pointer jumping, which is much
        cheaper than a generic shortest-path call.
        """
        order, pred = breadth_first_order(self.csr(), source, directed=True)
        N = len(self.codes)
        anc = np.where(pred < 0, np.arange(N), pred)
        depth = (pred >= 0).astype(np.int64)
        # depth[v] is the distance from v to anc[v]
        while True:
            nxt = anc[anc]
            if np.array_equal(nxt, anc):
                break
            depth = depth + depth[anc]
            anc = nxt
        out = np.full(N, -1, dtype=np.int64)
        out[order] = depth[order]
        return out

    def deleted_code(self, i: int, p: int) -> bytes:
        key = (i, p)
        c = self._deleted.get(key)
        if c is None:
            c = canonical_code(delete_vertex(self.reps[i], p), self.mirror_rule)
            self._deleted[key] = c
        return c

    def incident(self, i: int, j: int, p: int) -> bool:
        """Whether the flip between nodes ``i`` and ``j`` is incident to alpha_p."""
        return self.deleted_code(i, p) == self.deleted_code(j, p)

    # -- export -----------------------------------------------------------

    def edge_list(self) -> list:
        return sorted((i, j) for i, nb in enumerate(self.adj) for j in nb if i < j)

    def to_json(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "genus": self.surface.genus,
            "marks": self.surface.marks,
            "partial": self.partial,
            "nodes": [code_hex(c) for c in self.codes],
            "edges": [list(e) for e in self.edge_list()],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FlipGraphStore":
        if doc.get("format") != FORMAT_VERSION:
            raise ValueError(f"unsupported store format {doc.get('format')!r}")
        st = cls(SurfaceClass(doc["genus"], doc["marks"]), partial=bool(doc.get("partial")))
        for h in doc["nodes"]:
            c = bytes.fromhex(h)
            st.add(c, decode(c))
        for i, j in doc["edges"]:
            st.adj[i].add(j)
            st.adj[j].add(i)
        return st

    def to_dot(self) -> str:
        lines = [f"graph MF_g{self.surface.genus}_n{self.surface.marks} {{"]
        lines += [f"  {i};" for i in range(len(self.codes))]
        lines += [f"  {i} -- {j};" for i, j in self.edge_list()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _expand(T: Triangulation, mirror_rule):
    out = []
    for e in T.arc_ids:
        W = flip(T, e)
        out.append((canonical_code(W, mirror_rule), W))
    return out


def enumerate_flip_graph(seed: Triangulation, budget: Budget | None = None, threads: int = 1,
                         mirror_rule: bool | None = None, strict: bool = False) -> FlipGraphStore:
    """BFS closure of ``seed`` under flips, deduplicated by canonical code.

    Frontiers are expanded layer by layer (optionally by a thread pool) and
    merged in frontier order, so node numbering does not depend on the number
    of threads. When the budget runs out the store is returned with
    ``partial=True``; with ``strict`` a :class:`BudgetExceeded` is raised.
    """
    budget = budget or Budget()
    st = FlipGraphStore(seed.surface_class, mirror_rule=mirror_rule)
    st.add(canonical_code(seed, mirror_rule), seed)
    frontier = [0]
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while frontier:
            reps = [st.reps[i] for i in frontier]
            if pool is not None:
                chunks = list(pool.map(_expand, reps, [mirror_rule] * len(reps)))
            else:
                chunks = [_expand(T, mirror_rule) for T in reps]
            nxt = []
            for i, chunk in zip(frontier, chunks):
                for code, W in chunk:
                    j, new = st.add(code, W)
                    if new:
                        nxt.append(j)
                    if j != i:
                        st.adj[i].add(j)
                        st.adj[j].add(i)
            frontier = nxt
            if frontier and budget.exceeded(len(st.codes)):
                st.partial = True
                break
    finally:
        if pool is not None:
            pool.shutdown()
    st.adj = [set(a) for a in st.adj]
    if st.partial and strict:
        raise BudgetExceeded(f"budget exceeded after {len(st.codes)} nodes", st)
    return st


def _require_complete(store: FlipGraphStore):
    if store.partial:
        raise BudgetExceeded("operation needs a complete store", store)


def eccentricity(store: FlipGraphStore, i: int) -> int:
    _require_complete(store)
    return int(store.distances_from([i])[0].max())


@dataclass
class DiameterResult:
    diameter: int
    witness: tuple  # node indices
    bfs_runs: int

    def witness_codes(self, store) -> tuple:
        return tuple(code_hex(store.codes[i]) for i in self.witness)


def symmetry_orbit(store: FlipGraphStore, i: int) -> set:
    """Nodes obtained from node ``i`` by rotating and reflecting the labels."""
    T = store.reps[i]
    out = {i}
    for base in (T, mirror(T)):
        for s in range(T.marks):
            j = store.index.get(canonical_code(relabel_boundary(base, s), store.mirror_rule))
            if j is not None:
                out.add(j)
    return out


def diameter(store: FlipGraphStore, use_symmetry: bool = True) -> DiameterResult:
    """Exact diameter by the bounding-diameters scheme.

    Each BFS from ``v`` tightens ``max(d(v,w), ecc(v)-d(v,w)) <= ecc(w) <=
    ecc(v)+d(v,w)``; nodes whose bounds cannot beat the current diameter are
    dropped. Source selection alternates between the largest upper bound and
    the smallest lower bound. Relabelling the marked points by a rotation or a
    reflection is a graph automorphism, so with ``use_symmetry`` the whole
    orbit of a BFS source is settled at once.
    """
    _require_complete(store)
    N = len(store)
    if N == 1:
        return DiameterResult(0, (0, 0), 0)
    lo = np.zeros(N, dtype=np.int64)
    hi = np.full(N, np.iinfo(np.int64).max, dtype=np.int64)
    alive = np.ones(N, dtype=bool)
    best, witness, runs = 0, (0, 0), 0
    pick_high = True
    while alive.any():
        cand = np.flatnonzero(alive)
        if pick_high:
            v = int(cand[np.argmax(hi[cand])])
        else:
            v = int(cand[np.argmin(lo[cand])])
        pick_high = not pick_high
        d = store.bfs(v)
        if (d < 0).any():
            raise TriangulationError("flip graph is not connected")
        runs += 1
        ecc = int(d.max())
        if ecc > best:
            best, witness = ecc, (v, int(np.argmax(d)))
        lo = np.maximum(lo, np.maximum(d, ecc - d))
        hi = np.minimum(hi, ecc + d)
        orbit = [v]
        if use_symmetry and store.surface.marks >= 3:
            orbit = sorted(symmetry_orbit(store, v))
        lo[orbit] = ecc
        hi[orbit] = ecc
        alive[orbit] = False
        # nodes whose eccentricity cannot exceed the current best are done
        alive &= hi > best
    return DiameterResult(best, witness, runs)


def distance_in_store(store: FlipGraphStore, U: Triangulation, V: Triangulation) -> int:
    i, j = store.node_of(U), store.node_of(V)
    d = store.distances_from([i])[0][j]
    if np.isinf(d):
        raise TriangulationError("nodes are not connected in this store")
    return int(d)


def geodesic(U: Triangulation, V: Triangulation, budget: Budget | None = None,
             mirror_rule: bool | None = None) -> FlipPath:
    """A shortest flip path from ``U`` to a triangulation equivalent to ``V``.

    Bidirectional BFS over canonical codes, always growing the smaller
    frontier. The V-side moves are transported onto the U-side through the
    arc map of the meeting class.
    """
    if U.surface_class != V.surface_class:
        raise TriangulationError("class mismatch")
    budget = budget or Budget()
    cu, cv = canonical_code(U, mirror_rule), canonical_code(V, mirror_rule)
    if cu == cv:
        return FlipPath(U, [])
    # code -> (representative, parent code, arc flipped in parent, depth)
    sides = [{cu: (U, None, None, 0)}, {cv: (V, None, None, 0)}]
    fronts = [[cu], [cv]]
    meet = None
    while meet is None:
        if not fronts[0] or not fronts[1]:
            raise TriangulationError("no path found")
        k = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        seen, other = sides[k], sides[1 - k]
        nxt = []
        best = None
        # the whole layer is expanded so the best meeting point is exact
        for c in fronts[k]:
            T, _, _, depth = seen[c]
            for e in T.arc_ids:
                W = flip(T, e)
                cw = canonical_code(W, mirror_rule)
                if cw in seen:
                    continue
                seen[cw] = (W, c, e, depth + 1)
                nxt.append(cw)
                if cw in other:
                    total = depth + 1 + other[cw][3]
                    if best is None or total < best:
                        best, meet = total, cw
        fronts[k] = nxt
        if meet is None and budget.exceeded(len(sides[0]) + len(sides[1])):
            raise BudgetExceeded(
                f"bidirectional search exceeded budget at {len(sides[0]) + len(sides[1])} nodes"
            )

    def chain(seen, c):
        moves = []
        while seen[c][1] is not None:
            _, parent, e, _ = seen[c]
            moves.append(e)
            c = parent
        return moves[::-1]

    fwd = chain(sides[0], meet)
    bwd = chain(sides[1], meet)  # moves V -> ... -> meeting rep
    Wf = sides[0][meet][0]
    Wb = sides[1][meet][0]
    amap = isomorphism(Wb, Wf, mirror_rule)
    moves = fwd + [amap[e] for e in reversed(bwd)]
    return FlipPath(U, moves)


def distance(U: Triangulation, V: Triangulation, store: FlipGraphStore | None = None,
             budget: Budget | None = None, mirror_rule: bool | None = None) -> int:
    if store is not None:
        return distance_in_store(store, U, V)
    return len(geodesic(U, V, budget, mirror_rule))


def all_geodesics(store: FlipGraphStore, U: Triangulation, V: Triangulation,
                  limit: int = 10**6, by_moves: bool = True):
    """Yield every geodesic from ``U`` to ``V`` as a :class:`FlipPath`.

    Paths follow distance-decreasing flips of actual triangulations. With
    ``by_moves`` distinct arcs giving the same class count as distinct
    geodesics; otherwise paths are distinct node sequences. Raises
    :class:`BudgetExceeded` once more than ``limit`` paths are produced.
    """
    _require_complete(store)
    target = store.node_of(V)
    dist = store.distances_from([target])[0]
    count = 0
    moves: list = []

    def rec(T, i):
        nonlocal count
        if i == target:
            count += 1
            if count > limit:
                raise BudgetExceeded(f"more than {limit} geodesics")
            yield FlipPath(U, list(moves))
            return
        d = dist[i]
        seen = set()
        for e in T.arc_ids:
            W = flip(T, e)
            j = store.node_of(W)
            if dist[j] != d - 1 or (not by_moves and j in seen):
                continue
            seen.add(j)
            moves.append(e)
            yield from rec(W, j)
            moves.pop()

    yield from rec(U, store.node_of(U))


def incidence_flags(path: FlipPath, p: int, mirror_rule: bool | None = None) -> list:
    """Per step, whether that flip is incident to alpha_p."""
    if path.start.marks < 2:
        raise TriangulationError("incidence needs n >= 2")
    codes = [canonical_code(delete_vertex(T, p), mirror_rule) for T in path.triangulations()]
    return [a == b for a, b in zip(codes, codes[1:])]


def incidence_profile(path: FlipPath, p: int, mirror_rule: bool | None = None) -> int:
    """Number of flips along ``path`` incident to alpha_p."""
    if not path.moves:
        return 0
    return sum(incidence_flags(path, p, mirror_rule))


def geodesic_dag(store: FlipGraphStore, i: int, j: int):
    """Nodes on some geodesic from ``i`` to ``j`` with their DAG successors."""
    _require_complete(store)
    d = store.distances_from([i, j])
    di, dj = d[0], d[1]
    total = di[j]
    succ = {}
    for v in np.flatnonzero(di + dj == total):
        v = int(v)
        succ[v] = [w for w in store.adj[v] if di[w] == di[v] + 1 and di[w] + dj[w] == total]
    return succ, int(total)


def max_incidence_on_geodesics(store: FlipGraphStore, i: int, j: int, p: int) -> int:
    """Largest number of alpha_p-incident flips over all geodesics i -> j."""
    succ, _ = geodesic_dag(store, i, j)
    memo = {}

    def best(v):
        if v == j:
            return 0
        if v not in memo:
            memo[v] = max(best(w) + store.incident(v, w, p) for w in succ[v])
        return memo[v]

    return best(i)
