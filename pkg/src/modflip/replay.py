"""Replays of the deletion inequalities and the witness-pair lemmas on
enumerated flip graphs.

Each check returns a :class:`ReplayResult` counting checked instances and
violations, so callers can report rather than assert.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .explorer import FlipGraphStore, all_geodesics, geodesic, incidence_flags
from .families import a_family, has_ear
from .flips import FlipPath


@dataclass
class ReplayResult:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.checked} checked, {len(self.violations)} violations)"


def _deleted_node(small: FlipGraphStore, big: FlipGraphStore, i: int, p: int) -> int:
    return small.index[big.deleted_code(i, p)]


def deletion_is_lipschitz(big: FlipGraphStore, small: FlipGraphStore) -> ReplayResult:
    """Every edge U-V of ``big`` maps to U/p, V/p at distance at most 1."""
    res = ReplayResult("deletion is 1-Lipschitz on edges")
    n = big.surface.marks
    for i, j in big.edge_list():
        for p in range(1, n + 1):
            a = _deleted_node(small, big, i, p)
            b = _deleted_node(small, big, j, p)
            res.checked += 1
            if a != b and b not in small.adj[a]:
                res.violations.append((i, j, p))
    return res


def _layers_towards(store: FlipGraphStore, target: int):
    d = store.bfs(target)
    order = np.argsort(d, kind="stable")
    return d, order


def max_incidence_to(store: FlipGraphStore, target: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """For every node U, the distance to ``target`` and the largest number of
    alpha_p-incident flips over geodesics from U to ``target``."""
    d, order = _layers_towards(store, target)
    best = np.zeros(len(store), dtype=np.int64)
    for v in order:
        v = int(v)
        if v == target:
            continue
        best[v] = max(best[w] + store.incident(v, w, p) for w in store.adj[v] if d[w] == d[v] - 1)
    return d, best


def theorem_deletion_bound(big: FlipGraphStore, small: FlipGraphStore, pairs: int = 100,
                           seed: int = 0) -> ReplayResult:
    """d(U,V) >= d(U/p, V/p) + f with f the best incidence count over geodesics."""
    res = ReplayResult("distance drops by incident flips under deletion")
    rng = random.Random(seed)
    n = big.surface.marks
    N = len(big)
    for _ in range(pairs):
        i, j, p = rng.randrange(N), rng.randrange(N), rng.randint(1, n)
        d, f = max_incidence_to(big, j, p)
        a, b = _deleted_node(small, big, i, p), _deleted_node(small, big, j, p)
        dd = int(small.bfs(a)[b])
        res.checked += 1
        if d[i] < dd + f[i]:
            res.violations.append((i, j, p, int(d[i]), dd, int(f[i])))
    return res


def _triangles_share_arc(T, p: int, q: int) -> bool:
    tp, tq = T.where[-p][0], T.where[-q][0]
    if tp == tq:
        return True
    arcs_p = {s >> 1 for s in T.triangles[tp] if s >= 0}
    return any((s >> 1) in arcs_p for s in T.triangles[tq] if s >= 0)


def ear_lemma(store: FlipGraphStore) -> ReplayResult:
    """If U has an ear at a_q and in V the triangles on alpha_{q-1} and alpha_q
    are distinct and share no arc, every geodesic U -> V has two flips
    incident to alpha_{q-1} or two incident to alpha_q.

    Incidence counts are capped at 2, and for each target V the achievable
    (count_p, count_q) pairs are propagated backwards along the geodesic DAG.
    """
    res = ReplayResult("ear lemma")
    n = store.surface.marks
    if n < 2:
        return res
    for q in range(1, n + 1):
        p = n if q == 1 else q - 1
        ears = [i for i in range(len(store)) if has_ear(store.reps[i], q)]
        if not ears:
            continue
        for v in range(len(store)):
            if _triangles_share_arc(store.reps[v], p, q):
                continue
            d, order = _layers_towards(store, v)
            states = {v: {(0, 0)}}
            for u in order:
                u = int(u)
                if u == v:
                    continue
                acc = set()
                for w in store.adj[u]:
                    if d[w] != d[u] - 1:
                        continue
                    ip, iq = store.incident(u, w, p), store.incident(u, w, q)
                    for cp, cq in states[w]:
                        acc.add((min(cp + ip, 2), min(cq + iq, 2)))
                states[u] = acc
            for u in ears:
                res.checked += 1
                if any(cp < 2 and cq < 2 for cp, cq in states[u]):
                    res.violations.append((u, v, p, q))
    return res


def _introduced_endpoints(path, step: int) -> tuple:
    T = FlipPath(path.start, path.moves[: step + 1]).end()
    return T.arc_endpoints(path.moves[step])


def witness_lemmas(store: FlipGraphStore, limit: int = 10**6) -> tuple[ReplayResult, ReplayResult]:
    """Replay, on every geodesic A_n^- -> A_n^+, the two statements about the
    first flip incident to alpha_n:

    * if it introduces an arc a_1 a_n, at least 3 flips are incident to alpha_n;
    * if it introduces an arc a_1 a_2 and at most 2 flips are incident to
      alpha_n, at least 4 flips are incident to alpha_1.
    """
    n, g = store.surface.marks, store.surface.genus
    U, V = a_family("-", n, g), a_family("+", n, g)
    r1 = ReplayResult(f"first alpha_{n} flip on a_1a_{n} forces 3 incidences (n={n})")
    r2 = ReplayResult(f"first alpha_{n} flip on a_1a_2 forces 4 alpha_1 incidences (n={n})")
    for P in all_geodesics(store, U, V, limit=limit):
        fn = incidence_flags(P, n)
        if True not in fn:
            r1.violations.append(("no flip incident to alpha_n", P.moves))
            continue
        j = fn.index(True)
        ends = set(_introduced_endpoints(P, j))
        if ends == {1, n}:
            r1.checked += 1
            if sum(fn) < 3:
                r1.violations.append(P.moves)
        if ends == {1, 2}:
            r2.checked += 1
            if sum(fn) <= 2 and sum(incidence_flags(P, 1)) < 4:
                r2.violations.append(P.moves)
    return r1, r2


def witness_distances(n_max: int, g: int = 1, budget=None) -> dict:
    """Exact d(A_n^-, A_n^+) for n = 1..n_max by bidirectional search."""
    return {n: len(geodesic(a_family("-", n, g), a_family("+", n, g), budget))
            for n in range(1, n_max + 1)}


def witness_recurrence(dist: dict) -> ReplayResult:
    """d_n >= min(d_{n-1} + 3, d_{n-2} + 5) and d_n >= floor(5n/2) - 2."""
    res = ReplayResult("witness distance recurrence")
    for n, d in sorted(dist.items()):
        if n >= 3 and n - 1 in dist and n - 2 in dist:
            res.checked += 1
            if d < min(dist[n - 1] + 3, dist[n - 2] + 5):
                res.violations.append(("recurrence", n, d))
        res.checked += 1
        if d < 5 * n // 2 - 2:
            res.violations.append(("linear", n, d))
    return res
