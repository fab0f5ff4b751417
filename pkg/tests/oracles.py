"""Independent brute-force references used to cross-check the package.

Nothing here imports modflip: polygon triangulations are frozensets of
diagonals ``(i, j)`` with ``1 <= i < j <= n`` and flips are found by looking
for the two triangles on either side of a diagonal.
"""
from collections import deque
from itertools import combinations
from math import comb


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def _crosses(a, b) -> bool:
    (i, j), (k, l) = a, b
    return i < k < j < l or k < i < l < j


def all_polygon_triangulations(n: int) -> list:
    """Every maximal non-crossing diagonal set of the labelled n-gon."""
    diags = [(i, j) for i, j in combinations(range(1, n + 1), 2) if j - i not in (1, n - 1)]
    out = []

    def grow(chosen, start):
        if len(chosen) == n - 3:
            out.append(frozenset(chosen))
            return
        for k in range(start, len(diags)):
            d = diags[k]
            if all(not _crosses(d, c) for c in chosen):
                grow(chosen + [d], k + 1)

    grow([], 0)
    return out


def _edges(n, T):
    e = set(T) | {(i, i + 1) for i in range(1, n)} | {(1, n)}
    return e


def polygon_flips(n: int, T: frozenset) -> list:
    edges = _edges(n, T)
    out = []
    for d in T:
        i, j = d
        apex = [v for v in range(1, n + 1) if v not in d
                and tuple(sorted((i, v))) in edges and tuple(sorted((j, v))) in edges]
        # the two triangles on d have apexes on opposite sides of it
        a, b = [v for v in apex if i < v < j], [v for v in apex if not i < v < j]
        if len(a) != 1 or len(b) != 1:
            continue
        new = tuple(sorted((a[0], b[0])))
        out.append((T - {d}) | {new})
    return out


def polygon_distance(n: int, S: frozenset, T: frozenset) -> int:
    seen = {S: 0}
    q = deque([S])
    while q:
        X = q.popleft()
        if X == T:
            return seen[X]
        for Y in polygon_flips(n, X):
            if Y not in seen:
                seen[Y] = seen[X] + 1
                q.append(Y)
    raise ValueError("unreachable")


def polygon_diameter(n: int) -> int:
    nodes = all_polygon_triangulations(n)
    best = 0
    for S in nodes:
        seen = {S: 0}
        q = deque([S])
        while q:
            X = q.popleft()
            for Y in polygon_flips(n, X):
                if Y not in seen:
                    seen[Y] = seen[X] + 1
                    q.append(Y)
        best = max(best, max(seen.values()))
    return best
