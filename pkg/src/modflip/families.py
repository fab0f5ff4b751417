"""Explicit constructions (zigzags, fans, the A_n^- / A_n^+ witness pairs)
and vertex deletion."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_code
from .flips import flip
from .surface import Triangulation, TriangulationError, check


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    genus: int = 0
    marks: int = 3
    apex: int | None = None
    core: Triangulation | None = None

    def build(self) -> Triangulation:
        if self.kind == "zigzag":
            return zigzag(self.marks)
        if self.kind == "fan":
            return fan(self.marks, self.apex or 1)
        if self.kind in ("a-minus", "a-plus"):
            sign = "-" if self.kind == "a-minus" else "+"
            return a_family(sign, self.marks, self.genus, self.core)
        raise ValueError(f"unknown family {self.kind!r}")


def polygon(n: int, diagonals) -> Triangulation:
    """Disk triangulation of the n-gon with the given diagonals.

    Vertices are labelled 1..n clockwise; diagonal ``{i, j}`` becomes arc
    ``k`` where ``k`` is its position in ``diagonals``.
    """
    if n < 3:
        raise TriangulationError("a disk needs at least 3 marked points")
    diags = [tuple(sorted(d)) for d in diagonals]
    if len(diags) != n - 3:
        raise TriangulationError(f"need {n - 3} diagonals, got {len(diags)}")
    arc = {d: k for k, d in enumerate(diags)}
    edges = set(diags) | {(i, i + 1) for i in range(1, n)} | {(1, n)}

    def side(u, v):
        # oriented side from u to v
        if v == u + 1:
            return -u
        if (u, v) == (n, 1):
            return -n
        a, b = min(u, v), max(u, v)
        return 2 * arc[(a, b)] + (0 if u < v else 1)

    tris = []
    for i, j, k in combinations(range(1, n + 1), 3):
        if (i, j) in edges and (j, k) in edges and (i, k) in edges:
            tris.append((side(i, j), side(j, k), side(k, i)))
    return check(Triangulation(0, n, tris))


def zigzag(n: int) -> Triangulation:
    """The zigzag triangulation: interior arcs form the path
    a_n, a_2, a_{n-1}, a_3, ... alternating left and right turns."""
    if n < 3:
        raise TriangulationError("zigzag needs n >= 3")
    lo, hi = 2, n
    path = [hi]
    take_lo = True
    while len(path) < n - 2:
        if take_lo:
            path.append(lo)
            lo += 1
        else:
            hi -= 1
            path.append(hi)
        take_lo = not take_lo
    diags = list(zip(path, path[1:]))
    return polygon(n, diags)


def fan(n: int, apex: int = 1) -> Triangulation:
    if n < 3:
        raise TriangulationError("fan needs n >= 3")
    others = [((apex - 1 + d) % n) + 1 for d in range(2, n - 1)]
    return polygon(n, [(apex, v) for v in others])


def core_surface(g: int) -> Triangulation:
    """A triangulation of the genus-g surface with one boundary and one
    marked point: a fanned (4g+1)-gon glued along a b a^-1 b^-1 words."""
    if g < 1:
        raise TriangulationError("core needs genus >= 1")
    N = 4 * g + 1  # polygon vertices v_0..v_{4g}; edge 4g is the boundary
    # polygon edge i (v_i -> v_{i+1}) for i < 4g gets a side of a glued arc
    edge_side = {}
    arc = 0
    for j in range(g):
        a, b = arc, arc + 1
        arc += 2
        edge_side[4 * j] = 2 * a
        edge_side[4 * j + 1] = 2 * b
        edge_side[4 * j + 2] = 2 * a + 1
        edge_side[4 * j + 3] = 2 * b + 1
    edge_side[N - 1] = -1
    diag = {}
    for k in range(2, N - 1):
        diag[k] = arc
        arc += 1
    tris = []
    for k in range(1, N - 1):
        # triangle (v_0, v_k, v_{k+1})
        s0 = edge_side[0] if k == 1 else 2 * diag[k]
        s1 = edge_side[k]
        s2 = edge_side[N - 1] if k + 1 == N - 1 else 2 * diag[k + 1] + 1
        tris.append((s0, s1, s2))
    return check(Triangulation(g, 1, tris))


def random_walk(T: Triangulation, steps: int, rng: random.Random) -> Triangulation:
    if not T.arc_ids:
        return T
    for _ in range(steps):
        T = flip(T, rng.choice(T.arc_ids))
    return T


def default_core(g: int, seed: int = 0) -> Triangulation:
    """The unique g=1 core, or a seeded random core for g >= 2."""
    base = core_surface(g)
    if g == 1:
        return base
    return random_walk(base, 20 * base.num_arcs, random.Random(seed))


def random_triangulation(g: int, n: int, rng: random.Random, steps: int | None = None):
    """Seeded random triangulation: a long flip walk from a fixed seed."""
    if g == 0:
        T = fan(n, 1)
    else:
        T = a_family("-", n, g, core_surface(g))
    if steps is None:
        steps = 10 * max(T.num_arcs, 1) + 10
    return random_walk(T, steps, rng)


def _ear_position(T: Triangulation, q: int):
    """Triangle index and rotation so the ear at a_q reads (alpha_{q-1}, alpha_q, d)."""
    n = T.marks
    prev = n if q == 1 else q - 1
    t, i = T.where[-prev]
    if T.triangles[t][(i + 1) % 3] != -q:
        raise TriangulationError(f"no ear at a_{q}")
    return t, i


def a_family(sign: str, n: int, g: int = 1, core: Triangulation | None = None) -> Triangulation:
    """Lower-bound witnesses: a loop at a_1 (sign '-') or at
    a_{floor(n/2)+1} (sign '+') enclosing a genus-g core.

    Deleting a_n from the zigzag yields the zigzag on n-1 points reflected
    about a_1. The '+' loop therefore switches sides with the parity of n, so
    that deleting a_n from both members of the pair gives the (n-1) pair under
    one common relabeling (the reflection fixing a_1).
    """
    if sign not in ("-", "+"):
        raise ValueError("sign must be '-' or '+'")
    if n < 1 or g < 1:
        raise TriangulationError("a_family needs n >= 1 and g >= 1")
    if core is None:
        core = default_core(g)
    if core.genus != g or core.marks != 1 or core.boundaries != 1:
        raise TriangulationError(f"core must have class (g={g}, n=1)")
    if n == 1:
        return core
    core = core.normalized()
    if n == 2:
        outer = [(-1, -2, 0)] if sign == "-" else [(-2, -1, 0)]
        gamma, offset = 0, 1
    else:
        Z = zigzag(n)
        q = 1 if sign == "-" else n // 2 + 1
        t, i = _ear_position(Z, q)
        a_prev, a_q, d = Z.rotated(t, i)
        m = Z.num_arcs
        eps, gamma = m, m + 1
        outer = list(Z.triangles)
        if sign == "-" or n % 2 == 1:
            # eps joins a_{q-1} and a_q; gamma sits on the alpha_{q-1} side
            outer[t] = (2 * eps + 1, a_q, d)
            outer.append((a_prev, 2 * gamma, 2 * eps))
        else:
            # eps joins a_q and a_{q+1}; gamma sits on the alpha_q side
            outer[t] = (a_prev, 2 * eps + 1, d)
            outer.append((2 * gamma, a_q, 2 * eps))
        offset = m + 2
    inner = [
        tuple(2 * gamma + 1 if s == -1 else (s if s < 0 else s + 2 * offset) for s in tri)
        for tri in core.triangles
    ]
    return check(Triangulation(g, n, outer + inner))


def has_ear(T: Triangulation, q: int) -> bool:
    n = T.marks
    if not 1 <= q <= n:
        raise TriangulationError(f"unknown label a_{q}")
    prev = n if q == 1 else q - 1
    return T.where[-prev][0] == T.where[-q][0]


def delete_vertex(T: Triangulation, p: int) -> Triangulation:
    """Contract boundary arc alpha_p, sliding a_p onto a_{p+1}.

    The triangle on alpha_p is removed and its other two sides are glued
    together; the arc on the side leaving a_{p+1} disappears. Labels above p
    move down by one.
    """
    n = T.marks
    if n <= 1:
        raise TriangulationError("cannot delete last vertex")
    if not 1 <= p <= n:
        raise TriangulationError(f"unknown label a_{p}")
    if T.genus == 0 and n <= 3:
        raise TriangulationError("a disk needs at least 3 marked points")
    t, i = T.where[-p]
    _, x, y = T.rotated(t, i)  # x leaves a_{p+1}, y enters a_p
    if x >= 0 and y >= 0 and x >> 1 == y >> 1:
        raise TriangulationError("self-folded triangle at alpha_p")
    tris = [list(tri) for tri in T.triangles]
    removed = None
    if x >= 0:
        # twin(x) takes over the role of y
        tx, ix = T.where[x ^ 1]
        tris[tx][ix] = y
        removed = x >> 1
    else:
        # x is the boundary alpha_{p+1}: twin(y) becomes boundary
        ty, iy = T.where[y ^ 1]
        tris[ty][iy] = x
        removed = y >> 1
    del tris[t]

    def relabel(s):
        if s >= 0:
            k = s >> 1
            return s if k < removed else s - 2
        q = -s
        return s if q < p else -(q - 1)

    out = [tuple(relabel(s) for s in tri) for tri in tris]
    return Triangulation(T.genus, n - 1, out)


def flip_incident_to(U: Triangulation, V: Triangulation, p: int, check_adjacent=True) -> bool:
    """Whether the flip U -> V is incident to alpha_p, i.e. U/p == V/p."""
    if check_adjacent:
        from .flips import neighbors

        cv = canonical_code(V)
        if not any(canonical_code(W) == cv for W in neighbors(U)):
            raise TriangulationError("triangulations are not related by a flip")
    return canonical_code(delete_vertex(U, p)) == canonical_code(delete_vertex(V, p))
