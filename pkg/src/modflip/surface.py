"""Triangulations of one-holed surfaces as glued triangle lists.

A triangulation is a tuple of triangles, each an ordered triple of *sides*
listed in the orientation of the surface. A side is encoded as an int:

* ``2*k + s`` (``s`` in ``{0, 1}``) is side ``s`` of interior arc ``k``;
* ``-p`` is the boundary arc ``alpha_p`` (labels start at 1).

Side ``i`` of a triangle runs from corner ``i`` to corner ``i + 1``. The two
sides of an interior arc are glued with opposite directions. Boundary arc
``alpha_p`` runs from ``a_p`` to the next marked point ``a_{p+1}``, so the
vertex ``a_p`` is the tail of ``-p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class TriangulationError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceClass:
    genus: int
    marks: int
    boundaries: int = 1

    @property
    def num_triangles(self) -> int:
        if self.boundaries != 1:
            raise TriangulationError("counts only defined for one boundary")
        return self.marks + 4 * self.genus - 2

    @property
    def num_arcs(self) -> int:
        if self.boundaries != 1:
            raise TriangulationError("counts only defined for one boundary")
        return self.marks + 6 * self.genus - 3


def is_boundary(side: int) -> bool:
    return side < 0


def arc_of(side: int) -> int:
    return side >> 1


def twin(side: int) -> int:
    return side ^ 1


@dataclass(frozen=True, eq=False)
class Triangulation:
    """Immutable triangulation value.

    ``marks`` is the number of boundary arcs (labels ``1..marks``). Internal
    cut surfaces may have ``boundaries > 1`` and sparse arc ids; public values
    have one boundary and arc ids ``0..m-1``.
    """

    genus: int
    marks: int
    triangles: tuple
    boundaries: int = 1

    def __post_init__(self):
        object.__setattr__(
            self, "triangles", tuple(tuple(int(s) for s in t) for t in self.triangles)
        )

    @property
    def surface_class(self) -> SurfaceClass:
        return SurfaceClass(self.genus, self.marks, self.boundaries)

    @property
    def num_triangles(self) -> int:
        return len(self.triangles)

    @cached_property
    def where(self) -> dict:
        """Map side -> (triangle index, position)."""
        loc = {}
        for t, tri in enumerate(self.triangles):
            for i, s in enumerate(tri):
                loc[s] = (t, i)
        return loc

    @cached_property
    def arc_ids(self) -> tuple:
        return tuple(sorted({arc_of(s) for tri in self.triangles for s in tri if s >= 0}))

    @property
    def num_arcs(self) -> int:
        return len(self.arc_ids)

    @cached_property
    def boundary_labels(self) -> tuple:
        return tuple(sorted(-s for tri in self.triangles for s in tri if s < 0))

    # -- vertices ---------------------------------------------------------

    @cached_property
    def _corner_vertex(self) -> tuple:
        """Vertex index of each corner, as a tuple of 3-tuples.

        Vertices are numbered by the boundary label whose tail they are when
        every vertex lies on the boundary, else by -1-based fallback ids.
        """
        parent = list(range(3 * len(self.triangles)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        where = self.where
        for t, tri in enumerate(self.triangles):
            for i, s in enumerate(tri):
                if s >= 0 and (s & 1) == 0 and twin(s) in where:
                    t2, j = where[twin(s)]
                    # tail(s) ~ head(twin), head(s) ~ tail(twin)
                    union(3 * t + i, 3 * t2 + (j + 1) % 3)
                    union(3 * t + (i + 1) % 3, 3 * t2 + j)
        name = {}
        for t, tri in enumerate(self.triangles):
            for i, s in enumerate(tri):
                if s < 0:
                    name.setdefault(find(3 * t + i), -s)
        fresh = 0
        out = []
        for t in range(len(self.triangles)):
            row = []
            for i in range(3):
                r = find(3 * t + i)
                if r not in name:
                    fresh -= 1
                    name[r] = fresh
                row.append(name[r])
            out.append(tuple(row))
        return tuple(out)

    def tail(self, side: int) -> int:
        """Vertex label at the start of ``side``."""
        t, i = self.where[side]
        return self._corner_vertex[t][i]

    def head(self, side: int) -> int:
        t, i = self.where[side]
        return self._corner_vertex[t][(i + 1) % 3]

    def arc_endpoints(self, k: int) -> tuple:
        return tuple(sorted((self.tail(2 * k), self.head(2 * k))))

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted({v for row in self._corner_vertex for v in row}))

    def triangle_vertices(self, t: int) -> tuple:
        return self._corner_vertex[t]

    def degree(self, v: int) -> int:
        """Number of interior arc ends at vertex ``v``."""
        return sum(1 for s in self.where if s >= 0 and self.tail(s) == v)

    # -- helpers ----------------------------------------------------------

    def triangle_of_boundary(self, p: int) -> int:
        return self.where[-p][0]

    def rotated(self, t: int, i: int) -> tuple:
        """Triangle ``t`` read starting at position ``i``."""
        tri = self.triangles[t]
        return tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]

    def normalized(self) -> "Triangulation":
        """Renumber interior arcs densely, keeping their relative order."""
        ids = self.arc_ids
        if ids == tuple(range(len(ids))):
            return self
        new = {k: i for i, k in enumerate(ids)}
        tris = [
            tuple(s if s < 0 else 2 * new[s >> 1] + (s & 1) for s in tri)
            for tri in self.triangles
        ]
        return Triangulation(self.genus, self.marks, tris, self.boundaries)

    def __repr__(self) -> str:
        return (
            f"Triangulation(genus={self.genus}, marks={self.marks}, "
            f"boundaries={self.boundaries}, triangles={list(self.triangles)})"
        )


def corner_walk(T: Triangulation, start: int) -> list:
    """Sides leaving the tail vertex of ``start``, in rotation order.

    The walk starts at the boundary side leaving that vertex and ends where
    the incoming boundary side is reached, so each side of ``T`` is listed in
    exactly one vertex walk.
    """
    v = T.tail(start)
    first = None
    for s in T.where:
        if s < 0 and T.tail(s) == v:
            first = s
            break
    if first is None:
        raise TriangulationError("vertex not on the boundary")
    walk = [first]
    x = first
    while True:
        t, i = T.where[x]
        prev = T.triangles[t][(i - 1) % 3]
        if prev < 0:
            return walk
        x = twin(prev)
        if x == first or len(walk) > 6 * len(T.triangles) + 3:
            raise TriangulationError("corner walk does not terminate")
        walk.append(x)


def boundary_cycle(T: Triangulation) -> list:
    """Boundary labels grouped per boundary component, each in order.

    For one boundary the single cycle starts at label 1.
    """
    succ = {}
    for p in T.boundary_labels:
        h = T.head(-p)
        succ[p] = h  # next boundary arc is the one whose tail is h
    cycles = []
    seen = set()
    for p in T.boundary_labels:
        if p in seen:
            continue
        cyc = []
        q = p
        while q not in seen:
            seen.add(q)
            cyc.append(q)
            q = succ[q]
            if q not in succ:
                break
        cycles.append(cyc)
    return cycles


def validate(T: Triangulation, dense: bool = True) -> list:
    """List every violated structural invariant; empty means valid."""
    problems = []
    tris = T.triangles
    if not tris:
        return ["no triangles"]
    if any(len(t) != 3 for t in tris):
        return ["triangle with wrong number of sides"]
    counts = {}
    for tri in tris:
        for s in tri:
            counts[s] = counts.get(s, 0) + 1
    bad = sorted(s for s, c in counts.items() if c != 1)
    arcs = sorted({s >> 1 for s in counts if s >= 0})
    multiplicity = [k for k in arcs if counts.get(2 * k) != 1 or counts.get(2 * k + 1) != 1]
    if bad or multiplicity:
        problems.append(f"arc multiplicity: sides {bad} / arcs {multiplicity}")
    labels = sorted(-s for s in counts if s < 0)
    if T.boundaries == 1 and labels != list(range(1, T.marks + 1)):
        problems.append(f"boundary labels {labels} are not 1..{T.marks}")
    if len(labels) != T.marks:
        problems.append(f"boundary arc count {len(labels)} != marks {T.marks}")
    if problems:
        return problems
    if dense and arcs != list(range(len(arcs))):
        problems.append("arc ids not dense")
    folded = [k for k in arcs if T.where[2 * k][0] == T.where[2 * k + 1][0]]
    if folded:
        problems.append(f"self-folded triangle at arcs {folded}")

    # connectivity of the gluing
    seen = {0}
    stack = [0]
    while stack:
        t = stack.pop()
        for s in tris[t]:
            if s >= 0:
                u = T.where[twin(s)][0]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    if len(seen) != len(tris):
        problems.append("gluing is not connected")

    verts = T.vertices
    if any(v < 0 for v in verts) or len(verts) != len(labels):
        problems.append("interior vertex or vertex with several boundary corners")
    cycles = boundary_cycle(T)
    if len(cycles) != T.boundaries:
        problems.append(f"found {len(cycles)} boundary cycles, expected {T.boundaries}")
    if T.boundaries == 1 and cycles and cycles[0] != list(range(1, T.marks + 1)):
        problems.append(f"boundary order {cycles[0]} is not clockwise 1..{T.marks}")

    F, m = len(tris), len(arcs)
    twice_g = 2 - T.boundaries - F + m
    if twice_g % 2 or twice_g // 2 != T.genus:
        problems.append(f"Euler genus {twice_g / 2} != genus {T.genus}")
    if T.boundaries == 1:
        if F != T.marks + 4 * T.genus - 2:
            problems.append(
                f"triangle count {F} != n+4g-2 = {T.marks + 4 * T.genus - 2}"
            )
        if m != T.marks + 6 * T.genus - 3:
            problems.append(
                f"interior arc count {m} != n+6g-3 = {T.marks + 6 * T.genus - 3}"
            )
    if T.boundaries == 1 and T.genus == 0 and T.marks < 3:
        problems.append("a disk needs at least 3 marked points")
    if 3 * F != 2 * m + T.marks:
        problems.append("side count 3F != 2E_int + E_bd")
    return problems


def check(T: Triangulation, dense: bool = True) -> Triangulation:
    problems = validate(T, dense=dense)
    if problems:
        raise TriangulationError("; ".join(problems))
    return T


def relabel_boundary(T: Triangulation, shift: int) -> Triangulation:
    """Rotate marked-point labels: ``a_p`` becomes ``a_{p+shift}``."""
    n = T.marks
    tris = [
        tuple(s if s >= 0 else -(((-s - 1 + shift) % n) + 1) for s in tri)
        for tri in T.triangles
    ]
    return Triangulation(T.genus, n, tris, T.boundaries)


def mirror(T: Triangulation) -> Triangulation:
    """Orientation-reversed copy of ``T``.

    Old vertex ``a_q`` is renamed ``a_{n-q+2}`` (indices mod ``n``) so the new
    boundary still reads ``alpha_1..alpha_n`` clockwise. For ``n <= 2`` this
    renaming is the identity, so the result is the image of ``T`` under an
    orientation-reversing homeomorphism fixing every marked point.
    """
    n = T.marks
    if T.boundaries != 1:
        raise TriangulationError("not a one-holed surface")

    def lab(s):
        return s if s >= 0 else -(n + s + 1)

    tris = [tuple(lab(s) for s in reversed(tri)) for tri in T.triangles]
    return Triangulation(T.genus, n, tris, 1)
