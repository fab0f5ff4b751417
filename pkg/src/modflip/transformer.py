"""Explicit flip sequences between two triangulations of the same one-holed
surface, with certified length bounds.

Both triangulations are first brought to a normal form around a marked
point a_0: the polygon obtained by cutting along a cut system is fanned at
a_0, and each cut arc is then flipped into a loop at a_0. Cutting along those
2g loops gives a strip between the chain of marked points
``L = a_0, a_1, ..., a_{n-1}, R = a_0`` and the chain of the other 4g - 1
copies of a_0. Each loop copy lies in a triangle whose third vertex is a
marked point; these triangles are the *hands*.

For genus one the hands are moved clockwise until both sides show the same
hand positions. For higher genus all hands of each side are gathered at one
marked point, which seals the topology inside a single loop; the two cores
are then matched by a shortest search in the flip graph of the core.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import canonical_code, isomorphism
from .explorer import Budget, diameter, enumerate_flip_graph, geodesic
from .families import core_surface
from .flips import FlipPath, flip
from .surface import Triangulation, TriangulationError, boundary_cycle, check, mirror
from .topology import CutSystemError, cut, cut_endpoints, find_cut_system, untouched_run

PHASES = ("fan", "loopify", "hands-move", "hands-bind", "core-equalize", "direct")


class TransformError(TriangulationError):
    pass


@dataclass
class TransformConfig:
    # try every untouched a_0 and keep the shortest certified path
    try_all_candidates: bool = True
    # exact search is used when no normal form is reachable (tiny classes)
    direct_budget: Budget = field(default_factory=lambda: Budget(max_nodes=2_000_000))
    core_budget: Budget = field(default_factory=lambda: Budget(max_nodes=2_000_000))


@dataclass
class TransformReport:
    path: FlipPath
    phase_lengths: dict
    bound: float
    d_g_used: int | None = None
    a0: int | None = None
    conditional: bool = False

    @property
    def length(self) -> int:
        return len(self.path)

    @property
    def within_bound(self) -> bool:
        return self.length <= self.bound

    def to_json(self) -> dict:
        return {
            "format": 1,
            "length": self.length,
            "bound": self.bound,
            "within_bound": self.within_bound,
            "conditional": self.conditional,
            "phase_lengths": dict(self.phase_lengths),
            "d_g_used": self.d_g_used,
            "a0": self.a0,
            "moves": list(self.path.moves),
        }


# -- core diameters ------------------------------------------------------------

_CORE_DIAMETERS: dict = {1: 0}


def core_diameter(g: int, budget: Budget | None = None) -> int:
    """Measured diameter of the flip graph of the genus-g surface with one
    boundary and one marked point, orientation kept (mirror rule off)."""
    if g not in _CORE_DIAMETERS:
        st = enumerate_flip_graph(core_surface(g), budget, mirror_rule=False, strict=True)
        _CORE_DIAMETERS[g] = diameter(st, use_symmetry=False).diameter
    return _CORE_DIAMETERS[g]


def upper_bound(g: int, n: int, d_g: int | None = None) -> float:
    if g == 1:
        return 23 * n / 8 + 8
    if d_g is None:
        d_g = core_diameter(g)
    return (4 - 1 / (4 * g)) * n + 16 * g - 7 + d_g


# -- fans and normal form ------------------------------------------------------

def fan_out(disk: Triangulation, apex: int) -> FlipPath:
    """Flip diagonals of a disk until all are incident to ``apex``.

    Each flip takes a triangle (apex, x, y) whose side xy is a diagonal and
    replaces xy by the diagonal from apex to the opposite corner, raising the
    degree of apex by one.
    """
    if disk.genus != 0 or disk.boundaries != 1:
        raise TriangulationError("fan_out needs a disk")
    T = disk
    moves = []
    while True:
        step = None
        for t, row in enumerate(T._corner_vertex):
            for i in range(3):
                if row[i] == apex:
                    s = T.triangles[t][(i + 1) % 3]
                    if s >= 0 and apex not in (T.tail(s), T.head(s)):
                        step = s >> 1
                        break
            if step is not None:
                break
        if step is None:
            return FlipPath(disk, moves)
        T = flip(T, step)
        moves.append(step)


def _label_of(cs, comp: int, origin) -> int:
    for lab, o in cs.origins[comp].items():
        if o == origin:
            return lab
    raise TriangulationError(f"no boundary arc with origin {origin}")


def is_normal_form(T: Triangulation, a0: int) -> list | None:
    """Loop arcs at a_0 when ``T`` is already in normal form, else ``None``."""
    loops = [k for k in T.arc_ids if T.arc_endpoints(k) == (a0, a0)]
    if len(loops) != 2 * T.genus:
        return None
    if any(a0 not in T.arc_endpoints(k) for k in T.arc_ids):
        return None
    cs = cut(T, loops)
    if len(cs.components) != 1 or cs.components[0].genus != 0:
        return None
    return loops


def normal_form(T: Triangulation, a0: int, system: list | None = None):
    """Fan the cut polygon at a_0, then flip the cut arcs into loops.

    Returns ``(fan_moves, loop_moves, result, loops)``; loops keep the ids of
    the cut arcs they replace.
    """
    loops = is_normal_form(T, a0)
    if loops is not None:
        return [], [], T, loops
    if system is None:
        system = find_cut_system(T, avoid_vertex=a0)
    if a0 in cut_endpoints(T, system):
        raise CutSystemError(f"a_{a0} is an endpoint of the cut system")
    cs = cut(T, system)
    P = cs.components[0]
    apex = _label_of(cs, 0, ("b", a0))
    fan = fan_out(P, apex).moves
    for e in fan:
        T = flip(T, e)
    loop_moves = []
    for k in system:
        T = flip(T, k)
        loop_moves.append(k)
        if T.arc_endpoints(k) != (a0, a0):
            raise TransformError(f"arc {k} did not become a loop at a_{a0}")
    return fan, loop_moves, T, list(system)


# -- the strip between the two chains -----------------------------------------

class Strip:
    """The polygon cut along the loops, read as two chains.

    ``K = [L, ..., R]`` lists the copies of a_0 so that hand ``i`` lies on the
    loop copy from ``K[i+1]`` to ``K[i]``; marked points get positions
    ``L = 0, a_{a0+1} = 1, ..., R = n``.
    """

    def __init__(self, T: Triangulation, a0: int, loops):
        cs = cut(T, loops)
        if len(cs.components) != 1:
            raise TransformError("loops do not form a cut system")
        Q = cs.components[0]
        n = T.marks
        start = _label_of(cs, 0, ("b", a0))
        cyc = boundary_cycle(Q)[0]
        j = cyc.index(start)
        cyc = cyc[j:] + cyc[:j]
        chain_b, chain_a = cyc[:n], cyc[n:]
        self.Q = Q
        self.K = [chain_b[0]] + chain_a[::-1]
        self.pos = {v: i for i, v in enumerate(chain_b)}
        self.pos[self.K[-1]] = n
        self.n = n

    def bundle(self, a: int):
        """Triangle of the bundle whose first copy is ``K[a]``:
        ``(front side, far copy, apex position)`` or ``None`` when ``K[a]``
        sees no marked point."""
        Q, X = self.Q, self.K[a]
        best = None
        for t, row in enumerate(Q._corner_vertex):
            for i in range(3):
                if row[i] == X and row[(i + 1) % 3] in self.pos:
                    p = self.pos[row[(i + 1) % 3]]
                    if 0 < p < self.n and (best is None or p > best[0]):
                        best = (p, t, i)
        if best is None:
            return None
        p, t, i = best
        row = Q._corner_vertex[t]
        front = Q.triangles[t][(i + 1) % 3]
        back = Q.triangles[t][(i + 2) % 3]
        return front, back, self.K.index(row[(i + 2) % 3]), p

    def across(self, side: int) -> int:
        """Vertex opposite ``side`` in the triangle on its other side."""
        Q = self.Q
        t, i = Q.where[side ^ 1]
        return Q._corner_vertex[t][(i + 2) % 3]


class _Side:
    """A triangulation in normal form and the moves applied to it."""

    def __init__(self, T, a0, loops):
        self.T, self.a0, self.loops = T, a0, loops
        self.moves = []
        self.counts = {"hands-move": 0, "hands-bind": 0, "core-equalize": 0}
        self.strip = Strip(T, a0, loops)

    def apply(self, e, phase):
        self.T = flip(self.T, e)
        self.moves.append(e)
        self.counts[phase] += 1
        self.strip = Strip(self.T, self.a0, self.loops)

    def state(self, a):
        return self.strip.bundle(a)

    def advance(self, a) -> str:
        """Push bundle ``a`` one step clockwise: a move or a bind."""
        front, far, _, _ = self.state(a)
        if front < 0:
            raise TransformError("hand cannot move past the last marked point")
        kind = "hands-move" if self.strip.across(front) in self.strip.pos and \
            self.strip.across(front) != self.strip.K[-1] else "hands-bind"
        self.apply(front >> 1, kind)
        return kind

    def unbind(self, a):
        """Split bundle ``a`` until it is a single hand."""
        while True:
            front, back, b, _ = self.state(a)
            if b == a + 1:
                return
            self.apply(back >> 1, "hands-bind")


# binding two hands costs a bind and an unbind; it pays off once they travel
# together for at least this many steps
BIND_MIN_RUN = 3


def _push(S: _Side, a: int, target: int):
    """One clockwise step for bundle ``a`` heading to ``target``.

    A bundle blocked by the next hand either binds it (long trip ahead) or
    pushes it forward first; pushed hands move toward positions they must
    reach anyway.
    """
    front, _, b, p = S.state(a)
    nxt = S.strip.across(front)
    if nxt in S.strip.pos and nxt != S.strip.K[-1]:
        S.apply(front >> 1, "hands-move")
    elif target - p >= BIND_MIN_RUN:
        S.apply(front >> 1, "hands-bind")
    else:
        _push(S, b, target)


def _align_genus_one(U: _Side, V: _Side):
    hands = len(U.strip.K) - 1
    for i in range(hands):
        while True:
            pu, pv = U.state(i)[3], V.state(i)[3]
            if pu == pv:
                break
            if pu < pv:
                _push(U, i, pv)
            else:
                _push(V, i, pu)
        U.unbind(i)
        V.unbind(i)


def _collect(S: _Side, target: int):
    """Gather every hand at position ``target``; returns the loop around the core.

    No hand sits beyond ``target``, so once the bundle reaches it every
    further step is a bind.
    """
    last = len(S.strip.K) - 1
    while True:
        _, back, b, p = S.state(0)
        if b == last and p == target:
            return back >> 1
        S.advance(0)


def align_hands(U: Triangulation, V: Triangulation, a0: int, loops_u, loops_v):
    """Move and bind hands of two normal forms. Returns the two sides."""
    su, sv = _Side(U, a0, loops_u), _Side(V, a0, loops_v)
    if U.genus == 1:
        _align_genus_one(su, sv)
    else:
        hands = [S.state(i)[3] for S in (su, sv) for i in range(len(S.strip.K) - 1)
                 if S.state(i) is not None]
        target = max(hands)
        su.core_loop = _collect(su, target)
        sv.core_loop = _collect(sv, target)
    return su, sv


def _core_component(T: Triangulation, loop: int):
    cs = cut(T, [loop])
    for C in cs.components:
        if C.genus == T.genus:
            return C
    raise TransformError("loop does not bound the core")


def equalize_core(U: Triangulation, V: Triangulation, loop_u: int, loop_v: int,
                  budget: Budget | None = None) -> list:
    """Flips inside the core of ``U`` matching it with the core of ``V``."""
    cu, cv = _core_component(U, loop_u), _core_component(V, loop_v)
    return geodesic(cu, cv, budget, mirror_rule=False).moves


# -- the full transformation ---------------------------------------------------

def _candidates(U, V, extended=False):
    """(a_0, system_U, system_V) triples to try.

    By default the a_0 are the interior points of the longest untouched run
    of the greedy cut systems. With ``extended`` (or when that run has no
    interior point) every marked point is tried with cut systems avoiding it.
    """
    n = U.marks
    out = []
    if not extended:
        try:
            su, sv = find_cut_system(U), find_cut_system(V)
            run = untouched_run(n, cut_endpoints(U, su) | cut_endpoints(V, sv))
            out = [(a, su, sv) for a in run.interior()]
        except CutSystemError:
            pass
        if out:
            return out
    for a in range(1, n + 1):
        try:
            out.append((a, find_cut_system(U, a), find_cut_system(V, a)))
        except CutSystemError:
            continue
    return out


def _transport(moves, amap):
    return [amap[e] for e in reversed(moves)]


def _attempt(U, V, a0, sys_u, sys_v, config):
    fan_u, loop_u, Un, loops_u = normal_form(U, a0, sys_u)
    fan_v, loop_v, Vn, loops_v = normal_form(V, a0, sys_v)
    su, sv = align_hands(Un, Vn, a0, loops_u, loops_v)
    core = []
    if U.genus >= 2:
        core = equalize_core(su.T, sv.T, su.core_loop, sv.core_loop, config.core_budget)
        for e in core:
            su.T = flip(su.T, e)
    amap = isomorphism(sv.T, su.T)
    if amap is None:
        raise TransformError("normal forms do not coincide after hand alignment")
    v_moves = fan_v + loop_v + sv.moves
    moves = fan_u + loop_u + su.moves + core + _transport(v_moves, amap)
    phases = dict.fromkeys(PHASES, 0)
    phases["fan"] = len(fan_u) + len(fan_v)
    phases["loopify"] = len(loop_u) + len(loop_v)
    for key in ("hands-move", "hands-bind"):
        phases[key] = su.counts[key] + sv.counts[key]
    phases["core-equalize"] = len(core)
    return moves, phases


def _search(U, V, config, bound):
    """Shortest normal-form path over the a_0 candidates, in both
    orientations. Flipping the same arcs commutes with reflecting the
    surface, so moves found on the reflected pair apply to ``U`` as they are.
    """
    best, a0_used = None, None
    pairs = [(U, V, False), (mirror(U), mirror(V), True)]
    if not config.try_all_candidates:
        pairs = pairs[:1]
    for extended in (False, True):
        if extended and (best is not None and len(best[0]) <= bound or not config.try_all_candidates):
            break
        for A, B, reflected in pairs:
            cands = _candidates(A, B, extended)
            if not config.try_all_candidates:
                cands = cands[:1]
            for a0, sys_a, sys_b in cands:
                try:
                    moves, phases = _attempt(A, B, a0, sys_a, sys_b, config)
                except CutSystemError:
                    continue
                if best is None or len(moves) < len(best[0]):
                    label = A.marks - a0 + 2 if reflected else a0
                    best, a0_used = (moves, phases), (label - 1) % A.marks + 1
    return best, a0_used


def transform(U: Triangulation, V: Triangulation, config: TransformConfig | None = None) -> TransformReport:
    """Certified flip path from ``U`` to a triangulation equivalent to ``V``."""
    config = config or TransformConfig()
    if U.surface_class != V.surface_class:
        raise TriangulationError("class mismatch")
    check(U)
    check(V)
    g, n = U.genus, U.marks
    if g < 1:
        raise TriangulationError("transform needs genus >= 1")
    d_g = core_diameter(g) if g >= 2 else None
    bound = upper_bound(g, n, d_g)
    best = None
    a0_used = None
    if canonical_code(U) == canonical_code(V):
        best = ([], dict.fromkeys(PHASES, 0))
    elif n == 1:
        # the whole surface is the core
        moves = geodesic(U, V, config.core_budget, mirror_rule=False).moves
        phases = dict.fromkeys(PHASES, 0)
        phases["core-equalize"] = len(moves)
        best = (moves, phases)
    else:
        best, a0_used = _search(U, V, config, bound)
        if best is None:
            moves = geodesic(U, V, config.direct_budget).moves
            phases = dict.fromkeys(PHASES, 0)
            phases["direct"] = len(moves)
            best = (moves, phases)
    moves, phases = best
    path = FlipPath(U, list(moves))
    end = path.replay()
    if canonical_code(end) != canonical_code(V):
        raise TransformError("certification failed: path does not reach the target")
    if sum(phases.values()) != len(path):
        raise TransformError("phase accounting does not add up")
    return TransformReport(path, phases, bound, d_g, a0_used)

