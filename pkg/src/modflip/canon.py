"""Canonical codes: complete invariants of triangulations up to
homeomorphisms fixing each marked point.

The code is a rooted traversal of the triangle gluing. The root is the
triangle on the interior side of ``alpha_1``; triangles are discovered in
breadth-first order across glued sides, each read starting from the side by
which it was entered. Because the root is pinned by a labelled boundary arc,
two values get equal codes exactly when their labelled maps are isomorphic.

For ``n <= 2`` orientation-reversing homeomorphisms also fix every marked
point, so by default the code is the minimum over both orientations.
"""

from __future__ import annotations

from array import array

from .surface import Triangulation, TriangulationError, mirror

MIRROR_MAX_MARKS = 2


def _traverse(T: Triangulation):
    """Return (code ints, discovered triangle order as (t, rot))."""
    where = T.where
    tris = T.triangles
    t0, r0 = where[-1]
    index = {t0: 0}
    order = [(t0, r0)]
    out = [T.genus, T.marks]
    k = 0
    while k < len(order):
        t, r = order[k]
        tri = tris[t]
        for j in range(3):
            s = tri[(r + j) % 3]
            if s < 0:
                out.append(s)
            else:
                t2, p2 = where[s ^ 1]
                i2 = index.get(t2)
                if i2 is None:
                    i2 = len(order)
                    index[t2] = i2
                    order.append((t2, p2))
                out.append(3 * i2 + (p2 - order[i2][1]) % 3)
        k += 1
    return out, order


def _pack(ints) -> bytes:
    return array("i", ints).tobytes()


def use_mirror(T: Triangulation, mirror_rule: bool | None) -> bool:
    if mirror_rule is None:
        mirror_rule = True
    return mirror_rule and T.marks <= MIRROR_MAX_MARKS


def canonical_code(T: Triangulation, mirror_rule: bool | None = None) -> bytes:
    """Canonical code of ``T``; cached on the value."""
    if T.boundaries != 1:
        raise TriangulationError("not a one-holed surface")
    mir = use_mirror(T, mirror_rule)
    key = "_code_m" if mir else "_code"
    cached = T.__dict__.get(key)
    if cached is not None:
        return cached
    ints, _ = _traverse(T)
    code = _pack(ints)
    if mir:
        code = min(code, _pack(_traverse(mirror(T))[0]))
    T.__dict__[key] = code
    return code


def code_hex(code: bytes) -> str:
    return code.hex()


def equivalent(U: Triangulation, V: Triangulation, mirror_rule: bool | None = None) -> bool:
    if U.surface_class != V.surface_class:
        raise TriangulationError(
            f"class mismatch: {U.surface_class} vs {V.surface_class}"
        )
    return canonical_code(U, mirror_rule) == canonical_code(V, mirror_rule)


def isomorphism(U: Triangulation, V: Triangulation, mirror_rule: bool | None = None):
    """Arc-id map ``U -> V`` realizing an equivalence, or ``None``.

    The map commutes with flips (flip keeps arc ids), so it transports flip
    sequences from one value to the other.
    """
    if not equivalent(U, V, mirror_rule):
        return None
    cu, ou = _traverse(U)
    candidates = [V]
    if use_mirror(V, mirror_rule):
        candidates.append(mirror(V))
    for W in candidates:
        cw, ow = _traverse(W)
        if cw != cu:
            continue
        amap = {}
        for (tu, ru), (tw, rw) in zip(ou, ow):
            for j in range(3):
                su = U.triangles[tu][(ru + j) % 3]
                sw = W.triangles[tw][(rw + j) % 3]
                if su >= 0:
                    amap[su >> 1] = sw >> 1
        return amap
    return None


def decode(code: bytes) -> Triangulation:
    """Rebuild a representative triangulation from a canonical code."""
    ints = array("i")
    ints.frombytes(code)
    g, n = ints[0], ints[1]
    body = ints[2:]
    if len(body) % 3:
        raise TriangulationError("malformed code")
    F = len(body) // 3
    tris = [[0, 0, 0] for _ in range(F)]
    arc = {}
    nxt = 0
    for k in range(F):
        for j in range(3):
            x = body[3 * k + j]
            if x < 0:
                tris[k][j] = x
                continue
            other = (x // 3, x % 3)
            key = min((k, j), other), max((k, j), other)
            if key not in arc:
                arc[key] = nxt
                nxt += 1
                tris[k][j] = 2 * arc[key]
            else:
                tris[k][j] = 2 * arc[key] + 1
    return Triangulation(g, n, tris)
