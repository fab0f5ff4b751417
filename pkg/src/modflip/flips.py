"""Flips and flip paths."""

from __future__ import annotations

from dataclasses import dataclass, field

from .surface import Triangulation, TriangulationError


class FlipError(TriangulationError):
    pass


def _sides(T: Triangulation, e: int):
    try:
        return T.where[2 * e], T.where[2 * e + 1]
    except KeyError:
        raise FlipError(f"no such arc: {e}") from None


def flippable(T: Triangulation, e: int) -> bool:
    (t0, _), (t1, _) = _sides(T, e)
    return t0 != t1


def flip(T: Triangulation, e: int) -> Triangulation:
    """Replace arc ``e`` by the other diagonal of its quadrilateral.

    With the two triangles read as ``(e0, b, c)`` and ``(e1, d, f)`` the
    result holds ``(e0', c, d)`` and ``(e1', f, b)``; the new diagonal keeps
    the id ``e``.
    """
    (t0, i0), (t1, i1) = _sides(T, e)
    if t0 == t1:
        raise FlipError(f"flip blocked: arc {e} has both sides on one triangle")
    _, b, c = T.rotated(t0, i0)
    _, d, f = T.rotated(t1, i1)
    tris = list(T.triangles)
    tris[t0] = (2 * e, c, d)
    tris[t1] = (2 * e + 1, f, b)
    return Triangulation(T.genus, T.marks, tris, T.boundaries)


def neighbors(T: Triangulation) -> list:
    """One flip per interior arc, in arc-id order (a multiset)."""
    return [flip(T, e) for e in T.arc_ids]


@dataclass
class FlipPath:
    start: Triangulation
    moves: list = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def triangulations(self):
        """Yield ``T_0 = start, T_1, ..., T_k``."""
        T = self.start
        yield T
        for e in self.moves:
            T = flip(T, e)
            yield T

    def end(self) -> Triangulation:
        T = self.start
        for e in self.moves:
            T = flip(T, e)
        return T

    def replay(self, check_each=True) -> Triangulation:
        """Apply every move, validating after each step."""
        from .surface import check

        T = self.start
        for e in self.moves:
            T = flip(T, e)
            if check_each:
                check(T, dense=False)
        return T

    def extend(self, moves):
        self.moves.extend(moves)
        return self
