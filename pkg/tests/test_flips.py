import random

from hypothesis import given, strategies as st

from conftest import triangulations
from modflip.canon import canonical_code, equivalent
from modflip.families import polygon, zigzag
from modflip.flips import FlipPath, flip, neighbors
from modflip.surface import validate


@given(triangulations(), st.integers(0, 10**6))
def test_flip_is_involution(T, k):
    e = T.arc_ids[k % len(T.arc_ids)] if T.arc_ids else None
    if e is None:
        return
    W = flip(T, e)
    assert validate(W) == []
    assert equivalent(flip(W, e), T)


@given(triangulations(n_max=6))
def test_neighbour_symmetry(T):
    c = canonical_code(T)
    for W in neighbors(T):
        assert c in {canonical_code(X) for X in neighbors(W)}


def test_pentagon_has_two_neighbours():
    T = polygon(5, [(1, 3), (1, 4)])
    assert len({canonical_code(W) for W in neighbors(T)}) == 2


def test_quadrilateral_flip():
    T = zigzag(4)
    W = flip(T, 0)
    assert T.arc_endpoints(0) != W.arc_endpoints(0)
    assert sorted(W.arc_endpoints(0) + T.arc_endpoints(0)) == [1, 2, 3, 4]


def test_flip_path_replay():
    rng = random.Random(3)
    T = zigzag(7)
    moves = [rng.choice(T.arc_ids) for _ in range(12)]
    P = FlipPath(T, moves)
    ends = list(P.triangulations())
    assert len(ends) == 13
    assert equivalent(P.replay(), ends[-1])
