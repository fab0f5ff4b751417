import pytest

from modflip.canon import equivalent
from modflip.families import (FamilySpec, a_family, delete_vertex, fan, flip_incident_to, has_ear,
                              polygon, zigzag)
from modflip.flips import neighbors
from modflip.surface import TriangulationError, validate


@pytest.mark.parametrize("n", range(3, 10))
def test_zigzag_and_fan(n):
    for T in (zigzag(n), fan(n), fan(n, apex=n)):
        assert validate(T) == []
    assert all(1 in T.arc_endpoints(k) for T in [fan(n)] for k in T.arc_ids)


@pytest.mark.parametrize("g", [1, 2])
@pytest.mark.parametrize("n", range(1, 7))
def test_witness_pair(g, n):
    U, V = a_family("-", n, g), a_family("+", n, g)
    assert validate(U) == [] and validate(V) == []
    if n >= 2:
        assert not equivalent(U, V)


def test_family_spec():
    assert equivalent(FamilySpec("a-minus", 1, 4).build(), a_family("-", 4))
    with pytest.raises(ValueError):
        FamilySpec("nope").build()


def test_has_ear():
    T = polygon(5, [(1, 3), (1, 4)])
    assert has_ear(T, 2) and has_ear(T, 5)
    assert not has_ear(T, 1)


@pytest.mark.parametrize("g,n", [(0, 6), (1, 4), (2, 3)])
def test_delete_vertex_valid(g, n):
    T = fan(n) if g == 0 else a_family("-", n, g)
    for p in range(1, n + 1):
        try:
            D = delete_vertex(T, p)
        except TriangulationError:
            continue
        assert (D.genus, D.marks) == (g, n - 1)
        assert validate(D) == []


def test_delete_vertex_on_polygon():
    # a hexagon fan at 1: removing a_4 leaves the pentagon fan at 1
    D = delete_vertex(fan(6), 4)
    assert equivalent(D, fan(5))


def test_incidence_is_symmetric():
    U = a_family("-", 3)
    for W in neighbors(U):
        for p in (1, 2, 3):
            assert flip_incident_to(U, W, p) == flip_incident_to(W, U, p)
