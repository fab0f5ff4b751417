import pytest
from hypothesis import given

from conftest import triangulations
from modflip.families import a_family, core_surface, fan, zigzag
from modflip.surface import (SurfaceClass, Triangulation, TriangulationError, boundary_cycle,
                             check, mirror, relabel_boundary, validate)


def test_single_triangle():
    T = zigzag(3)
    assert T.triangles == ((-1, -2, -3),)
    assert validate(T) == []


@pytest.mark.parametrize("g,n", [(0, 3), (0, 9), (1, 1), (1, 5), (2, 1), (2, 4), (3, 2)])
def test_counts(g, n):
    T = fan(n) if g == 0 else a_family("-", n, g)
    assert T.num_triangles == n + 4 * g - 2
    assert T.num_arcs == n + 6 * g - 3
    assert SurfaceClass(g, n).num_triangles == T.num_triangles


def test_bad_triangulations_rejected():
    with pytest.raises(TriangulationError):
        check(Triangulation(1, 1, [(-1, 0, 1)]))
    with pytest.raises(TriangulationError):
        check(Triangulation(0, 3, [(-1, -3, -2)]))


def test_sphere_disk_needs_three_points():
    with pytest.raises((TriangulationError, ValueError)):
        fan(2)


@given(triangulations())
def test_euler_and_boundary(T):
    assert validate(T) == []
    assert len(T.vertices) == T.marks
    assert T.num_triangles == T.marks + 4 * T.genus - 2
    assert T.num_arcs == T.marks + 6 * T.genus - 3


@given(triangulations())
def test_relabel_and_mirror_valid(T):
    assert validate(relabel_boundary(T, 1)) == []
    assert validate(mirror(T)) == []
    assert sorted(boundary_cycle(mirror(T))[0]) == list(range(1, T.marks + 1))


def test_core_surface_is_one_point():
    for g in (1, 2):
        T = core_surface(g)
        assert (T.genus, T.marks) == (g, 1)
        assert validate(T) == []
