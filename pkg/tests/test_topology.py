import random

import pytest
from hypothesis import given, strategies as st

from conftest import triangulations
from modflip.families import a_family, fan, random_walk
from modflip.topology import (CutSystemError, cut, find_cut_system, is_boundary_parallel,
                              untouched_run)
from modflip.surface import validate


def _dual_connected_without(T, e):
    # plain union-find on triangles, gluing across every arc but e
    parent = list(range(T.num_triangles))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for k in T.arc_ids:
        if k == e:
            continue
        a, b = T.where[2 * k][0], T.where[2 * k + 1][0]
        parent[find(a)] = find(b)
    return len({find(t) for t in range(T.num_triangles)}) == 1


@given(triangulations(g_max=0, n_max=7))
def test_every_disk_arc_is_boundary_parallel(T):
    assert all(is_boundary_parallel(T, e) for e in T.arc_ids)


@given(triangulations(g_max=2, n_max=6).filter(lambda T: T.genus >= 1))
def test_nonseparating_arcs_are_not_boundary_parallel(T):
    for e in T.arc_ids:
        if _dual_connected_without(T, e):
            assert not is_boundary_parallel(T, e)


@given(triangulations(), st.integers(0, 10**6))
def test_cut_euler_additivity(T, k):
    if not T.arc_ids:
        return
    arcs = sorted(random.Random(k).sample(T.arc_ids, min(len(T.arc_ids), 1 + k % 3)))
    cs = cut(T, arcs)
    for C in cs.components:
        assert validate(C, dense=False) == []
    # each cut arc removes one arc and adds two boundary arcs
    assert sum(len(C.triangles) for C in cs.components) == T.num_triangles
    assert sum(C.num_arcs for C in cs.components) == T.num_arcs - len(arcs)
    assert sum(cs.euler_characteristics()) == T.num_triangles - T.num_arcs + len(arcs)


@pytest.mark.parametrize("g,n", [(1, 1), (1, 4), (2, 2), (2, 5), (3, 1)])
def test_cut_system_gives_one_disk(g, n):
    T = random_walk(a_family("-", n, g), 50, random.Random(g * 10 + n))
    system = find_cut_system(T)
    assert len(system) == 2 * g
    cs = cut(T, system)
    assert len(cs.components) == 1
    D = cs.components[0]
    assert (D.genus, D.boundaries) == (0, 1)
    assert D.marks == n + 4 * g


def test_no_cut_system_on_disk():
    with pytest.raises(CutSystemError):
        find_cut_system(fan(6))


def _scan_oracle(n, endpoints):
    pts = set(endpoints)
    best = None
    for s in sorted(pts):
        L = 1
        while L < n and ((s - 1 + L) % n) + 1 not in pts:
            L += 1
        if best is None or L > best[1]:
            best = (s, L)
    return best


@given(st.integers(2, 30).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n), min_size=2, max_size=n))))
def test_untouched_run_matches_scan(arg):
    n, pts = arg
    r = untouched_run(n, pts)
    assert (r.start, r.length) == _scan_oracle(n, pts)
    assert not set(r.interior()) & pts
    assert len(r.vertices()) == r.length + 1


def test_untouched_run_single_endpoint():
    r = untouched_run(7, {3})
    assert (r.start, r.length) == (3, 7)
