import json
import random

import pytest

import frozen
from modflip.canon import canonical_code
from modflip.explorer import (Budget, BudgetExceeded, FlipGraphStore, all_geodesics, diameter,
                              distance, enumerate_flip_graph, geodesic)
from modflip.families import a_family, fan, random_triangulation, zigzag
from oracles import catalan, polygon_diameter, polygon_distance


@pytest.mark.parametrize("n", range(3, 9))
def test_polygon_counts_and_diameter(n):
    st = enumerate_flip_graph(fan(n))
    assert len(st) == catalan(n - 2)
    assert diameter(st).diameter == polygon_diameter(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_torus_frozen(n):
    st = enumerate_flip_graph(a_family("-", n))
    assert len(st) == frozen.TORUS_NODES[n]
    assert st.num_edges == frozen.TORUS_EDGES[n]
    assert diameter(st).diameter == frozen.TORUS_DIAMETER[n]


def test_symmetry_pruning_agrees():
    st = enumerate_flip_graph(a_family("-", 4))
    assert diameter(st, use_symmetry=True).diameter == diameter(st, use_symmetry=False).diameter


def test_core2_frozen():
    from modflip.families import core_surface

    st = enumerate_flip_graph(core_surface(2), mirror_rule=False)
    assert (len(st), st.num_edges) == (frozen.CORE2_NODES, frozen.CORE2_EDGES)
    assert diameter(st, use_symmetry=False).diameter == frozen.CORE2_DIAMETER


def test_budget_partial_and_strict():
    st = enumerate_flip_graph(a_family("-", 5), Budget(max_nodes=50))
    assert st.partial and len(st) < frozen.TORUS_NODES[5]
    with pytest.raises(BudgetExceeded) as info:
        enumerate_flip_graph(a_family("-", 5), Budget(max_nodes=50), strict=True)
    assert info.value.partial.partial


def test_thread_count_does_not_change_store():
    one = enumerate_flip_graph(a_family("-", 4))
    many = enumerate_flip_graph(a_family("-", 4), threads=8)
    assert one.codes == many.codes
    assert one.adj == many.adj


def test_geodesic_agrees_with_store():
    st = enumerate_flip_graph(a_family("-", 3))
    rng = random.Random(2)
    for _ in range(20):
        U, V = random_triangulation(1, 3, rng), random_triangulation(1, 3, rng)
        P = geodesic(U, V)
        assert canonical_code(P.replay()) == canonical_code(V)
        assert len(P) == distance(U, V, store=st)


@pytest.mark.parametrize("n", range(1, 6))
def test_witness_distances_frozen(n):
    assert distance(a_family("-", n), a_family("+", n)) == frozen.WITNESS_DISTANCE[n]


def test_all_geodesics_are_geodesics():
    st = enumerate_flip_graph(a_family("-", 2))
    U, V = a_family("-", 2), a_family("+", 2)
    paths = list(all_geodesics(st, U, V))
    assert len(paths) == 72
    for P in paths:
        assert len(P) == 8
        assert canonical_code(P.replay()) == canonical_code(V)


def test_json_and_dot_export():
    st = enumerate_flip_graph(fan(6))
    doc = json.loads(json.dumps(st.to_json()))
    back = FlipGraphStore.from_json(doc)
    assert back.codes == st.codes and back.adj == st.adj
    dot = st.to_dot()
    lines = [ln.strip() for ln in dot.splitlines()[1:-1]]
    assert sum(1 for ln in lines if "--" not in ln) == len(st)
    assert sum(1 for ln in lines if "--" in ln) == st.num_edges


def _diagonals(T):
    return frozenset(tuple(sorted(T.arc_endpoints(k))) for k in T.arc_ids)


@pytest.mark.parametrize("n", [6, 7, 8])
def test_polygon_distance_matches_oracle(n):
    rng = random.Random(n)
    for _ in range(10):
        U, V = random_triangulation(0, n, rng), random_triangulation(0, n, rng)
        assert distance(U, V) == polygon_distance(n, _diagonals(U), _diagonals(V))
    assert distance(zigzag(6), fan(6)) == 3
