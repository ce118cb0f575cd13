from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqhstar import graphs as gr
from pqhstar.ehrhart import (
    RootPolytope,
    compositions,
    contains_in_dilation,
    dimension,
    ehrhart_counts,
    hstar_from_counts,
    hstar_via_ehrhart,
    lattice_point_count,
    pq_vertices,
    rank,
)
from pqhstar.graphs import BipartiteGraph, bipartite_double
from pqhstar.interior import GuardExceeded
from pqhstar.poly import IntPolynomial

from conftest import all_labeled_graphs, connected_bipartite


def Q(g):
    return RootPolytope(bipartite_double(g))


def sums_of_vertices(poly, t):
    """Lattice points of t*Q as sums of t vertices; independent of the flow test."""
    verts = poly.vertices
    return {tuple(map(sum, zip(*combo))) for combo in combinations_with_replacement(verts, t)}


def hall_ok(h: BipartiteGraph, v) -> bool:
    a, b = v[: h.p], v[h.p :]
    if sum(a) != sum(b):
        return False
    nbrs = h.left_neighbors()
    for mask in range(1, 1 << h.p):
        s = [i for i in range(h.p) if mask >> i & 1]
        gamma = set().union(*(nbrs[i] for i in s))
        if sum(a[i] for i in s) > sum(b[j - 1] for j in gamma):
            return False
    return True


def test_pq_vertices_small():
    assert pq_vertices(gr.complete(1)) == [(1, 1)]
    assert len(pq_vertices(gr.complete(2))) == 4


def test_pq_vertices_match_root_polytope():
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            assert pq_vertices(g) == Q(g).vertices


def test_contains_examples():
    k22 = RootPolytope(bipartite_double(gr.complete(2)))
    for v in k22.vertices:
        assert contains_in_dilation(k22, 1, v)
    assert contains_in_dilation(k22, 2, (2, 0, 0, 2))
    e2 = Q(gr.empty(2))
    assert not contains_in_dilation(e2, 1, (1, 0, 0, 1))
    assert not contains_in_dilation(k22, 2, (1, 0, 0, 2))
    with pytest.raises(ValueError):
        contains_in_dilation(k22, 1, (-1, 2, 0, 1))


@settings(max_examples=60, deadline=None)
@given(connected_bipartite(max_side=4), st.data())
def test_flow_matches_hall(h, data):
    t = data.draw(st.integers(1, 4))
    a = data.draw(st.sampled_from(list(compositions(t, h.p))))
    b = data.draw(st.sampled_from(list(compositions(t, h.q))))
    assert contains_in_dilation(RootPolytope(h), t, a + b) == hall_ok(h, a + b)


def test_compositions_colex():
    got = list(compositions(2, 2))
    assert got == [(2, 0), (1, 1), (0, 2)]
    assert got == sorted(got, key=lambda c: c[::-1])
    assert len(list(compositions(4, 3))) == 15


def test_lattice_counts_examples():
    assert lattice_point_count(Q(gr.path(3)), 0) == 1
    assert lattice_point_count(Q(gr.complete(4)), 1) == 16
    assert lattice_point_count(Q(gr.complete(2)), 1) == 4


@pytest.mark.parametrize("g", [gr.complete(2), gr.path(3), gr.complete(3), gr.cycle(4), gr.empty(2)])
def test_lattice_counts_match_vertex_sums(g):
    poly = Q(g)
    for t in range(1, 4):
        assert lattice_point_count(poly, t) == len(sums_of_vertices(poly, t))


def test_parallel_count_matches_serial():
    poly = Q(gr.complete(4))
    assert lattice_point_count(poly, 8, workers=2) == lattice_point_count(poly, 8, workers=1)


def test_counts_monotone():
    for g in (gr.cycle(4), gr.path(4), gr.complete(3)):
        poly = Q(g)
        counts = ehrhart_counts(poly, 5)
        assert counts == sorted(counts)
        assert counts[1] >= len(poly.vertices)


def test_dimension():
    for m in range(1, 5):
        assert dimension(Q(gr.complete(m))) == 2 * m - 2
    single = RootPolytope(BipartiteGraph.from_edges(1, 1, [(1, 1)]))
    assert dimension(single) == 0
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            if gr.is_connected(g):
                assert dimension(Q(g)) == 2 * n - 2


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0, 1], [0, 3, 5], [7, 1, 1]]) == 3
    assert rank([]) == 0


def test_unit_cube_self_test():
    eulerian = {0: [1], 1: [1], 2: [1, 1], 3: [1, 4, 1]}
    for k, expected in eulerian.items():
        counts = [(t + 1) ** k for t in range(k + 1)]
        assert hstar_from_counts(counts, k) == IntPolynomial(expected)


def test_hstar_via_ehrhart_examples():
    assert hstar_via_ehrhart(gr.complete(3)) == IntPolynomial([1, 4, 1])
    assert hstar_via_ehrhart(gr.complete(2)) == IntPolynomial([1, 1])
    assert hstar_via_ehrhart(gr.complete(1)) == IntPolynomial([1])
    assert hstar_via_ehrhart(gr.wheel(3))(1) == 20


def test_oracle_guard():
    with pytest.raises(GuardExceeded, match="guard"):
        hstar_via_ehrhart(gr.complete(7))


@pytest.mark.slow
@pytest.mark.parametrize("name", ["C5", "K2,3"])
def test_oracle_stretch_cases(name):
    from pqhstar.interior import interior_polynomial
    from pqhstar.verify import STRETCH

    g = STRETCH[name]
    assert hstar_via_ehrhart(g) == interior_polynomial(bipartite_double(g))
