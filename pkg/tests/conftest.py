from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from pqhstar.graphs import BipartiteGraph, Graph, is_connected


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 5) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def connected_bipartite(draw, max_side: int = 4) -> BipartiteGraph:
    p = draw(st.integers(1, max_side))
    q = draw(st.integers(1, max_side))
    pairs = [(i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
    # a spanning caterpillar keeps the graph connected; extras are random
    spine = [(1, j) for j in range(1, q + 1)] + [(i, 1) for i in range(2, p + 1)]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    h = BipartiteGraph.from_edges(p, q, set(spine) | set(extra))
    assert is_connected(h)
    return h


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
