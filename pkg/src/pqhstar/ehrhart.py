"""Brute-force Ehrhart counting for root polytopes of bipartite graphs.

A lattice vector ``v = (a | b)`` lies in ``t * Q_H`` exactly when
``sum(a) == sum(b) == t`` and the supplies ``a`` can be shipped to the
demands ``b`` along the edges of ``H``.  Shipping is decided by an integral
max-flow; flows with integer capacities have integral optima, so no
rational arithmetic is needed.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from .graphs import BipartiteGraph, Graph, bipartite_double
from .interior import GuardExceeded
from .poly import IntPolynomial, binomial

MAX_PAIRS_PER_LEVEL = 10**7


class OracleError(ArithmeticError):
    """A postcondition of the Ehrhart transform failed."""


@dataclass(frozen=True)
class RootPolytope:
    graph: BipartiteGraph

    @property
    def ambient_dim(self) -> int:
        return self.graph.p + self.graph.q

    @property
    def vertices(self) -> list[tuple[int, ...]]:
        p, q = self.graph.p, self.graph.q
        out = []
        for i, j in self.graph.sorted_edges():
            v = [0] * (p + q)
            v[i - 1] = 1
            v[p + j - 1] = 1
            out.append(tuple(v))
        return out


def pq_vertices(g: Graph) -> list[tuple[int, ...]]:
    """Points ``(e_i, e_j)`` in ``R^{2n}`` for ``i == j`` or ``{i, j}`` an edge, sorted."""
    n = g.n
    pairs = [(i, i) for i in g.vertices]
    for i, j in g.edges:
        pairs += [(i, j), (j, i)]
    out = []
    for i, j in sorted(pairs):
        v = [0] * (2 * n)
        v[i - 1] = 1
        v[n + j - 1] = 1
        out.append(tuple(v))
    return out


def _max_flow(supply: Sequence[int], demand: Sequence[int], lanes: Sequence[Sequence[int]]) -> int:
    """Max flow source -> left ``i`` (cap supply) -> right ``j`` (uncapped lane) -> sink (cap demand).

    Augmenting paths found by DFS in the residual graph.  ``lanes[i]`` lists
    the right indices reachable from left ``i``.
    """
    p, q = len(supply), len(demand)
    flow = [[0] * q for _ in range(p)]
    left_rem = list(supply)
    right_rem = list(demand)
    # reverse adjacency: which left vertices can push into right j
    into = [[] for _ in range(q)]
    for i in range(p):
        for j in lanes[i]:
            into[j].append(i)
    total = 0
    while True:
        # DFS over left vertices; parent[j] records the left vertex that reached right j
        parent_right = [-1] * q
        seen_left = [False] * p
        stack = [i for i in range(p) if left_rem[i] > 0]
        for i in stack:
            seen_left[i] = True
        parent_left = [-1] * p
        sink_at = -1
        while stack and sink_at < 0:
            i = stack.pop()
            for j in lanes[i]:
                if parent_right[j] >= 0:
                    continue
                parent_right[j] = i
                if right_rem[j] > 0:
                    sink_at = j
                    break
                for k in into[j]:
                    if not seen_left[k] and flow[k][j] > 0:
                        seen_left[k] = True
                        parent_left[k] = j
                        stack.append(k)
        if sink_at < 0:
            return total
        # walk back to find the bottleneck
        bottleneck = right_rem[sink_at]
        j = sink_at
        while True:
            i = parent_right[j]
            back = parent_left[i]
            if back < 0:
                bottleneck = min(bottleneck, left_rem[i])
                break
            bottleneck = min(bottleneck, flow[i][back])
            j = back
        j = sink_at
        right_rem[j] -= bottleneck
        while True:
            i = parent_right[j]
            flow[i][j] += bottleneck
            back = parent_left[i]
            if back < 0:
                left_rem[i] -= bottleneck
                break
            flow[i][back] -= bottleneck
            j = back
        total += bottleneck


def _lanes(h: BipartiteGraph) -> list[list[int]]:
    return [sorted(j - 1 for j in s) for s in h.left_neighbors()]


def contains_in_dilation(poly: RootPolytope, t: int, v: Sequence[int]) -> bool:
    h = poly.graph
    if len(v) != h.p + h.q:
        raise ValueError(f"vector has length {len(v)}, expected {h.p + h.q}")
    if any(a < 0 for a in v):
        raise ValueError(f"vector has negative entries: {list(v)}")
    a, b = v[: h.p], v[h.p :]
    if sum(a) != t or sum(b) != t:
        return False
    return _max_flow(a, b, _lanes(h)) == t


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, colexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for last in range(total + 1):
        for head in compositions(total - last, parts - 1):
            yield head + (last,)


def _check_guard(h: BipartiteGraph, t: int) -> None:
    pairs = binomial(t + h.p - 1, h.p - 1) * binomial(t + h.q - 1, h.q - 1)
    if pairs > MAX_PAIRS_PER_LEVEL:
        raise GuardExceeded(
            f"dilation t={t} needs {pairs} candidate points (p={h.p}, q={h.q}); "
            f"the oracle guard is {MAX_PAIRS_PER_LEVEL} per level"
        )


def _count_for_supplies(args) -> int:
    supplies, demands, lanes, t = args
    count = 0
    for a in supplies:
        for b in demands:
            if _max_flow(a, b, lanes) == t:
                count += 1
    return count


def lattice_point_count(poly: RootPolytope, t: int, workers: int = 1) -> int:
    """``|t * Q ∩ Z^{p+q}|`` by enumerating composition pairs."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t == 0:
        return 1
    h = poly.graph
    _check_guard(h, t)
    lanes = _lanes(h)
    supplies = list(compositions(t, h.p))
    demands = list(compositions(t, h.q))
    if workers <= 1 or len(supplies) * len(demands) < 20000:
        return _count_for_supplies((supplies, demands, lanes, t))
    chunk = max(1, len(supplies) // (4 * workers))
    jobs = [(supplies[k : k + chunk], demands, lanes, t) for k in range(0, len(supplies), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_for_supplies, jobs))


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free integer row reduction."""
    m = [list(r) for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        top = m[r]
        for k in range(r + 1, len(m)):
            if m[k][c]:
                a, b = top[c], m[k][c]
                row = [a * x - b * y for x, y in zip(m[k], top)]
                g = gcd(*row)
                m[k] = [x // g for x in row] if g > 1 else row
        r += 1
    return r


def dimension(poly: RootPolytope) -> int:
    verts = poly.vertices
    if not verts:
        raise ValueError("polytope has no vertices")
    v0 = verts[0]
    diffs = [[a - b for a, b in zip(v, v0)] for v in verts[1:]]
    return rank(diffs) if diffs else 0


def hstar_from_counts(counts: Sequence[int], d: int) -> IntPolynomial:
    """h*-coefficients from ``L(0..d)``: ``h_k = sum_i (-1)^i C(d+1, i) L(k-i)``."""
    if len(counts) < d + 1:
        raise ValueError(f"need L(0..{d}), got {len(counts)} values")
    return IntPolynomial(
        sum((-1) ** i * binomial(d + 1, i) * counts[k - i] for i in range(k + 1)) for k in range(d + 1)
    )


def ehrhart_counts(poly: RootPolytope, upto: int, workers: int = 1) -> list[int]:
    return [lattice_point_count(poly, t, workers) for t in range(upto + 1)]


def oracle_work(g: Graph) -> int:
    """Number of candidate points the oracle would test for ``g``."""
    h = bipartite_double(g)
    d = 2 * g.n - 2
    return sum(binomial(t + h.p - 1, h.p - 1) * binomial(t + h.q - 1, h.q - 1) for t in range(1, d + 1))


def hstar_via_ehrhart(g: Graph, workers: int | None = None) -> IntPolynomial:
    """h* of the PQ-type adjacency polytope of ``g`` from raw lattice-point counts."""
    if workers is None:
        workers = 1
    elif workers == 0:
        workers = os.cpu_count() or 1
    poly = RootPolytope(bipartite_double(g))
    d = dimension(poly)
    for t in range(1, d + 1):
        _check_guard(poly.graph, t)
    counts = ehrhart_counts(poly, max(d, 1), workers)
    h = hstar_from_counts(counts, d)
    if h[0] != 1:
        raise OracleError(f"h*_0 = {h[0]}, expected 1 (counts {counts})")
    if not h.is_nonnegative():
        raise OracleError(f"negative h*-coefficient in {h} (counts {counts})")
    if h[1] != counts[1] - (d + 1):
        raise OracleError(f"h*_1 = {h[1]} but L(1) - (d+1) = {counts[1] - d - 1}")
    return h
