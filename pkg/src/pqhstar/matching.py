"""Matchings, perfectly matchable sets, and the PMS polytope.

Bipartite inputs get an augmenting-path perfect-matching test.  Other
graphs fall back to exhaustive search, capped at :data:`MAX_GENERAL_VERTICES`.
Enumerating perfectly matchable sets walks all ``2**n`` vertex subsets and
is capped at :data:`MAX_PMS_VERTICES`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence, Union

from .graphs import BipartiteGraph, Graph, bipartition
from .interior import GuardExceeded
from .poly import IntPolynomial

MAX_GENERAL_VERTICES = 20
MAX_PMS_VERTICES = 24

AnyGraph = Union[Graph, BipartiteGraph]


@dataclass(frozen=True)
class MatchableSet:
    vertices: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.vertices) // 2


def _as_graph(g: AnyGraph) -> tuple[Graph, tuple[list[int], list[int]] | None]:
    if isinstance(g, BipartiteGraph):
        return g.to_graph(), (list(range(1, g.p + 1)), list(range(g.p + 1, g.p + g.q + 1)))
    return g, bipartition(g)


def matching_generating_polynomial(g: AnyGraph) -> IntPolynomial:
    """``sum_k m_k x**k`` where ``m_k`` counts matchings with ``k`` edges."""
    g, _ = _as_graph(g)
    edges = [((1 << (i - 1)) | (1 << (j - 1))) for i, j in g.sorted_edges()]
    counts = [0] * (g.n // 2 + 1)

    # include/exclude each edge in turn; ``used`` is the covered-vertex mask
    def walk(k: int, used: int, size: int) -> None:
        if k == len(edges):
            counts[size] += 1
            return
        e = edges[k]
        if not used & e:
            walk(k + 1, used | e, size + 1)
        walk(k + 1, used, size)

    walk(0, 0, 0)
    return IntPolynomial(counts)


def _bipartite_perfect(adj: dict[int, set[int]], left: list[int], right: list[int]) -> bool:
    if len(left) != len(right):
        return False
    match: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match or augment(match[v], seen):
                match[v] = u
                return True
        return False

    return all(augment(u, set()) for u in left)


def _exhaustive_perfect(adj: dict[int, set[int]], vertices: frozenset[int]) -> bool:
    if not vertices:
        return True
    v = min(vertices)
    rest = vertices - {v}
    return any(_exhaustive_perfect(adj, rest - {w}) for w in adj[v] if w in rest)


def has_perfect_matching(g: AnyGraph) -> bool:
    g, parts = _as_graph(g)
    if g.n % 2:
        return False
    adj = g.adjacency()
    if parts is not None:
        return _bipartite_perfect(adj, *parts)
    if g.n > MAX_GENERAL_VERTICES:
        raise GuardExceeded(
            f"non-bipartite graph with {g.n} vertices; exhaustive matching guard is n <= {MAX_GENERAL_VERTICES}"
        )
    return _exhaustive_perfect(adj, frozenset(g.vertices))


def perfectly_matchable_sets(g: AnyGraph) -> list[list[MatchableSet]]:
    """``result[k]`` lists the matchable sets of size ``2k``; ``result[0] == [∅]``.

    Labels refer to :meth:`BipartiteGraph.to_graph` for bipartite input.
    """
    g, parts = _as_graph(g)
    if g.n > MAX_PMS_VERTICES:
        raise GuardExceeded(f"graph has {g.n} vertices; subset enumeration guard is n <= {MAX_PMS_VERTICES}")
    if parts is None and g.n > MAX_GENERAL_VERTICES:
        raise GuardExceeded(
            f"non-bipartite graph with {g.n} vertices; exhaustive matching guard is n <= {MAX_GENERAL_VERTICES}"
        )
    adj = g.adjacency()
    side = {}
    if parts is not None:
        side = {v: 0 for v in parts[0]} | {v: 1 for v in parts[1]}
    out: list[list[MatchableSet]] = [[MatchableSet(frozenset())]]
    for k in range(1, g.n // 2 + 1):
        level = []
        for subset in combinations(g.vertices, 2 * k):
            members = frozenset(subset)
            if parts is not None:
                left = [v for v in subset if side[v] == 0]
                if len(left) != k:
                    continue
                sub_adj = {v: adj[v] & members for v in subset}
                ok = _bipartite_perfect(sub_adj, left, [v for v in subset if side[v] == 1])
            else:
                ok = _exhaustive_perfect({v: adj[v] & members for v in subset}, members)
            if ok:
                level.append(MatchableSet(members))
        out.append(level)
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


def pms_polynomial(g: AnyGraph) -> IntPolynomial:
    return IntPolynomial(len(level) for level in perfectly_matchable_sets(g))


def indicator(h: BipartiteGraph, s: MatchableSet) -> list[int]:
    """0/1 vector of ``s`` in the coordinates ``(left 1..p | right 1..q)``."""
    return [1 if v in s.vertices else 0 for v in range(1, h.p + h.q + 1)]


def pms_polytope_contains(h: BipartiteGraph, x: Sequence[Union[int, Fraction, str]]) -> bool:
    """Membership in the PMS polytope via its Hall-type inequalities.

    ``x`` lists the left coordinates then the right ones.  Entries are
    scaled to a common denominator and compared as integers.
    """
    if len(x) != h.p + h.q:
        raise ValueError(f"vector has length {len(x)}, expected {h.p + h.q}")
    fr = [Fraction(v) for v in x]
    den = lcm(*(v.denominator for v in fr)) if fr else 1
    ints = [v.numerator * (den // v.denominator) for v in fr]
    if any(v < 0 or v > den for v in ints):
        return False
    left, right = ints[: h.p], ints[h.p :]
    if sum(left) != sum(right):
        return False
    masks = h.left_masks()
    for size in range(1, h.p + 1):
        for subset in combinations(range(h.p), size):
            nb = 0
            for i in subset:
                nb |= masks[i]
            rhs = sum(right[j] for j in range(h.q) if nb >> j & 1)
            if sum(left[i] for i in subset) > rhs:
                return False
    return True
