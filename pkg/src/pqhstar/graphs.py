"""Simple graphs, bipartite graphs and the constructions built on them.

Vertices of a :class:`Graph` are the integers ``1..n``. A
:class:`BipartiteGraph` has left part ``1..p`` and right part ``1..q``;
an edge ``(i, j)`` always joins left vertex ``i`` to right vertex ``j``.
The natural order of the left labels is the order used for internal
activity, so relabeling the left part gives a different value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        for i, j in self.edges:
            if not i < j:
                raise GraphError(f"edge {(i, j)} is not stored as (smaller, larger)")
            if i < 1 or j > self.n:
                raise GraphError(f"edge {(i, j)} references a label outside 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        canon = set()
        for e in edges:
            i, j = e
            if i == j:
                raise GraphError(f"loop edge {i}-{j}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"edge {i}-{j} references a label outside 1..{n}")
            canon.add((min(i, j), max(i, j)))
        return cls(n, frozenset(canon))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabeled ``1..k`` in increasing label order."""
        keep = sorted(set(vertices))
        index = {v: k + 1 for k, v in enumerate(keep)}
        return Graph(
            len(keep),
            frozenset((index[i], index[j]) for i, j in self.edges if i in index and j in index),
        )

    def __repr__(self) -> str:
        body = ",".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"Graph(n={self.n}; {body})"


@dataclass(frozen=True)
class BipartiteGraph:
    p: int
    q: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise GraphError("part sizes must be nonnegative")
        for i, j in self.edges:
            if not (1 <= i <= self.p and 1 <= j <= self.q):
                raise GraphError(f"edge {(i, j)} does not cross the bipartition")

    @classmethod
    def from_edges(cls, p: int, q: int, edges: Iterable[Sequence[int]]) -> BipartiteGraph:
        return cls(p, q, frozenset((int(i), int(j)) for i, j in edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def left_neighbors(self) -> list[set[int]]:
        """``result[i-1]`` is the set of right neighbours of left vertex ``i``."""
        nbrs: list[set[int]] = [set() for _ in range(self.p)]
        for i, j in self.edges:
            nbrs[i - 1].add(j)
        return nbrs

    def left_masks(self) -> list[int]:
        """Neighbourhoods of the left vertices as bitmasks over the right part."""
        masks = [0] * self.p
        for i, j in self.edges:
            masks[i - 1] |= 1 << (j - 1)
        return masks

    def permute_left(self, order: Sequence[int]) -> BipartiteGraph:
        """Reorder the left part: new left vertex ``k+1`` is old vertex ``order[k]``."""
        if sorted(order) != list(range(1, self.p + 1)):
            raise GraphError(f"{list(order)} is not a permutation of 1..{self.p}")
        new_label = {old: k + 1 for k, old in enumerate(order)}
        return BipartiteGraph(self.p, self.q, frozenset((new_label[i], j) for i, j in self.edges))

    def swap_sides(self) -> BipartiteGraph:
        return BipartiteGraph(self.q, self.p, frozenset((j, i) for i, j in self.edges))

    def to_graph(self) -> Graph:
        """Forget the bipartition: left ``i`` -> ``i``, right ``j`` -> ``p + j``."""
        return Graph(self.p + self.q, frozenset((i, self.p + j) for i, j in self.edges))

    def __repr__(self) -> str:
        body = ",".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"BipartiteGraph(p={self.p}, q={self.q}; {body})"


# -- families ---------------------------------------------------------------


def complete(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def empty(n: int) -> Graph:
    return Graph(n, frozenset())


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def wheel(n: int) -> Graph:
    """``C_n + K_1``; the hub is vertex ``n + 1``."""
    if n < 3:
        raise GraphError(f"wheel needs n >= 3, got {n}")
    return join([cycle(n), complete(1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts:
        raise GraphError("complete multipartite graph needs at least one part")
    if any(m < 1 for m in parts):
        raise GraphError(f"part sizes must be positive, got {list(parts)}")
    return join([empty(m) for m in parts])


def join(parts: Sequence[Graph]) -> Graph:
    """Disjoint union of ``parts`` plus every edge between distinct parts.

    Part ``k`` is shifted to occupy the ``k``-th consecutive label block.
    """
    if not parts:
        raise GraphError("join of an empty list of graphs")
    edges: set[Edge] = set()
    blocks: list[range] = []
    offset = 0
    for g in parts:
        edges.update((i + offset, j + offset) for i, j in g.edges)
        blocks.append(range(offset + 1, offset + g.n + 1))
        offset += g.n
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            edges.update((i, j) for i in blocks[a] for j in blocks[b])
    return Graph(offset, frozenset(edges))


# -- bipartite constructions -------------------------------------------------


def bipartite_double(g: Graph) -> BipartiteGraph:
    """The bipartite double: left ``1..n``, right ``1..n`` (the barred copies)."""
    edges = {(i, i) for i in g.vertices}
    for i, j in g.edges:
        edges.add((i, j))
        edges.add((j, i))
    return BipartiteGraph(g.n, g.n, frozenset(edges))


def tilde(h: BipartiteGraph) -> BipartiteGraph:
    """Add ``u`` (right vertex ``q+1``) adjacent to every left vertex and
    ``w`` (left vertex ``p+1``) adjacent to every right vertex including ``u``.
    """
    u, w = h.q + 1, h.p + 1
    edges = set(h.edges)
    edges.update((i, u) for i in range(1, h.p + 1))
    edges.update((w, j) for j in range(1, h.q + 2))
    return BipartiteGraph(h.p + 1, h.q + 1, frozenset(edges))


def neighborhood(h: BipartiteGraph, subset: Iterable[int]) -> frozenset[int]:
    subset = set(subset)
    bad = [v for v in subset if not 1 <= v <= h.p]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} are not in the left part 1..{h.p}")
    return frozenset(j for i, j in h.edges if i in subset)


def is_connected(g: Graph | BipartiteGraph) -> bool:
    if isinstance(g, BipartiteGraph):
        g = g.to_graph()
    if g.n <= 1:
        return True
    adj = g.adjacency()
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """A 2-colouring ``(left, right)`` of ``g``, or None if ``g`` has an odd cycle."""
    adj = g.adjacency()
    colour: dict[int, int] = {}
    for start in g.vertices:
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    left = [v for v in g.vertices if colour[v] == 0]
    right = [v for v in g.vertices if colour[v] == 1]
    return left, right
