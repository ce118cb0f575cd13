"""Hypertrees and interior polynomials of connected bipartite graphs.

A hypertree is a vector ``f`` indexed by the left part with
``sum(f) == q - 1`` and, for every nonempty left subset ``S``,
``sum(f[S]) <= |N(S)| - 1``.  Internal inactivity is measured against the
natural order of the left labels.

Subset conditions are checked by brute force over all ``2**p`` left
subsets, so ``p`` is capped at :data:`MAX_LEFT`.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .graphs import BipartiteGraph, is_connected
from .poly import IntPolynomial

MAX_LEFT = 22

Hypertree = tuple[int, ...]


class DisconnectedError(ValueError):
    """The bipartite graph is not connected."""


class GuardExceeded(RuntimeError):
    """An enumeration would exceed a documented size limit."""


def _check_input(h: BipartiteGraph) -> None:
    if not is_connected(h):
        raise DisconnectedError(f"bipartite graph is disconnected: {h!r}")
    if h.p > MAX_LEFT:
        raise GuardExceeded(f"left part has {h.p} vertices; the subset guard is p <= {MAX_LEFT}")


def _capacities(h: BipartiteGraph) -> list[int]:
    """``cap[mask] = |N(mask)| - 1`` for every left subset ``mask``."""
    masks = h.left_masks()
    gamma = [0] * (1 << h.p)
    for mask in range(1, 1 << h.p):
        low = mask & -mask
        gamma[mask] = gamma[mask ^ low] | masks[low.bit_length() - 1]
    return [bin(g).count("1") - 1 for g in gamma]


def _satisfies_subset_bounds(f: Sequence[int], cap: list[int]) -> bool:
    p = len(f)
    sums = [0] * (1 << p)
    for mask in range(1, 1 << p):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + f[low.bit_length() - 1]
        if sums[mask] > cap[mask]:
            return False
    return True


def is_hypertree(h: BipartiteGraph, f: Sequence[int]) -> bool:
    _check_input(h)
    if len(f) != h.p:
        raise ValueError(f"vector has length {len(f)}, left part has {h.p} vertices")
    if any(a < 0 for a in f):
        raise ValueError(f"vector has negative entries: {list(f)}")
    if sum(f) != h.q - 1:
        return False
    return _satisfies_subset_bounds(f, _capacities(h))


def hypertrees(h: BipartiteGraph) -> list[Hypertree]:
    """All hypertrees of ``h`` in lexicographic order.

    Depth-first over ``f(v_1), f(v_2), ...``.  When ``v_j`` is assigned, every
    subset bound involving only ``v_1..v_j`` is already decidable, which gives
    the largest admissible value for ``f(v_j)`` directly.
    """
    _check_input(h)
    cap = _capacities(h)
    p, total = h.p, h.q - 1
    out: list[Hypertree] = []
    f: list[int] = []

    def extend(j: int, sums: list[int], used: int) -> None:
        if j == p:
            if used == total:
                out.append(tuple(f))
            return
        bit = 1 << j
        # new subsets are old subsets plus v_{j+1}; sums[0] = 0 covers {v_{j+1}} alone
        hi = min(cap[m | bit] - s for m, s in enumerate(sums))
        hi = min(hi, total - used)
        if j == p - 1:
            lo = total - used
            if lo > hi:
                return
            choices = range(lo, lo + 1)
        else:
            choices = range(hi + 1)
        for a in choices:
            f.append(a)
            extend(j + 1, sums + [s + a for s in sums], used + a)
            f.pop()

    if p == 0:
        return [()] if total == 0 else []
    extend(0, [0], 0)
    return out


def internal_inactivity(
    h: BipartiteGraph, f: Sequence[int], known: set[Hypertree] | None = None
) -> int:
    """Number of positions ``j`` from which one unit can move to some earlier
    position with the result still a hypertree.

    ``known`` may hold the full hypertree set to replace the subset check by
    a lookup; the two are equivalent because the transfer preserves the sum.
    """
    f = tuple(f)
    if known is None:
        if not is_hypertree(h, f):
            raise ValueError(f"{list(f)} is not a hypertree of {h!r}")
        cap = _capacities(h)

        def ok(g):
            return _satisfies_subset_bounds(g, cap)
    else:
        if f not in known:
            raise ValueError(f"{list(f)} is not a hypertree of {h!r}")
        ok = known.__contains__

    count = 0
    for j in range(1, len(f)):
        if f[j] == 0:
            continue
        for jj in range(j):
            g = list(f)
            g[jj] += 1
            g[j] -= 1
            if ok(tuple(g)):
                count += 1
                break
    return count


def interior_polynomial(h: BipartiteGraph) -> IntPolynomial:
    trees = hypertrees(h)
    known = set(trees)
    coeffs = [0] * max(1, h.p)
    for f in trees:
        coeffs[internal_inactivity(h, f, known)] += 1
    return IntPolynomial(coeffs)


# -- spanning-tree oracle ----------------------------------------------------


def spanning_trees(h: BipartiteGraph) -> Iterator[frozenset[tuple[int, int]]]:
    """Every spanning tree of ``h`` as a set of edges (include/exclude search).

    Exponential; meant for small oracle checks only.
    """
    if not is_connected(h):
        raise DisconnectedError(f"bipartite graph is disconnected: {h!r}")
    edges = h.sorted_edges()
    nv = h.p + h.q
    # right vertex j lives at index p + j - 1
    def node(side: int, v: int) -> int:
        return v - 1 if side == 0 else h.p + v - 1

    def find(parent: list[int], a: int) -> int:
        while parent[a] != a:
            a = parent[a]
        return a

    chosen: list[tuple[int, int]] = []

    def search(k: int, parent: list[int], components: int) -> Iterator[frozenset]:
        if components == 1:
            yield frozenset(chosen)
            return
        if len(edges) - k < components - 1:
            return
        i, j = edges[k]
        a, b = find(parent, node(0, i)), find(parent, node(1, j))
        if a != b:
            merged = parent.copy()
            merged[a] = b
            chosen.append((i, j))
            yield from search(k + 1, merged, components - 1)
            chosen.pop()
        yield from search(k + 1, parent, components)

    if nv == 0:
        return
    yield from search(0, list(range(nv)), nv)


def _degree_vector(h: BipartiteGraph, tree: frozenset) -> Hypertree:
    deg = [0] * h.p
    for i, _ in tree:
        deg[i - 1] += 1
    return tuple(d - 1 for d in deg)


def _has_tree_with_left_degrees(h: BipartiteGraph, degrees: Sequence[int]) -> bool:
    """Is there a spanning tree where left vertex ``i`` has degree ``degrees[i-1]``?

    The left vertices are attached one at a time.  Their chosen neighbours
    must sit in pairwise distinct components of the forest built so far,
    otherwise a cycle closes.  With ``p + q - 1`` edges in total, an acyclic
    choice is a spanning tree.
    """
    nbrs = [sorted(s) for s in h.left_neighbors()]
    # union-find over right vertices only; left vertices merge what they touch
    def attach(i: int, comp: tuple[int, ...]) -> bool:
        if i == h.p:
            return True
        k = degrees[i]
        for pick in combinations(nbrs[i], k):
            labels = {comp[j - 1] for j in pick}
            if len(labels) < k:
                continue
            target = min(labels)
            new = tuple(target if c in labels else c for c in comp)
            if attach(i + 1, new):
                return True
        return False

    return attach(0, tuple(range(h.q)))


def _compositions(total: int, parts: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for a in range(min(total, bounds[0]) + 1):
        for rest in _compositions(total - a, parts - 1, bounds[1:]):
            yield (a,) + rest


def hypertrees_via_spanning_trees(h: BipartiteGraph, exhaustive: bool = False) -> list[Hypertree]:
    """Left degree vectors (minus one) realised by spanning trees of ``h``.

    With ``exhaustive=True`` every spanning tree is listed and the vectors are
    deduplicated.  The default asks, for each candidate vector, whether a
    spanning tree with those left degrees exists; it yields the same set
    without walking every tree, which matters once trees number in the
    millions.
    """
    if not is_connected(h):
        raise DisconnectedError(f"bipartite graph is disconnected: {h!r}")
    if exhaustive:
        return sorted({_degree_vector(h, t) for t in spanning_trees(h)})
    if h.p == 0:
        return [()] if h.q <= 1 else []
    bounds = [len(s) - 1 for s in h.left_neighbors()]
    found = []
    for f in _compositions(h.q - 1, h.p, bounds):
        if _has_tree_with_left_degrees(h, [a + 1 for a in f]):
            found.append(f)
    return found
