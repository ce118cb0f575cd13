"""Parser for the compact graph notation used on the command line.

Graphs::

    K4  E3  C5  W6  P4          complete, empty, cycle, wheel, path
    KP:2,2,3                    complete multipartite
    J:(C4,K1)                   join, parts in order
    cone:C4                     shorthand for J:(C4,K1)
    EL:n=5;1-2,2-3,3-4,4-5,1-5  explicit edge list

Bipartite graphs::

    D:<graph>                   bipartite double
    T:<bipartite>               add the two cone vertices
    EL2:p=2,q=3;1-1,1-2,2-3     explicit left-right edge list
    <graph>                     any bipartite graph, 2-coloured from vertex 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import graphs as gr
from .graphs import BipartiteGraph, Graph, GraphError


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class GraphSpec:
    text: str
    kind: str
    graph: Graph
    parts: tuple[GraphSpec, ...] = field(default=(), repr=False)
    sizes: tuple[int, ...] = ()

    def cone_base(self) -> Graph | None:
        """``G`` when this spec is written as ``G + K_1``, else None."""
        if self.kind == "wheel":
            return gr.cycle(self.graph.n - 1)
        if self.kind in ("join", "cone") and len(self.parts) >= 2 and self.parts[-1].graph.n == 1:
            return gr.join([p.graph for p in self.parts[:-1]])
        return None


_FAMILY = re.compile(r"^(K|E|C|W|P)(\d+)$")
_EDGE = re.compile(r"^(\d+)-(\d+)$")


def _split_top(text: str, whole: str) -> list[str]:
    items, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced ')' in {whole!r}")
        elif ch == "," and depth == 0:
            items.append(text[start:k])
            start = k + 1
    if depth:
        raise SpecError(f"unbalanced '(' in {whole!r}")
    items.append(text[start:])
    return items


def _int(token: str, whole: str) -> int:
    if not token.isdigit():
        raise SpecError(f"bad integer {token!r} in {whole!r}")
    return int(token)


def _edge_list(body: str, whole: str) -> list[tuple[int, int]]:
    edges = []
    for tok in body.split(",") if body else []:
        m = _EDGE.match(tok)
        if not m:
            raise SpecError(f"bad edge {tok!r} in {whole!r}")
        edges.append((int(m.group(1)), int(m.group(2))))
    return edges


def parse_graph(text: str) -> GraphSpec:
    text = text.strip()
    if not text or any(ch.isspace() for ch in text):
        raise SpecError(f"graph spec must be a non-empty whitespace-free token, got {text!r}")
    return _parse_graph(text, text)


def _parse_graph(text: str, whole: str) -> GraphSpec:
    try:
        m = _FAMILY.match(text)
        if m:
            letter, n = m.group(1), int(m.group(2))
            kind, build = {
                "K": ("complete", gr.complete),
                "E": ("empty", gr.empty),
                "C": ("cycle", gr.cycle),
                "W": ("wheel", gr.wheel),
                "P": ("path", gr.path),
            }[letter]
            return GraphSpec(text, kind, build(n))
        if text.startswith("KP:"):
            sizes = tuple(_int(tok, whole) for tok in text[3:].split(","))
            return GraphSpec(text, "multipartite", gr.complete_multipartite(sizes), sizes=sizes)
        if text.startswith("J:"):
            body = text[2:]
            if not (body.startswith("(") and body.endswith(")")):
                raise SpecError(f"join needs parenthesised parts, got {text!r} in {whole!r}")
            inner = body[1:-1]
            if not inner:
                raise SpecError(f"empty join {text!r} in {whole!r}")
            parts = tuple(_parse_graph(tok, whole) for tok in _split_top(inner, whole))
            return GraphSpec(text, "join", gr.join([p.graph for p in parts]), parts=parts)
        if text.startswith("cone:"):
            base = _parse_graph(text[5:], whole)
            k1 = GraphSpec("K1", "complete", gr.complete(1))
            return GraphSpec(text, "cone", gr.join([base.graph, k1.graph]), parts=(base, k1))
        if text.startswith("EL:"):
            head, _, body = text[3:].partition(";")
            if not head.startswith("n="):
                raise SpecError(f"edge list must start with 'n=', got {head!r} in {whole!r}")
            n = _int(head[2:], whole)
            return GraphSpec(text, "edges", Graph.from_edges(n, _edge_list(body, whole)))
    except GraphError as exc:
        raise SpecError(f"{exc} (in {text!r})") from exc
    raise SpecError(f"unrecognised token {text!r} in {whole!r}")


def parse_bipartite(text: str) -> BipartiteGraph:
    text = text.strip()
    if not text or any(ch.isspace() for ch in text):
        raise SpecError(f"bipartite spec must be a non-empty whitespace-free token, got {text!r}")
    return _parse_bipartite(text, text)


def _parse_bipartite(text: str, whole: str) -> BipartiteGraph:
    if text.startswith("D:"):
        return gr.bipartite_double(_parse_graph(text[2:], whole).graph)
    if text.startswith("T:"):
        return gr.tilde(_parse_bipartite(text[2:], whole))
    if text.startswith("EL2:"):
        head, _, body = text[4:].partition(";")
        m = re.match(r"^p=(\d+),q=(\d+)$", head)
        if not m:
            raise SpecError(f"bipartite edge list must start with 'p=..,q=..', got {head!r} in {whole!r}")
        p, q = int(m.group(1)), int(m.group(2))
        try:
            return BipartiteGraph.from_edges(p, q, _edge_list(body, whole))
        except GraphError as exc:
            raise SpecError(f"{exc} (in {whole!r})") from exc
    g = _parse_graph(text, whole).graph
    sides = gr.bipartition(g)
    if sides is None:
        raise SpecError(f"{text!r} is not bipartite")
    left, right = sides
    li = {v: k + 1 for k, v in enumerate(left)}
    ri = {v: k + 1 for k, v in enumerate(right)}
    edges = [(li[i], ri[j]) if i in li else (li[j], ri[i]) for i, j in g.edges]
    return BipartiteGraph.from_edges(len(left), len(right), edges)
