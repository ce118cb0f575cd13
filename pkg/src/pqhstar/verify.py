"""Named corpora and identity checks behind ``pqhstar verify``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from . import graphs as gr
from .closed_forms import f_poly, hstar_complete_multipartite, hstar_pq_join, hstar_wheel
from .ehrhart import hstar_via_ehrhart
from .graphs import Graph, bipartite_double
from .interior import interior_polynomial
from .matching import matching_generating_polynomial, pms_polynomial
from .poly import IntPolynomial, binomial, narayana_square_poly
from .specs import parse_graph

# connected graphs on at most four vertices, one per isomorphism class
CONNECTED_SMALL: dict[str, Graph] = {
    "K1": gr.complete(1),
    "K2": gr.complete(2),
    "P3": gr.path(3),
    "K3": gr.complete(3),
    "P4": gr.path(4),
    "K1,3": gr.complete_multipartite([1, 3]),
    "C4": gr.cycle(4),
    "paw": Graph.from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4)]),
    "K4-e": Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]),
    "K4": gr.complete(4),
}

STRETCH: dict[str, Graph] = {
    "C5": gr.cycle(5),
    "K2,3": gr.complete_multipartite([2, 3]),
}

JOIN_SPECS = [
    "J:(E1,E3)",
    "J:(K2,K3)",
    "J:(E2,E3)",
    "J:(E2,E2)",
    "J:(C3,E2)",
    "J:(C4,K1)",
    "J:(P3,E2)",
    "J:(P4,K2)",
    "J:(C4,E3)",
    "J:(C5,K2)",
    "J:(E3,E4)",
    "J:(E1,E1,E1)",
    "J:(E2,E2,E2)",
    "J:(K2,P3,E1)",
    "J:(C3,E2,K1)",
    "J:(P3,C3,E1)",
    "J:(P4,E2,K1)",
]

# graphs G for which cone(G) is checked against the PMS polynomial of D(G)
CONE_BASES: dict[str, Graph] = {
    "C3": gr.cycle(3),
    "C4": gr.cycle(4),
    "C5": gr.cycle(5),
    "P4": gr.path(4),
    "K1,3": gr.complete_multipartite([1, 3]),
    "K4-e": CONNECTED_SMALL["K4-e"],
}


@dataclass(frozen=True)
class Row:
    suite: str
    case: str
    ok: bool
    detail: str = ""


def labeled_trees(n: int) -> Iterator[Graph]:
    """All labeled trees on ``1..n`` via Prüfer sequences."""
    if n == 1:
        yield gr.empty(1)
        return
    if n == 2:
        yield gr.complete(2)
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        degree = [1] * (n + 1)
        for v in seq:
            degree[v] += 1
        edges = []
        for v in seq:
            leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
            edges.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = [x for x in range(1, n + 1) if degree[x] == 1]
        edges.append((u, w))
        yield Graph.from_edges(n, edges)


def _eq(a: IntPolynomial, b: IntPolynomial) -> str:
    if a == b:
        return ""
    k = next(k for k in range(max(len(a), len(b))) if a[k] != b[k])
    return f"differ at x^{k}: {a} vs {b}"


def check_wheels(max_n: int = 8, structural_max: int = 6, oracle_max: int = 4) -> list[Row]:
    rows = []
    for n in range(3, max_n + 1):
        h = hstar_wheel(n)
        problems = []
        if h(1) != 3**n - 2**n + 1:
            problems.append(f"volume {h(1)} != {3**n - 2**n + 1}")
        checked = ["volume"]
        if n <= structural_max:
            checked += ["pms", "interior"]
            for label, other in (
                ("pms", pms_polynomial(bipartite_double(gr.cycle(n)))),
                ("interior", interior_polynomial(bipartite_double(gr.wheel(n)))),
            ):
                msg = _eq(h, other)
                if msg:
                    problems.append(f"{label}: {msg}")
        if n <= oracle_max:
            checked.append("oracle")
            msg = _eq(h, hstar_via_ehrhart(gr.wheel(n)))
            if msg:
                problems.append(f"oracle: {msg}")
        rows.append(Row("wheels", f"W{n}", not problems, "; ".join(problems) or ",".join(checked)))
    return rows


def check_joins(max_m: int = 7) -> list[Row]:
    rows = []
    for text in JOIN_SPECS:
        spec = parse_graph(text)
        if spec.graph.n > max_m:
            continue
        formula = hstar_pq_join([p.graph for p in spec.parts])
        msg = _eq(formula, interior_polynomial(bipartite_double(spec.graph)))
        rows.append(Row("joins", text, not msg, msg))
    return rows


def check_oracle(max_n: int = 4) -> list[Row]:
    corpus = {k: g for k, g in CONNECTED_SMALL.items() if g.n <= max_n}
    corpus |= {k: g for k, g in STRETCH.items() if g.n <= max_n}
    rows = []
    for name, g in corpus.items():
        msg = _eq(hstar_via_ehrhart(g), interior_polynomial(bipartite_double(g)))
        rows.append(Row("oracle", name, not msg, msg))
    return rows


def check_complete(max_m: int = 6) -> list[Row]:
    rows = []
    for m in range(2, max_m + 1):
        msg = _eq(interior_polynomial(bipartite_double(gr.complete(m))), narayana_square_poly(m))
        rows.append(Row("complete", f"K{m}", not msg, msg))
    return rows


def k2_closed_form(n: int) -> IntPolynomial:
    x1 = IntPolynomial([1, 1])
    x = IntPolynomial.x()
    return x1 ** (n - 1) + (n - 2) * IntPolynomial([2, n - 1]) * x * x1 ** (n - 4) - 2 * x


def check_multipartite(max_n: int = 9) -> list[Row]:
    rows = []
    for n in range(5, max_n + 1):
        msg = _eq(hstar_complete_multipartite([2, n - 2]), k2_closed_form(n))
        rows.append(Row("multipartite", f"K2,{n - 2}", not msg, msg))
    for m in range(1, max_n + 1):
        v = hstar_complete_multipartite([1, m])(1)
        rows.append(Row("multipartite", f"K1,{m}", v == 2**m, f"volume {v}"))
    return rows


FPOLY_TABLE: list[tuple[str, Callable[[int, int], bool]]] = [
    ("f(1,m)=2^m", lambda l, m: l != 1 or f_poly(1, m)(1) == 2**m),
    ("f(2,m)", lambda l, m: l != 2 or 4 * f_poly(2, m)(1) == 2**m * (m * m + 3 * m + 8)),
    ("f(l,1)", lambda l, m: m != 1 or f_poly(l, 1)(1) == binomial(2 * l, l)),
    ("f(l,2)", lambda l, m: m != 2 or f_poly(l, 2)(1) == binomial(2 * (l + 1), l + 1) - 2),
    ("f(l,3)", lambda l, m: m != 3 or f_poly(l, 3)(1) == binomial(2 * (l + 2), l + 2) - (6 * l + 6)),
    (
        "f(l,4)",
        lambda l, m: m != 4 or f_poly(l, 4)(1) == binomial(2 * (l + 3), l + 3) - (10 * l * l + 24 * l + 20),
    ),
]


def check_fpoly(max_lm: int = 8) -> list[Row]:
    rows = []
    for name, pred in FPOLY_TABLE:
        bad = [(l, m) for l in range(1, max_lm + 1) for m in range(1, max_lm + 1) if not pred(l, m)]
        rows.append(Row("fpoly", name, not bad, f"fails at {bad}" if bad else ""))
    return rows


def check_matching(max_tree: int = 6) -> list[Row]:
    rows = []
    c4 = gr.cycle(4)
    rows.append(Row("matching", "g(C4)", matching_generating_polynomial(c4) == IntPolynomial([1, 4, 2])))
    rows.append(Row("matching", "p(C4)", pms_polynomial(c4) == IntPolynomial([1, 4, 1])))
    for n in range(1, max_tree + 1):
        bad = [t for t in labeled_trees(n) if pms_polynomial(t) != matching_generating_polynomial(t)]
        rows.append(Row("matching", f"trees n={n}", not bad, repr(bad[0]) if bad else ""))
    for name, g in CONE_BASES.items():
        msg = _eq(interior_polynomial(bipartite_double(gr.join([g, gr.complete(1)]))), pms_polynomial(bipartite_double(g)))
        rows.append(Row("matching", f"cone {name}", not msg, msg))
    return rows


SUITES = ("wheels", "joins", "oracle", "complete", "multipartite", "fpoly", "matching")


def run(selector: str, max_n: int | None = None, max_m: int | None = None) -> list[Row]:
    if selector == "all":
        return [r for s in SUITES for r in run(s, max_n, max_m)]
    if selector == "wheels":
        return check_wheels(max_n or 8)
    if selector == "joins":
        return check_joins(max_m or 7)
    if selector == "oracle":
        return check_oracle(max_n or 4)
    if selector == "complete":
        return check_complete(max_m or 6)
    if selector == "multipartite":
        return check_multipartite(max_n or 9)
    if selector == "fpoly":
        return check_fpoly(max_m or 8)
    if selector == "matching":
        return check_matching(max_n or 6)
    raise ValueError(f"unknown corpus {selector!r}; choose from {', '.join(SUITES + ('all',))}")
