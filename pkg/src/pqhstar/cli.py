"""Command-line entry point: ``pqhstar hstar|interior|verify``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Callable

from .closed_forms import ConsistencyError, hstar_complete_multipartite, hstar_pq_join, hstar_wheel
from .ehrhart import OracleError, RootPolytope, dimension, hstar_via_ehrhart, oracle_work
from .graphs import bipartite_double, is_connected
from .interior import GuardExceeded, hypertrees, interior_polynomial
from .matching import pms_polynomial
from .poly import IntPolynomial
from .specs import GraphSpec, parse_bipartite, parse_graph
from . import verify

METHODS = ("interior", "pms", "formula", "oracle")

# ``--method all`` only runs the oracle when it tests at most this many points
ALL_MODE_ORACLE_BUDGET = 10**6


class CliError(Exception):
    """Reported as a one-line ``error:`` diagnostic."""


@dataclass
class Report:
    spec: str
    methods: list[str]
    hstar: IntPolynomial
    dimension: int
    agreement: bool = True
    timing: dict[str, float] = field(default_factory=dict)
    mismatch: tuple[str, str, int] | None = None
    hypertrees: int | None = None

    def to_dict(self, with_timing: bool) -> dict:
        out = {
            "spec": self.spec,
            "methods": self.methods,
            "hstar": self.hstar.to_strings(),
            "volume": str(self.hstar(1)),
            "dimension": self.dimension,
            "agreement": self.agreement,
        }
        if self.hypertrees is not None:
            out["hypertrees"] = str(self.hypertrees)
        if self.mismatch:
            a, b, k = self.mismatch
            out["mismatch"] = {"methods": [a, b], "index": k}
        if with_timing:
            out["timing"] = {k: round(v, 6) for k, v in self.timing.items()}
        return out

    def to_text(self, with_timing: bool) -> str:
        lines = [
            f"spec:      {self.spec}",
            f"methods:   {', '.join(self.methods)}",
            f"h*:        {self.hstar}",
            f"volume:    {self.hstar(1)}",
            f"dimension: {self.dimension}",
        ]
        if self.hypertrees is not None:
            lines.append(f"hypertrees: {self.hypertrees}")
        lines.append(f"agreement: {'yes' if self.agreement else 'NO'}")
        if with_timing:
            lines += [f"time[{k}]: {v:.3f}s" for k, v in self.timing.items()]
        return "\n".join(lines)


def _method_table(spec: GraphSpec, threads: int) -> dict[str, Callable[[], IntPolynomial] | str]:
    """Each method mapped to a thunk, or to the reason it does not apply."""
    g = spec.graph
    table: dict[str, Callable[[], IntPolynomial] | str] = {}

    if is_connected(g):
        table["interior"] = lambda: interior_polynomial(bipartite_double(g))
    else:
        table["interior"] = f"D(G) is disconnected for {spec.text}"

    base = spec.cone_base()
    if base is not None:
        table["pms"] = lambda: pms_polynomial(bipartite_double(base))
    else:
        table["pms"] = f"{spec.text} is not written as G+K1 (use cone:<G>, J:(...,K1) or Wn)"

    if spec.kind == "multipartite" and len(spec.sizes) >= 2:
        table["formula"] = lambda: hstar_complete_multipartite(spec.sizes)
    elif spec.kind == "wheel":
        table["formula"] = lambda: hstar_wheel(g.n - 1)
    elif spec.kind in ("join", "cone") and len(spec.parts) >= 2:
        table["formula"] = lambda: hstar_pq_join([p.graph for p in spec.parts])
    else:
        table["formula"] = f"no closed form for {spec.text} (needs KP:, W or a join of >= 2 parts)"

    table["oracle"] = lambda: hstar_via_ehrhart(g, workers=threads)
    return table


def compute_hstar(text: str, method: str, threads: int = 1) -> Report:
    spec = parse_graph(text)
    table = _method_table(spec, threads)
    if method == "all":
        chosen = [m for m in METHODS if callable(table[m])]
        if "oracle" in chosen and oracle_work(spec.graph) > ALL_MODE_ORACLE_BUDGET:
            chosen.remove("oracle")
    else:
        if method not in table:
            raise CliError(f"unknown method {method!r}")
        if not callable(table[method]):
            raise CliError(f"method {method} not applicable: {table[method]}")
        chosen = [method]
    if not chosen:
        raise CliError(f"no method applies to {text}")

    results: dict[str, IntPolynomial] = {}
    timing: dict[str, float] = {}
    for m in chosen:
        start = time.perf_counter()
        results[m] = table[m]()
        timing[m] = time.perf_counter() - start

    first = results[chosen[0]]
    report = Report(
        spec=text,
        methods=chosen,
        hstar=first,
        dimension=dimension(RootPolytope(bipartite_double(spec.graph))),
        timing=timing,
    )
    for m in chosen[1:]:
        if results[m] != first:
            other = results[m]
            k = next(k for k in range(max(len(first), len(other))) if first[k] != other[k])
            report.agreement = False
            report.mismatch = (chosen[0], m, k)
            break
    return report


def compute_interior(text: str) -> Report:
    h = parse_bipartite(text)
    start = time.perf_counter()
    trees = hypertrees(h)
    poly = interior_polynomial(h)
    elapsed = time.perf_counter() - start
    return Report(
        spec=text,
        methods=["interior"],
        hstar=poly,
        dimension=dimension(RootPolytope(h)),
        timing={"interior": elapsed},
        hypertrees=len(trees),
    )


def _emit(report: Report, args, batch: bool) -> None:
    if args.json:
        doc = report.to_dict(args.time)
        print(json.dumps(doc, separators=(",", ":")) if batch else json.dumps(doc, indent=2))
    else:
        print(report.to_text(args.time))
        if batch:
            print()


def _inputs(args) -> tuple[list[str], bool]:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        return lines, True
    if not args.spec:
        raise CliError("a spec argument or --file is required")
    return [args.spec], False


def _run_reports(args, make: Callable[[str], Report]) -> int:
    specs, batch = _inputs(args)
    status = 0
    for text in specs:
        report = make(text)
        _emit(report, args, batch)
        if not report.agreement:
            a, b, k = report.mismatch
            print(f"error: {text}: methods {a} and {b} differ at coefficient x^{k}", file=sys.stderr)
            status = 1
    return status


def cmd_hstar(args) -> int:
    return _run_reports(args, lambda t: compute_hstar(t, args.method, args.threads))


def cmd_interior(args) -> int:
    return _run_reports(args, compute_interior)


def cmd_verify(args) -> int:
    rows = verify.run(args.corpus, args.max_n, args.max_m)
    width = max((len(r.case) for r in rows), default=4)
    failed = 0
    for r in rows:
        failed += not r.ok
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.suite:<12} {r.case:<{width}}  {r.detail}".rstrip())
    print(f"{len(rows) - failed}/{len(rows)} passed")
    return 1 if failed or not rows else 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        print(f"error: {self.prog}: {message}", file=sys.stderr)
        sys.exit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pqhstar", description="h*-polynomials of PQ-type adjacency polytopes"
    )
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def io_flags(p):
        p.add_argument("spec", nargs="?", help="graph spec, e.g. W4, KP:2,3, J:(C4,K1)")
        p.add_argument("--file", help="read one spec per line; one output document per line")
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--time", action="store_true", help="report wall time per method")

    p = sub.add_parser("hstar", help="h*-polynomial of the PQ-type adjacency polytope")
    io_flags(p)
    p.add_argument("--method", choices=METHODS + ("all",), default="interior")
    p.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for the lattice-point oracle (1 = serial)",
    )
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("interior", help="interior polynomial of a bipartite graph (D:<G>, EL2:..)")
    io_flags(p)
    p.set_defaults(func=cmd_interior)

    p = sub.add_parser("verify", help="run an identity corpus and print a pass/fail table")
    p.add_argument("corpus", choices=verify.SUITES + ("all",))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-m", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"error: guard exceeded: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyError, OracleError) as exc:
        print(f"error: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
