"""Command-line front end.

Verbs: analyze, classify, verify, sweep, oracle.  Exit codes: 0 success,
1 at least one check failed, 2 malformed input or cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import ClassificationReport, classify
from .graphs import (
    MixedGraph,
    MixedGraphParseError,
    decode_graph6,
    parse_mixed_graph,
)
from .linalg import hermitian_matrix
from .structure import matching_number
from .verify import (
    EdgeCapExceededError,
    basic_subgraph_coefficient,
    brute_force_matching_number,
    count_maximum_matchings,
    decode_orientation,
    elementary_subgraph_coefficient,
    minor_rank,
    sweep,
    underlying,
    verify_single,
)


def _load_graph(path: str, orientation: str | None) -> MixedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    first = ""
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            first = line
            break
    if first.startswith("MG"):
        if orientation is not None:
            raise ValueError("--orientation only applies to graph6 input")
        return parse_mixed_graph(text)
    und = decode_graph6(first)
    code = orientation if orientation is not None else "0" * len(und.edges)
    return decode_orientation(und, code)


def _report_lines(g: MixedGraph, report: ClassificationReport, clauses: bool) -> list[str]:
    lines = [
        f"n={report.n} undirected={len(g.undirected_edges)} arcs={len(g.arcs)} omega={report.omega}",
        f"rk={report.rk} r={report.r} d={report.d} m={report.m} diff={report.diff}",
        "bound: " + ("ok" if report.bound_ok else "VIOLATED"),
    ]
    det = report.detail
    if det.cycles_disjoint:
        lines.append(f"cycles: {len(det.cycles)} pairwise disjoint")
        for c in det.cycles:
            sign = "" if c.sign is None else f" sign={'+' if c.sign > 0 else '-'}"
            verts = "-".join(map(str, c.vertices))
            lines.append(f"  cycle l={c.length} eta={c.eta}{sign} vertices {verts}")
    else:
        lines.append("cycles: not pairwise disjoint")
    lines.append(f"upper-optimal by rank: {'yes' if report.upper_by_rank else 'no'}")
    lines.append(f"lower-optimal by rank: {'yes' if report.lower_by_rank else 'no'}")
    if clauses:
        def tri(v):
            return "n/a" if v is None else ("yes" if v else "no")

        lines.append(
            "upper conditions: "
            f"disjoint={tri(det.cycles_disjoint)} "
            f"cycle-classes={tri(det.upper_cycle_classes)} "
            f"delta-reachable={tri(det.delta_reachable)} "
            f"-> {tri(report.upper_by_conditions)}"
        )
        lines.append(
            "lower conditions: "
            f"disjoint={tri(det.cycles_disjoint)} "
            f"cycle-classes={tri(det.lower_cycle_classes)} "
            f"delta-reachable={tri(det.delta_reachable)} "
            f"-> {tri(report.lower_by_conditions)}"
        )
        if det.delta_trace is not None:
            steps = " ".join(f"({x},{y})" for x, y in det.delta_trace.steps)
            lines.append(f"delta trace: {steps or '(empty)'}")
            lines.append(
                "terminal vertices: "
                + (",".join(map(str, det.delta_trace.terminal_vertices)) or "(none)")
            )
        agree = (
            report.upper_by_rank == report.upper_by_conditions
            and report.lower_by_rank == report.lower_by_conditions
        )
        lines.append("verdict agreement: " + ("yes" if agree else "NO"))
    return lines


def _structured_report(g: MixedGraph, report: ClassificationReport) -> dict:
    out = report.to_dict()
    det = report.detail
    out["n"] = report.n
    out["omega"] = report.omega
    out["bound_ok"] = report.bound_ok
    out["cycles_disjoint"] = det.cycles_disjoint
    out["delta_reachable"] = det.delta_reachable
    return out


def _cmd_analyze(args, clauses: bool) -> int:
    g = _load_graph(args.input, args.orientation)
    report = classify(g)
    if args.format == "structured":
        print(json.dumps(_structured_report(g, report), sort_keys=True))
    else:
        print("\n".join(_report_lines(g, report, clauses)))
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.input, args.orientation)
    results = verify_single(g)
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "checks": {name: ok for name, ok, _ in results},
                    "all_passed": all(ok for _, ok, _ in results),
                },
                sort_keys=True,
            )
        )
    else:
        for name, ok, detail in results:
            suffix = f" {detail}" if detail and not ok else ""
            print(f"{'PASS' if ok else 'FAIL'} {name}{suffix}")
        n_fail = sum(1 for _, ok, _ in results if not ok)
        print(f"checks={len(results)} failed={n_fail}")
    return 0 if all(ok for _, ok, _ in results) else 1


def _cmd_oracle(args) -> int:
    g = _load_graph(args.input, args.orientation)
    und = underlying(g)
    out: dict = {"n": g.n}
    if len(und.edges) <= args.cap_edges:
        out["matching_bruteforce"] = brute_force_matching_number(und)
    out["matching"] = matching_number(und)
    if und.n <= 16:
        out["maximum_matching_count"] = count_maximum_matchings(und)
    if und.n <= 7:
        out["minor_rank_hermitian"] = minor_rank(hermitian_matrix(g))
    if und.n <= 8:
        out["basic_coefficients"] = [
            basic_subgraph_coefficient(g, j) for j in range(1, g.n + 1)
        ]
        out["elementary_coefficients"] = [
            elementary_subgraph_coefficient(und, j) for j in range(1, und.n + 1)
        ]
    if args.format == "structured":
        print(json.dumps(out, sort_keys=True))
    else:
        for key in sorted(out):
            print(f"{key}={out[key]}")
    return 0


def _cmd_sweep(args) -> int:
    mode = args.mode
    if mode is None:
        mode = "exhaustive" if args.n <= 4 else "sampled"
    report = sweep(
        args.n,
        mode=mode,
        seed=args.seed,
        samples=args.samples,
        threads=args.threads,
        cap_edges=args.cap_edges,
    )
    if args.format == "structured":
        print(json.dumps(report.to_json_dict(), sort_keys=True))
    else:
        sys.stdout.write(report.to_text())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_dict(), fh, sort_keys=True, indent=2)
            fh.write("\n")
    print(f"wall time: {report.wall_time:.2f}s", file=sys.stderr)
    return 0 if report.all_passed() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedrank",
        description="Exact rank analysis and verification for mixed graphs",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_input_opts(p):
        p.add_argument("input", help="graph file (.mg format or graph6)")
        p.add_argument(
            "--orientation",
            help="base-3 orientation code for graph6 input (default: all undirected)",
        )
        p.add_argument(
            "--format", choices=("text", "structured"), default="text"
        )

    p_analyze = sub.add_parser("analyze", help="print ranks and invariants")
    add_input_opts(p_analyze)
    p_classify = sub.add_parser("classify", help="analysis plus condition breakdown")
    add_input_opts(p_classify)
    p_verify = sub.add_parser("verify", help="run identity checks on one graph")
    add_input_opts(p_verify)
    p_oracle = sub.add_parser("oracle", help="print brute-force oracle values")
    add_input_opts(p_oracle)
    p_oracle.add_argument("--cap-edges", type=int, default=20)

    p_sweep = sub.add_parser("sweep", help="enumerate instances and check identities")
    p_sweep.add_argument("--n", type=int, required=True, help="max (or exact) vertex count")
    p_sweep.add_argument("--mode", choices=("exhaustive", "sampled"), default=None)
    p_sweep.add_argument("--samples", type=int, default=10000)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--cap-edges", type=int, default=20)
    p_sweep.add_argument("--threads", type=int, default=1)
    p_sweep.add_argument("--format", choices=("text", "structured"), default="text")
    p_sweep.add_argument("--out", help="also write a structured JSON report here")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "analyze":
            return _cmd_analyze(args, clauses=False)
        if args.verb == "classify":
            return _cmd_analyze(args, clauses=True)
        if args.verb == "verify":
            return _cmd_verify(args)
        if args.verb == "oracle":
            return _cmd_oracle(args)
        if args.verb == "sweep":
            return _cmd_sweep(args)
        parser.error(f"unknown verb {args.verb!r}")
    except (MixedGraphParseError, EdgeCapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
