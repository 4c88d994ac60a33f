"""Command-line interface.

Graphs are given either as edge-list files ("n m" header then "u v" lines),
as "family:NAME(args)" (e.g. family:cycle(6), family:handa), as
"graph6:STRING", or as "-" for an edge list on stdin.  Failures exit
nonzero with a machine-readable JSON object on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .analysis import analyze
from .closed_forms import predict_bridge_join, predict_leaf_join
from .errors import CurvlabError
from .families import make_family
from .graphs import Graph, distance_matrix
from .io_formats import (
    analysis_document,
    curvature_table,
    decimal_str,
    exact_str,
    export_dot,
    parse_edge_list,
    parse_graph6,
    report_document,
)
from .linalg import characteristic_polynomial
from .search import PREDICATES, min_leaves_negative, scan_graphs


def load_graph(spec: str) -> Graph:
    if spec == "-":
        return parse_edge_list(sys.stdin.read())
    if spec.startswith("family:"):
        body = spec[len("family:") :]
        if "(" in body:
            if not body.endswith(")"):
                raise CurvlabError(f"malformed family spec {spec!r}")
            name, argstr = body[:-1].split("(", 1)
            args = [int(a) for a in argstr.split(",") if a.strip()] if argstr else []
        else:
            name, args = body, []
        return make_family(name, args)
    if spec.startswith("graph6:"):
        return parse_graph6(spec[len("graph6:") :])
    with open(spec, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _fail(err: Exception) -> int:
    condition = getattr(err, "condition", err.__class__.__name__)
    payload = {"error": condition, "message": str(err)}
    print(json.dumps(payload), file=sys.stderr)
    return 1


def _maybe_figure(args, g, sol, title=""):
    if getattr(args, "figure", None):
        from .figures import draw_curvature

        draw_curvature(g, sol, args.figure, title=title)


def cmd_curvature(args) -> int:
    g = load_graph(args.graph)
    rep = analyze(g)
    sol = rep.solution
    if args.format == "json":
        print(json.dumps(report_document(g, rep), indent=2))
    elif args.format == "dot":
        print(export_dot(g, sol), end="")
    else:
        sys.stdout.write(curvature_table(g, sol))
        print(f"regime\t{sol.regime.lower()}")
        print(f"total\t{exact_str(sol.total)}\t{decimal_str(sol.total)}")
    _maybe_figure(args, g, sol, title=args.graph)
    return 0


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    rep = analyze(g)
    doc = analysis_document(g, rep)
    if args.format == "table":
        for key, value in doc.items():
            if key in ("edges",):
                continue
            print(f"{key}\t{json.dumps(value)}")
    else:
        print(json.dumps(doc, indent=2))
    _maybe_figure(args, g, rep.solution, title=args.graph)
    return 0


def cmd_predict_leaf(args) -> int:
    g1 = load_graph(args.g1)
    pred = predict_leaf_join(g1, args.u)
    print(
        json.dumps(
            {
                "alpha": exact_str(pred.alpha),
                "gamma": exact_str(pred.gamma),
                "leaf_curvature": exact_str(pred.K_v),
                "predicted": [exact_str(k) for k in pred.predicted_K],
                "predicted_decimal": [decimal_str(k) for k in pred.predicted_K],
            },
            indent=2,
        )
    )
    return 0


def cmd_predict_bridge(args) -> int:
    g1 = load_graph(args.g1)
    g2 = load_graph(args.g2)
    pred = predict_bridge_join(g1, args.u, g2, args.v)
    print(
        json.dumps(
            {
                "alpha": exact_str(pred.alpha),
                "beta": exact_str(pred.beta),
                "gamma": exact_str(pred.gamma),
                "delta": exact_str(pred.delta),
                "Z": exact_str(pred.Z),
                "predicted": [exact_str(k) for k in pred.predicted_K],
                "predicted_decimal": [decimal_str(k) for k in pred.predicted_K],
            },
            indent=2,
        )
    )
    return 0


def _scan_csv(result) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["graph6", "n", "regime", "total", "min", "solution_space_dim", "extra"])
    for g6, wit in result.matches:
        g = parse_graph6(g6)
        extra = {
            k: v
            for k, v in wit.items()
            if k not in ("regime", "total", "min", "solution_space_dim")
        }
        writer.writerow(
            [
                g6,
                g.n,
                wit.get("regime", ""),
                wit.get("total", ""),
                wit.get("min", ""),
                wit.get("solution_space_dim", ""),
                json.dumps(extra, sort_keys=True) if extra else "",
            ]
        )
    return buf.getvalue()


def cmd_scan(args) -> int:
    source = None
    if args.graph6:
        with open(args.graph6, "r", encoding="utf-8") as fh:
            source = fh.read().splitlines()
    result = scan_graphs(
        args.n_min,
        args.n_max,
        args.predicate,
        source=source,
        cap=args.cap,
        jobs=args.jobs,
    )
    doc = result.to_dict()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(_scan_csv(result))
    if args.figure:
        from .figures import draw_scan_summary

        draw_scan_summary(result, args.figure)
    print(json.dumps(doc, indent=2))
    return 0


def cmd_min_leaves(args) -> int:
    g = load_graph(args.graph)
    result = min_leaves_negative(
        g, args.budget, strict_all_vertices=args.strict_all_vertices, cap=args.cap
    )
    print(
        json.dumps(
            {
                "minimum_leaves": result.minimum_leaves,
                "attachment": {str(v): c for v, c in sorted(result.attachment_counts().items())},
                "achieved_curvatures": [exact_str(k) for k in result.achieved_curvatures],
                "strict_all_vertices": result.strict_all_vertices,
            },
            indent=2,
        )
    )
    return 0


def cmd_charpoly(args) -> int:
    g = load_graph(args.graph)
    d = distance_matrix(g)
    poly = characteristic_polynomial([list(row) for row in d.rows])
    print(
        json.dumps(
            {
                "n": g.n,
                "coefficients_ascending": list(poly.coefficients),
                "pretty": str(poly),
            },
            indent=2,
        )
    )
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(max_n=args.max_n), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvlab",
        description="Exact Steinerberger graph curvature toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curvature", help="curvature vector of a graph")
    p.add_argument("graph")
    p.add_argument("--format", choices=["json", "table", "dot"], default="table")
    p.add_argument("--figure", help="render the curvature-labeled graph to this file")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("analyze", help="full report: bounds, sharpness, antipodality")
    p.add_argument("graph")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--figure")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("predict-leaf", help="closed-form curvature after attaching a leaf")
    p.add_argument("g1")
    p.add_argument("u", type=int)
    p.set_defaults(func=cmd_predict_leaf)

    p = sub.add_parser("predict-bridge", help="closed-form curvature after joining by a bridge")
    p.add_argument("g1")
    p.add_argument("u", type=int)
    p.add_argument("g2")
    p.add_argument("v", type=int)
    p.set_defaults(func=cmd_predict_bridge)

    p = sub.add_parser("scan", help="scan small connected graphs for a predicate")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--predicate", required=True, choices=sorted(PREDICATES))
    p.add_argument("--graph6", help="read graphs from a graph6 file instead of enumerating")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=9)
    p.add_argument("--json", help="write the scan result to this JSON file")
    p.add_argument("--csv", help="write matches to this CSV file")
    p.add_argument("--figure", help="write a per-n match summary chart")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("min-leaves", help="fewest leaf attachments making original vertices negative")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--strict-all-vertices", action="store_true")
    p.add_argument("--cap", type=int, default=12)
    p.set_defaults(func=cmd_min_leaves)

    p = sub.add_parser("charpoly", help="characteristic polynomial of the distance matrix")
    p.add_argument("graph")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("serve", help="run the HTTP JSON API")
    p.add_argument("--port", type=int, default=8762)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--max-n", type=int, default=64)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CurvlabError as err:
        return _fail(err)
    except (ValueError, OSError) as err:
        return _fail(err)


if __name__ == "__main__":
    sys.exit(main())
