"""Command-line interface.

Subcommands:

* ``bound``      closed-form guarantees for one (d, k)
* ``table``      comparison table of relative expectations
* ``solve``      certify a graph, build the vector solution, round it
* ``graph-info`` certificate of an edge-list file or builtin graph

Exit codes: 0 success, 2 usage error, 3 failed graph precondition
(regularity/girth), 4 edge-list ingestion error.  Output in json/csv mode
is byte-identical across runs for identical invocations.  Practical graph
sizes are bounded by the O(n*m) certification pass; this tool targets
desk-scale instances (up to roughly a million vertices).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import bounds, graph, rounding, solution
from .errors import CertificationError, GirthCutError, IngestionError
from .spectral import b_min_eigenvalue, path_operator

SCHEMA_VERSION = 1


def _parse_int_list(text: str) -> list[int]:
    """Parse '3', '3,5,7', or '3..9' (inclusive) into a list of ints."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo_text, hi_text = part.split("..", 1)
            values.extend(range(int(lo_text), int(hi_text) + 1))
        elif part:
            values.append(int(part))
    return values


def _jsonable(value):
    if isinstance(value, float) and (math.isnan(value) or math.isinf(value)):
        return None
    return value


def _emit_json(payload: dict) -> str:
    def clean(obj):
        if isinstance(obj, dict):
            return {key: clean(val) for key, val in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [clean(val) for val in obj]
        return _jsonable(obj)

    return json.dumps(clean(payload), indent=2)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf"
        return repr(value)
    return str(value)


def _print_kv(pairs: list[tuple[str, object]]) -> None:
    width = max(len(key) for key, _ in pairs)
    for key, value in pairs:
        print(f"{key.ljust(width)}  {_fmt(value)}")


def _bound_payload(d: int, k: int, profile: str) -> dict:
    report = bounds.bound_report(d, k, profile)
    # uniform-coupling envelope -2 sqrt(d-1)/d * cos(pi/(k+1))
    op_b = b_min_eigenvalue(path_operator(d, k, "B"))
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "bound",
        "d": d,
        "k": k,
        "profile": profile,
        "sigma_opt": report.sigma_opt,
        "sigma_w": report.sigma_w,
        "sigma_b": op_b,
        "cut_fraction": report.cut_fraction,
        "xi_ev": bounds.truncate(report.xi_ev),
        "xi_lyons": bounds.truncate(report.xi_lyons) if report.xi_lyons is not None else None,
        "normalized_value": report.normalized_value,
    }


def _cmd_bound(args: argparse.Namespace) -> int:
    payload = _bound_payload(args.d, args.k, args.profile)
    if args.format == "json":
        print(_emit_json(payload))
    elif args.format == "csv":
        keys = [key for key in payload if key not in ("schema_version", "command")]
        print(",".join(keys))
        print(",".join(_csv_cell(payload[key], key) for key in keys))
    else:
        _print_kv([(key, value) for key, value in payload.items()
                   if key not in ("schema_version", "command")])
    return 0


def _csv_cell(value, key: str) -> str:
    if value is None:
        return ""
    if key in ("xi_ev", "xi_lyons"):
        return f"{value:.5f}"
    return _fmt(value)


def _cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.k is None and args.d is None:
        rows = bounds.table1_rows()
    elif args.k is None or args.d is None:
        parser.error("--k and --d must be given together")
    else:
        if not args.k or not args.d:
            parser.error("--k and --d ranges must be nonempty")
        rows = bounds.comparison_table(args.d, args.k)
    cells = [
        (row.k, row.d, bounds.truncate(row.xi_ev),
         bounds.truncate(row.xi_lyons) if row.xi_lyons is not None else None)
        for row in rows
    ]
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "table",
            "rows": [
                {"k": k, "d": d, "xi_ev": xi_ev, "xi_lyons": xi_l}
                for k, d, xi_ev, xi_l in cells
            ],
        }
        print(_emit_json(payload))
    elif args.format == "csv":
        print("k,d,xi_ev,xi_lyons")
        for k, d, xi_ev, xi_l in cells:
            lyons = f"{xi_l:.5f}" if xi_l is not None else ""
            print(f"{k},{d},{xi_ev:.5f},{lyons}")
    else:
        print(f"{'k':>3} {'d':>3} {'xi_ev':>9} {'xi_lyons':>9}")
        for k, d, xi_ev, xi_l in cells:
            lyons = f"{xi_l:9.5f}" if xi_l is not None else " " * 9
            print(f"{k:>3} {d:>3} {xi_ev:9.5f} {lyons}")
    return 0


def _load_graph(args: argparse.Namespace) -> tuple[graph.Graph, str]:
    if args.builtin is not None:
        return graph.builtin(args.builtin), f"builtin:{args.builtin}"
    with open(args.graph, "r", encoding="utf-8") as handle:
        return graph.load_edge_list(handle), args.graph


def _cert_payload(cert: graph.GraphCertificate) -> dict:
    return {
        "d": cert.d,
        "girth": cert.girth if cert.girth != math.inf else None,
        "k_max": cert.k_max if cert.k_max != math.inf else None,
    }


def _cmd_solve(args: argparse.Namespace) -> int:
    g, source = _load_graph(args)
    cert = graph.certify(g)
    if args.d is not None and args.d != cert.d:
        raise CertificationError(f"graph is {cert.d}-regular, not {args.d}-regular")
    if cert.d < 3:
        raise CertificationError(
            f"construction requires degree >= 3, graph is {cert.d}-regular"
        )
    if args.profile == "optimal":
        profile = solution.optimal_profile(cert.d, args.k)
    else:
        profile = solution.closed_form_profile(cert.d, args.k)
    sol = solution.build_vectors(g, profile, args.mode)
    exact = rounding.expected_cut_exact(sol)
    report = rounding.monte_carlo(sol, args.samples, args.seed)
    assignment = "".join(str(int(b)) for b in report.best.assignment)

    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "solve",
        "graph": {"source": source, "n": g.n, "m": g.m, **_cert_payload(cert)},
        "k": args.k,
        "profile": args.profile,
        "mode": args.mode,
        "sigma": profile.sigma,
        "sdp_objective": solution.sdp_objective(sol),
        "expected_cut": exact,
        "expected_fraction": exact / g.m,
        "monte_carlo": {
            "samples": report.samples,
            "seed": report.seed,
            "mean_fraction": report.mean_fraction,
            "std_error": report.std_error,
            "best_size": report.best.size,
            "best_fraction": report.best.size / g.m,
            "best_assignment": assignment,
        },
    }
    if args.mode == "practical":
        payload["norms"] = [float(x) for x in sol.norms]
        payload["edge_products"] = [
            [int(u), int(v), float(p)]
            for (u, v), p in zip(g.edges, sol.edge_products)
        ]

    if args.format == "json":
        print(_emit_json(payload))
    elif args.format == "csv":
        print("key,value")
        for key, value in _flatten(payload):
            if key in ("schema_version", "command"):
                continue
            print(f"{key},{value}")
    else:
        pairs = [
            ("graph", f"{source} (n={g.n}, m={g.m})"),
            ("certificate", f"d={cert.d} girth={cert.girth} k_max={cert.k_max}"),
            ("profile", f"{args.profile} (k={args.k}, sigma={profile.sigma!r})"),
            ("mode", args.mode),
            ("sdp objective", payload["sdp_objective"]),
            ("expected cut", f"{exact!r} (fraction {exact / g.m!r})"),
            ("mc mean fraction", f"{report.mean_fraction!r} +/- {report.std_error!r}"
                                 f" (N={report.samples}, seed={report.seed})"),
            ("best cut", f"{report.best.size} (fraction {report.best.size / g.m!r})"),
            ("assignment", assignment),
        ]
        _print_kv(pairs)
        if args.mode == "practical":
            print("edge products:")
            for (u, v), p in zip(g.edges, sol.edge_products):
                print(f"  {u} {v}  {float(p)!r}")
    return 0


def _flatten(payload: dict, prefix: str = ""):
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, f"{name}.")
        elif isinstance(value, list):
            yield name, json.dumps(_jsonable_list(value))
        else:
            yield name, _fmt(_jsonable(value)) if value is not None else ""


def _jsonable_list(values):
    return [
        _jsonable_list(v) if isinstance(v, list) else _jsonable(v)
        for v in values
    ]


def _cmd_graph_info(args: argparse.Namespace) -> int:
    g, source = _load_graph(args)
    cert = graph.certify(g)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "graph-info",
        "source": source,
        "n": g.n,
        "m": g.m,
        **_cert_payload(cert),
    }
    if args.format == "json":
        print(_emit_json(payload))
    elif args.format == "csv":
        keys = [key for key in payload if key not in ("schema_version", "command")]
        print(",".join(keys))
        print(",".join(_fmt(_jsonable(payload[key])) if payload[key] is not None else ""
                       for key in keys))
    else:
        _print_kv([
            ("source", source),
            ("n", g.n),
            ("m", g.m),
            ("d", cert.d),
            ("girth", cert.girth),
            ("k_max", cert.k_max),
        ])
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", help="path to an edge-list file")
    source.add_argument("--builtin", help="builtin graph name",
                        choices=graph.BUILTIN_NAMES)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girthcut",
        description="Explicit SDP vector solutions with hyperplane rounding "
                    "for MaxCut on regular graphs of girth >= 2k.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="closed-form guarantees for one (d, k)")
    p_bound.add_argument("--d", type=int, required=True)
    p_bound.add_argument("--k", type=int, required=True)
    p_bound.add_argument("--profile", choices=("optimal", "closedform"), default="optimal")
    _add_format(p_bound)

    p_table = sub.add_parser("table", help="comparison table of relative expectations")
    p_table.add_argument("--k", type=_parse_int_list, default=None)
    p_table.add_argument("--d", type=_parse_int_list, default=None)
    _add_format(p_table)

    p_solve = sub.add_parser("solve", help="build and round a vector solution")
    _add_graph_source(p_solve)
    p_solve.add_argument("--k", type=int, required=True)
    p_solve.add_argument("--d", type=int, default=None,
                         help="expected degree (verified against the graph)")
    p_solve.add_argument("--profile", choices=("optimal", "closedform"), default="optimal")
    p_solve.add_argument("--mode", choices=("strict", "practical"), default="strict")
    p_solve.add_argument("--samples", type=int, default=10_000)
    p_solve.add_argument("--seed", type=int, default=0)
    _add_format(p_solve)

    p_info = sub.add_parser("graph-info", help="certificate of a graph")
    _add_graph_source(p_info)
    _add_format(p_info)

    return parser


def _validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if args.command in ("bound", "solve"):
        if args.command == "bound" and args.d < 3:
            parser.error(f"--d must be >= 3, got {args.d}")
        if args.k < 1:
            parser.error(f"--k must be >= 1, got {args.k}")
        if args.command == "bound" and args.profile == "closedform" and args.k < 2:
            parser.error("--profile closedform requires --k >= 2")
    if args.command == "solve":
        if args.profile == "closedform" and args.k < 2:
            parser.error("--profile closedform requires --k >= 2")
        if args.samples < 1:
            parser.error(f"--samples must be >= 1, got {args.samples}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    try:
        if args.command == "bound":
            return _cmd_bound(args)
        if args.command == "table":
            return _cmd_table(args, parser)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "graph-info":
            return _cmd_graph_info(args)
    except IngestionError as exc:
        print(f"girthcut: ingestion error: {exc}", file=sys.stderr)
        return 4
    except CertificationError as exc:
        print(f"girthcut: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"girthcut: ingestion error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, GirthCutError) as exc:
        print(f"girthcut: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
