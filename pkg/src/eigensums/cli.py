"""Command-line surface: generation, spectra, bound audits, certificates.

Commands
    gen         write a generated graph as an edge-list file
    spectrum    eigenvalues of one matrix kind as CSV
    bounds      run a bound suite, emit a JSON report array
    lattice     check a lattice placement file against the full bound suite
    embed-cert  necessary-condition certificates per lattice dimension
    report      every applicable suite plus trace identities, with manifest

Exit codes: 0 success (for bound suites: nothing FAILed), 1 a bound
FAILed, 2 bad input or parameters, 3 eigensolver failure.  Reports are
deterministic: same input and flags give byte-identical output.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__, reports
from .avg_bounds import (
    adjacency_square_bound,
    adjacency_sum_bounds,
    laplacian_pairsum_bound,
    normalized_pairsum_bound,
    normalized_square_bound,
    select_pairs_laplacian,
)
from .basis_bounds import (
    degree_averaged_pair_bounds,
    fiedler_bounds,
    l_sum_bound,
    l_sum_second_line,
    pair_sum_bounds,
    select_subset,
)
from .graphs import (
    GraphError,
    gen_complete,
    gen_cycle,
    gen_join,
    gen_path,
    gen_random_connected,
    gen_star,
    edge_list_text,
    is_connected,
    read_edge_list,
    read_lattice_file,
)
from .lattice_bounds import embeddability_certificate, verify_embedding
from .spectra import (
    EigensolverError,
    spectrum,
    spectrum_to_csv,
    trace_identity_report,
)

LARGE_N_WARNING = 2000

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a over the given bytes."""
    h = FNV_OFFSET
    for b in data:
        h = ((h ^ b) * FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def input_digest(path: str) -> str:
    """Digest of the file with line endings canonicalized to LF."""
    with open(path, "rb") as fh:
        data = fh.read().replace(b"\r\n", b"\n")
    return f"{fnv1a64(data):016x}"


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigensums",
        description="graph spectra, eigenvalue-sum bound audits, and "
        "lattice-embeddability certificates",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=1e-9,
                        help="slack tolerance for verdicts (default 1e-9)")
    common.add_argument("--seed", type=int, default=None, help="generator seed")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", parents=[common], help="generate a graph file")
    p_gen.add_argument("family",
                       choices=["path", "cycle", "star", "complete", "join",
                                "random"])
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("p", type=int, nargs="?", default=None,
                       help="join parameter (join family only)")
    p_gen.add_argument("--edge-prob", type=float, default=0.5,
                       help="edge probability for the random family")

    p_spec = sub.add_parser("spectrum", parents=[common],
                            help="eigenvalues as CSV")
    p_spec.add_argument("--file", required=True)
    p_spec.add_argument("--kind", default="laplacian",
                        choices=["adjacency", "laplacian", "normalized"])

    p_bounds = sub.add_parser("bounds", parents=[common],
                              help="run a bound suite")
    p_bounds.add_argument("suite",
                          choices=["fiedler", "lsum", "laplacian-pairs",
                                   "normalized", "adjacency", "all"])
    p_bounds.add_argument("--file", required=True)
    p_bounds.add_argument("--k", type=int, action="append", default=None,
                          help="restrict to these k (default: full sweep)")
    p_bounds.add_argument("--L", type=int, action="append", default=None,
                          help="restrict lsum to these L (default: full sweep)")
    p_bounds.add_argument("--strategy", default="greedy-degree",
                          choices=["exhaustive", "greedy-degree",
                                   "degree-sorted"])
    p_bounds.add_argument("--squares", action="store_true",
                          help="add squared-eigenvalue bounds")
    p_bounds.add_argument("--pairs-file", default=None,
                          help="explicit ordered pairs, one 'u v' per line")
    p_bounds.add_argument("--paper-verbatim", action="store_true",
                          help="also evaluate the unverified second L-sum "
                          "form (observational)")

    p_lat = sub.add_parser("lattice", parents=[common],
                           help="audit a lattice placement file")
    p_lat.add_argument("action", choices=["check"])
    p_lat.add_argument("--file", required=True)

    p_cert = sub.add_parser("embed-cert", parents=[common],
                            help="embeddability certificates per dimension")
    p_cert.add_argument("--file", required=True)
    p_cert.add_argument("--max-dim", type=int, default=3)

    p_rep = sub.add_parser("report", parents=[common],
                           help="full audit with run manifest")
    p_rep.add_argument("--file", required=True)
    p_rep.add_argument("--format", default="json", choices=["json", "csv"])
    return parser


def _cmd_gen(args) -> int:
    seed = 0 if args.seed is None else args.seed
    if args.family == "path":
        graph = gen_path(args.n)
    elif args.family == "cycle":
        graph = gen_cycle(args.n)
    elif args.family == "star":
        graph = gen_star(args.n)
    elif args.family == "complete":
        graph = gen_complete(args.n)
    elif args.family == "join":
        if args.p is None:
            raise GraphError("join requires the p parameter")
        graph = gen_join(args.n, args.p)
    else:
        graph = gen_random_connected(args.n, args.edge_prob, seed)
    _write_output(edge_list_text(graph), args.out)
    return 0


def _cmd_spectrum(args) -> int:
    graph = read_edge_list(args.file)
    spec = spectrum(graph, args.kind)
    _write_output(spectrum_to_csv(spec), args.out)
    return 0


def _read_pairs_file(path):
    pairs = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"pairs file line {lineno}: expected 'u v'")
            pairs.append((int(parts[0]), int(parts[1])))
    return pairs


def _k_range(args, lo: int, hi: int):
    if args.k:
        return [k for k in args.k if lo <= k <= hi]
    return list(range(lo, hi + 1))


def _suite_reports(graph, args):
    tol = args.tolerance
    explicit_pairs = (_read_pairs_file(args.pairs_file)
                      if args.pairs_file else None)
    out = []
    suites = ([args.suite] if args.suite != "all"
              else ["fiedler", "lsum", "laplacian-pairs", "normalized",
                    "adjacency"])
    lap = spectrum(graph, "laplacian")
    if "fiedler" in suites and graph.n >= 2:
        out.extend(fiedler_bounds(graph, spec=lap, tolerance=tol))
        if graph.n >= 3:
            for mode in ("min", "max"):
                out.append(pair_sum_bounds(graph, mode, spec=lap, tolerance=tol))
                out.append(degree_averaged_pair_bounds(graph, mode, spec=lap,
                                                       tolerance=tol))
    if "lsum" in suites:
        ls = args.L if args.L else range(1, graph.n)
        for L in ls:
            if not 1 <= L <= graph.n - 1:
                continue
            low = select_subset(graph, L, args.strategy, maximize=False)
            high = select_subset(graph, L, args.strategy, maximize=True)
            out.append(l_sum_bound(graph, L, low, "lower-spectrum-upper",
                                   spec=lap, tolerance=tol))
            out.append(l_sum_bound(graph, L, high, "top-spectrum-lower",
                                   spec=lap, tolerance=tol))
            if args.paper_verbatim:
                out.extend(l_sum_second_line(graph, L, low[:L], spec=lap,
                                             tolerance=tol))
    if "laplacian-pairs" in suites:
        for k in _k_range(args, 2, graph.n):
            out.append(laplacian_pairsum_bound(graph, k, pairs=explicit_pairs,
                                               spec=lap, tolerance=tol))
    if "normalized" in suites and np.all(graph.degrees >= 1):
        norm = spectrum(graph, "normalized")
        for k in _k_range(args, 1, graph.n):
            out.append(normalized_pairsum_bound(graph, k, pairs=explicit_pairs,
                                                spec=norm, tolerance=tol))
            if args.squares:
                out.append(normalized_square_bound(graph, k,
                                                   pairs=explicit_pairs,
                                                   spec=norm, tolerance=tol))
    if "adjacency" in suites:
        adj = spectrum(graph, "adjacency")
        for k in _k_range(args, 1, graph.n - 2):
            out.extend(adjacency_sum_bounds(graph, k, spec=adj, tolerance=tol))
        if args.squares:
            for k in _k_range(args, 1, graph.n - 1):
                out.append(adjacency_square_bound(graph, k,
                                                  pairs=explicit_pairs,
                                                  spec=adj, tolerance=tol))
    return out


def _reports_exit_code(report_list) -> int:
    return 1 if any(r.verdict == reports.FAIL for r in report_list) else 0


def _cmd_bounds(args) -> int:
    graph = read_edge_list(args.file)
    if graph.n > LARGE_N_WARNING:
        print(f"warning: n={graph.n} above the supported target scale",
              file=sys.stderr)
    report_list = _suite_reports(graph, args)
    payload = [reports.report_to_dict(r) for r in report_list]
    _write_output(reports.dumps(payload) + "\n", args.out)
    return _reports_exit_code(report_list)


def _cmd_lattice(args) -> int:
    graph, emb = read_lattice_file(args.file)
    report_list = verify_embedding(graph, emb, tolerance=args.tolerance)
    payload = [reports.report_to_dict(r) for r in report_list]
    _write_output(reports.dumps(payload) + "\n", args.out)
    return _reports_exit_code(report_list)


def _cmd_embed_cert(args) -> int:
    graph = read_edge_list(args.file)
    if not is_connected(graph):
        print("error: certificate requires a connected graph", file=sys.stderr)
        return 2
    verdicts = embeddability_certificate(graph, args.max_dim,
                                         tolerance=args.tolerance)
    payload = [
        {
            "nu": v.nu,
            "verdict": v.verdict,
            "first_violation_k": v.first_violation_k,
            "slack": v.slack,
        }
        for v in verdicts
    ]
    _write_output(reports.dumps(payload) + "\n", args.out)
    return 0


def _cmd_report(args) -> int:
    graph = read_edge_list(args.file)
    lap = spectrum(graph, "laplacian")
    report_list = list(trace_identity_report(graph, lap,
                                             tolerance=args.tolerance))
    ns = argparse.Namespace(
        suite="all", k=None, L=None, strategy="greedy-degree", squares=True,
        pairs_file=None, paper_verbatim=False, tolerance=args.tolerance,
    )
    report_list.extend(_suite_reports(graph, ns))
    manifest = {
        "tool": "eigensums",
        "version": __version__,
        "input_digest": input_digest(args.file),
        "seed": args.seed,
        "tolerance": args.tolerance,
        "command": " ".join(getattr(args, "_argv", [])),
    }
    if args.format == "json":
        payload = {
            "manifest": manifest,
            "reports": [reports.report_to_dict(r, include_selection=False)
                        for r in report_list],
        }
        _write_output(reports.dumps(payload) + "\n", args.out)
    else:
        lines = ["name,params,bound,measured,slack,verdict"]

        def fmt_param(v):
            if isinstance(v, (list, tuple)):
                return "|".join(str(x) for x in v)
            return str(v)

        for r in report_list:
            params = ";".join(f"{k}={fmt_param(v)}"
                              for k, v in r.params.items())
            lines.append(
                f"{r.name},{params},{reports.format_float(r.bound)},"
                f"{reports.format_float(r.measured)},"
                f"{reports.format_float(r.slack)},{r.verdict}"
            )
        _write_output("\n".join(lines) + "\n", args.out)
    return _reports_exit_code(report_list)


def main(argv=None) -> int:
    parser = build_parser()
    effective = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(effective)
    args._argv = effective
    handlers = {
        "gen": _cmd_gen,
        "spectrum": _cmd_spectrum,
        "bounds": _cmd_bounds,
        "lattice": _cmd_lattice,
        "embed-cert": _cmd_embed_cert,
        "report": _cmd_report,
    }
    try:
        return handlers[args.command](args)
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EigensolverError as exc:
        print(f"eigensolver error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
