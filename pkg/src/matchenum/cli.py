"""Command-line interface.

Subcommands:
  count     exact matching count of a region file by a chosen method
  ratio     containment ratio of one edge (forced / total), exact
  spectrum  Kasteleyn matrix spectrum report for a region file
  verify    run one named claim and emit its report

Counts always serialize as decimal strings.  Exit codes: 0 for PASS or
REPORT_ONLY, 1 for FAIL, 2 for usage, input or bound errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .claims import (
    FAIL,
    verify_oracles,
    verify_problem1,
    verify_problem14,
    verify_problem19_asymptotic,
    verify_problem19_orbits,
    verify_problem19_parity,
)
from .counting import (
    BoundError,
    COUNTERS,
    containment_ratio,
    count_with_forced_edge,
    count_auto,
)
from .graphs import GraphError
from .regions import RegionError, RegionSpec, central_rhombus_edge
from .spectra import kasteleyn_matrix, kk_star_charpoly, singular_values
from .transfer import transfer_count

CLAIMS = (
    "problem1",
    "problem14",
    "problem19-parity",
    "problem19-orbits",
    "problem19-asymptotic",
    "oracles",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchenum",
        description="Exact perfect-matching enumeration of lattice regions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        # count/ratio print the bare value unless a format is requested;
        # report-producing subcommands default to JSON
        sp.add_argument("--format", choices=("json", "csv"), default=None,
                        help="report format (JSON is canonical)")
        sp.add_argument("--out", metavar="PATH", default=None,
                        help="write the output to PATH instead of stdout")

    sp = sub.add_parser("count", help="count perfect matchings of a region")
    sp.add_argument("--region", required=True, metavar="FILE",
                    help="region JSON file")
    sp.add_argument("--method", default="auto",
                    choices=("auto", "brute", "kasteleyn", "permanent", "transfer"))
    common(sp)

    sp = sub.add_parser("ratio", help="containment ratio of one edge")
    sp.add_argument("--region", required=True, metavar="FILE")
    sp.add_argument("--edge", required=True, metavar="SELECTOR",
                    help="'central' (symmetric hexagons) or 'I:J' vertex indices")
    common(sp)

    sp = sub.add_parser("spectrum", help="Kasteleyn matrix spectrum of a region")
    sp.add_argument("--region", required=True, metavar="FILE")
    common(sp)

    sp = sub.add_parser("verify", help="run one named claim")
    sp.add_argument("--claim", required=True, choices=CLAIMS)
    sp.add_argument("--n", type=int, default=None,
                    help="problem1: hexagon index; problem19-orbits: cube dimension")
    sp.add_argument("--n-max", type=int, default=None,
                    help="problem19-parity/asymptotic: largest cube dimension")
    sp.add_argument("--w", type=int, default=2, help="problem14: ring thickness")
    sp.add_argument("--x-to", type=int, default=8,
                    help="problem14: largest inner order")
    sp.add_argument("--off-center", action="store_true",
                    help="problem1: negative control at a non-central edge")
    sp.add_argument("--seed", type=int, default=1, help="oracles: corpus seed")
    sp.add_argument("--cases", type=int, default=50, help="oracles: corpus size")
    common(sp)

    return parser


def _load_spec(path: str) -> RegionSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise RegionError(f"cannot read region file {path!r}: {exc}") from None
    return RegionSpec.from_json(text)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _report_text(report, fmt: str) -> str:
    if fmt == "csv":
        row = report.to_csv_row()
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(row))
        writer.writeheader()
        writer.writerow(row)
        return buf.getvalue().rstrip("\n")
    return report.to_json(indent=2)


def _cmd_count(args) -> int:
    spec = _load_spec(args.region)
    if args.method == "transfer":
        if spec.kind != "AZTEC_WINDOW":
            raise RegionError("--method transfer applies only to AZTEC_WINDOW regions")
        value = transfer_count(spec)
    else:
        value = COUNTERS[args.method](spec.build())
    if args.format == "json":
        doc = {"kind": spec.kind, "method": args.method, "count": str(value)}
        _emit(json.dumps(doc, indent=2), args.out)
    else:
        _emit(str(value), args.out)  # the decimal string is the flat form
    return 0


def _resolve_edge(spec: RegionSpec, g, selector: str):
    if selector == "central":
        if spec.kind != "HEXAGON":
            raise RegionError("'central' edge selection needs a HEXAGON region")
        cell_up, cell_down = central_rhombus_edge(spec.params["sides"])
        return g.edge_by_labels(cell_up, cell_down)
    try:
        u, v = (int(part) for part in selector.split(":"))
    except ValueError:
        raise RegionError(
            f"edge selector {selector!r} is neither 'central' nor 'I:J'"
        ) from None
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise RegionError(f"edge selector {selector!r} out of vertex range")
    if not g.has_edge(u, v):
        raise RegionError(f"vertices {u} and {v} are not adjacent")
    return (u, v) if u < v else (v, u)


def _label_doc(label):
    return list(label) if isinstance(label, tuple) else label


def _cmd_ratio(args) -> int:
    spec = _load_spec(args.region)
    g = spec.build()
    edge = _resolve_edge(spec, g, args.edge)
    ratio = containment_ratio(g, edge)
    if args.format == "json":
        doc = {
            "kind": spec.kind,
            "edge": [_label_doc(g.labels[i]) for i in edge],
            "containing": str(count_with_forced_edge(g, edge)),
            "total": str(count_auto(g)),
            "ratio": str(ratio),
        }
        _emit(json.dumps(doc, indent=2), args.out)
    else:
        _emit(str(ratio), args.out)
    return 0


def _cmd_spectrum(args) -> int:
    spec = _load_spec(args.region)
    g = spec.build()
    k = kasteleyn_matrix(g)
    cp = kk_star_charpoly(k)
    sv = singular_values(k)
    count = count_auto(g)
    if args.format != "csv":
        doc = {
            "kind": spec.kind,
            "dimension": k.dimension,
            "count": str(count),
            "charpoly": [str(c) for c in cp.coeffs],
            "singular_values": sv,
        }
        _emit(json.dumps(doc, indent=2), args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["field", "value"])
        writer.writerow(["dimension", k.dimension])
        writer.writerow(["count", str(count)])
        for i, c in enumerate(cp.coeffs):
            writer.writerow([f"charpoly_{i}", str(c)])
        for i, s in enumerate(sv):
            writer.writerow([f"singular_value_{i}", repr(s)])
        _emit(buf.getvalue().rstrip("\n"), args.out)
    return 0


def _cmd_verify(args) -> int:
    claim = args.claim
    if claim == "problem1":
        report = verify_problem1(args.n if args.n is not None else 1,
                                 off_center=args.off_center)
    elif claim == "problem14":
        report = verify_problem14(args.w, args.x_to)
    elif claim == "problem19-parity":
        report = verify_problem19_parity(args.n_max if args.n_max is not None else 5)
    elif claim == "problem19-orbits":
        report = verify_problem19_orbits(args.n if args.n is not None else 3)
    elif claim == "problem19-asymptotic":
        report = verify_problem19_asymptotic(args.n_max if args.n_max is not None else 5)
    else:
        report = verify_oracles(args.seed, args.cases)
    _emit(_report_text(report, args.format), args.out)
    return 1 if report.verdict == FAIL else 0


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": _cmd_count,
        "ratio": _cmd_ratio,
        "spectrum": _cmd_spectrum,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (RegionError, GraphError, BoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:  # console-script entry point
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
