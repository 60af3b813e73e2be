"""Command-line surface.

Commands: spectra, energy, construct, trees, verify, family.  Every run
prints one canonical JSON report to stdout.  Exit codes: 0 for success
(including hypothesis_not_met verdicts), 1 for parse/validation errors,
2 for usage errors, 3 when a claim check reports a deviation.
"""

from __future__ import annotations

import argparse
import sys

from . import theorems
from .errors import EquigraphError
from .graphio import GraphDocument, detect_format, emit_graph, parse_graph
from .graphs import (
    Graph,
    cartesian_product,
    complement,
    disjoint_union,
    double_graph,
    extended_double_cover,
    iterated_edc,
    join,
    k_fold,
    kronecker_product,
    line_graph,
)
from .reports import make_report, payload_digest, render_report
from .spectra import (
    edc_spanning_trees_formula,
    energy,
    laplacian_energy,
    signless_laplacian_energy,
    spanning_trees_eigen,
    spanning_trees_exact,
    spectrum_of,
)

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE = 2
EXIT_DEVIATION = 3

MATRIX_FLAGS = {"a": "adjacency", "l": "laplacian", "q": "signless_laplacian"}
ENERGY_FLAGS = {"e": "energy", "le": "laplacian", "le+": "signless_laplacian"}

UNARY_OPS = ("edc", "edc^k", "double", "kfold", "line", "complement")
BINARY_OPS = ("join", "cartesian", "kronecker", "union")

FAMILY_THEOREMS = ("4.3", "4.4", "4.6", "4.7", "4.8", "4.9", "4.10", "eq41")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equigraph",
        description="Graph spectra, energies, constructions, and numerical claim checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectra", help="print a sorted matrix spectrum")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--matrix", choices=sorted(MATRIX_FLAGS), required=True)

    en = sub.add_parser("energy", help="print a graph energy")
    en.add_argument("--in", dest="infile", required=True)
    en.add_argument("--kind", choices=["e", "le", "le+"], required=True)

    co = sub.add_parser("construct", help="build a derived graph")
    co.add_argument("--in", dest="infile", required=True)
    co.add_argument("--op", choices=UNARY_OPS, required=True)
    co.add_argument("--k", type=int, default=None)
    co.add_argument("--with", dest="withfile", default=None)
    co.add_argument("--op2", choices=BINARY_OPS, default=None)
    co.add_argument("--out", choices=["graph6", "edgelist"], required=True)

    tr = sub.add_parser("trees", help="count spanning trees")
    tr.add_argument("--in", dest="infile", required=True)
    tr.add_argument("--method", choices=["eigen", "exact", "edc-formula"], default=None)

    ve = sub.add_parser("verify", help="check one spectral claim")
    ve.add_argument("--in", dest="infile", required=True)
    ve.add_argument("--theorem", required=True)
    ve.add_argument("--k", type=int, default=None)
    ve.add_argument("--in2", dest="infile2", default=None)
    ve.add_argument("--eps", type=float, default=None)

    fa = sub.add_parser("family", help="check one equienergetic family instance")
    fa.add_argument("--theorem", choices=FAMILY_THEOREMS, required=True)
    fa.add_argument("--in", dest="infile", required=True)
    fa.add_argument("--in2", dest="infile2", default=None)
    fa.add_argument("--p", type=int, required=True)
    fa.add_argument("--k", type=int, default=None)
    fa.add_argument("--t", type=int, default=None)
    fa.add_argument("--eps", type=float, default=None)

    return parser


def _load_graph(path: str) -> tuple[Graph, dict]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = fh.read()
    except OSError as exc:
        raise EquigraphError(f"cannot read {path}: {exc}") from exc
    fmt = detect_format(payload)
    G = parse_graph(GraphDocument(fmt, payload))
    meta = {"path": path, "format": fmt, "sha256": payload_digest(payload), "n": G.n, "m": G.m}
    return G, meta


def cmd_spectra(args) -> tuple[dict, int]:
    G, meta = _load_graph(args.infile)
    kind = MATRIX_FLAGS[args.matrix]
    spec = spectrum_of(G, kind)
    results = {"matrix": kind, "spectrum": list(spec.values)}
    report = make_report("spectra", {"matrix": args.matrix}, {"in": meta}, results, eps=spec.tol)
    return report, EXIT_OK


def cmd_energy(args) -> tuple[dict, int]:
    G, meta = _load_graph(args.infile)
    fn = {"e": energy, "le": laplacian_energy, "le+": signless_laplacian_energy}[args.kind]
    val = fn(G)
    results = {"kind": val.kind, "value": val.value}
    if val.avg_degree is not None:
        results["avg_degree"] = val.avg_degree
    kind = {"e": "adjacency", "le": "laplacian", "le+": "signless_laplacian"}[args.kind]
    report = make_report("energy", {"kind": args.kind}, {"in": meta}, results,
                         eps=spectrum_of(G, kind).tol)
    return report, EXIT_OK


def _apply_unary(G: Graph, op: str, k: int | None) -> Graph:
    if op == "edc":
        return extended_double_cover(G)
    if op == "edc^k":
        return iterated_edc(G, k if k is not None else 1)
    if op == "double":
        return double_graph(G)
    if op == "kfold":
        return k_fold(G, k if k is not None else 2)
    if op == "line":
        return line_graph(G)
    return complement(G)


def _apply_binary(G1: Graph, G2: Graph, op: str) -> Graph:
    if op == "join":
        return join(G1, G2)
    if op == "cartesian":
        return cartesian_product(G1, G2)
    if op == "kronecker":
        return kronecker_product(G1, G2)
    return disjoint_union(G1, G2)


def cmd_construct(args) -> tuple[dict, int]:
    G, meta = _load_graph(args.infile)
    inputs = {"in": meta}
    out = _apply_unary(G, args.op, args.k)
    options = {"op": args.op, "out": args.out}
    if args.k is not None:
        options["k"] = args.k
    if (args.withfile is None) != (args.op2 is None):
        raise EquigraphError("--with and --op2 must be given together")
    if args.withfile is not None:
        G2, meta2 = _load_graph(args.withfile)
        inputs["with"] = meta2
        options["op2"] = args.op2
        out = _apply_binary(out, G2, args.op2)
    doc = emit_graph(out, args.out)
    results = {"graph": {"format": doc.format, "payload": doc.payload},
               "n": out.n, "m": out.m}
    report = make_report("construct", options, inputs, results)
    return report, EXIT_OK


def cmd_trees(args) -> tuple[dict, int]:
    G, meta = _load_graph(args.infile)
    results: dict = {}
    if args.method in (None, "eigen"):
        results["eigen"] = spanning_trees_eigen(G)
    if args.method in (None, "exact"):
        results["exact"] = spanning_trees_exact(G)
    if args.method == "edc-formula":
        cover = extended_double_cover(G)
        results["edc_formula"] = edc_spanning_trees_formula(G)
        results["edc_exact"] = spanning_trees_exact(cover)
    options = {} if args.method is None else {"method": args.method}
    # counts are integers; 0.5 is the rounding gate between the float routes
    report = make_report("trees", options, {"in": meta}, results, eps=0.5)
    return report, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    G, meta = _load_graph(args.infile)
    inputs = {"in": meta}
    second = None
    if args.infile2 is not None:
        second, meta2 = _load_graph(args.infile2)
        inputs["in2"] = meta2
    check = theorems.run_check(args.theorem, G, k=args.k, second=second, eps=args.eps)
    options = {"theorem": args.theorem}
    if args.k is not None:
        options["k"] = args.k
    report = make_report("verify", options, inputs, {"report": check.to_dict()}, eps=check.eps)
    code = EXIT_DEVIATION if check.verdict == theorems.VERDICT_DEVIATION else EXIT_OK
    return report, code


def cmd_family(args) -> tuple[dict, int]:
    G, meta = _load_graph(args.infile)
    inputs = {"in": meta}
    second = None
    if args.infile2 is not None:
        second, meta2 = _load_graph(args.infile2)
        inputs["in2"] = meta2
    eps = args.eps if args.eps is not None else theorems.EPS_FAMILY
    results: dict = {}

    tid = args.theorem
    if tid in ("4.3", "4.4"):
        t = 1 if tid == "4.3" else (args.t if args.t is not None else 2)
        spec, check = theorems.family_join_edc(G, args.p, t=t, k=args.k, eps=eps, theorem_id=tid)
        results["family"] = spec.to_dict()
    elif tid in ("4.6", "4.7"):
        fold = 2 if tid == "4.6" else (args.k if args.k is not None else 3)
        slack = args.t if tid == "4.7" else args.k
        if tid == "4.6":
            spec, check = theorems.family_join_kfold(G, args.p, k=2, t=slack, eps=eps, theorem_id=tid)
        else:
            spec, check = theorems.family_join_kfold(G, args.p, k=fold, t=slack, eps=eps, theorem_id=tid)
        results["family"] = spec.to_dict()
    elif tid in ("4.8", "4.9", "eq41"):
        if second is None:
            raise EquigraphError(f"family {tid} needs --in2")
        mixed = {"4.8": "thm48", "4.9": "thm49", "eq41": "eq41_42"}[tid]
        check = theorems.family_mixed(mixed, G, second, args.p,
                                      k=args.k if args.k is not None else 4, eps=eps)
    else:
        if second is None:
            raise EquigraphError("family 4.10 needs --in2")
        check = theorems.family_cartesian(G, second, args.p, eps=eps)

    results["report"] = check.to_dict()
    options = {"theorem": tid, "p": args.p}
    if args.k is not None:
        options["k"] = args.k
    if args.t is not None:
        options["t"] = args.t
    report = make_report("family", options, inputs, results, eps=check.eps)
    code = EXIT_DEVIATION if check.verdict == theorems.VERDICT_DEVIATION else EXIT_OK
    return report, code


COMMANDS = {
    "spectra": cmd_spectra,
    "energy": cmd_energy,
    "construct": cmd_construct,
    "trees": cmd_trees,
    "verify": cmd_verify,
    "family": cmd_family,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = COMMANDS[args.command](args)
    except EquigraphError as exc:
        print(f"equigraph: error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    sys.stdout.write(render_report(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
