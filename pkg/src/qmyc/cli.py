"""Command-line interface: ``qmyc <command> ...``.

Exit codes: 0 success, 1 semantic failure, 2 parse error, 3 size limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .algebra import AlgebraError
from .graph import ClassicalGraph, Normalization, QuantumGraph, check_quantum_graph, to_classical
from .io import (
    SCHEMA_VERSION,
    FormatError,
    as_quantum,
    certificate_to_doc,
    graph_to_doc,
    load_certificate,
    load_graph,
    write_json,
)
from .labeling import LabelingError, distinguishing_search
from .mycielski import MycielskiError, mycielskian
from .symmetry import (
    CertificateError,
    SizeLimitError,
    fulton_pattern,
    lift_certificate,
    pattern_twin_solver,
    quantum_twin_verdict,
    verify_iso_certificate,
    classical_twins,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_LIMIT = 0, 1, 2, 3


class CommandFailure(Exception):
    """Semantic failure that should exit with status 1."""


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=1, sort_keys=True))
    else:
        print(text)


def _classical(g, what: str) -> ClassicalGraph:
    if isinstance(g, ClassicalGraph):
        return g
    try:
        return to_classical(g)
    except ValueError:
        raise CommandFailure(f"{what} needs a classical graph") from None


# ----------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    qg = as_quantum(load_graph(args.graph, strict=False))
    if args.normalization:
        qg = QuantumGraph(qg.space, qg.adjacency, Normalization(args.normalization))
    rep = check_quantum_graph(qg)
    lines = [
        f"self-adjoint:     {'pass' if rep.self_adjoint else 'FAIL'}",
        f"schur idempotent: {'pass' if rep.schur_idempotent else 'FAIL'}"
        + (f" (c = {rep.as_dict()['schur_constant']})" if rep.schur_constant is not None else ""),
        f"undirected:       {'pass' if rep.undirected else 'FAIL'}",
        f"irreflexive:      {'yes' if rep.irreflexive else 'no'}",
        "result: " + ("ok" if rep.ok else "failed axioms: " + ", ".join(rep.failures)),
    ]
    _emit(args, {"command": "check", **rep.as_dict(), "failures": rep.failures}, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_mycielski(args) -> int:
    if args.r == 1:
        # mu_0(G) = G: keep the file content unchanged
        Path(args.output).write_bytes(Path(args.graph).read_bytes())
        load_graph(args.output)
        _emit(args, {"command": "mycielski", "r": 1, "output": args.output}, f"wrote {args.output} (r = 1, unchanged)")
        return EXIT_OK
    g = load_graph(args.graph)
    qg = as_quantum(g)
    try:
        mu = mycielskian(qg, args.r)
    except MycielskiError as exc:
        raise CommandFailure(str(exc)) from None
    doc = graph_to_doc(mu)
    write_json(args.output, doc)
    _emit(args, {"command": "mycielski", "r": args.r, "output": args.output,
                 "vertices_or_dim": mu.space.dim, "delta_sq": doc["delta_sq"]},
          f"wrote {args.output}: dim {mu.space.dim}, delta^2 = {doc['delta_sq']}")
    return EXIT_OK


def cmd_twins(args) -> int:
    g = load_graph(args.graph)
    if isinstance(g, QuantumGraph):
        try:
            g = to_classical(g)
        except ValueError:
            v = quantum_twin_verdict(g)
            _emit(args, {"command": "twins", "classical": False, **v.as_dict()},
                  f"quantum graph; quantum-twin verdict: {v}")
            return EXIT_OK
    pairs = classical_twins(g)
    v = pattern_twin_solver(g)
    head = "twin-free" if not pairs else "twins: " + ", ".join(f"({i + 1},{j + 1})" for i, j in pairs)
    text = f"{head}; quantum-twin verdict: {v}"
    _emit(args, {"command": "twins", "classical": True, "twin_pairs": [[i + 1, j + 1] for i, j in pairs],
                 **v.as_dict()}, text)
    return EXIT_OK


def cmd_fulton(args) -> int:
    g = _classical(load_graph(args.graph), "fulton")
    pat = fulton_pattern(g, args.l_max)
    rows = pat.rows()
    width = max(len(x) for r in rows for x in r)
    text = "\n".join(" ".join(x.rjust(width) for x in r) for r in rows)
    text += "\nclasses: " + " ".join("{" + ",".join(str(v + 1) for v in c) + "}" for c in pat.classes)
    _emit(args, {"command": "fulton", "symbols": list(pat.symbols), "pattern": rows,
                 "classes": [[v + 1 for v in c] for c in pat.classes], "affine": pat.affine}, text)
    return EXIT_OK


def cmd_dist(args) -> int:
    g = _classical(load_graph(args.graph), "dist")
    try:
        d, lab = distinguishing_search(g, args.max_colors, args.limit)
    except LabelingError as exc:
        raise CommandFailure(str(exc)) from None
    _emit(args, {"command": "dist", "distinguishing_number": d, "labeling": list(lab.labels)},
          f"{d}\nlabeling: {' '.join(map(str, lab.labels))}")
    return EXIT_OK


def cmd_iso_verify(args) -> int:
    cert = load_certificate(args.cert)
    try:
        rep = verify_iso_certificate(cert)
    except CertificateError as exc:
        raise CommandFailure(str(exc)) from None
    lines = [f"{k}: {'pass' if v else 'FAIL'} (residual {rep.residuals[k]:.3g})" for k, v in rep.passed.items()]
    lines.append("result: " + ("valid" if rep.ok else "invalid"))
    _emit(args, {"command": "iso verify", **rep.as_dict()}, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_iso_lift(args) -> int:
    cert = load_certificate(args.cert)
    try:
        lifted = lift_certificate(cert, args.r)
        rep = verify_iso_certificate(lifted)
    except (CertificateError, MycielskiError) as exc:
        raise CommandFailure(str(exc)) from None
    write_json(args.output, certificate_to_doc(lifted))
    _emit(args, {"command": "iso lift", "r": args.r, "output": args.output, **rep.as_dict()},
          f"wrote {args.output}; lifted certificate {'valid' if rep.ok else 'INVALID'}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_catalog_verify(args) -> int:
    rep = catalog.verify_appendix()
    lines = [f"{len(rep.rows)} checks, {len(rep.mismatches)} mismatches"]
    for m in rep.mismatches:
        lines.append(f"MISMATCH {m['graph']} {m['check']}: expected {m['expected']}, got {m['computed']}")
    lines.append("twin-free singular six-vertex entries: " + ", ".join(rep.twin_free_singular_six))
    for c in rep.circulants:
        lines.append(f"{c['graph']} {c['reading']}: {c['twin_pairs']} twin pairs, det {c['det']}")
    _emit(args, {"command": "catalog verify-appendix", **rep.as_dict()}, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_catalog_export(args) -> int:
    bundle = catalog.export_bundle()
    if args.output:
        write_json(args.output, bundle)
        print(f"wrote {len(bundle['entries'])} entries to {args.output}")
    else:
        print(json.dumps(bundle, indent=1))
    return EXIT_OK


def cmd_catalog_graph(args) -> int:
    try:
        entry = catalog.get(args.name)
    except catalog.CatalogError as exc:
        raise FormatError(str(exc.args[0])) from None
    doc = graph_to_doc(entry.graph)
    if args.output:
        write_json(args.output, doc)
        print(f"wrote {entry.name} to {args.output}")
    else:
        print(json.dumps(doc, indent=1))
    return EXIT_OK


def cmd_catalog_list(args) -> int:
    for name in catalog.names():
        e = catalog.get(name)
        flag = f"  [erratum: {e.erratum}]" if e.erratum else ""
        print(f"{name}\t{e.graph.n} vertices{flag}")
    return EXIT_OK


# ----------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmyc", description="Quantum graphs and quantum Mycielskians.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify the quantum graph axioms")
    c.add_argument("graph")
    c.add_argument("--normalization", choices=["delta_sq", "one"])
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("mycielski", help="write the Mycielskian mu_{r-1}(G)")
    c.add_argument("graph")
    c.add_argument("-r", type=int, default=2)
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_mycielski)

    c = sub.add_parser("twins", help="classical twins and the quantum-twin verdict")
    c.add_argument("graph")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_twins)

    c = sub.add_parser("fulton", help="print the Fulton generating pattern")
    c.add_argument("graph")
    c.add_argument("--l-max", type=int, default=None)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_fulton)

    c = sub.add_parser("dist", help="distinguishing number")
    c.add_argument("graph")
    c.add_argument("--max-colors", type=int, default=None)
    c.add_argument("--limit", type=int, default=None, help="automorphism search size limit")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_dist)

    iso = sub.add_parser("iso", help="quantum isomorphism certificates").add_subparsers(dest="iso_cmd", required=True)
    c = iso.add_parser("verify")
    c.add_argument("cert")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_iso_verify)
    c = iso.add_parser("lift")
    c.add_argument("cert")
    c.add_argument("-r", type=int, required=True)
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_iso_lift)

    cat = sub.add_parser("catalog", help="shipped graph data").add_subparsers(dest="cat_cmd", required=True)
    c = cat.add_parser("verify-appendix")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_catalog_verify)
    c = cat.add_parser("export")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_catalog_export)
    c = cat.add_parser("graph", help="write one catalog graph as a graph file")
    c.add_argument("name")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_catalog_graph)
    c = cat.add_parser("list")
    c.set_defaults(func=cmd_catalog_list)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (CommandFailure, CertificateError, MycielskiError, AlgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
