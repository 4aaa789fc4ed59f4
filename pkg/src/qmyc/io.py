"""JSON file formats for graphs and isomorphism certificates.

Matrices in files use orthonormal GNS coordinates unless the document sets
``"basis": "matrix_units"``; the writer picks that basis when the operator is
exact but its orthonormal entries are irrational.  Complex entries are
``[re, im]`` pairs whose parts are integers, ``"p/q"`` strings, or floats;
rational data round-trips exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .algebra import (
    AlgebraError,
    Hilbert,
    LinearOperator,
    as_float,
    exact_sqrt,
    make_space,
)
from .graph import ClassicalGraph, GraphError, Normalization, QuantumGraph, from_classical
from .symmetry import IsoCertificate

SCHEMA_VERSION = 1


class FormatError(ValueError):
    pass


# ----------------------------------------------------------------------------
# scalars


def encode_real(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (int, np.integer)):
        return int(x)
    x = float(x)
    return int(x) if x.is_integer() and abs(x) < 2**53 else x


def encode_complex(z) -> list:
    if isinstance(z, (Fraction, int, np.integer)):
        return [encode_real(z), 0]
    z = complex(z)
    return [encode_real(z.real), encode_real(z.imag)]


def decode_real(x) -> Fraction | float:
    if isinstance(x, bool):
        raise FormatError(f"not a number: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            raise FormatError(f"not a rational: {x!r}") from None
    if isinstance(x, float):
        return x
    raise FormatError(f"not a number: {x!r}")


def decode_complex(z) -> Fraction | complex:
    if not (isinstance(z, list) and len(z) == 2):
        raise FormatError(f"complex entries must be [re, im] pairs, got {z!r}")
    re, im = decode_real(z[0]), decode_real(z[1])
    if isinstance(re, Fraction) and isinstance(im, Fraction) and im == 0:
        return re
    return complex(float(re), float(im))


# ----------------------------------------------------------------------------
# coordinate changes


def _ratio_sqrt(num, den):
    """``sqrt(num / den)``: exact if rational, else float."""
    if isinstance(num, Fraction) and isinstance(den, Fraction):
        s = exact_sqrt(num / den)
        if s is not None:
            return s
    return float(np.sqrt(float(num) / float(den)))


def _entries(entries, rows: int, cols: int) -> list[list]:
    try:
        vals = [[decode_complex(z) for z in row] for row in entries]
    except TypeError:
        raise FormatError("matrix must be a list of rows") from None
    if len(vals) != rows or any(len(r) != cols for r in vals):
        raise FormatError(f"matrix must be {rows}x{cols}")
    return vals


def _operator(vals, domain: Hilbert, codomain: Hilbert) -> LinearOperator:
    if all(isinstance(v, Fraction) for r in vals for v in r):
        out = np.empty((codomain.dim, domain.dim), dtype=object)
        for i, r in enumerate(vals):
            out[i, :] = r
        return LinearOperator(out, domain, codomain)
    return LinearOperator(np.array([[complex(v) for v in r] for r in vals], dtype=complex).reshape(
        codomain.dim, domain.dim), domain, codomain)


def decode_operator(entries, domain: Hilbert, codomain: Hilbert, basis: str = "orthonormal") -> LinearOperator:
    """File entries to an operator in matrix-unit coordinates."""
    vals = _entries(entries, codomain.dim, domain.dim)
    if basis == "matrix_units":
        return _operator(vals, domain, codomain)
    if basis != "orthonormal":
        raise FormatError(f"unknown basis {basis!r}")
    gd = np.sqrt(as_float(np.asarray(domain.gram)).real)
    gc = np.sqrt(as_float(np.asarray(codomain.gram)).real)
    out = [[None] * domain.dim for _ in range(codomain.dim)]
    for i in range(codomain.dim):
        for j in range(domain.dim):
            v = vals[i][j]
            if v == 0:
                out[i][j] = Fraction(0)
                continue
            s = _ratio_sqrt(domain.gram[j], codomain.gram[i]) if domain.exact and codomain.exact else None
            if isinstance(v, Fraction) and isinstance(s, Fraction):
                out[i][j] = v * s
            else:
                out[i][j] = complex(v) * float(gd[j] / gc[i]) if s is None else complex(v) * float(s)
    return _operator(out, domain, codomain)


def encode_operator(op: LinearOperator) -> tuple[list, str]:
    """Operator to file entries and the basis they are written in.

    Orthonormal coordinates are preferred; an exact operator whose orthonormal
    entries would be irrational is written in matrix units instead.
    """
    dom, cod = op.domain, op.codomain
    if op.exact and dom.exact and cod.exact:
        rows = []
        for i in range(cod.dim):
            row = []
            for j in range(dom.dim):
                v = op.matrix[i, j]
                s = Fraction(0) if v == 0 else _ratio_sqrt(cod.gram[i], dom.gram[j])
                if not isinstance(s, Fraction):
                    return [[encode_complex(z) for z in r] for r in op.matrix], "matrix_units"
                row.append(encode_complex(v * s))
            rows.append(row)
        return rows, "orthonormal"
    return [[encode_complex(z) for z in row] for row in op.on_matrix()], "orthonormal"


# ----------------------------------------------------------------------------
# graphs


def _require(doc: dict, key: str):
    if key not in doc:
        raise FormatError(f"missing field {key!r}")
    return doc[key]


def graph_from_doc(doc: dict, strict: bool = True) -> ClassicalGraph | QuantumGraph:
    """Parse a graph document.

    With ``strict=False`` a classical document is returned as a quantum graph
    on ``C^n`` without the simple-graph checks, so that axiom failures can be
    reported rather than rejected.
    """
    if not isinstance(doc, dict):
        raise FormatError("graph document must be a JSON object")
    kind = _require(doc, "kind")
    try:
        if kind == "classical":
            n = _require(doc, "n")
            adj = np.array(_require(doc, "adjacency"))
            if adj.shape != (n, n):
                raise FormatError(f"adjacency must be {n}x{n}")
            if adj.size and not np.all((adj == 0) | (adj == 1)):
                raise FormatError("classical adjacency entries must be 0 or 1")
            if strict:
                return ClassicalGraph(adj.astype(np.int64))
            base = from_classical(np.zeros((n, n), dtype=np.int64))
            return base.with_adjacency(base.space.operator(adj.astype(np.int64)))
        if kind == "quantum":
            blocks = _require(doc, "blocks")
            weights = _require(doc, "weights")
            space = make_space(blocks, weights)
            norm = Normalization(doc.get("normalization", "delta_sq"))
            adj = decode_operator(_require(doc, "adjacency"), space.hilbert, space.hilbert,
                                  doc.get("basis", "orthonormal"))
            return QuantumGraph(space, adj, norm)
    except (GraphError, AlgebraError) as exc:
        raise FormatError(str(exc)) from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from None
    raise FormatError(f"unknown graph kind {kind!r}")


def _is_classical_shaped(qg: QuantumGraph) -> bool:
    sp = qg.space
    if not (sp.algebra.is_commutative and sp.exact):
        return False
    ws = [w[0] for w in sp.form.weights]
    return all(w == ws[0] for w in ws) and qg.normalization is Normalization.DELTA_SQ and \
        qg.adjacency.exact and all(v in (0, 1) for v in qg.adjacency.matrix.flat)


def graph_to_doc(g: ClassicalGraph | QuantumGraph, prefer_classical: bool = True) -> dict:
    if isinstance(g, ClassicalGraph):
        return {"kind": "classical", "n": g.n, "adjacency": g.adjacency.tolist(),
                "delta_sq": g.n}
    if prefer_classical and _is_classical_shaped(g):
        m = g.adjacency.matrix
        return {"kind": "classical", "n": g.space.dim,
                "adjacency": [[int(v) for v in row] for row in m],
                "delta_sq": encode_real(g.delta_sq)}
    sp = g.space
    entries, basis = encode_operator(g.adjacency)
    doc = {
        "kind": "quantum",
        "blocks": list(sp.algebra.block_dims),
        "weights": [[encode_real(w) for w in ws] for ws in sp.form.weights],
        "adjacency": entries,
        "normalization": g.normalization.value,
        "delta_sq": encode_real(sp.delta_sq),
    }
    if basis != "orthonormal":
        doc["basis"] = basis
    return doc


def as_quantum(g: ClassicalGraph | QuantumGraph) -> QuantumGraph:
    return from_classical(g) if isinstance(g, ClassicalGraph) else g


def read_json(path: str | Path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def write_json(path: str | Path, doc) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_graph(path: str | Path, strict: bool = True):
    return graph_from_doc(read_json(path), strict)


def save_graph(path: str | Path, g) -> None:
    write_json(path, graph_to_doc(g))


# ----------------------------------------------------------------------------
# certificates


def certificate_from_doc(doc: dict) -> IsoCertificate:
    if not isinstance(doc, dict):
        raise FormatError("certificate must be a JSON object")
    d = _require(doc, "aux_dim")
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise FormatError("aux_dim must be a positive integer")
    src = as_quantum(graph_from_doc(_require(doc, "source")))
    tgt = as_quantum(graph_from_doc(_require(doc, "target")))
    grid = _require(doc, "p")
    ng, nf = src.space.dim, tgt.space.dim
    if not isinstance(grid, list) or len(grid) != nf or any(
            not isinstance(row, list) or len(row) != ng for row in grid):
        raise FormatError(f"p must be a {nf}x{ng} grid of {d}x{d} blocks")
    flat = [[None] * (ng * d) for _ in range(nf * d)]
    for i in range(nf):
        for j in range(ng):
            blk = grid[i][j]
            if not isinstance(blk, list) or len(blk) != d or any(len(r) != d for r in blk):
                raise FormatError(f"block ({i},{j}) must be {d}x{d}")
            for a in range(d):
                for b in range(d):
                    flat[i * d + a][j * d + b] = blk[a][b]
    dom = src.space.hilbert.tensor(Hilbert.aux(d))
    cod = tgt.space.hilbert.tensor(Hilbert.aux(d))
    p = decode_operator(flat, dom, cod, doc.get("basis", "orthonormal"))
    try:
        return IsoCertificate(src, tgt, d, p)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def certificate_to_doc(cert: IsoCertificate) -> dict:
    d = cert.aux_dim
    flat, basis = encode_operator(cert.p)
    nf, ng = cert.target.space.dim, cert.source.space.dim
    grid = [[[[flat[i * d + a][j * d + b] for b in range(d)] for a in range(d)]
             for j in range(ng)] for i in range(nf)]
    doc = {"aux_dim": d, "source": graph_to_doc(cert.source), "target": graph_to_doc(cert.target),
           "p": grid}
    if basis != "orthonormal":
        doc["basis"] = basis
    return doc


def load_certificate(path: str | Path) -> IsoCertificate:
    return certificate_from_doc(read_json(path))


def save_certificate(path: str | Path, cert: IsoCertificate) -> None:
    write_json(path, certificate_to_doc(cert))


__all__ = [
    "FormatError",
    "SCHEMA_VERSION",
    "as_quantum",
    "certificate_from_doc",
    "certificate_to_doc",
    "decode_operator",
    "encode_operator",
    "graph_from_doc",
    "graph_to_doc",
    "load_certificate",
    "load_graph",
    "save_certificate",
    "save_graph",
]
