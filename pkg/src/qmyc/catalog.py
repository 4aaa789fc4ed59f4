"""Shipped graphs, standard generators, and the table-reproduction harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from ._catalog_data import MATRICES, PRINTED_ANNOTATION
from .graph import ClassicalGraph
from .symmetry import classical_twins, det_adjacency


class CatalogError(KeyError):
    pass


@dataclass(frozen=True)
class Expected:
    has_twins: bool
    det: int | None = None
    quantum_symmetric: bool = True

    def as_dict(self) -> dict:
        return {"has_twins": self.has_twins, "det": self.det,
                "quantum_symmetric": self.quantum_symmetric}


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    name: str
    graph: ClassicalGraph
    expected: Expected | None
    printed_rows: tuple[str, ...] | None = None
    erratum: str | None = None
    source: str = "table"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.graph.n,
            "adjacency": self.graph.adjacency.tolist(),
            "expected": None if self.expected is None else self.expected.as_dict(),
            "printed_rows": None if self.printed_rows is None else list(self.printed_rows),
            "erratum": self.erratum,
            "source": self.source,
        }


# ----------------------------------------------------------------------------
# generators


def complete(n: int) -> ClassicalGraph:
    if n < 1:
        raise ValueError("K_n needs n >= 1")
    return ClassicalGraph(np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64))


def circulant(n: int, jumps) -> ClassicalGraph:
    """Vertices ``Z_n``, ``i ~ i +- s`` for ``s`` in ``jumps``."""
    if n < 1:
        raise ValueError("circulant needs n >= 1")
    a = np.zeros((n, n), dtype=np.int64)
    for s in jumps:
        s = int(s) % n
        if s == 0:
            raise ValueError("jump 0 would create loops")
        for i in range(n):
            a[i, (i + s) % n] = a[(i + s) % n, i] = 1
    return ClassicalGraph(a)


def cycle(n: int) -> ClassicalGraph:
    if n < 3:
        raise ValueError("C_n needs n >= 3")
    return circulant(n, [1])


def path(n: int) -> ClassicalGraph:
    if n < 1:
        raise ValueError("P_n needs n >= 1")
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        a[i, i + 1] = a[i + 1, i] = 1
    return ClassicalGraph(a)


def empty(n: int) -> ClassicalGraph:
    return ClassicalGraph(np.zeros((n, n), dtype=np.int64))


def cartesian_product(g: ClassicalGraph, h: ClassicalGraph) -> ClassicalGraph:
    """``A_g (x) 1 + 1 (x) A_h``; vertex ``(a, b)`` has index ``a * |h| + b``."""
    return ClassicalGraph(
        np.kron(g.adjacency, np.eye(h.n, dtype=np.int64)) + np.kron(np.eye(g.n, dtype=np.int64), h.adjacency)
    )


def hypercube(k: int) -> ClassicalGraph:
    if k < 1:
        raise ValueError("Q_k needs k >= 1")
    g = complete(2)
    for _ in range(k - 1):
        g = cartesian_product(g, complete(2))
    return g


def generate(family: str, *params) -> ClassicalGraph:
    """``K``/``C``/``P``/``empty`` (n), ``circulant`` (n, jumps), ``hypercube`` (k), ``cartesian`` (g, h)."""
    fam = family.lower()
    table = {
        "k": complete, "complete": complete,
        "c": cycle, "cycle": cycle,
        "p": path, "path": path,
        "empty": empty,
        "circulant": circulant,
        "q": hypercube, "hypercube": hypercube,
        "cartesian": cartesian_product, "cartesian_product": cartesian_product,
    }
    if fam not in table:
        raise ValueError(f"unknown family {family!r}")
    return table[fam](*params)


# ----------------------------------------------------------------------------
# entries


ALIASES = {"K6": "G6_55", "K4": "G4_3", "G6": "G6_38", "Tesseract": "Q4"}

_FIVE_TWIN_FREE = {"G5_5": -4, "G5_7": -2}


def _symmetrize(rows: tuple[str, ...]) -> tuple[ClassicalGraph, str | None]:
    a = np.array([[int(c) for c in r] for r in rows], dtype=np.int64)
    if np.array_equal(a, a.T):
        return ClassicalGraph(a), None
    missing = [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(a != a.T)) if a[i, j] == 0]
    return ClassicalGraph(a | a.T), (
        "printed matrix is not symmetric; stored as its symmetric closure (added entries "
        + ", ".join(f"({i},{j})" for i, j in missing) + ")"
    )


@lru_cache(maxsize=None)
def _entries() -> dict[str, CatalogEntry]:
    out: dict[str, CatalogEntry] = {}
    printed = {name: rows for name, rows in MATRICES.items()}
    seen_rows: dict[tuple, str] = {}
    for name, rows in printed.items():
        g, note = _symmetrize(rows)
        if name.startswith("G6_"):
            ann = PRINTED_ANNOTATION[name]
            exp = Expected(has_twins=ann == "twins", det=None if ann == "twins" else int(ann))
        elif name.startswith("G5_"):
            twin_free = name in _FIVE_TWIN_FREE
            exp = Expected(has_twins=not twin_free, det=_FIVE_TWIN_FREE.get(name))
        elif name.startswith("G4_"):
            exp = Expected(has_twins=name != "G4_3")
        else:
            exp = Expected(has_twins=False, det=0)
        if rows in seen_rows:
            dup = f"printed identically to {seen_rows[rows]}"
            note = dup if note is None else f"{note}; {dup}"
        else:
            seen_rows[rows] = name
        out[name] = CatalogEntry(name, g, exp, rows, note)
    k6_rows = tuple("".join("0" if i == j else "1" for j in range(6)) for i in range(6))
    out["G6_55"] = CatalogEntry(
        "G6_55", complete(6), Expected(has_twins=False, det=-5), None,
        "labelled K_5 in the table; det -5 and six vertices force K_6 (det K_5 = 4)",
        "generated",
    )
    assert out["G6_55"].graph == ClassicalGraph.from_rows(k6_rows)
    out["K5"] = CatalogEntry("K5", complete(5), Expected(has_twins=False, det=4), None, None, "generated")
    out["Q4"] = CatalogEntry("Q4", hypercube(4), Expected(has_twins=False, det=0), None, None, "generated")
    return dict(sorted(out.items(), key=lambda kv: _sort_key(kv[0])))


def _sort_key(name: str):
    head, _, tail = name.partition("_")
    return (head, int(tail) if tail.isdigit() else 0, name)


def names() -> list[str]:
    return list(_entries())


def get(name: str) -> CatalogEntry:
    key = ALIASES.get(name, name)
    try:
        return _entries()[key]
    except KeyError:
        raise CatalogError(f"unknown catalog graph {name!r}") from None


def entries() -> list[CatalogEntry]:
    return list(_entries().values())


def six_vertex_names() -> list[str]:
    return [n for n in names() if n.startswith("G6_")]


def five_vertex_names() -> list[str]:
    return ["K5"] + [n for n in names() if n.startswith("G5_")]


def four_vertex_names() -> list[str]:
    return [n for n in names() if n.startswith("G4_")]


# ----------------------------------------------------------------------------
# reproduction harness


@dataclass
class ReproductionReport:
    rows: list[dict] = field(default_factory=list)
    twin_free_singular_six: list[str] = field(default_factory=list)
    twin_free_five: dict[str, int] = field(default_factory=dict)
    circulants: list[dict] = field(default_factory=list)

    @property
    def mismatches(self) -> list[dict]:
        return [r for r in self.rows if not r["ok"]]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "mismatch_count": len(self.mismatches),
            "checks": self.rows,
            "twin_free_singular_six_vertex": self.twin_free_singular_six,
            "twin_free_five_vertex": self.twin_free_five,
            "circulant_candidates": self.circulants,
        }


CIRCULANT_CLAIMS = {(10, 4): 5, (12, 5): 6}


def circulant_candidates(n: int, k: int) -> list[dict]:
    """Twin counts and determinants of the plausible readings of ``C_n(k)``."""
    readings = {
        "jumps {k}": [k],
        "jumps {1,k}": [1, k],
        "jumps {1..k}": list(range(1, k + 1)),
    }
    out = []
    for label, jumps in readings.items():
        g = circulant(n, jumps)
        out.append({
            "graph": f"C{n}({k})",
            "reading": label,
            "jumps": jumps,
            "twin_pairs": len(classical_twins(g)),
            "det": det_adjacency(g),
            "claimed_twin_pairs": CIRCULANT_CLAIMS.get((n, k)),
        })
    return out


def verify_appendix() -> ReproductionReport:
    rep = ReproductionReport()

    def check(name: str, what: str, expected, computed) -> None:
        rep.rows.append({"graph": name, "check": what, "expected": expected,
                         "computed": computed, "ok": expected == computed})

    for name in six_vertex_names() + five_vertex_names() + four_vertex_names() + ["K2xK5", "C4xC3", "Q4"]:
        e = get(name)
        twins = bool(classical_twins(e.graph))
        det = det_adjacency(e.graph)
        check(name, "has_twins", e.expected.has_twins, twins)
        if e.expected.det is not None:
            check(name, "det", e.expected.det, det)
        if name.startswith("G6_") and not twins and det == 0:
            rep.twin_free_singular_six.append(name)
        if (name.startswith("G5_") or name == "K5") and not twins:
            rep.twin_free_five[name] = det
    check("six-vertex table", "unique twin-free singular entry", ["G6_38"], rep.twin_free_singular_six)
    check("five-vertex list", "twin-free entries and determinants",
          {"K5": 4, "G5_5": -4, "G5_7": -2}, rep.twin_free_five)
    check("K2xK5", "equals cartesian(K2, K5)", True, get("K2xK5").graph == cartesian_product(complete(2), complete(5)))
    check("C4xC3", "equals cartesian(C4, C3)", True, get("C4xC3").graph == cartesian_product(cycle(4), cycle(3)))
    for (n, k), claimed in CIRCULANT_CLAIMS.items():
        cands = circulant_candidates(n, k)
        rep.circulants.extend(cands)
        matching = [c["reading"] for c in cands if c["twin_pairs"] == claimed and c["det"] == 0]
        check(f"C{n}({k})", "some reading has the claimed twin pairs and det 0", True, bool(matching))
    return rep


def export_bundle() -> dict:
    return {"schema_version": 1, "aliases": dict(ALIASES), "entries": [e.as_dict() for e in entries()]}


__all__ = [
    "ALIASES",
    "CatalogEntry",
    "CatalogError",
    "Expected",
    "ReproductionReport",
    "cartesian_product",
    "circulant",
    "circulant_candidates",
    "complete",
    "cycle",
    "empty",
    "entries",
    "export_bundle",
    "generate",
    "get",
    "hypercube",
    "names",
    "path",
    "verify_appendix",
]
