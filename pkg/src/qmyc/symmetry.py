"""Twins, automorphisms, Fulton patterns, and quantum-isomorphism certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np
import sympy

from .algebra import (
    Hilbert,
    LinearOperator,
    as_float,
    exact_array,
    eye,
    is_exact,
    kron,
    tolerance,
)
from .graph import ClassicalGraph, Normalization, QuantumGraph, check_quantum_graph
from .mycielski import embeddings, mycielskian

DEFAULT_SIZE_LIMIT = 16


class SizeLimitError(ValueError):
    pass


class CertificateError(ValueError):
    pass


# ----------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``."""
        return Permutation(tuple(self.images[other.images[i]] for i in range(other.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.images) if i != j)

    def matrix(self) -> np.ndarray:
        """``P`` with ``P e_j = e_{sigma(j)}``."""
        m = np.zeros((self.n, self.n), dtype=np.int64)
        m[list(self.images), list(range(self.n))] = 1
        return m

    def operator(self, space) -> LinearOperator:
        """The induced map ``f -> f o sigma^{-1}`` on ``C^n`` as an operator."""
        if not space.algebra.is_commutative or space.dim != self.n:
            raise ValueError("permutation operators need a commutative algebra of matching size")
        return space.operator(exact_array(self.matrix()))


def is_automorphism(g: ClassicalGraph, sigma: Permutation) -> bool:
    p = sigma.matrix()
    return np.array_equal(p @ g.adjacency, g.adjacency @ p)


# ----------------------------------------------------------------------------
# twins and determinants


def classical_twins(g: ClassicalGraph) -> list[tuple[int, int]]:
    """Unordered pairs ``(i, j)``, ``i < j``, with ``N(i) = N(j)``."""
    nbrs = [g.neighbors(v) for v in range(g.n)]
    return [(i, j) for i, j in combinations(range(g.n), 2) if nbrs[i] == nbrs[j]]


def det_adjacency(g: ClassicalGraph | np.ndarray) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = g.adjacency if isinstance(g, ClassicalGraph) else np.asarray(g)
    m = [[int(x) for x in row] for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ----------------------------------------------------------------------------
# automorphism group


def _check_size(n: int, limit: int | None) -> None:
    limit = DEFAULT_SIZE_LIMIT if limit is None else limit
    if n > limit:
        raise SizeLimitError(f"{n} vertices exceed the size limit {limit}")


def automorphism_group(g: ClassicalGraph, limit: int | None = None) -> list[Permutation]:
    """All automorphisms by backtracking, sorted lexicographically by images.

    Candidates for ``sigma(v)`` must share the invariant (degree, sorted
    neighbour degrees) and be consistent with every earlier assignment.
    """
    _check_size(g.n, limit)
    n, a = g.n, g.adjacency
    deg = a.sum(axis=1)
    inv = [(int(deg[v]), tuple(sorted(int(deg[u]) for u in np.flatnonzero(a[v])))) for v in range(n)]
    cands = [[w for w in range(n) if inv[w] == inv[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(cands[v]), v))
    images = [-1] * n
    used = [False] * n
    out: list[Permutation] = []

    def extend(pos: int) -> None:
        if pos == n:
            out.append(Permutation(tuple(images)))
            return
        v = order[pos]
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for u in order[:pos]:
                if a[v, u] != a[w, images[u]]:
                    ok = False
                    break
            if not ok:
                continue
            images[v], used[w] = w, True
            extend(pos + 1)
            images[v], used[w] = -1, False

    extend(0)
    return sorted(out, key=lambda p: p.images)


# ----------------------------------------------------------------------------
# Fulton pattern


def diagonal_profiles(g: ClassicalGraph, l_max: int | None = None) -> list[tuple[int, ...]]:
    """``((A^l)_{vv})_{l=1..l_max}`` for every vertex, in exact integers."""
    l_max = g.n if l_max is None else l_max
    if l_max < 1:
        raise ValueError("l_max must be at least 1")
    a = [[int(x) for x in row] for row in g.adjacency]
    power = a
    diags = [[power[v][v]] for v in range(g.n)]
    for _ in range(1, l_max):
        power = [[sum(power[i][k] * a[k][j] for k in range(g.n)) for j in range(g.n)] for i in range(g.n)]
        for v in range(g.n):
            diags[v].append(power[v][v])
    return [tuple(d) for d in diags]


@dataclass(frozen=True, eq=False)
class GeneratingPattern:
    """Affine symbolic matrix over named projection symbols.

    ``coeffs[i, j]`` is an integer vector ``(beta_1, ..., beta_s, alpha)``
    encoding ``alpha + sum_k beta_k * symbols[k]``.
    """

    symbols: tuple[str, ...]
    coeffs: np.ndarray
    classes: tuple[tuple[int, ...], ...]
    affine: bool

    @property
    def n(self) -> int:
        return self.coeffs.shape[0]

    @property
    def zero_mask(self) -> np.ndarray:
        return ~np.any(self.coeffs != 0, axis=2)

    def entry(self, i: int, j: int) -> str:
        return _render(self.coeffs[i, j], self.symbols)

    def rows(self) -> list[list[str]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def row_sums_are_one(self) -> bool:
        one = np.zeros(len(self.symbols) + 1, dtype=np.int64)
        one[-1] = 1
        return all(np.array_equal(self.coeffs[i].sum(axis=0), one) for i in range(self.n)) and all(
            np.array_equal(self.coeffs[:, j].sum(axis=0), one) for j in range(self.n)
        )

    def substitute(self, values: dict[str, int]) -> np.ndarray:
        vec = np.array([values[s] for s in self.symbols] + [1], dtype=np.int64)
        return self.coeffs @ vec


def _render(vec: np.ndarray, symbols) -> str:
    const = int(vec[-1])
    terms = [(int(c), s) for c, s in zip(vec[:-1], symbols) if c != 0]
    if not terms:
        return str(const)
    parts = [] if const == 0 else [str(const)]
    for c, s in terms:
        if c == 1:
            parts.append(("+" if parts else "") + s)
        elif c == -1:
            parts.append("-" + s)
        else:
            parts.append(("+" if parts and c > 0 else "") + f"{c}*{s}")
    return "".join(parts)


def fulton_pattern(g: ClassicalGraph, l_max: int | None = None, prefix: str = "u",
                   labels=None) -> GeneratingPattern:
    """Zero ``u_ij`` whenever the diagonal profiles of ``i`` and ``j`` differ.

    Vertices with equal profiles form classes (ordered by first vertex).
    A class of size 1 is a fixed point; a class of size 2 becomes
    ``[[s, 1-s], [1-s, s]]``; a larger class of size ``m`` gets free symbols
    for its leading ``(m-1) x (m-1)`` block with the last row and column
    fixed by the unit row and column sums.  Symbols are numbered per class.

    ``labels`` (one per vertex) additionally separates vertices with
    different labels, which is the pattern of actions preserving the
    corresponding diagonal partition.
    """
    prof = diagonal_profiles(g, l_max)
    if labels is not None:
        if len(labels) != g.n:
            raise ValueError("one label per vertex expected")
        prof = [p + (("label", labels[v]),) for v, p in enumerate(prof)]
    classes: list[list[int]] = []
    seen: dict[tuple, int] = {}
    for v, p in enumerate(prof):
        if p not in seen:
            seen[p] = len(classes)
            classes.append([])
        classes[seen[p]].append(v)
    symbols: list[str] = []
    entries: list[tuple[int, int, dict, int]] = []
    affine = True
    for ci, cls in enumerate(classes, start=1):
        m = len(cls)
        if m == 1:
            entries.append((cls[0], cls[0], {}, 1))
        elif m == 2:
            s = f"{prefix}{ci}"
            symbols.append(s)
            a, b = cls
            entries += [(a, a, {s: 1}, 0), (b, b, {s: 1}, 0), (a, b, {s: -1}, 1), (b, a, {s: -1}, 1)]
        else:
            affine = False
            free = {}
            for x in range(m - 1):
                for y in range(m - 1):
                    free[x, y] = f"{prefix}{ci}_{x + 1}{y + 1}"
                    symbols.append(free[x, y])
            for x in range(m - 1):
                for y in range(m - 1):
                    entries.append((cls[x], cls[y], {free[x, y]: 1}, 0))
                entries.append((cls[x], cls[m - 1], {free[x, y]: -1 for y in range(m - 1)}, 1))
                entries.append((cls[m - 1], cls[x], {free[y, x]: -1 for y in range(m - 1)}, 1))
            entries.append((cls[m - 1], cls[m - 1], {s: 1 for s in free.values()}, -(m - 2)))
    n = g.n
    coeffs = np.zeros((n, n, len(symbols) + 1), dtype=np.int64)
    idx = {s: k for k, s in enumerate(symbols)}
    for i, j, terms, const in entries:
        for s, c in terms.items():
            coeffs[i, j, idx[s]] += c
        coeffs[i, j, -1] += const
    return GeneratingPattern(tuple(symbols), coeffs, tuple(tuple(c) for c in classes), affine)


# ----------------------------------------------------------------------------
# quantum twins


class TwinStatus(enum.Enum):
    HAS_CLASSICAL_TWINS = "HasClassicalTwins"
    NO_QUANTUM_TWINS = "NoQuantumTwins"
    UNKNOWN = "Unknown"


class ProofTag(enum.Enum):
    INVERTIBLE_A = "InvertibleA"
    PATTERN_FORCED = "PatternForced"


@dataclass(frozen=True)
class TwinVerdict:
    status: TwinStatus
    witnesses: tuple[tuple[int, int], ...] = ()
    proof: ProofTag | None = None
    det: int | None = None
    derived: tuple[str, ...] = ()
    reason: str = ""

    def __str__(self) -> str:
        if self.proof is not None:
            return f"{self.status.value}({self.proof.value})"
        return self.status.value

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "proof": None if self.proof is None else self.proof.value,
            "verdict": str(self),
            "witnesses": [list(p) for p in self.witnesses],
            "det": self.det,
            "derived": list(self.derived),
            "reason": self.reason,
        }


def _commutator_rows(coeffs: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Rows of ``PA - AP`` as affine forms over the pattern's symbols."""
    pa = np.einsum("iks,kj->ijs", coeffs, a)
    ap = np.einsum("ik,kjs->ijs", a, coeffs)
    return (pa - ap).reshape(-1, coeffs.shape[2])


def _implied(system: sympy.Matrix, rank: int, vec) -> bool:
    return system.col_join(sympy.Matrix([list(vec)])).rank() == rank


def pattern_twin_solver(g: ClassicalGraph, pat: GeneratingPattern | None = None) -> TwinVerdict:
    """Decide quantum twins by linear deduction on the generating pattern.

    Two copies ``P`` (symbols ``p``) and ``Q`` (symbols ``q``) of the pattern
    are constrained by ``PA = AP``, ``QA = AQ`` and ``PA = QA``; the symbols
    are treated as independent coordinates next to a constant coordinate.
    An equation is implied when appending it leaves the rank unchanged.
    """
    twins = classical_twins(g)
    if twins:
        return TwinVerdict(TwinStatus.HAS_CLASSICAL_TWINS, tuple(twins), reason="identical rows")
    det = det_adjacency(g)
    if det != 0:
        return TwinVerdict(TwinStatus.NO_QUANTUM_TWINS, proof=ProofTag.INVERTIBLE_A, det=det,
                           reason="A is invertible")
    pat = fulton_pattern(g) if pat is None else pat
    if not pat.affine:
        return TwinVerdict(TwinStatus.UNKNOWN, det=det,
                           reason="a Fulton class has three or more vertices")
    a = g.adjacency.astype(np.int64)
    s = len(pat.symbols)
    p_rows = _commutator_rows(pat.coeffs, a)
    # variables: p_1..p_s, q_1..q_s, 1
    def as_p(rows):
        return np.hstack([rows[:, :s], np.zeros((len(rows), s), dtype=np.int64), rows[:, s:]])

    def as_q(rows):
        return np.hstack([np.zeros((len(rows), s), dtype=np.int64), rows[:, :s], rows[:, s:]])

    p_sys = as_p(p_rows)
    q_sys = as_q(p_rows)
    pa = np.einsum("iks,kj->ijs", pat.coeffs, a).reshape(-1, s + 1)
    # PA - QA: the constant parts cancel
    diff = np.hstack([pa[:, :s], -pa[:, :s], np.zeros((len(pa), 1), dtype=np.int64)])

    names_p = [f"p{k + 1}" for k in range(s)]
    names_q = [f"q{k + 1}" for k in range(s)]
    derived: list[str] = []
    stage1 = sympy.Matrix(np.vstack([p_sys, q_sys]).tolist())
    r1 = stage1.rank()
    for names, off in ((names_p, 0), (names_q, s)):
        for i, j in combinations(range(s), 2):
            v = [0] * (2 * s + 1)
            v[off + i], v[off + j] = 1, -1
            if _implied(stage1, r1, v):
                derived.append(f"{names[j]}={names[i]}")
    full = sympy.Matrix(np.vstack([p_sys, q_sys, diff]).tolist())
    rf = full.rank()
    forced = []
    for k in range(s):
        v = [0] * (2 * s + 1)
        v[k], v[s + k] = 1, -1
        forced.append(_implied(full, rf, v))
        if forced[-1]:
            derived.append(f"{names_p[k]}={names_q[k]}")
    if all(forced):
        return TwinVerdict(TwinStatus.NO_QUANTUM_TWINS, proof=ProofTag.PATTERN_FORCED, det=det,
                           derived=tuple(derived), reason="P = Q is forced")
    return TwinVerdict(TwinStatus.UNKNOWN, det=det, derived=tuple(derived),
                       reason="linear constraints leave P and Q independent")


def pattern_forces_identity(g: ClassicalGraph, pat: GeneratingPattern) -> bool | None:
    """Whether ``PA = AP`` forces every symbol of an affine pattern to 1.

    Returns None for non-affine patterns (the question is left open).
    """
    if not pat.affine:
        return None
    s = len(pat.symbols)
    if s == 0:
        return True
    rows = _commutator_rows(pat.coeffs, g.adjacency.astype(np.int64))
    system = sympy.Matrix(rows.tolist())
    rank = system.rank()
    for k in range(s):
        v = [0] * (s + 1)
        v[k], v[s] = 1, -1
        if not _implied(system, rank, v):
            return False
    return True


def quantum_twin_verdict(qg: QuantumGraph, tol: float | None = None) -> TwinVerdict:
    """Verdict for an arbitrary quantum graph: only the invertible-A fast path applies."""
    m = qg.adjacency.on_matrix()
    sv = np.linalg.svd(m, compute_uv=False)
    if sv.size and sv.min() > tolerance(tol) * max(1.0, sv.max()):
        return TwinVerdict(TwinStatus.NO_QUANTUM_TWINS, proof=ProofTag.INVERTIBLE_A,
                           reason="A is invertible")
    return TwinVerdict(TwinStatus.UNKNOWN, reason="singular A on a quantum graph")


# ----------------------------------------------------------------------------
# certificates


@dataclass(frozen=True, eq=False)
class IsoCertificate:
    """``p: L^2(G) (x) C^d -> L^2(F) (x) C^d`` with ``rho(e_j) = sum_i f_i (x) p_ij``.

    ``p`` is stored in matrix-unit coordinates, so the ``(i, j)`` block of
    its matrix is the coefficient ``p_ij``.
    """

    source: QuantumGraph
    target: QuantumGraph
    aux_dim: int
    p: LinearOperator

    def __post_init__(self):
        d = self.aux_dim
        dom = self.source.space.hilbert.tensor(Hilbert.aux(d))
        cod = self.target.space.hilbert.tensor(Hilbert.aux(d))
        if self.p.shape != (cod.dim, dom.dim):
            raise CertificateError(
                f"p has shape {self.p.shape}, expected {(cod.dim, dom.dim)}"
            )
        if not (self.p.domain.same_as(dom) and self.p.codomain.same_as(cod)):
            object.__setattr__(self, "p", LinearOperator(self.p.matrix, dom, cod))

    def rho(self, j: int) -> np.ndarray:
        """``rho(e_j)`` as the stacked blocks ``(p_ij)_i``, shape ``(dim F, d, d)``."""
        d = self.aux_dim
        col = self.p.matrix[:, j * d:(j + 1) * d]
        return col.reshape(self.target.space.dim, d, d)


def permutation_certificate(source: QuantumGraph, target: QuantumGraph,
                            sigma: Permutation, aux_dim: int = 1) -> IsoCertificate:
    p = kron(exact_array(sigma.matrix()), eye(aux_dim, True))
    dom = source.space.hilbert.tensor(Hilbert.aux(aux_dim))
    cod = target.space.hilbert.tensor(Hilbert.aux(aux_dim))
    return IsoCertificate(source, target, aux_dim, LinearOperator(p, dom, cod))


@dataclass(frozen=True)
class CertReport:
    passed: dict
    residuals: dict

    @property
    def ok(self) -> bool:
        return all(self.passed.values())

    def as_dict(self) -> dict:
        return {"ok": self.ok, "passed": dict(self.passed),
                "residuals": {k: float(v) for k, v in self.residuals.items()}}


def _block_product(space, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Product in ``C(F) (x) M_d`` of stacked blocks ``x, y`` (shape ``(dim, d, d)``)."""
    alg = space.algebra
    if alg.is_commutative:
        return np.matmul(x, y)
    out = np.zeros_like(x) if not is_exact(x) else np.full(x.shape, Fraction(0), dtype=object)
    for i, n in enumerate(alg.block_dims):
        for j in range(n):
            for k in range(n):
                a = alg.index(i, j, k)
                for l in range(n):
                    out[alg.index(i, j, l)] += x[a].dot(y[alg.index(i, k, l)])
    return out


def _block_star(space, x: np.ndarray) -> np.ndarray:
    out = x[space.star_index].transpose(0, 2, 1)
    return out if is_exact(out) else out.conj()


def _diff_norm(x: np.ndarray, y: np.ndarray) -> float:
    if is_exact(x) and is_exact(y):
        return 0.0 if all(a == b for a, b in zip(x.flat, y.flat)) else \
            float(np.max(np.abs(as_float(x) - as_float(y))))
    return float(np.max(np.abs(as_float(x) - as_float(y)), initial=0.0))


def verify_iso_certificate(cert: IsoCertificate, tol: float | None = None) -> CertReport:
    """Residuals of the relations making ``x -> p(x (x) 1)`` an intertwining *-isomorphism."""
    tol = tolerance(tol)
    g, f = cert.source, cert.target
    require_valid_graph(g, tol)
    require_valid_graph(f, tol)
    if g.delta_sq != f.delta_sq and (
        isinstance(g.delta_sq, Fraction) and isinstance(f.delta_sq, Fraction)
        or abs(float(g.delta_sq) - float(f.delta_sq)) > tol * max(1.0, float(g.delta_sq))
    ):
        raise CertificateError(f"delta^2 mismatch: {g.delta_sq} != {f.delta_sq}")
    d = cert.aux_dim
    sg, sf = g.space, f.space
    p = cert.p
    res: dict[str, float] = {}
    passed: dict[str, bool] = {}

    def record(name: str, op: LinearOperator) -> None:
        zero = op.is_zero(tol)
        res[name] = 0.0 if zero and op.exact else op.norm()
        passed[name] = zero

    record("unitary_left", p.adjoint() @ p - LinearOperator.identity(p.domain))
    record("unitary_right", p @ p.adjoint() - LinearOperator.identity(p.codomain))
    one_g = LinearOperator(kron(sg.unit.reshape(-1, 1), eye(d, True)),
                           Hilbert.aux(d), p.domain)
    one_f = LinearOperator(kron(sf.unit.reshape(-1, 1), eye(d, True)),
                           Hilbert.aux(d), p.codomain)
    record("unital", p @ one_g - one_f)

    blocks = [cert.rho(j) for j in range(sg.dim)]
    worst = 0.0
    for a in range(sg.dim):
        for b in range(sg.dim):
            ab = sg.multiply(sg.basis_vector(a), sg.basis_vector(b))
            target = sum((blocks[c] * ab[c] for c in range(sg.dim) if ab[c] != 0),
                         start=np.zeros_like(blocks[0]))
            worst = max(worst, _diff_norm(_block_product(sf, blocks[a], blocks[b]), target))
    res["multiplicative"] = worst
    passed["multiplicative"] = worst <= tol
    worst = 0.0
    for j in range(sg.dim):
        worst = max(worst, _diff_norm(blocks[sg.star_index[j]], _block_star(sf, blocks[j])))
    res["star_preserving"] = worst
    passed["star_preserving"] = worst <= tol

    ag = g.renormalized(Normalization.DELTA_SQ).adjacency.amplify(d)
    af = f.renormalized(Normalization.DELTA_SQ).adjacency.amplify(d)
    ag = LinearOperator(ag.matrix, p.domain, p.domain)
    af = LinearOperator(af.matrix, p.codomain, p.codomain)
    record("intertwining", af @ p - p @ ag)
    return CertReport(passed, res)


def lift_certificate(cert: IsoCertificate, r: int, tol: float | None = None) -> IsoCertificate:
    """``p_hat = w_F0 w_G0^* + sum_k w_Fk p w_Gk^*`` between the Mycielskians."""
    rep = verify_iso_certificate(cert, tol)
    if not rep.ok:
        bad = [k for k, v in rep.passed.items() if not v]
        raise CertificateError(f"input certificate is invalid: fails {', '.join(bad)}")
    if r == 1:
        return cert
    g, f = cert.source, cert.target
    eg, ef = embeddings(g, r), embeddings(f, r)
    d = cert.aux_dim
    pm = cert.p.matrix
    total = ef.sandwich(0, eye(d, True), 0, aux_dim=d, source=eg)
    for k in range(1, r + 1):
        total = total + ef.sandwich(k, pm, k, aux_dim=d, source=eg)
    return IsoCertificate(mycielskian(g, r, tol), mycielskian(f, r, tol), d, total)


def require_valid_graph(qg: QuantumGraph, tol: float | None = None) -> None:
    rep = check_quantum_graph(qg, tol)
    if not rep.ok:
        raise CertificateError(f"graph fails axioms: {', '.join(rep.failures)}")


__all__ = [
    "CertReport",
    "CertificateError",
    "DEFAULT_SIZE_LIMIT",
    "GeneratingPattern",
    "IsoCertificate",
    "Permutation",
    "ProofTag",
    "SizeLimitError",
    "TwinStatus",
    "TwinVerdict",
    "automorphism_group",
    "classical_twins",
    "det_adjacency",
    "diagonal_profiles",
    "fulton_pattern",
    "is_automorphism",
    "lift_certificate",
    "pattern_forces_identity",
    "pattern_twin_solver",
    "permutation_certificate",
    "quantum_twin_verdict",
    "verify_iso_certificate",
]
