"""Quantum graphs ``(V, psi, A)``, their axioms, and the classical dictionary."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import (
    AlgebraError,
    GnsSpace,
    LinearOperator,
    as_float,
    exact_array,
    is_exact,
    tolerance,
    uniform_space,
    zeros,
)


class GraphError(ValueError):
    pass


class Normalization(enum.Enum):
    """Which constant ``c`` the Schur identity ``m(A (x) A)m^* = c A`` uses."""

    DELTA_SQ = "delta_sq"
    ONE = "one"


# ----------------------------------------------------------------------------
# classical graphs


@dataclass(frozen=True, eq=False)
class ClassicalGraph:
    adjacency: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError(f"adjacency must be square, got shape {a.shape}")
        if a.size and not np.all((a == 0) | (a == 1)):
            raise GraphError("adjacency entries must be 0 or 1")
        a = a.astype(np.int64)
        if not np.array_equal(a, a.T):
            raise GraphError("adjacency is not symmetric")
        if np.any(np.diag(a)):
            raise GraphError("adjacency has a non-zero diagonal (loops)")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(int(u) for u in np.flatnonzero(self.adjacency[v]))

    def __eq__(self, other):
        return isinstance(other, ClassicalGraph) and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash(self.adjacency.tobytes())

    def relabel(self, images) -> "ClassicalGraph":
        """Graph with vertex ``v`` renamed ``images[v]``."""
        p = np.asarray(images)
        out = np.zeros_like(self.adjacency)
        out[np.ix_(p, p)] = self.adjacency
        return ClassicalGraph(out)

    @classmethod
    def from_rows(cls, rows) -> "ClassicalGraph":
        return cls(np.array([[int(c) for c in row] for row in rows], dtype=np.int64))


# ----------------------------------------------------------------------------
# structure maps built from m and eta


def schur_product(space: GnsSpace, a: LinearOperator, b: LinearOperator) -> LinearOperator:
    """``m (a (x) b) m^*`` without forming the tensor product.

    With ``m^*(e_{jl}) = sum_k w_k^{-1} e_{jk} (x) e_{kl}`` the column of
    ``e_{jl}`` is ``sum_k w_k^{-1} a(e_{jk}) b(e_{kl})``.
    """
    am, bm = a.matrix, b.matrix
    if is_exact(am) != is_exact(bm) or is_exact(am) != space.exact:
        am, bm = as_float(am), as_float(bm)
    exact = is_exact(am)
    gram = space.gram if exact else as_float(space.gram)
    if space.algebra.is_commutative:
        out = am * bm / gram[None, :]
        return LinearOperator(out, space.hilbert, space.hilbert)
    alg = space.algebra
    out = zeros((space.dim, space.dim), exact)
    for i, n in enumerate(alg.block_dims):
        for j in range(n):
            for l in range(n):
                col = out[:, alg.index(i, j, l)]
                for k in range(n):
                    jk, kl = alg.index(i, j, k), alg.index(i, k, l)
                    col += space.multiply(am[:, jk], bm[:, kl]) / gram[jk]
    return LinearOperator(out, space.hilbert, space.hilbert)


def undirected_transform(space: GnsSpace, a: LinearOperator) -> LinearOperator:
    """``(id (x) eta^* m)(id (x) A (x) id)(m^* eta (x) id)`` in closed form.

    Expanding the composite on matrix units gives
    ``A'[(i,j,k), c] = w_c / w_k * A[c^*, (i,k,j)]`` where ``c^*`` is the
    transposed unit, i.e. ``A' = G^{-1} (P A P)^T G`` with ``P`` the
    transposition permutation and ``G`` the diagonal Gram matrix.
    """
    m = a.matrix
    if not space.exact:
        m = as_float(m)
    gram = space.gram if is_exact(m) else as_float(space.gram)
    s = space.star_index
    pap = m[np.ix_(s, s)].T
    return LinearOperator(pap * gram[None, :] / gram[:, None], space.hilbert, space.hilbert)


def eta_eta_star(space: GnsSpace) -> LinearOperator:
    """``eta eta^*``: the rank-one map ``x -> psi(x) 1``."""
    u, p = space.unit, space.psi_vector
    if space.exact:
        mat = np.outer(u, p).astype(object)
    else:
        mat = np.outer(as_float(u), as_float(p))
    return LinearOperator(mat, space.hilbert, space.hilbert)


def _const(space: GnsSpace, c):
    if space.exact and isinstance(c, (int, Fraction)):
        return Fraction(c)
    return complex(c)


# ----------------------------------------------------------------------------
# quantum graphs


@dataclass(frozen=True, eq=False)
class QuantumGraph:
    space: GnsSpace
    adjacency: LinearOperator
    normalization: Normalization = Normalization.DELTA_SQ

    def __post_init__(self):
        h = self.space.hilbert
        if not (self.adjacency.domain.same_as(h) and self.adjacency.codomain.same_as(h)):
            raise GraphError("adjacency does not act on L^2 of the given space")
        if isinstance(self.normalization, str):
            object.__setattr__(self, "normalization", Normalization(self.normalization))

    @property
    def delta_sq(self):
        return self.space.delta_sq

    @property
    def schur_constant(self):
        return self.delta_sq if self.normalization is Normalization.DELTA_SQ else 1

    @property
    def exact(self) -> bool:
        return self.adjacency.exact

    def with_adjacency(self, adj: LinearOperator) -> "QuantumGraph":
        return QuantumGraph(self.space, adj, self.normalization)

    def renormalized(self, normalization: Normalization | str) -> "QuantumGraph":
        """Same graph with ``A`` rescaled to the requested Schur constant."""
        normalization = Normalization(normalization)
        if normalization is self.normalization:
            return self
        d2 = self.delta_sq
        factor = (1 / d2) if normalization is Normalization.ONE else d2
        return QuantumGraph(self.space, self.adjacency.scale(factor), normalization)


@dataclass(frozen=True)
class AxiomReport:
    self_adjoint: bool
    schur_idempotent: bool
    undirected: bool
    irreflexive: bool
    schur_constant: object | None
    normalization: Normalization
    residuals: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Self-adjoint, Schur idempotent with the declared constant, undirected."""
        return self.self_adjoint and self.schur_idempotent and self.undirected

    @property
    def failures(self) -> list[str]:
        names = ("self_adjoint", "schur_idempotent", "undirected")
        return [n for n in names if not getattr(self, n)]

    def as_dict(self) -> dict:
        c = self.schur_constant
        return {
            "self_adjoint": self.self_adjoint,
            "schur_idempotent": self.schur_idempotent,
            "schur_constant": None if c is None else _scalar_repr(c),
            "undirected": self.undirected,
            "irreflexive": self.irreflexive,
            "normalization": self.normalization.value,
            "ok": self.ok,
            "residuals": {k: float(v) for k, v in self.residuals.items()},
        }


def _scalar_repr(c):
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else int(c)
    c = complex(c)
    return c.real if abs(c.imag) < 1e-15 else [c.real, c.imag]


def _relative(res: float, scale) -> float:
    return res / max(1.0, abs(complex(scale)))


def check_quantum_graph(qg: QuantumGraph, tol: float | None = None) -> AxiomReport:
    tol = tolerance(tol)
    sp, a = qg.space, qg.adjacency
    exact = qg.exact and sp.exact

    def close(x: LinearOperator, y: LinearOperator, scale=1) -> tuple[bool, float]:
        diff = x - y
        if exact:
            zero = diff.is_zero()
            return zero, 0.0 if zero else diff.norm()
        r = diff.norm()
        return _relative(r, scale) <= tol, r

    sa, r_sa = close(a.adjoint(), a)
    s = schur_product(sp, a, a)
    d2 = _const(sp, sp.delta_sq)
    ok_d2, r_d2 = close(s, a.scale(d2), d2)
    ok_one, r_one = close(s, a)
    declared = qg.normalization is Normalization.DELTA_SQ
    if declared:
        idem, detected = ok_d2, (d2 if ok_d2 else (1 if ok_one else None))
    else:
        idem, detected = ok_one, (1 if ok_one else (d2 if ok_d2 else None))
    if isinstance(detected, complex):
        detected = detected.real
    und, r_und = close(undirected_transform(sp, a), a)
    irr_op = schur_product(sp, a, sp.identity)
    irr = irr_op.is_zero() if exact else irr_op.norm() <= tol
    return AxiomReport(
        self_adjoint=sa,
        schur_idempotent=idem,
        undirected=und,
        irreflexive=bool(irr),
        schur_constant=detected,
        normalization=qg.normalization,
        residuals={
            "self_adjoint": r_sa,
            "schur_delta_sq": r_d2,
            "schur_one": r_one,
            "undirected": r_und,
            "irreflexive": 0.0 if irr_op.exact and irr else irr_op.norm(),
        },
    )


def is_irreflexive(qg: QuantumGraph, tol: float | None = None) -> bool:
    op = schur_product(qg.space, qg.adjacency, qg.space.identity)
    return op.is_zero(tol)


def from_classical(g: ClassicalGraph | np.ndarray) -> QuantumGraph:
    if not isinstance(g, ClassicalGraph):
        g = ClassicalGraph(np.asarray(g))
    if g.n < 1:
        raise GraphError("a graph needs at least one vertex")
    sp = uniform_space(g.n)
    return QuantumGraph(sp, sp.operator(exact_array(g.adjacency)), Normalization.DELTA_SQ)


def to_classical(qg: QuantumGraph) -> ClassicalGraph:
    sp = qg.space
    if not sp.algebra.is_commutative:
        raise GraphError("algebra is not commutative")
    ws = [w[0] for w in sp.form.weights]
    if any(w != ws[0] for w in ws):
        if sp.form.exact or max(abs(w - ws[0]) for w in ws) > tolerance():
            raise GraphError("weights are not uniform")
    g = qg.renormalized(Normalization.DELTA_SQ).adjacency.matrix
    n = sp.dim
    out = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            v = g[i, j]
            if is_exact(g):
                if v not in (0, 1):
                    raise GraphError(f"entry ({i},{j}) = {v} is not 0 or 1")
                out[i, j] = int(v)
            else:
                v = complex(v)
                k = round(v.real)
                if k not in (0, 1) or abs(v - k) > tolerance():
                    raise GraphError(f"entry ({i},{j}) = {v} is not 0 or 1")
                out[i, j] = k
    return ClassicalGraph(out)


def empty_graph(space: GnsSpace) -> QuantumGraph:
    return QuantumGraph(space, LinearOperator.zero(space.hilbert))


def complete_graph(space: GnsSpace, reflexive: bool = True) -> QuantumGraph:
    """``delta^2 eta eta^*``, minus the identity when irreflexive."""
    a = eta_eta_star(space).scale(_const(space, space.delta_sq))
    if not reflexive:
        a = a - space.identity
    return QuantumGraph(space, a)


# ----------------------------------------------------------------------------
# operator system


@dataclass(frozen=True, eq=False)
class OperatorSystemBasis:
    ops: tuple[LinearOperator, ...]

    @property
    def dim(self) -> int:
        return len(self.ops)


def operator_system(qg: QuantumGraph, tol: float | None = None) -> OperatorSystemBasis:
    """A basis of ``S_G = {m(A (x) X)m^* : X}`` swept over matrix units ``X``."""
    tol = tolerance(tol)
    sp = qg.space
    d = sp.dim
    kept: list[LinearOperator] = []
    ortho: list[np.ndarray] = []
    for a in range(d):
        for b in range(d):
            x = zeros((d, d), sp.exact)
            x[a, b] = 1
            s = schur_product(sp, qg.adjacency, LinearOperator(x, sp.hilbert, sp.hilbert))
            v = s.on_matrix().reshape(-1)
            nrm = np.linalg.norm(v)
            if nrm <= tol:
                continue
            for q in ortho:
                v = v - np.vdot(q, v) * q
            if np.linalg.norm(v) <= tol * max(1.0, nrm):
                continue
            ortho.append(v / np.linalg.norm(v))
            kept.append(s)
    return OperatorSystemBasis(tuple(kept))


__all__ = [
    "AlgebraError",
    "AxiomReport",
    "ClassicalGraph",
    "GraphError",
    "Normalization",
    "OperatorSystemBasis",
    "QuantumGraph",
    "check_quantum_graph",
    "complete_graph",
    "empty_graph",
    "eta_eta_star",
    "from_classical",
    "is_irreflexive",
    "operator_system",
    "schur_product",
    "to_classical",
    "undirected_transform",
]
