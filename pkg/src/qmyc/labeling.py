"""Partitions of unity, quantum colorings, and distinguishing numbers."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import (
    GnsSpace,
    Hilbert,
    LinearOperator,
    as_float,
    exact_array,
    eye,
    kron,
    tolerance,
    zeros,
)
from .graph import (
    ClassicalGraph,
    QuantumGraph,
    from_classical,
    is_irreflexive,
    operator_system,
)
from .mycielski import (
    MycielskiError,
    automorphism_defects,
    classical_mycielskian,
    embeddings,
    mycielskian,
)
from .symmetry import (
    Permutation,
    automorphism_group,
    classical_twins,
    fulton_pattern,
    pattern_forces_identity,
)

MAX_AUX_DIM = 8


class PartitionError(ValueError):
    pass


class LabelingError(ValueError):
    pass


# ----------------------------------------------------------------------------
# partitions of unity


@dataclass(frozen=True, eq=False)
class PartitionOfUnity:
    """Projections ``P_1, ..., P_c`` in ``C(G) (x) B(C^d)`` acting on ``L^2(G) (x) C^d``."""

    space: GnsSpace
    aux_dim: int
    parts: tuple[LinearOperator, ...]

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def hilbert(self) -> Hilbert:
        return self.space.hilbert.tensor(Hilbert.aux(self.aux_dim))


def amplify_space_op(space: GnsSpace, op: LinearOperator, d: int) -> LinearOperator:
    """``op (x) 1_d`` with domain and codomain ``L^2 (x) C^d``."""
    h = space.hilbert.tensor(Hilbert.aux(d))
    return LinearOperator(op.amplify(d).matrix, h, h)


def algebra_membership_residual(space: GnsSpace, t: LinearOperator, d: int) -> float:
    """Distance of ``t`` from ``L(C(G)) (x) M_d``.

    An element ``sum_ab x_ab (x) E_ab`` is recovered from its action on
    ``1 (x) e_b``; ``t`` is a member exactly when it equals the left
    multiplication by the recovered element.
    """
    m = t.matrix
    exact = t.exact and space.exact
    if not exact:
        m = as_float(m)
    n = space.dim
    cols = m.reshape(n, d, n, d)
    recon = zeros((n * d, n * d), exact)
    unit_idx = np.flatnonzero([u != 0 for u in space.unit])
    for a in range(d):
        for b in range(d):
            # x_ab = component a of t(1 (x) e_b)
            x = cols[:, a, unit_idx, b].sum(axis=1)
            e = zeros((d, d), exact)
            e[a, b] = 1
            lm = space.left_mult(x).matrix
            recon = recon + kron(lm if exact else as_float(lm), e)
    diff = LinearOperator(m - recon, t.domain, t.codomain)
    return 0.0 if diff.is_zero() and diff.exact else diff.norm()


def validate_partition(qg: QuantumGraph | GnsSpace, parts, aux_dim: int | None = None,
                       tol: float | None = None) -> PartitionOfUnity:
    """Check idempotency, self-adjointness, membership and ``sum P_a = 1``."""
    tol = tolerance(tol)
    space = qg.space if isinstance(qg, QuantumGraph) else qg
    parts = list(parts)
    if not parts:
        raise PartitionError("a partition of unity needs at least one projection")
    mats = [p.matrix if isinstance(p, LinearOperator) else np.asarray(p) for p in parts]
    n = space.dim
    if aux_dim is None:
        aux_dim = mats[0].shape[0] // n if n else 1
    if aux_dim < 1 or aux_dim > MAX_AUX_DIM:
        raise PartitionError(f"aux_dim {aux_dim} outside 1..{MAX_AUX_DIM}")
    h = space.hilbert.tensor(Hilbert.aux(aux_dim))
    ops = []
    for idx, m in enumerate(mats):
        if m.shape != (h.dim, h.dim):
            raise PartitionError(f"P[{idx}] has shape {m.shape}, expected {(h.dim, h.dim)}")
        if m.dtype != object and space.exact and m.dtype.kind in "iu":
            m = exact_array(m)
        ops.append(LinearOperator(m, h, h))
    total = None
    for idx, p in enumerate(ops):
        if not (p @ p).equals(p, tol):
            raise PartitionError(f"P[{idx}] is not idempotent")
        if not p.adjoint().equals(p, tol):
            raise PartitionError(f"P[{idx}] is not self-adjoint")
        if algebra_membership_residual(space, p, aux_dim) > tol:
            raise PartitionError(f"P[{idx}] does not lie in C(G) (x) B(C^{aux_dim})")
        total = p if total is None else total + p
    if not total.equals(LinearOperator.identity(h), tol):
        raise PartitionError("projections do not sum to the identity")
    return PartitionOfUnity(space, aux_dim, tuple(ops))


@dataclass(frozen=True)
class ClassicalLabeling:
    labels: tuple[int, ...]
    c: int

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        if self.c < 1:
            raise LabelingError("at least one label is needed")
        bad = [x for x in labels if not 1 <= x <= self.c]
        if bad:
            raise LabelingError(f"labels {bad} outside 1..{self.c}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of(cls, labels, c: int | None = None) -> "ClassicalLabeling":
        labels = tuple(int(x) for x in labels)
        return cls(labels, c if c is not None else max(labels, default=1))


def _as_labeling(lab) -> ClassicalLabeling:
    return lab if isinstance(lab, ClassicalLabeling) else ClassicalLabeling.of(lab)


def labeling_to_partition(g: ClassicalGraph | QuantumGraph, lab) -> PartitionOfUnity:
    """Diagonal indicator projections of the label classes (``aux_dim = 1``)."""
    lab = _as_labeling(lab)
    qg = g if isinstance(g, QuantumGraph) else from_classical(g)
    n = qg.space.dim
    if len(lab.labels) != n:
        raise LabelingError(f"{len(lab.labels)} labels for {n} vertices")
    parts = []
    for a in range(1, lab.c + 1):
        m = np.zeros((n, n), dtype=np.int64)
        for v, x in enumerate(lab.labels):
            if x == a:
                m[v, v] = 1
        parts.append(exact_array(m))
    return validate_partition(qg, parts, 1)


def partition_to_labeling(part: PartitionOfUnity) -> ClassicalLabeling:
    """Inverse of :func:`labeling_to_partition` for diagonal 0/1 projections."""
    if part.aux_dim != 1 or not part.space.algebra.is_commutative:
        raise LabelingError("only diagonal partitions on commutative algebras define labelings")
    n = part.space.dim
    labels = [0] * n
    for a, p in enumerate(part.parts, start=1):
        m = as_float(p.matrix)
        if np.abs(m - np.diag(np.diag(m))).max(initial=0.0) > tolerance():
            raise LabelingError("projection is not diagonal")
        for v in range(n):
            if abs(m[v, v] - 1) <= tolerance():
                labels[v] = a
    return ClassicalLabeling(tuple(labels), len(part.parts))


def induce_partition(qg: QuantumGraph, part: PartitionOfUnity, r: int,
                     tol: float | None = None) -> PartitionOfUnity:
    """``Q_0 = iota_0 iota_0^* (x) 1`` and ``Q_a = sum_k (iota_k (x) 1) P_a (iota_k^* (x) 1)``.

    For ``r = 1`` there is no master point and ``Q_0 = 0``.
    """
    validate_partition(qg, part.parts, part.aux_dim, tol)
    mu = mycielskian(qg, r, tol)
    emb = embeddings(qg, r)
    d = part.aux_dim
    h = mu.space.hilbert.tensor(Hilbert.aux(d))
    if r == 1:
        q0 = LinearOperator.zero(h)
    else:
        q0 = emb.sandwich(0, eye(d, True), 0, aux_dim=d)
    qs = [q0]
    for p in part.parts:
        total = emb.sandwich(1, p.matrix, 1, aux_dim=d)
        for k in range(2, r + 1):
            total = total + emb.sandwich(k, p.matrix, k, aux_dim=d)
        qs.append(total)
    return validate_partition(mu, qs, d, tol)


def is_quantum_coloring(qg: QuantumGraph, part: PartitionOfUnity, tol: float | None = None) -> bool:
    """``P_a (X (x) 1) P_a = 0`` for every ``X`` in a basis of the operator system."""
    if not is_irreflexive(qg, tol):
        raise PartitionError("quantum colorings are defined for irreflexive graphs")
    basis = operator_system(qg, tol)
    for x in basis.ops:
        xa = amplify_space_op(qg.space, x, part.aux_dim)
        for p in part.parts:
            if not (p @ xa @ p).is_zero(tol):
                return False
    return True


def preserves_partition(qg: QuantumGraph, u: LinearOperator | Permutation,
                        part: PartitionOfUnity, tol: float | None = None) -> bool:
    """``(U (x) 1) P_a (U (x) 1)^{-1} = P_a`` for every ``a``.

    ``U`` must be a psi-preserving *-automorphism commuting with ``A``; such
    maps are unitary on ``L^2``, so the inverse is the adjoint.
    """
    if isinstance(u, Permutation):
        u = u.operator(qg.space)
    bad = automorphism_defects(qg, u, tol)
    if bad:
        raise MycielskiError(f"U is not an automorphism: fails {', '.join(bad)}")
    ua = amplify_space_op(qg.space, u, part.aux_dim)
    ui = ua.adjoint()
    return all((ua @ p @ ui).equals(p, tol) for p in part.parts)


# ----------------------------------------------------------------------------
# distinguishing labelings


def _preserves(sigma: Permutation, labels) -> bool:
    return all(labels[v] == labels[sigma(v)] for v in range(sigma.n))


def is_distinguishing(g: ClassicalGraph, lab, limit: int | None = None,
                      auts: list[Permutation] | None = None) -> bool:
    lab = _as_labeling(lab)
    if len(lab.labels) != g.n:
        raise LabelingError(f"{len(lab.labels)} labels for {g.n} vertices")
    auts = automorphism_group(g, limit) if auts is None else auts
    return not any(not s.is_identity() and _preserves(s, lab.labels) for s in auts)


def find_distinguishing_labeling(g: ClassicalGraph, c: int, limit: int | None = None,
                                 auts: list[Permutation] | None = None) -> ClassicalLabeling | None:
    """First distinguishing labeling with at most ``c`` labels, or None.

    Labelings are enumerated as restricted growth strings (label names are
    interchangeable).  A branch is cut once some non-identity automorphism
    has its whole support labelled and still preserves the labels.
    """
    n = g.n
    auts = automorphism_group(g, limit) if auts is None else auts
    live = [s for s in auts if not s.is_identity()]
    if not live:
        return ClassicalLabeling(tuple([1] * n), max(c, 1)) if c >= 1 else None
    # an automorphism is decided once the largest vertex of its support is labelled
    decided_at: dict[int, list[Permutation]] = {}
    for s in live:
        decided_at.setdefault(max(s.support()), []).append(s)
    labels = [0] * n

    def search(v: int, used: int) -> bool:
        if v == n:
            return True
        for x in range(1, min(used + 1, c) + 1):
            labels[v] = x
            if all(not _preserves_prefix(s, labels) for s in decided_at.get(v, ())):
                if search(v + 1, max(used, x)):
                    return True
        labels[v] = 0
        return False

    if search(0, 0):
        return ClassicalLabeling(tuple(labels), c)
    return None


def _preserves_prefix(sigma: Permutation, labels) -> bool:
    return all(labels[v] == labels[sigma(v)] for v in sigma.support())


def distinguishing_number(g: ClassicalGraph, max_c: int | None = None,
                          limit: int | None = None) -> int:
    return distinguishing_search(g, max_c, limit)[0]


def distinguishing_search(g: ClassicalGraph, max_c: int | None = None,
                          limit: int | None = None) -> tuple[int, ClassicalLabeling]:
    """``(D(G), first distinguishing labeling with D(G) labels)``."""
    max_c = g.n if max_c is None else max_c
    if max_c < 1:
        raise LabelingError("max_c must be at least 1")
    auts = automorphism_group(g, limit)
    for c in range(1, max_c + 1):
        lab = find_distinguishing_labeling(g, c, auts=auts)
        if lab is not None:
            return c, lab
    raise LabelingError(f"no distinguishing labeling with at most {max_c} labels")


@dataclass(frozen=True)
class BoundReport:
    d_g: int
    d_mu: int
    labeling: ClassicalLabeling
    induced: ClassicalLabeling
    induced_distinguishing: bool

    @property
    def holds(self) -> bool:
        return self.induced_distinguishing and self.d_mu <= self.d_g + 1

    def as_dict(self) -> dict:
        return {
            "D_G": self.d_g,
            "D_mu": self.d_mu,
            "labeling": list(self.labeling.labels),
            "induced_labeling": list(self.induced.labels),
            "induced_distinguishing": self.induced_distinguishing,
            "holds": self.holds,
        }


def induced_labeling(lab: ClassicalLabeling, r: int = 2) -> ClassicalLabeling:
    """Labels copied to every copy, with a fresh label on the master vertex."""
    fresh = lab.c + 1
    return ClassicalLabeling((fresh,) + lab.labels * r, fresh)


def check_mycielski_distinguishing_bound(g: ClassicalGraph, max_c: int | None = None,
                                         limit: int | None = None) -> BoundReport:
    if classical_twins(g):
        raise LabelingError("the graph has twins")
    d_g, lab = distinguishing_search(g, max_c, limit)
    mu = classical_mycielskian(g, 2)
    mu_auts = automorphism_group(mu, limit)
    ind = induced_labeling(lab)
    ok = is_distinguishing(mu, ind, auts=mu_auts)
    d_mu = None
    for c in range(1, mu.n + 1):
        if find_distinguishing_labeling(mu, c, auts=mu_auts) is not None:
            d_mu = c
            break
    return BoundReport(d_g, d_mu, lab, ind, ok)


# ----------------------------------------------------------------------------
# quantum distinguishing verdict


class QuantumVerdict(enum.Enum):
    DISTINGUISHING = "Distinguishing"
    NOT_DISTINGUISHING = "NotDistinguishing"
    UNKNOWN = "Unknown"


def quantum_distinguishing_verdict(g: ClassicalGraph, lab, limit: int | None = None) -> QuantumVerdict:
    """Three-valued verdict on whether only the trivial quantum action preserves ``lab``.

    A preserving non-identity classical automorphism refutes it.  The pattern
    route proves it when the Fulton pattern refined by the labels is forced
    to the identity by ``PA = AP``.  Otherwise the answer is Unknown.
    """
    lab = _as_labeling(lab)
    if not is_distinguishing(g, lab, limit):
        return QuantumVerdict.NOT_DISTINGUISHING
    pat = fulton_pattern(g, labels=lab.labels)
    forced = pattern_forces_identity(g, pat)
    return QuantumVerdict.DISTINGUISHING if forced else QuantumVerdict.UNKNOWN


__all__ = [
    "BoundReport",
    "ClassicalLabeling",
    "LabelingError",
    "PartitionError",
    "PartitionOfUnity",
    "QuantumVerdict",
    "algebra_membership_residual",
    "check_mycielski_distinguishing_bound",
    "distinguishing_number",
    "distinguishing_search",
    "find_distinguishing_labeling",
    "induce_partition",
    "induced_labeling",
    "is_distinguishing",
    "is_quantum_coloring",
    "labeling_to_partition",
    "partition_to_labeling",
    "preserves_partition",
    "quantum_distinguishing_verdict",
    "validate_partition",
]
