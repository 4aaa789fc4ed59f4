"""Quantum Mycielskians, their embedding isometries, and automorphism extension.

Coordinates on ``L^2(mu_{r-1}(G)) = C + L^2(G)^{+r}`` are ordered master point
first, then copy ``1``, ..., copy ``r``, each copy in the matrix-unit order of
``G``.  In these coordinates the embeddings are plain block inclusions scaled
by ``s_0 = sqrt(1 + r delta^2)`` and ``s_k = sqrt((1 + r delta^2) / delta^2)``,
and their adjoints are block projections divided by the same scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import (
    GnsSpace,
    Hilbert,
    LinearOperator,
    as_float,
    exact_sqrt,
    eye,
    make_algebra,
    tolerance,
    validate_delta_form,
    zeros,
)
from .graph import (
    ClassicalGraph,
    Normalization,
    QuantumGraph,
    check_quantum_graph,
)


class MycielskiError(ValueError):
    pass


def _check_r(r: int) -> None:
    if isinstance(r, bool) or not isinstance(r, (int, np.integer)) or r < 1:
        raise MycielskiError(f"r must be an integer >= 1, got {r!r}")


def _require_valid(qg: QuantumGraph, tol: float | None) -> None:
    rep = check_quantum_graph(qg, tol)
    if not rep.ok:
        raise MycielskiError(f"input fails quantum graph axioms: {', '.join(rep.failures)}")


def mycielski_space(space: GnsSpace, r: int) -> GnsSpace:
    """``C + C(G)^{+r}`` with the state ``(lambda + delta^2 sum psi(x_k)) / (1 + r delta^2)``."""
    _check_r(r)
    d2 = space.delta_sq
    z = 1 + r * d2
    weights = [[1 / z]]
    for _ in range(r):
        weights.extend([w * d2 / z for w in ws] for ws in space.form.weights)
    blocks = [1] + list(space.algebra.block_dims) * r
    alg = make_algebra(blocks)
    form = validate_delta_form(alg, weights)
    if isinstance(d2, Fraction) and form.delta_sq != z:
        raise MycielskiError(f"delta_mu^2 = {form.delta_sq}, expected {z}")
    return GnsSpace(alg, form)


def _lift_scalar(space: GnsSpace, c):
    return Fraction(c) if space.exact and isinstance(c, (int, Fraction)) else complex(c)


def mycielskian(qg: QuantumGraph, r: int, tol: float | None = None) -> QuantumGraph:
    """``mu_{r-1}(G)`` from the componentwise description of ``A_mu``.

    Componentwise, with ``v = (lambda, x_1, ..., x_r)``::

        master  : delta^2 psi(x_r)
        copy 1  : A (x_1 + x_2)
        copy k  : A (x_{k-1} + x_{k+1})      1 < k < r
        copy r  : lambda 1 + A x_{r-1}

    (``copy 1 = A x_1 + lambda 1`` for ``r = 1`` is never used: ``mu_0(G) = G``.)
    """
    _check_r(r)
    _require_valid(qg, tol)
    if r == 1:
        return qg
    src = qg.renormalized(Normalization.DELTA_SQ)
    sp = qg.space
    target = mycielski_space(sp, r)
    d = sp.dim
    exact = target.exact and src.adjacency.exact
    a = src.adjacency.matrix if exact else as_float(src.adjacency.matrix)
    mat = zeros((target.dim, target.dim), exact)

    def blk(k: int) -> slice:
        return slice(1 + (k - 1) * d, 1 + k * d)

    d2 = _lift_scalar(sp, sp.delta_sq) if exact else complex(sp.delta_sq)
    psi = sp.psi_vector if exact else as_float(sp.psi_vector)
    unit = sp.unit if exact else as_float(sp.unit)
    mat[0, blk(r)] = d2 * psi
    mat[blk(r), 0] = unit
    for k in range(1, r + 1):
        if k == 1:
            mat[blk(1), blk(1)] = a
        if k > 1:
            mat[blk(k), blk(k - 1)] = a
        if k < r:
            mat[blk(k), blk(k + 1)] = a
    out = QuantumGraph(target, LinearOperator(mat, target.hilbert, target.hilbert))
    return out.renormalized(qg.normalization)


# ----------------------------------------------------------------------------
# embeddings


def _scale_entry(q, exact: bool):
    """``sqrt(q)`` exactly when possible, else as a float."""
    if exact:
        s = exact_sqrt(q)
        if s is not None:
            return s
    return complex(np.sqrt(float(q)))


@dataclass(frozen=True, eq=False)
class MycielskiEmbeddings:
    """The isometries ``iota_0, ..., iota_r`` into ``L^2(mu_{r-1}(G))``.

    ``scale_sq[k]`` holds ``s_k^2``.  For ``r = 1`` there is no master
    summand and ``iota_1`` is the identity.
    """

    r: int
    source: GnsSpace
    target: GnsSpace
    scale_sq: tuple

    @property
    def scalings(self) -> tuple[float, ...]:
        return tuple(float(np.sqrt(float(s))) if s is not None else None for s in self.scale_sq)

    def summand(self, k: int) -> slice:
        """Coordinate range of summand ``k`` (master point is ``k = 0``)."""
        d = self.source.dim
        if self.r == 1:
            if k != 1:
                raise MycielskiError("mu_0(G) = G has only the summand k = 1")
            return slice(0, d)
        if k == 0:
            return slice(0, 1)
        if not 1 <= k <= self.r:
            raise MycielskiError(f"summand index {k} out of range")
        return slice(1 + (k - 1) * d, 1 + k * d)

    def summand_space(self, k: int) -> Hilbert:
        return Hilbert.scalars() if k == 0 else self.source.hilbert

    def _s_sq(self, k: int):
        return 1 if self.r == 1 else self.scale_sq[k]

    def sandwich(self, k: int, x: LinearOperator | np.ndarray, j: int,
                 coef_sq=1, aux_dim: int = 1,
                 source: "MycielskiEmbeddings | None" = None) -> LinearOperator:
        """``c (iota_k (x) 1) X (iota'_j^* (x) 1)`` with ``c = sqrt(coef_sq) >= 0``.

        ``iota'`` are the embeddings of ``source`` (default: ``self``), so the
        result maps ``L^2(source target) (x) C^aux_dim`` into
        ``L^2(self.target) (x) C^aux_dim``.  The effective scalar
        ``c s_k / s'_j`` is computed exactly when it is rational.
        """
        source = source or self
        xm = x.matrix if isinstance(x, LinearOperator) else np.asarray(x)
        rk, rj = self.summand(k), source.summand(j)
        nk = (rk.stop - rk.start) * aux_dim
        nj = (rj.stop - rj.start) * aux_dim
        if xm.shape != (nk, nj):
            raise MycielskiError(f"sandwich expects a {nk}x{nj} block, got {xm.shape}")
        exact = self.target.exact and source.target.exact and xm.dtype == object
        if exact:
            c = _scale_entry(Fraction(coef_sq) * self._s_sq(k) / source._s_sq(j), True)
        else:
            c = _scale_entry(float(coef_sq) * float(self._s_sq(k)) / float(source._s_sq(j)), False)
        if not isinstance(c, Fraction):
            exact = False
            xm = as_float(xm)
        cod = self.target.hilbert
        dom = source.target.hilbert
        if aux_dim > 1:
            cod = cod.tensor(Hilbert.aux(aux_dim))
            dom = dom.tensor(Hilbert.aux(aux_dim))
        mat = zeros((cod.dim, dom.dim), exact)
        mat[rk.start * aux_dim:rk.stop * aux_dim, rj.start * aux_dim:rj.stop * aux_dim] = c * xm
        return LinearOperator(mat, dom, cod)

    def iota(self, k: int) -> LinearOperator:
        rk = self.summand(k)
        s = _scale_entry(self._s_sq(k), self.target.exact)
        exact = isinstance(s, Fraction)
        dom = self.summand_space(k)
        mat = zeros((self.target.dim, dom.dim), exact)
        mat[rk, :] = eye(dom.dim, exact) * s
        return LinearOperator(mat, dom, self.target.hilbert)

    def iota_star(self, k: int) -> LinearOperator:
        return self.iota(k).adjoint()


def embeddings(qg: QuantumGraph, r: int) -> MycielskiEmbeddings:
    _check_r(r)
    sp = qg.space
    if r == 1:
        return MycielskiEmbeddings(1, sp, sp, (None, 1))
    target = mycielski_space(sp, r)
    d2 = sp.delta_sq
    z = 1 + r * d2
    return MycielskiEmbeddings(r, sp, target, (z,) + (z / d2,) * r)


def adjacency_via_embeddings(qg: QuantumGraph, r: int) -> LinearOperator:
    """``A_mu`` assembled as a sum of embedded copies of ``A``, ``eta`` and ``eta^*``.

    ``delta i_r eta i_0^* + delta i_0 eta^* i_r^* + i_1 A i_1^*
    + sum_{k<r} (i_k A i_{k+1}^* + i_{k+1} A i_k^*)``, in the same
    normalization as ``qg``.
    """
    _check_r(r)
    if r == 1:
        return qg.adjacency
    src = qg.renormalized(Normalization.DELTA_SQ)
    emb = embeddings(qg, r)
    sp = qg.space
    d2 = sp.delta_sq
    a = src.adjacency.matrix
    total = emb.sandwich(r, sp.eta.matrix, 0, coef_sq=d2)
    total = total + emb.sandwich(0, sp.eta.adjoint().matrix, r, coef_sq=d2)
    total = total + emb.sandwich(1, a, 1)
    for k in range(1, r):
        total = total + emb.sandwich(k, a, k + 1) + emb.sandwich(k + 1, a, k)
    if qg.normalization is Normalization.ONE:
        z = 1 + r * d2
        total = total.scale(1 / z if isinstance(z, Fraction) and total.exact else 1 / complex(z))
    return total


def mult_via_embeddings(qg: QuantumGraph, r: int) -> LinearOperator:
    """``s_0 (i_0 m_0 (i_0^* (x) i_0^*) + delta^{-1} sum_k i_k m (i_k^* (x) i_k^*))`` in floats."""
    emb = embeddings(qg, r)
    s0 = np.sqrt(float(emb.scale_sq[0]))
    delta = np.sqrt(float(qg.delta_sq))
    i0 = emb.iota(0).to_float()
    m0 = LinearOperator(np.array([[1.0 + 0j]]), Hilbert.scalars().tensor(Hilbert.scalars()), Hilbert.scalars())
    total = i0 @ m0 @ i0.adjoint().tensor(i0.adjoint())
    m1 = qg.space.mult.to_float()
    for k in range(1, r + 1):
        ik = emb.iota(k).to_float()
        total = total + (ik @ m1 @ ik.adjoint().tensor(ik.adjoint())).scale(1 / delta)
    return total.scale(s0)


# ----------------------------------------------------------------------------
# classical r-Mycielskian


def classical_mycielskian(g: ClassicalGraph, r: int) -> ClassicalGraph:
    """Edges: ``E_G`` on copy 1, ``v^i_j ~ v^{i+1}_{j'}`` for edges ``jj'``, copy ``r`` to the master.

    Vertex order is master, copy 1, ..., copy r.
    """
    _check_r(r)
    if r == 1:
        return g
    n = g.n
    a = g.adjacency
    out = np.zeros((1 + r * n, 1 + r * n), dtype=np.int64)
    off = lambda k: 1 + (k - 1) * n  # noqa: E731
    out[off(1):off(1) + n, off(1):off(1) + n] = a
    for i in range(1, r):
        out[off(i):off(i) + n, off(i + 1):off(i + 1) + n] = a
        out[off(i + 1):off(i + 1) + n, off(i):off(i) + n] = a
    out[0, off(r):off(r) + n] = 1
    out[off(r):off(r) + n, 0] = 1
    return ClassicalGraph(out)


# ----------------------------------------------------------------------------
# automorphisms


def automorphism_defects(qg: QuantumGraph, u: LinearOperator, tol: float | None = None) -> list[str]:
    """Conditions of a psi-preserving *-automorphism commuting with ``A`` that ``u`` violates."""
    sp = qg.space
    tol = tolerance(tol)
    exact = sp.exact and u.exact
    um = u.matrix if exact else as_float(u.matrix)
    defects = []

    def zero(x: np.ndarray) -> bool:
        if exact:
            return not any(v != 0 for v in x.flat)
        return float(np.max(np.abs(x), initial=0.0)) <= tol

    h = sp.hilbert
    if not (u.domain.same_as(h) and u.codomain.same_as(h)):
        return ["shape"]
    unit = sp.unit if exact else as_float(sp.unit)
    if not zero(um.dot(unit) - unit):
        defects.append("unital")
    psi = sp.psi_vector if exact else as_float(sp.psi_vector)
    if not zero(psi.dot(um) - psi):
        defects.append("psi_preserving")
    if not _multiplicative(sp, um, zero):
        defects.append("multiplicative")
    s = sp.star_index
    star_u = um[s][:, s]
    if not exact:
        star_u = star_u.conj()
    if not zero(star_u - um):
        defects.append("star_preserving")
    if abs(np.linalg.det(as_float(um))) <= tol:
        defects.append("invertible")
    a = qg.adjacency
    comm = (u @ a) - (a @ u)
    if not comm.is_zero(tol):
        defects.append("commutes_with_adjacency")
    return defects


def _multiplicative(sp: GnsSpace, um: np.ndarray, zero) -> bool:
    """``u(e_a e_b) = u(e_a) u(e_b)`` on all pairs of matrix units."""
    if sp.algebra.is_commutative:
        for a in range(sp.dim):
            prod = um[:, a][:, None] * um
            prod[:, a] -= um[:, a]
            if not zero(prod):
                return False
        return True
    for a in range(sp.dim):
        ea = sp.basis_vector(a)
        for b in range(sp.dim):
            ab = sp.multiply(ea, sp.basis_vector(b))
            if not zero(sp.multiply(um[:, a], um[:, b]) - um.dot(ab)):
                return False
    return True


def extend_automorphism(qg: QuantumGraph, r: int, alpha: LinearOperator,
                        tol: float | None = None) -> LinearOperator:
    """``id + alpha + ... + alpha`` on ``C + L^2(G)^{+r}``."""
    _check_r(r)
    bad = automorphism_defects(qg, alpha, tol)
    if bad:
        raise MycielskiError(f"alpha is not an automorphism of G: fails {', '.join(bad)}")
    if r == 1:
        return alpha
    target = mycielski_space(qg.space, r)
    exact = target.exact and alpha.exact
    am = alpha.matrix if exact else as_float(alpha.matrix)
    d = qg.space.dim
    mat = zeros((target.dim, target.dim), exact)
    mat[0, 0] = 1
    for k in range(r):
        sl = slice(1 + k * d, 1 + (k + 1) * d)
        mat[sl, sl] = am
    return LinearOperator(mat, target.hilbert, target.hilbert)


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    """Blocks ``rho_ij = iota_i^* U iota_j`` of an automorphism of ``mu(G)``."""

    rho: dict
    off_diagonal_zero: bool
    diagonal: bool
    chain_holds: bool

    @property
    def rho11(self) -> LinearOperator:
        return self.rho[1, 1]

    @property
    def rho22(self) -> LinearOperator:
        return self.rho[2, 2]


def analyze_mycielski_automorphism(qg: QuantumGraph, u: LinearOperator,
                                   tol: float | None = None) -> BlockDecomposition:
    """Split a master-fixing automorphism of ``mu(G)`` into copy blocks.

    Reports whether ``rho_12 = rho_21 = 0``, whether ``rho_11 = rho_22``, and
    whether ``rho_22 A = A rho_11 = rho_11 A = A rho_22``.
    """
    mu = mycielskian(qg, 2, tol)
    bad = automorphism_defects(mu, u, tol)
    if bad:
        raise MycielskiError(f"U is not an automorphism of mu(G): fails {', '.join(bad)}")
    emb = embeddings(qg, 2)
    i0 = emb.iota(0)
    if not (u @ i0).equals(i0, tol):
        raise MycielskiError("U does not fix the master point")
    h = qg.space.hilbert
    rho = {}
    for i in (1, 2):
        for j in (1, 2):
            # the copy scalings cancel, so rho_ij is the (i, j) coordinate block
            rho[i, j] = LinearOperator(u.matrix[emb.summand(i), emb.summand(j)], h, h)
    a = qg.renormalized(Normalization.DELTA_SQ).adjacency
    off = rho[1, 2].is_zero(tol) and rho[2, 1].is_zero(tol)
    diag = (rho[1, 1] - rho[2, 2]).is_zero(tol)
    chain = [rho[2, 2] @ a, a @ rho[1, 1], rho[1, 1] @ a, a @ rho[2, 2]]
    chain_ok = all(chain[0].equals(c, tol) for c in chain[1:])
    return BlockDecomposition(rho, off, diag, chain_ok)


__all__ = [
    "BlockDecomposition",
    "MycielskiEmbeddings",
    "MycielskiError",
    "adjacency_via_embeddings",
    "analyze_mycielski_automorphism",
    "automorphism_defects",
    "classical_mycielskian",
    "embeddings",
    "extend_automorphism",
    "mult_via_embeddings",
    "mycielski_space",
    "mycielskian",
]
