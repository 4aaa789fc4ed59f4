"""Finite-dimensional C*-algebras with delta-forms and their GNS spaces.

An algebra is a direct sum of full matrix blocks.  Elements and vectors of
``L^2(A, psi)`` are stored in *matrix-unit coordinates*: the coefficient of
``e_{jk}^{(i)}`` for every block ``i`` (block-major, then row-major).  The
state is ``psi(x) = sum_i Tr(rho_i x_i)`` with diagonal densities ``rho_i``,
so the Gram matrix of the matrix units is diagonal with entry ``w_k^{(i)}``
for ``e_{jk}^{(i)}``.  Orthonormal GNS coordinates are obtained by the
diagonal rescaling ``e_{jk}/sqrt(w_k)`` (see :meth:`LinearOperator.on_matrix`).

Commutative algebras with rational weights use exact ``Fraction`` arithmetic
(numpy object arrays); everything else is complex floating point.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

DEFAULT_TOL = 1e-9


def tolerance(tol: float | None = None) -> float:
    """Resolve a tolerance: explicit value, else ``QMYC_TOL``, else 1e-9."""
    if tol is not None:
        return float(tol)
    env = os.environ.get("QMYC_TOL")
    return float(env) if env else DEFAULT_TOL


class AlgebraError(ValueError):
    pass


class DeltaFormError(AlgebraError):
    pass


# ----------------------------------------------------------------------------
# scalar helpers


def parse_scalar(value) -> Fraction | complex:
    """Parse ints, Fractions and ``"p/q"`` strings exactly; anything else as complex."""
    if isinstance(value, bool):
        raise AlgebraError(f"not a number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            return complex(value)
    return complex(value)


def is_exact(a: np.ndarray) -> bool:
    return a.dtype == object


def as_float(a: np.ndarray) -> np.ndarray:
    if is_exact(a):
        return np.array(a.tolist(), dtype=complex).reshape(a.shape)
    return np.asarray(a, dtype=complex)


_to_fraction = np.frompyfunc(Fraction, 1, 1)


def exact_array(values, shape=None) -> np.ndarray:
    arr = np.asarray(values, dtype=object)
    arr = _to_fraction(arr) if arr.ndim else np.array(Fraction(arr.item()), dtype=object)
    arr = np.asarray(arr, dtype=object)
    return arr if shape is None else arr.reshape(shape)


def _scaled_ints(a: np.ndarray) -> tuple[np.ndarray, int]:
    """``a = n / den`` with ``n`` an object array of Python ints."""
    den = math.lcm(*(x.denominator for x in a.flat)) if a.size else 1
    return np.array([x.numerator * (den // x.denominator) for x in a.flat], dtype=object).reshape(a.shape), den


def exact_dot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of Fraction arrays, done on integer numerators."""
    na, da = _scaled_ints(a)
    nb, db = _scaled_ints(b)
    prod = na.dot(nb)
    den = da * db
    out = np.empty(np.shape(prod), dtype=object)
    flat = out.reshape(-1)
    for i, v in enumerate(np.asarray(prod, dtype=object).reshape(-1)):
        flat[i] = Fraction(v, den)
    return out


def _coerce_pair(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if is_exact(a) == is_exact(b):
        return a, b
    return as_float(a), as_float(b)


def _conj_t(a: np.ndarray) -> np.ndarray:
    return a.T.copy() if is_exact(a) else a.conj().T


def zeros(shape, exact: bool) -> np.ndarray:
    if exact:
        return np.full(shape, Fraction(0), dtype=object)
    return np.zeros(shape, dtype=complex)


def eye(n: int, exact: bool) -> np.ndarray:
    if exact:
        return exact_array(np.eye(n, dtype=int))
    return np.eye(n, dtype=complex)


def exact_sqrt(q: Fraction) -> Fraction | None:
    """Square root of a non-negative rational if it is rational, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


# ----------------------------------------------------------------------------
# Hilbert spaces in fixed coordinates and operators between them


@dataclass(frozen=True, eq=False)
class Hilbert:
    """A coordinate Hilbert space whose Gram matrix is ``diag(gram)``."""

    gram: np.ndarray
    label: str = ""

    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def exact(self) -> bool:
        return is_exact(self.gram)

    @classmethod
    def scalars(cls) -> "Hilbert":
        return cls(exact_array([1]), "C")

    @classmethod
    def aux(cls, d: int) -> "Hilbert":
        return cls(exact_array([1] * d), f"C^{d}")

    def tensor(self, other: "Hilbert") -> "Hilbert":
        a, b = _coerce_pair(self.gram, other.gram)
        return Hilbert(np.kron(a, b) if not is_exact(a) else _kron_exact(a, b),
                       f"{self.label}(x){other.label}")

    def same_as(self, other: "Hilbert") -> bool:
        if self is other:
            return True
        if self.dim != other.dim:
            return False
        if self.exact and other.exact:
            return all(x == y for x, y in zip(self.gram, other.gram))
        return np.allclose(as_float(self.gram), as_float(other.gram), rtol=1e-12, atol=0)


def _kron_exact(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.ndim == 1:
        return np.array([x * y for x in a for y in b], dtype=object)
    out = np.empty((a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]), dtype=object)
    rb, cb = b.shape
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            out[i * rb:(i + 1) * rb, j * cb:(j + 1) * cb] = a[i, j] * b
    return out


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = _coerce_pair(a, b)
    return _kron_exact(a, b) if is_exact(a) else np.kron(a, b)


@dataclass(frozen=True, eq=False)
class LinearOperator:
    """A linear map between coordinate Hilbert spaces.

    ``matrix`` is expressed in the stored (matrix-unit) coordinates of
    ``domain`` and ``codomain``.  Adjoints use the diagonal Gram matrices,
    so for rational data they stay exact.
    """

    matrix: np.ndarray
    domain: Hilbert
    codomain: Hilbert

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            raise AlgebraError(
                f"operator shape {self.matrix.shape} does not match "
                f"{self.codomain.dim}x{self.domain.dim}"
            )

    @property
    def exact(self) -> bool:
        return is_exact(self.matrix)

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    @classmethod
    def identity(cls, space: Hilbert) -> "LinearOperator":
        return cls(eye(space.dim, space.exact), space, space)

    @classmethod
    def zero(cls, domain: Hilbert, codomain: Hilbert | None = None) -> "LinearOperator":
        codomain = codomain or domain
        exact = domain.exact and codomain.exact
        return cls(zeros((codomain.dim, domain.dim), exact), domain, codomain)

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        if not other.codomain.same_as(self.domain):
            raise AlgebraError("composition of operators with mismatched spaces")
        a, b = _coerce_pair(self.matrix, other.matrix)
        prod = exact_dot(a, b) if is_exact(a) else a.dot(b)
        return LinearOperator(prod, other.domain, self.codomain)

    def apply(self, vec: np.ndarray) -> np.ndarray:
        a, v = _coerce_pair(self.matrix, np.asarray(vec))
        return a.dot(v)

    def _combine(self, other: "LinearOperator", sign: int) -> "LinearOperator":
        if not (self.domain.same_as(other.domain) and self.codomain.same_as(other.codomain)):
            raise AlgebraError("sum of operators with mismatched spaces")
        a, b = _coerce_pair(self.matrix, other.matrix)
        return LinearOperator(a + b if sign > 0 else a - b, self.domain, self.codomain)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return LinearOperator(-self.matrix, self.domain, self.codomain)

    def scale(self, c) -> "LinearOperator":
        if self.exact and isinstance(c, (int, Fraction)):
            return LinearOperator(self.matrix * Fraction(c), self.domain, self.codomain)
        return LinearOperator(as_float(self.matrix) * complex(c), self.domain, self.codomain)

    __mul__ = scale
    __rmul__ = scale

    def adjoint(self) -> "LinearOperator":
        g_dom, m = _coerce_pair(self.domain.gram, self.matrix)
        g_cod, m = _coerce_pair(self.codomain.gram, m)
        g_dom, m = _coerce_pair(g_dom, m)
        mt = _conj_t(m)
        if is_exact(mt):
            inv = np.array([1 / x for x in g_dom], dtype=object)
        else:
            inv = 1.0 / g_dom
        return LinearOperator(inv[:, None] * mt * g_cod[None, :], self.codomain, self.domain)

    def tensor(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(
            kron(self.matrix, other.matrix),
            self.domain.tensor(other.domain),
            self.codomain.tensor(other.codomain),
        )

    def amplify(self, d: int) -> "LinearOperator":
        """``self (x) 1_d`` on the auxiliary factor ``C^d`` (left factor major)."""
        if d == 1:
            return self
        return self.tensor(LinearOperator.identity(Hilbert.aux(d)))

    def on_matrix(self) -> np.ndarray:
        """Matrix in orthonormal coordinates (complex)."""
        s_cod = np.sqrt(as_float(self.codomain.gram).real)
        s_dom = np.sqrt(as_float(self.domain.gram).real)
        return s_cod[:, None] * as_float(self.matrix) / s_dom[None, :]

    @classmethod
    def from_on_matrix(cls, mat, domain: Hilbert, codomain: Hilbert) -> "LinearOperator":
        mat = np.asarray(mat, dtype=complex)
        s_cod = np.sqrt(as_float(codomain.gram).real)
        s_dom = np.sqrt(as_float(domain.gram).real)
        return cls(mat / s_cod[:, None] * s_dom[None, :], domain, codomain)

    def norm(self) -> float:
        """Operator norm (largest singular value in orthonormal coordinates)."""
        if self.matrix.size == 0:
            return 0.0
        if self.exact and not any(x != 0 for x in self.matrix.flat):
            return 0.0
        return float(np.linalg.norm(self.on_matrix(), 2))

    def is_zero(self, tol: float | None = None) -> bool:
        if self.exact:
            return not any(x != 0 for x in self.matrix.flat)
        return self.norm() <= tolerance(tol)

    def residual(self, other: "LinearOperator") -> float:
        return (self - other).norm()

    def equals(self, other: "LinearOperator", tol: float | None = None) -> bool:
        return (self - other).is_zero(tol)

    def to_float(self) -> "LinearOperator":
        return LinearOperator(as_float(self.matrix), self.domain, self.codomain)


def adjoint(op: LinearOperator) -> LinearOperator:
    return op.adjoint()


# ----------------------------------------------------------------------------
# algebras, elements, delta-forms


@dataclass(frozen=True)
class BlockAlgebra:
    """Direct sum of full matrix algebras ``M_{n_1} + ... + M_{n_b}``."""

    block_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(self.block_dims)
        if not dims:
            raise AlgebraError("an algebra needs at least one block")
        for n in dims:
            if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
                raise AlgebraError(f"invalid block dimension {n!r}")
        object.__setattr__(self, "block_dims", tuple(int(n) for n in dims))

    @property
    def dim(self) -> int:
        return sum(n * n for n in self.block_dims)

    @property
    def is_commutative(self) -> bool:
        return all(n == 1 for n in self.block_dims)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, pos = [], 0
        for n in self.block_dims:
            out.append(pos)
            pos += n * n
        return tuple(out)

    @cached_property
    def basis_labels(self) -> tuple[tuple[int, int, int], ...]:
        """``(block, row, col)`` for every matrix unit, in coordinate order."""
        return tuple(
            (i, j, k)
            for i, n in enumerate(self.block_dims)
            for j in range(n)
            for k in range(n)
        )

    def index(self, block: int, row: int, col: int) -> int:
        n = self.block_dims[block]
        return self.offsets[block] + row * n + col

    def element(self, blocks: Sequence) -> "AlgebraElement":
        return AlgebraElement(self, tuple(np.asarray(b) for b in blocks))

    def unit(self) -> "AlgebraElement":
        return self.element([np.eye(n, dtype=int) for n in self.block_dims])


def make_algebra(block_dims: Sequence[int]) -> BlockAlgebra:
    return BlockAlgebra(tuple(block_dims))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: BlockAlgebra
    blocks: tuple[np.ndarray, ...]

    def __post_init__(self):
        if len(self.blocks) != len(self.algebra.block_dims):
            raise AlgebraError("wrong number of blocks")
        for b, n in zip(self.blocks, self.algebra.block_dims):
            if np.shape(b) != (n, n):
                raise AlgebraError(f"block of shape {np.shape(b)} where {n}x{n} expected")

    def to_vector(self) -> np.ndarray:
        parts = [np.asarray(b).reshape(-1) for b in self.blocks]
        if all(p.dtype.kind in "iu" or p.dtype == object for p in parts):
            return exact_array(np.concatenate([p.astype(object) for p in parts]))
        return np.concatenate([p.astype(complex) for p in parts])

    @classmethod
    def from_vector(cls, algebra: BlockAlgebra, vec: np.ndarray) -> "AlgebraElement":
        blocks = []
        for off, n in zip(algebra.offsets, algebra.block_dims):
            blocks.append(np.asarray(vec[off:off + n * n]).reshape(n, n))
        return cls(algebra, tuple(blocks))


@dataclass(frozen=True, eq=False)
class DeltaForm:
    """Diagonal density weights of a faithful state together with ``delta^2``."""

    weights: tuple[tuple, ...]
    delta_sq: Fraction | float | None

    @property
    def exact(self) -> bool:
        return all(isinstance(w, Fraction) for ws in self.weights for w in ws)


class GnsSpace:
    """``L^2(A, psi)`` for a block algebra with a diagonal faithful state."""

    def __init__(self, algebra: BlockAlgebra, form: DeltaForm):
        self.algebra = algebra
        self.form = form
        self.exact = algebra.is_commutative and form.exact
        w = [form.weights[i][k] for (i, _j, k) in algebra.basis_labels]
        self.gram = exact_array(w) if self.exact else np.array([complex(x) for x in w])
        self.hilbert = Hilbert(self.gram, f"L2{list(algebra.block_dims)}")

    def __repr__(self):
        return f"GnsSpace(blocks={list(self.algebra.block_dims)}, delta_sq={self.form.delta_sq})"

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def delta_sq(self):
        return self.form.delta_sq

    # -- algebra structure in matrix-unit coordinates -----------------------

    @cached_property
    def unit(self) -> np.ndarray:
        u = zeros(self.dim, self.exact)
        for i, n in enumerate(self.algebra.block_dims):
            for j in range(n):
                u[self.algebra.index(i, j, j)] = 1
        return u

    @cached_property
    def psi_vector(self) -> np.ndarray:
        """``psi(e_b)`` for every matrix unit: ``w_k`` on diagonal units, else 0."""
        return self.unit * self.gram

    @cached_property
    def star_index(self) -> np.ndarray:
        alg = self.algebra
        return np.array([alg.index(i, k, j) for (i, j, k) in alg.basis_labels])

    def psi(self, x: np.ndarray):
        x, p = _coerce_pair(np.asarray(x), self.psi_vector)
        return p.dot(x)

    def star(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x)
        out = x[self.star_index]
        return out if is_exact(out) else out.conj()

    def split(self, x: np.ndarray) -> list[np.ndarray]:
        return [
            np.asarray(x[off:off + n * n]).reshape(n, n)
            for off, n in zip(self.algebra.offsets, self.algebra.block_dims)
        ]

    def join(self, blocks: Sequence[np.ndarray]) -> np.ndarray:
        return np.concatenate([np.asarray(b).reshape(-1) for b in blocks])

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = _coerce_pair(np.asarray(x), np.asarray(y))
        if self.algebra.is_commutative:
            return x * y
        return self.join([a.dot(b) for a, b in zip(self.split(x), self.split(y))])

    def basis_vector(self, b: int) -> np.ndarray:
        e = zeros(self.dim, self.exact)
        e[b] = 1
        return e

    def left_mult(self, x: np.ndarray) -> LinearOperator:
        """The operator ``y -> x y`` on ``L^2``."""
        x = np.asarray(x)
        exact = self.exact and is_exact(x)
        if not exact:
            x = as_float(x)
        mat = zeros((self.dim, self.dim), exact)
        for i, n in enumerate(self.algebra.block_dims):
            off = self.algebra.offsets[i]
            xi = x[off:off + n * n].reshape(n, n)
            mat[off:off + n * n, off:off + n * n] = kron(xi, eye(n, exact))
        return LinearOperator(mat, self.hilbert, self.hilbert)

    def right_mult(self, x: np.ndarray) -> LinearOperator:
        x = np.asarray(x)
        exact = self.exact and is_exact(x)
        if not exact:
            x = as_float(x)
        mat = zeros((self.dim, self.dim), exact)
        for i, n in enumerate(self.algebra.block_dims):
            off = self.algebra.offsets[i]
            xi = x[off:off + n * n].reshape(n, n)
            mat[off:off + n * n, off:off + n * n] = kron(eye(n, exact), xi.T)
        return LinearOperator(mat, self.hilbert, self.hilbert)

    def inner(self, x: np.ndarray, y: np.ndarray):
        return self.psi(self.multiply(self.star(x), y))

    # -- structure maps as operators ------------------------------------------

    @cached_property
    def tensor_hilbert(self) -> Hilbert:
        return self.hilbert.tensor(self.hilbert)

    @cached_property
    def mult(self) -> LinearOperator:
        return mult_operator(self)

    @cached_property
    def eta(self) -> LinearOperator:
        return unit_operator(self)

    @cached_property
    def identity(self) -> LinearOperator:
        return LinearOperator.identity(self.hilbert)

    def operator(self, matrix) -> LinearOperator:
        """Wrap a square matrix (matrix-unit coordinates) as an operator on ``L^2``."""
        matrix = np.asarray(matrix)
        if self.exact and (matrix.dtype == object or matrix.dtype.kind in "iu"):
            matrix = exact_array(matrix)
        else:
            matrix = as_float(matrix)
        return LinearOperator(matrix, self.hilbert, self.hilbert)


def _parse_weights(alg: BlockAlgebra, weights) -> tuple[tuple, ...]:
    if len(weights) != len(alg.block_dims):
        raise DeltaFormError("weights must have one list per block")
    parsed = []
    for ws, n in zip(weights, alg.block_dims):
        if len(ws) != n:
            raise DeltaFormError(f"block of size {n} needs {n} weights, got {len(ws)}")
        row = []
        for w in ws:
            v = parse_scalar(w)
            if isinstance(v, complex):
                if abs(v.imag) > 0:
                    raise DeltaFormError(f"weight {w!r} is not real")
                v = v.real
            row.append(v)
        parsed.append(row)
    if not all(isinstance(w, Fraction) for ws in parsed for w in ws):
        parsed = [[float(w) for w in ws] for ws in parsed]
    return tuple(tuple(ws) for ws in parsed)


def validate_delta_form(alg: BlockAlgebra, weights, tol: float | None = None) -> DeltaForm:
    """Check that the diagonal weights define a delta-form and return it.

    Faithfulness and normalisation are checked directly.  The identity
    ``m m^* = delta^2 id`` is evaluated numerically from the multiplication
    operator, and the scalar is cross-checked against the per-block value
    ``sum_k 1/w_k`` (exact for rational weights).
    """
    tol = tolerance(tol)
    ws = _parse_weights(alg, weights)
    for i, row in enumerate(ws):
        for k, w in enumerate(row):
            if not w > 0:
                raise DeltaFormError(f"weight {w} in block {i} is not positive (state not faithful)")
    total = sum(w for row in ws for w in row)
    exact = isinstance(total, Fraction)
    if (total != 1) if exact else abs(total - 1) > tol:
        raise DeltaFormError(f"psi(1) = {total} != 1")

    per_block = [sum(1 / w for w in row) for row in ws]
    space = GnsSpace(alg, DeltaForm(ws, None))
    m = _mult_pattern(alg, np.zeros)
    g2 = as_float(space.tensor_hilbert.gram)
    g = as_float(space.gram)
    mm = (m / g2[None, :]).dot(m.conj().T) * g[None, :]
    scalar = float(np.real(np.trace(mm))) / space.dim
    resid = np.linalg.norm(mm - scalar * np.eye(space.dim), 2)
    if resid > tol * max(scalar, 1.0):
        raise DeltaFormError(
            f"m m^* is not scalar (residual {resid:.3g}); per-block sums of 1/w are {per_block}"
        )
    if exact:
        if any(s != per_block[0] for s in per_block):
            raise DeltaFormError(f"per-block sums of 1/w differ: {per_block}")
        delta_sq = per_block[0]
    else:
        delta_sq = float(per_block[0])
    if abs(float(delta_sq) - scalar) > tol * max(scalar, 1.0):
        raise DeltaFormError(f"m m^* = {scalar} id disagrees with sum 1/w = {delta_sq}")
    return DeltaForm(ws, delta_sq)


def make_space(block_dims: Sequence[int], weights, tol: float | None = None) -> GnsSpace:
    alg = make_algebra(block_dims)
    return GnsSpace(alg, validate_delta_form(alg, weights, tol))


def uniform_space(n: int) -> GnsSpace:
    """``C^n`` with the uniform state (the classical vertex space)."""
    return make_space([1] * n, [[Fraction(1, n)] for _ in range(n)])


def tracial_space(block_dims: Sequence[int]) -> GnsSpace:
    """Block algebra with the unique tracial delta-form.

    Block ``i`` gets density ``rho_i = (n_i / Z) 1`` so that ``sum_k 1/w_k``
    equals ``Z`` in every block, where ``Z = sum_i n_i^2``.
    """
    z = sum(n * n for n in block_dims)
    return make_space(block_dims, [[Fraction(n, z)] * n for n in block_dims])


def gns_inner(space: GnsSpace, x, y):
    """``<x, y> = psi(x^* y)``; accepts vectors or :class:`AlgebraElement`."""
    xv = x.to_vector() if isinstance(x, AlgebraElement) else np.asarray(x)
    yv = y.to_vector() if isinstance(y, AlgebraElement) else np.asarray(y)
    if len(xv) != space.dim or len(yv) != space.dim:
        raise AlgebraError("element does not belong to this algebra")
    return space.inner(xv, yv)


def mult_operator(space: GnsSpace) -> LinearOperator:
    """``m: L^2 (x) L^2 -> L^2`` with ``m(e_{jk} (x) e_{kl}) = e_{jl}``."""
    mat = _mult_pattern(space.algebra, (lambda shape: zeros(shape, True)) if space.exact else np.zeros)
    return LinearOperator(mat, space.tensor_hilbert, space.hilbert)


def _mult_pattern(alg: BlockAlgebra, alloc) -> np.ndarray:
    d = alg.dim
    mat = alloc((d, d * d))
    if is_exact(mat):
        one = Fraction(1)
    else:
        mat = mat.astype(complex)
        one = 1
    for i, n in enumerate(alg.block_dims):
        for j in range(n):
            for k in range(n):
                a = alg.index(i, j, k)
                for l in range(n):
                    mat[alg.index(i, j, l), a * d + alg.index(i, k, l)] = one
    return mat


def unit_operator(space: GnsSpace) -> LinearOperator:
    """``eta: C -> L^2``, ``eta(1) = 1``; its adjoint is ``psi``."""
    return LinearOperator(space.unit.reshape(-1, 1).copy(), Hilbert.scalars(), space.hilbert)
