from __future__ import annotations

from fractions import Fraction as F

import numpy as np
import pytest

from qmyc.algebra import (
    AlgebraElement,
    AlgebraError,
    DeltaFormError,
    Hilbert,
    LinearOperator,
    exact_sqrt,
    gns_inner,
    make_algebra,
    make_space,
    parse_scalar,
    tolerance,
    tracial_space,
    uniform_space,
)


def _block_psi(weights, blocks):
    return sum(np.trace(np.diag([complex(w) for w in ws]) @ b) for ws, b in zip(weights, blocks))


def _random_element(alg, rng):
    return AlgebraElement(alg, tuple(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
                                     for n in alg.block_dims))


def test_parse_scalar():
    assert parse_scalar("3/4") == F(3, 4)
    assert parse_scalar(2) == F(2)
    assert parse_scalar(0.5) == 0.5
    with pytest.raises(AlgebraError):
        parse_scalar(True)


def test_exact_sqrt():
    assert exact_sqrt(F(9, 4)) == F(3, 2)
    assert exact_sqrt(F(2)) is None


def test_tolerance_env(monkeypatch):
    monkeypatch.setenv("QMYC_TOL", "1e-6")
    assert tolerance() == 1e-6
    assert tolerance(1e-3) == 1e-3
    monkeypatch.delenv("QMYC_TOL")
    assert tolerance() == 1e-9


def test_basis_layout():
    alg = make_algebra([1, 2])
    assert alg.dim == 5
    assert not alg.is_commutative
    assert alg.basis_labels[alg.index(1, 0, 1)] == (1, 0, 1)
    assert make_algebra([1, 1, 1]).is_commutative


@pytest.mark.parametrize("blocks, weights, delta_sq", [
    ([1, 1, 1], [[F(1, 3)]] * 3, F(3)),
    ([2], [[F(1, 2), F(1, 2)]], F(4)),
    ([2], [[F(1, 3), F(2, 3)]], F(9, 2)),
    ([1, 2], [[F(1, 5)], [F(2, 5), F(2, 5)]], F(5)),
])
def test_delta_form_values(blocks, weights, delta_sq):
    sp = make_space(blocks, weights)
    assert sp.delta_sq == delta_sq
    assert sp.exact == all(n == 1 for n in blocks)


def test_delta_form_rejections():
    with pytest.raises(DeltaFormError):
        make_space([1, 2], [[F(1, 2)], [F(1, 4), F(1, 4)]])  # per-block sums 2 vs 8
    with pytest.raises(DeltaFormError):
        make_space([1, 1], [[F(1, 2)], [F(1, 3)]])  # psi(1) != 1
    with pytest.raises(DeltaFormError):
        make_space([1, 1], [[F(3, 2)], [F(-1, 2)]])  # not faithful
    with pytest.raises(AlgebraError):
        make_space([2], [[F(1, 2)]])


def test_float_weights():
    sp = make_space([2], [[0.25, 0.75]])
    assert abs(sp.delta_sq - (4 + 4 / 3)) < 1e-12


def test_tracial_and_uniform():
    assert tracial_space([1, 2]).delta_sq == 5
    assert tracial_space([2, 3]).delta_sq == 13
    assert uniform_space(6).delta_sq == 6


def test_multiplication_matches_blocks():
    rng = np.random.default_rng(1)
    sp = make_space([1, 2], [[F(1, 5)], [F(2, 5), F(2, 5)]])
    x, y = _random_element(sp.algebra, rng), _random_element(sp.algebra, rng)
    prod = sp.multiply(x.to_vector(), y.to_vector())
    expect = AlgebraElement(sp.algebra, tuple(a @ b for a, b in zip(x.blocks, y.blocks))).to_vector()
    assert np.allclose(prod, expect)
    star = sp.star(x.to_vector())
    assert np.allclose(star, AlgebraElement(sp.algebra, tuple(b.conj().T for b in x.blocks)).to_vector())


def test_gns_inner_is_psi_of_product():
    rng = np.random.default_rng(2)
    sp = make_space([2], [[F(1, 3), F(2, 3)]])
    x, y = _random_element(sp.algebra, rng), _random_element(sp.algebra, rng)
    lhs = gns_inner(sp, x, y)
    rhs = _block_psi(sp.form.weights, [a.conj().T @ b for a, b in zip(x.blocks, y.blocks)])
    assert abs(lhs - rhs) < 1e-12


def test_mm_star_is_delta_sq():
    for sp in (tracial_space([1, 2]), make_space([2], [[F(1, 3), F(2, 3)]]), uniform_space(4)):
        m = sp.mult
        mm = m @ m.adjoint()
        assert mm.equals(LinearOperator.identity(sp.hilbert).scale(sp.delta_sq))


def test_eta_star_is_psi():
    sp = make_space([2], [[F(1, 3), F(2, 3)]])
    psi = sp.eta.adjoint()
    x = np.arange(1, 5, dtype=complex)
    assert abs(psi.apply(x)[0] - sp.psi(x)) < 1e-12


def test_adjoint_relation():
    rng = np.random.default_rng(3)
    sp = tracial_space([1, 2])
    a = sp.operator(rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5)))
    x = rng.normal(size=5) + 0j
    y = rng.normal(size=5) + 0j
    lhs = sp.inner(a.apply(x), y)
    rhs = sp.inner(x, a.adjoint().apply(y))
    assert abs(lhs - rhs) < 1e-10


def test_on_matrix_round_trip():
    sp = make_space([2], [[F(1, 3), F(2, 3)]])
    a = sp.operator(np.arange(16, dtype=complex).reshape(4, 4))
    back = LinearOperator.from_on_matrix(a.on_matrix(), sp.hilbert, sp.hilbert)
    assert back.equals(a)
    # adjoint is the conjugate transpose in orthonormal coordinates
    assert np.allclose(a.adjoint().on_matrix(), a.on_matrix().conj().T)


def test_operator_arithmetic_exact():
    sp = uniform_space(3)
    a = sp.operator(np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))
    assert a.exact
    assert (a @ a - a @ a).is_zero()
    assert (a + a).equals(a.scale(2))
    with pytest.raises(AlgebraError):
        a @ LinearOperator.identity(Hilbert.aux(2))


def test_left_mult_matches_multiply():
    rng = np.random.default_rng(4)
    sp = tracial_space([1, 2])
    x = _random_element(sp.algebra, rng).to_vector()
    y = _random_element(sp.algebra, rng).to_vector()
    assert np.allclose(sp.left_mult(x).apply(y), sp.multiply(x, y))
    assert np.allclose(sp.right_mult(x).apply(y), sp.multiply(y, x))
