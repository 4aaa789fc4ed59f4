from __future__ import annotations

from fractions import Fraction as F
from itertools import product

import networkx as nx
import numpy as np
import pytest

from qmyc import catalog
from qmyc.algebra import LinearOperator, tracial_space, uniform_space
from qmyc.graph import (
    Normalization,
    check_quantum_graph,
    complete_graph,
    empty_graph,
    from_classical,
    to_classical,
)
from qmyc.mycielski import (
    MycielskiError,
    adjacency_via_embeddings,
    analyze_mycielski_automorphism,
    automorphism_defects,
    classical_mycielskian,
    embeddings,
    extend_automorphism,
    mult_via_embeddings,
    mycielski_space,
    mycielskian,
)
from qmyc.symmetry import Permutation


def _nx(g):
    return nx.from_numpy_array(np.asarray(g.adjacency))


def _is_k_colorable(g, k: int) -> bool:
    n = g.n
    order = sorted(range(n), key=lambda v: -len(g.neighbors(v)))
    colors = [-1] * n

    def go(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        used = {colors[u] for u in g.neighbors(v)}
        for c in range(k):
            if c not in used:
                colors[v] = c
                if go(i + 1):
                    return True
        colors[v] = -1
        return False

    return go(0)


def _inner_automorphism(sp, u: np.ndarray) -> LinearOperator:
    """``x -> U x U^*`` on a single matrix block."""
    vec = lambda x: x.reshape(-1)  # noqa: E731
    n = u.shape[0]
    cols = []
    for j, k in product(range(n), range(n)):
        e = np.zeros((n, n), dtype=complex)
        e[j, k] = 1
        cols.append(vec(u @ e @ u.conj().T))
    return sp.operator(np.array(cols).T)


def test_mu_k2_is_c5():
    mu = mycielskian(from_classical(catalog.complete(2)), 2)
    g = to_classical(mu)
    assert g.n == 5
    assert nx.is_isomorphic(_nx(g), _nx(catalog.cycle(5)))


def test_grotzsch_graph():
    g = to_classical(mycielskian(from_classical(catalog.cycle(5)), 2))
    a = np.asarray(g.adjacency)
    assert g.n == 11 and g.edge_count == 20
    assert np.trace(a @ a @ a) == 0
    assert not _is_k_colorable(g, 3) and _is_k_colorable(g, 4)


def test_classical_mycielskian_counts():
    for g in (catalog.cycle(5), catalog.path(4), catalog.get("G6_38").graph):
        for r in (2, 3, 4):
            m = classical_mycielskian(g, r)
            assert m.n == 1 + r * g.n
            assert m.edge_count == g.edge_count * (2 * r - 1) + g.n


def test_r1_is_identity():
    qg = from_classical(catalog.cycle(5))
    assert mycielskian(qg, 1) is qg
    assert adjacency_via_embeddings(qg, 1).equals(qg.adjacency)
    assert classical_mycielskian(catalog.cycle(5), 1) == catalog.cycle(5)


def test_invalid_r():
    qg = from_classical(catalog.cycle(4))
    for r in (0, -1, 1.5, True):
        with pytest.raises(MycielskiError):
            mycielskian(qg, r)


def test_invalid_input_rejected():
    qg = from_classical(catalog.cycle(4))
    with pytest.raises(MycielskiError):
        mycielskian(qg.with_adjacency(qg.adjacency.scale(3)), 2)


def test_space_weights():
    sp = mycielski_space(tracial_space([1, 2]), 2)
    assert sp.delta_sq == 11
    assert sp.algebra.block_dims == (1, 1, 2, 1, 2)
    assert sp.form.weights[0] == (F(1, 11),)
    assert sp.form.weights[2] == (F(2, 11), F(2, 11))


@pytest.mark.parametrize("r", [2, 3])
def test_quantum_examples(r, qexamples):
    for name, qg in qexamples.items():
        mu = mycielskian(qg, r)
        rep = check_quantum_graph(mu)
        assert rep.ok, (name, rep.failures)
        assert abs(complex(mu.delta_sq) - (1 + r * complex(qg.delta_sq))) < 1e-9
        assert adjacency_via_embeddings(qg, r).equals(mu.adjacency, 1e-9)


def test_schur_one_input_keeps_normalization():
    qg = complete_graph(tracial_space([1, 2])).renormalized(Normalization.ONE)
    mu = mycielskian(qg, 2)
    assert mu.normalization is Normalization.ONE
    assert check_quantum_graph(mu).ok
    ref = mycielskian(qg.renormalized(Normalization.DELTA_SQ), 2)
    assert mu.renormalized(Normalization.DELTA_SQ).adjacency.equals(ref.adjacency, 1e-9)


@pytest.mark.parametrize("r", [2, 3])
def test_embeddings_resolve_identity(r):
    for qg in (from_classical(catalog.cycle(4)), empty_graph(tracial_space([2]))):
        emb = embeddings(qg, r)
        total = None
        for k in range(r + 1):
            ik = emb.iota(k)
            assert (emb.iota_star(k) @ ik).equals(LinearOperator.identity(ik.domain), 1e-12)
            term = ik @ emb.iota_star(k)
            total = term if total is None else total + term
        assert total.equals(LinearOperator.identity(emb.target.hilbert), 1e-12)


def test_mult_via_embeddings():
    qg = complete_graph(tracial_space([1, 2]))
    mu = mycielskian(qg, 2)
    m = mult_via_embeddings(qg, 2)
    assert np.allclose(m.to_float().matrix, mu.space.mult.to_float().matrix, atol=1e-12)


def test_extend_classical_automorphism():
    g = catalog.cycle(5)
    qg = from_classical(g)
    alpha = Permutation((1, 2, 3, 4, 0)).operator(qg.space)
    for r in (2, 3):
        u = extend_automorphism(qg, r, alpha)
        assert automorphism_defects(mycielskian(qg, r), u) == []
    dec = analyze_mycielski_automorphism(qg, extend_automorphism(qg, 2, alpha))
    assert dec.off_diagonal_zero and dec.diagonal and dec.chain_holds


def test_extend_quantum_automorphism():
    sp = tracial_space([2])
    qg = complete_graph(sp, reflexive=False)
    theta = 0.3
    u = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]]) * np.exp(0.2j)
    alpha = _inner_automorphism(sp, u)
    assert automorphism_defects(qg, alpha) == []
    ext = extend_automorphism(qg, 2, alpha)
    assert automorphism_defects(mycielskian(qg, 2), ext) == []


def test_non_automorphism_rejected():
    qg = from_classical(catalog.path(3))
    bad = Permutation((1, 0, 2)).operator(qg.space)
    assert "commutes_with_adjacency" in automorphism_defects(qg, bad)
    with pytest.raises(MycielskiError):
        extend_automorphism(qg, 2, bad)


def test_p3_non_diagonal_automorphism():
    # swap the twin leaves in copy 1 only; copy 2 and the master stay fixed
    g = catalog.path(3)
    qg = from_classical(g)
    mu = classical_mycielskian(g, 2)
    images = list(range(7))
    images[1], images[3] = 3, 1
    sigma = Permutation(tuple(images))
    assert np.array_equal(np.asarray(mu.relabel(sigma.images).adjacency), np.asarray(mu.adjacency))
    dec = analyze_mycielski_automorphism(qg, sigma.operator(mycielskian(qg, 2).space))
    assert not dec.diagonal
