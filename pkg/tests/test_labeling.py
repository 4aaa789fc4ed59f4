from __future__ import annotations

from itertools import product

import networkx as nx
import numpy as np
import pytest

from qmyc import catalog
from qmyc.algebra import Hilbert, LinearOperator, kron, tracial_space
from qmyc.graph import complete_graph, from_classical
from qmyc.labeling import (
    ClassicalLabeling,
    LabelingError,
    PartitionError,
    QuantumVerdict,
    check_mycielski_distinguishing_bound,
    distinguishing_number,
    distinguishing_search,
    find_distinguishing_labeling,
    induce_partition,
    induced_labeling,
    is_distinguishing,
    is_quantum_coloring,
    labeling_to_partition,
    partition_to_labeling,
    preserves_partition,
    quantum_distinguishing_verdict,
    validate_partition,
)
from qmyc.mycielski import MycielskiError, classical_mycielskian, extend_automorphism, mycielskian
from qmyc.symmetry import Permutation


def _nx_auts(g):
    h = nx.from_numpy_array(np.asarray(g.adjacency))
    gm = nx.algorithms.isomorphism.GraphMatcher(h, h)
    return [tuple(m[v] for v in range(g.n)) for m in gm.isomorphisms_iter()]


def _brute_force_d(g) -> int:
    auts = [a for a in _nx_auts(g) if a != tuple(range(g.n))]
    for c in range(1, g.n + 1):
        for lab in product(range(c), repeat=g.n):
            if all(any(lab[v] != lab[a[v]] for v in range(g.n)) for a in auts):
                return c
    raise AssertionError("unreachable")


def _rank(op) -> int:
    return int(np.linalg.matrix_rank(op.to_float().matrix, tol=1e-8))


@pytest.mark.parametrize("g, expected", [
    (catalog.complete(4), 4),
    (catalog.cycle(5), 3),
    (catalog.cycle(6), 2),
    (catalog.path(4), 2),
])
def test_distinguishing_numbers(g, expected):
    # values frozen from the brute-force oracle below
    assert _brute_force_d(g) == expected
    d, lab = distinguishing_search(g)
    assert d == expected
    assert is_distinguishing(g, lab)
    assert distinguishing_number(g) == expected


def test_find_returns_none_below_d():
    assert find_distinguishing_labeling(catalog.complete(4), 3) is None


def test_g6_38_distinguishing_number():
    g = catalog.get("G6_38").graph
    assert distinguishing_number(g) == _brute_force_d(g) == 2


def test_max_colors_too_small():
    with pytest.raises(LabelingError):
        distinguishing_search(catalog.complete(4), max_c=2)


def test_induced_labeling():
    lab = ClassicalLabeling.of([1, 2, 1])
    assert induced_labeling(lab).labels == (3, 1, 2, 1, 1, 2, 1)


@pytest.mark.parametrize("name", ["P4", "K2", "G6_38"])
def test_mycielski_bound(name):
    g = {"P4": catalog.path(4), "K2": catalog.complete(2)}.get(name) or catalog.get(name).graph
    rep = check_mycielski_distinguishing_bound(g)
    assert rep.holds
    assert rep.d_mu == _brute_force_d(classical_mycielskian(g, 2))


def test_bound_rejects_twins():
    with pytest.raises(LabelingError):
        check_mycielski_distinguishing_bound(catalog.path(3))


def test_quantum_distinguishing_verdict():
    p4 = catalog.path(4)
    assert quantum_distinguishing_verdict(p4, [1, 1, 2, 2]) is QuantumVerdict.DISTINGUISHING
    assert quantum_distinguishing_verdict(p4, [1, 1, 1, 1]) is QuantumVerdict.NOT_DISTINGUISHING


# ----------------------------------------------------------------------------
# partitions


def test_labeling_partition_round_trip():
    g = catalog.cycle(5)
    part = labeling_to_partition(g, [1, 2, 1, 2, 3])
    assert len(part) == 3
    assert partition_to_labeling(part).labels == (1, 2, 1, 2, 3)


def test_partition_validation():
    qg = from_classical(catalog.path(3))
    one = np.eye(3, dtype=int)
    with pytest.raises(PartitionError):
        validate_partition(qg, [np.diag([1, 0, 0]), np.diag([0, 1, 0])], 1)  # does not sum to 1
    with pytest.raises(PartitionError):
        validate_partition(qg, [one * 2, -one], 1)  # not projections
    validate_partition(qg, [np.diag([1, 0, 1]), np.diag([0, 1, 0])], 1)


def test_quantum_coloring_matches_proper_coloring():
    c4 = from_classical(catalog.cycle(4))
    assert is_quantum_coloring(c4, labeling_to_partition(c4, [1, 2, 1, 2]))
    assert not is_quantum_coloring(c4, labeling_to_partition(c4, [1, 1, 2, 2]))
    with pytest.raises(PartitionError):
        is_quantum_coloring(complete_graph(tracial_space([2])), None)


def test_preserves_partition():
    c4 = from_classical(catalog.cycle(4))
    part = labeling_to_partition(c4, [1, 2, 1, 2])
    assert preserves_partition(c4, Permutation((2, 3, 0, 1)), part)
    assert not preserves_partition(c4, Permutation((1, 2, 3, 0)), part)
    with pytest.raises(MycielskiError):
        preserves_partition(c4, Permutation((1, 0, 2, 3)), part)


@pytest.mark.parametrize("r, ranks", [(1, (0, 2, 2)), (2, (1, 4, 4)), (3, (1, 6, 6))])
def test_induced_partition(r, ranks):
    c4 = from_classical(catalog.cycle(4))
    part = labeling_to_partition(c4, [1, 2, 1, 2])
    ind = induce_partition(c4, part, r)
    assert tuple(_rank(q) for q in ind.parts) == ranks
    total = ind.parts[0]
    for q in ind.parts[1:]:
        total = total + q
    assert total.equals(LinearOperator.identity(ind.hilbert))
    alpha = Permutation((2, 3, 0, 1)).operator(c4.space)
    u = extend_automorphism(c4, r, alpha)
    assert preserves_partition(mycielskian(c4, r), u, ind)


def test_quantum_partition_aux_dim_two():
    sp = tracial_space([2])
    qg = complete_graph(sp)
    h = sp.hilbert.tensor(Hilbert.aux(2))
    e = np.array([[0.5, 0.5], [0.5, 0.5]])
    p1 = kron(np.eye(4, dtype=complex), e)
    p2 = np.eye(8) - p1
    part = validate_partition(qg, [LinearOperator(p1, h, h), LinearOperator(p2, h, h)], 2)
    ind = induce_partition(qg, part, 2)
    assert [_rank(q) for q in ind.parts] == [2, 8, 8]
