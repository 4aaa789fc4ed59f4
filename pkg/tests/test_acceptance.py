"""Acceptance criteria 1-9, each with its stated tolerance and time bound."""

from __future__ import annotations

import time

import networkx as nx
import numpy as np
import pytest

import test_properties as props
from conftest import quantum_examples
from qmyc import catalog
from qmyc.algebra import Hilbert, LinearOperator, kron
from qmyc.graph import check_quantum_graph, from_classical, to_classical
from qmyc.labeling import check_mycielski_distinguishing_bound, distinguishing_number
from qmyc.mycielski import (
    adjacency_via_embeddings,
    analyze_mycielski_automorphism,
    classical_mycielskian,
    mycielskian,
)
from qmyc.symmetry import (
    CertificateError,
    IsoCertificate,
    Permutation,
    ProofTag,
    TwinStatus,
    automorphism_group,
    classical_twins,
    det_adjacency,
    fulton_pattern,
    lift_certificate,
    pattern_twin_solver,
    permutation_certificate,
    verify_iso_certificate,
)

TOL = 1e-9

# determinants printed beside the six-vertex table
SIX_VERTEX_DETS = {
    "G6_11": -1, "G6_12": -1, "G6_13": -1, "G6_19": 3, "G6_20": 3, "G6_33": 3,
    "G6_34": 4, "G6_35": 4, "G6_36": 7, "G6_37": -5, "G6_38": 0, "G6_40": 4,
    "G6_46": 7, "G6_48": 3, "G6_49": -1, "G6_51": 3,
}

G6_38_U = [
    ["u1", "0", "0", "0", "1-u1", "0"],
    ["0", "u2", "1-u2", "0", "0", "0"],
    ["0", "1-u2", "u2", "0", "0", "0"],
    ["0", "0", "0", "u3", "0", "1-u3"],
    ["1-u1", "0", "0", "0", "u1", "0"],
    ["0", "0", "0", "1-u3", "0", "u3"],
]


class Timer:
    def __init__(self, bound: float):
        self.bound = bound

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.bound, f"took {self.elapsed:.2f}s, bound {self.bound}s"


def _nx(g):
    return nx.from_numpy_array(np.asarray(g.adjacency))


def _twin_free_connected_small():
    out = []
    for e in catalog.entries():
        g = e.graph
        if g.n <= 6 and not classical_twins(g) and nx.is_connected(_nx(g)):
            out.append(e)
    return out


def _master_fixing_automorphisms(g):
    """Brute-force oracle: automorphisms of the classical Mycielskian fixing the master vertex."""
    mu = _nx(classical_mycielskian(g, 2))
    gm = nx.algorithms.isomorphism.GraphMatcher(mu, mu)
    return [tuple(m[v] for v in range(mu.number_of_nodes()))
            for m in gm.isomorphisms_iter() if m[0] == 0]


def _is_diagonal_extension(images, n):
    """``id + sigma + sigma``: both copies move by the same permutation of G."""
    first = [images[1 + v] - 1 for v in range(n)]
    second = [images[1 + n + v] - 1 - n for v in range(n)]
    return sorted(first) == list(range(n)) and first == second


@pytest.mark.criterion(1, "six-vertex table: twin flags, 16 determinants, unique twin-free singular entry")
def test_criterion_1_six_vertex_table():
    with Timer(5.0):
        names = catalog.six_vertex_names()
        assert len(names) == 55
        twin_free_singular = []
        for name in names:
            e = catalog.get(name)
            twins = bool(classical_twins(e.graph))
            assert twins == e.expected.has_twins, name
            det = det_adjacency(e.graph)
            if name in SIX_VERTEX_DETS:
                assert det == SIX_VERTEX_DETS[name], name
            if not twins and det == 0:
                twin_free_singular.append(name)
        assert twin_free_singular == ["G6_38"]


@pytest.mark.criterion(2, "five- and four-vertex twin-freeness and determinants")
def test_criterion_2_small_graphs():
    with Timer(1.0):
        twin_free = {}
        names = catalog.five_vertex_names()
        assert len(names) == 10
        for name in names:
            g = catalog.get(name).graph
            if not classical_twins(g):
                twin_free[name] = det_adjacency(g)
        assert twin_free == {"K5": 4, "G5_5": -4, "G5_7": -2}
        k4 = catalog.get(catalog.four_vertex_names()[2]).graph
        assert k4 == catalog.complete(4)
        assert not classical_twins(k4)
        assert det_adjacency(k4) == -3


@pytest.mark.criterion(3, "G6_38 Fulton pattern and pattern-forced quantum twin proof")
def test_criterion_3_quantum_twin_proof():
    with Timer(1.0):
        g = catalog.get("G6_38").graph
        pat = fulton_pattern(g)
        assert pat.symbols == ("u1", "u2", "u3")
        assert pat.rows() == G6_38_U
        v = pattern_twin_solver(g, pat)
        derived = list(v.derived)
        assert "p3=p1" in derived and "q3=q1" in derived
        first_pq = min(derived.index(x) for x in ("p1=q1", "p2=q2", "p3=q3"))
        assert derived.index("p3=p1") < first_pq and derived.index("q3=q1") < first_pq
        assert {"p1=q1", "p2=q2", "p3=q3"} <= set(derived)
        assert v.status is TwinStatus.NO_QUANTUM_TWINS and v.proof is ProofTag.PATTERN_FORCED
        assert str(v) == "NoQuantumTwins(PatternForced)"


@pytest.mark.criterion(4, "K2xK5 and C4xC3: shipped matrices, twin-free, det 0, verdict Unknown")
def test_criterion_4_products():
    with Timer(1.0):
        pairs = {
            "K2xK5": catalog.cartesian_product(catalog.complete(2), catalog.complete(5)),
            "C4xC3": catalog.cartesian_product(catalog.cycle(4), catalog.cycle(3)),
        }
        for name, generated in pairs.items():
            e = catalog.get(name)
            printed = catalog.ClassicalGraph.from_rows(e.printed_rows)
            assert printed == generated == e.graph
            assert not classical_twins(e.graph)
            assert det_adjacency(e.graph) == 0
            assert pattern_twin_solver(e.graph).status is TwinStatus.UNKNOWN


@pytest.mark.criterion(5, "Mycielski invariants over the catalog and quantum examples, r = 1, 2, 3")
def test_criterion_5_mycielski_invariants():
    with Timer(10.0):
        for e in catalog.entries():
            qg = from_classical(e.graph)
            for r in (1, 2, 3):
                mu = mycielskian(qg, r)
                assert check_quantum_graph(mu, TOL).ok, (e.name, r)
                # r = 1 is the identity construction, so the delta relation starts at r = 2
                assert mu.delta_sq == (qg.delta_sq if r == 1 else 1 + r * qg.delta_sq)
                assert adjacency_via_embeddings(qg, r).equals(mu.adjacency)
                assert to_classical(mu) == classical_mycielskian(e.graph, r)
        for name, qg in quantum_examples().items():
            for r in (1, 2, 3):
                mu = mycielskian(qg, r)
                assert check_quantum_graph(mu, TOL).ok, (name, r)
                expected = complex(qg.delta_sq) if r == 1 else 1 + r * complex(qg.delta_sq)
                assert abs(complex(mu.delta_sq) - expected) <= TOL * abs(expected)
                assert adjacency_via_embeddings(qg, r).equals(mu.adjacency, TOL)


@pytest.mark.criterion(6, "certificate verification and lifting; delta mismatch rejected")
def test_criterion_6_certificates():
    with Timer(5.0):
        for g in (catalog.cycle(4), catalog.cycle(5), catalog.get("G6_38").graph):
            qg = from_classical(g)
            for sigma in automorphism_group(g):
                cert = permutation_certificate(qg, qg, sigma)
                assert verify_iso_certificate(cert, TOL).ok
                for r in (1, 2, 3):
                    assert verify_iso_certificate(lift_certificate(cert, r, TOL), TOL).ok

        c4 = from_classical(catalog.cycle(4))
        e1 = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
        rot = Permutation((1, 2, 3, 0)).matrix().astype(complex)
        p = kron(np.eye(4, dtype=complex), e1) + kron(rot, np.eye(2) - e1)
        h = c4.space.hilbert.tensor(Hilbert.aux(2))
        mixed = IsoCertificate(c4, c4, 2, LinearOperator(p, h, h))
        assert verify_iso_certificate(mixed, TOL).ok
        for r in (1, 2, 3):
            assert verify_iso_certificate(lift_certificate(mixed, r, TOL), TOL).ok

        c3 = from_classical(catalog.cycle(3))
        q = np.zeros((4, 3), dtype=complex)
        q[:3, :3] = np.eye(3)
        bad = IsoCertificate(c3, c4, 1, LinearOperator(
            q, c3.space.hilbert.tensor(Hilbert.aux(1)), c4.space.hilbert.tensor(Hilbert.aux(1))))
        with pytest.raises(CertificateError):
            verify_iso_certificate(bad, TOL)


@pytest.mark.criterion(7, "master-fixing automorphisms of mu(G) are diagonal for twin-free G; P3 is not")
def test_criterion_7_twin_free_automorphisms():
    with Timer(60.0):
        graphs = _twin_free_connected_small()
        assert len(graphs) > 5
        for e in graphs:
            g = e.graph
            qg = from_classical(g)
            mu_space = mycielskian(qg, 2).space
            fixing = _master_fixing_automorphisms(g)
            assert len(fixing) == len(automorphism_group(g)), e.name
            for images in fixing:
                assert _is_diagonal_extension(images, g.n), (e.name, images)
                dec = analyze_mycielski_automorphism(qg, Permutation(images).operator(mu_space))
                assert dec.off_diagonal_zero and dec.diagonal and dec.chain_holds

        p3 = catalog.path(3)
        fixing = _master_fixing_automorphisms(p3)
        odd = [im for im in fixing if not _is_diagonal_extension(im, 3)]
        assert odd, "expected a non-diagonal master-fixing automorphism of mu(P3)"
        qp3 = from_classical(p3)
        dec = analyze_mycielski_automorphism(qp3, Permutation(odd[0]).operator(mycielskian(qp3, 2).space))
        assert not dec.diagonal


@pytest.mark.criterion(8, "distinguishing numbers and D(mu(G)) <= D(G) + 1 on twin-free graphs")
def test_criterion_8_distinguishing_bound():
    with Timer(120.0):
        # brute-force oracle values (see test_labeling)
        expected = {"K4": 4, "C5": 3, "C6": 2, "P4": 2}
        graphs = {"K4": catalog.complete(4), "C5": catalog.cycle(5),
                  "C6": catalog.cycle(6), "P4": catalog.path(4)}
        for name, g in graphs.items():
            assert distinguishing_number(g) == expected[name], name
        count = 0
        for e in catalog.entries():
            if e.graph.n > 6 or classical_twins(e.graph):
                continue
            rep = check_mycielski_distinguishing_bound(e.graph)
            assert rep.induced_distinguishing, e.name
            assert rep.d_mu <= rep.d_g + 1, e.name
            count += 1
        assert count > 5


@pytest.mark.criterion(9, "property suites: delta-form, GNS Gram, coloring equivalence, induced partitions")
def test_criterion_9_property_suites():
    props.test_delta_form_matches_per_block_formula()
    props.test_validator_accepts_iff_block_sums_agree()
    props.test_gns_gram_identity()
    props.test_quantum_coloring_iff_proper()
    props.test_induced_partition_sums_to_identity_exactly()
