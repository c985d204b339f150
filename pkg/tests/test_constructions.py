import itertools
import math

import numpy as np
import pytest

import oracles
from szx.constructions import (
    Graph,
    all_graphs,
    bipartite_graph,
    bipartite_graph_state,
    graph_state_box,
    local_complement,
    locomp_equation,
    parse_graph,
    pivot,
    pivot_equation,
    pivot_matrix,
    random_graph,
)
from szx.errors import ParameterError, ParseError
from szx.f2linalg import F2Matrix
from szx.semantics import equal_semantics, interpret

TOL = 1e-9


def state(d):
    return interpret(d).matrix[:, 0]


def test_graph_basics():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.neighbours(1) == [0, 2]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)
    assert parse_graph(g.to_text()) == g
    assert g.induced([1, 2, 3]).edge_list() == [(0, 1), (1, 2)]
    with pytest.raises(ParameterError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ParseError) as info:
        parse_graph("3\n0 1\n1 x\n")
    assert info.value.line == 3
    assert sum(1 for _ in all_graphs(4)) == 64


def test_local_complement_and_pivot_on_small_graphs():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert local_complement(star, 0).edge_list() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert local_complement(local_complement(star, 0), 0) == star
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    # pivoting a path on its middle edge: toggles {0}x{3}, then swaps labels 1, 2
    assert pivot(path, 1, 2).edge_list() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    with pytest.raises(ParameterError):
        pivot(path, 0, 2)


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_inductive_graph_state_matches_cz_oracle(order):
    for g in all_graphs(order):
        assert np.allclose(state(graph_state_box(g)), oracles.cz_graph_state(order, g.edge_list()), atol=TOL)


def test_bipartite_graph_state_matches_cz_oracle():
    for m, n in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 2)]:
        for bits in itertools.product((0, 1), repeat=m * n):
            gamma = F2Matrix([list(bits[i * n:(i + 1) * n]) for i in range(m)])
            g = bipartite_graph(gamma)
            assert np.allclose(state(bipartite_graph_state(gamma)),
                               oracles.cz_graph_state(m + n, g.edge_list()), atol=TOL)


def test_stabilisers_on_random_graphs():
    rng = np.random.default_rng(3)
    for _ in range(10):
        g = random_graph(rng, int(rng.integers(5, 7)))
        psi = state(graph_state_box(g))
        assert np.isclose(psi[0], 2 ** (-g.order / 2))
        for u in range(g.order):
            ops = {u: oracles.X, **{v: oracles.Z for v in g.neighbours(u)}}
            assert np.allclose(oracles.pauli_on(g.order, ops) @ psi, psi, atol=TOL)


def test_pivot_matrix():
    gamma = F2Matrix([[1, 1, 0], [1, 0, 1]])
    assert pivot_matrix(gamma) == F2Matrix([[1, 1, 0], [1, 1, 1]])


def test_pivot_equation_matches_graph_pivot():
    for m, n in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (1, 4), (4, 1)]:
        for bits in itertools.product((0, 1), repeat=m * n - 1):
            gamma = F2Matrix([([1] + list(bits))[i * n:(i + 1) * n] for i in range(m)])
            lhs, rhs = pivot_equation(gamma)
            assert equal_semantics(lhs, rhs, tol=TOL)
            # independent check: H_u H_v |G> is the CZ state of the pivoted graph
            g = pivot(bipartite_graph(gamma), 0, n)
            h = oracles.pauli_on(m + n, {0: oracles.H1, n: oracles.H1})
            expected = h @ oracles.cz_graph_state(m + n, bipartite_graph(gamma).edge_list())
            assert np.allclose(expected, oracles.cz_graph_state(m + n, g.edge_list()), atol=TOL)
            assert np.allclose(state(rhs), expected, atol=TOL)


def test_pivot_needs_the_edge():
    with pytest.raises(ParameterError):
        pivot_equation(F2Matrix([[0, 1]]))


def _rx(theta):
    return oracles.H1 @ np.diag([1, np.exp(1j * theta)]) @ oracles.H1


def _rz(theta):
    return np.diag([1, np.exp(1j * theta)])


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_local_complementation_exhaustive(order):
    for g in all_graphs(order):
        psi = oracles.cz_graph_state(order, g.edge_list())
        for u in range(order):
            lhs, rhs = locomp_equation(g, u)
            assert equal_semantics(lhs, rhs, tol=TOL)
            ops = {u: _rx(math.pi / 2), **{v: _rz(-math.pi / 2) for v in g.neighbours(u)}}
            lc = oracles.cz_graph_state(order, local_complement(g, u).edge_list())
            assert np.allclose(oracles.pauli_on(order, ops) @ psi, lc, atol=TOL)
