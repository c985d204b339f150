"""Graph states as diagrams of type ``0 -> 1_n``.

Qubit ``i`` of the output register is vertex ``i``.  Both constructions are
normalised so that every amplitude has modulus ``2**(-n/2)``.
"""

from __future__ import annotations

import math

from ..diagram import (
    Diagram,
    Gatherer,
    GreenSpider,
    Hadamard,
    Identity,
    MatrixBox,
    RedSpider,
    WireType,
    compose,
    identity,
    inv_root2,
    merge_many,
    permutation,
    scalar,
    split_many,
    tensor,
)
from ..errors import ParameterError
from ..f2linalg import F2Matrix
from .graphs import Graph, bipartite_graph, local_complement

__all__ = [
    "bipartite_graph_state",
    "graph_state_box",
    "pivot_equation",
    "pivot_matrix",
    "locomp_equation",
    "on_qubits",
]


def bipartite_graph_state(gamma) -> Diagram:
    """State of the bipartite graph with ``m x n`` biadjacency ``gamma``.

    Columns are the first ``n`` qubits, rows the last ``m``.
    """
    gamma = gamma if isinstance(gamma, F2Matrix) else F2Matrix(gamma)
    m, n = gamma.shape
    body = compose(
        GreenSpider(0, 2, n),
        Identity(n) @ (MatrixBox(gamma) >> Hadamard(m)),
        Gatherer(n, m),
    )
    return body @ inv_root2(n)


def _regroup(sizes_in, order, sizes_out) -> Diagram:
    """Break registers into qubits, reorder them (output qubit j = input qubit
    ``order[j]``) and gather them into ``sizes_out``."""
    total = sum(sizes_in)
    parts = [tensor(*(split_many([1] * s) for s in sizes_in))]
    if list(order) != list(range(total)):
        parts.append(permutation(order, WireType((1,) * total)))
    parts.append(tensor(*(merge_many([1] * s) for s in sizes_out)))
    return compose(*parts)


def graph_state_box(g: Graph) -> Diagram:
    """Inductive construction: add vertex 0 to the state of the other vertices.

    The rest of the graph is built recursively and its qubits are reordered so
    that the neighbourhood of vertex 0 comes first.  Vertex 0 is a green
    spider whose second leg is fanned out to every neighbour through an
    all-ones matrix and Hadamards, and fused into the neighbourhood register;
    this applies one controlled-Z per edge.
    """
    if not isinstance(g, Graph):
        raise ParameterError("graph_state_box needs a Graph")
    if g.order == 1:
        return GreenSpider(0, 1, 1) @ inv_root2(1)
    n, u = g.order, 0
    rest = list(range(1, n))
    nb = set(g.neighbours(u))
    near = [v for v in rest if v in nb]
    far = [v for v in rest if v not in nb]
    d = len(near)
    sizes = [s for s in (d, len(far)) if s]
    tau = [rest.index(v) for v in near + far]

    if d:
        vertex = compose(
            GreenSpider(0, 2, 1),
            Identity(1) @ MatrixBox(F2Matrix.ones(d, 1)),
            Identity(1) @ Hadamard(d),
        )
    else:
        vertex = GreenSpider(0, 1, 1)
    layers = [
        vertex @ graph_state_box(g.induced(rest)),
        identity(vertex.cod) @ _regroup([n - 1], tau, sizes),
    ]
    if d:
        layers.append(tensor(Identity(1), GreenSpider(2, 1, d), identity(sizes[1:])))
    current = [u] + near + far
    layers.append(_regroup([1] + sizes, [current.index(v) for v in range(n)], [n]))
    body = compose(*layers)
    return body if d == 1 else body @ scalar(d - 1)


def on_qubits(state: Diagram, ops: dict) -> Diagram:
    """Apply size-one diagrams ``ops[q]`` to qubits ``q`` of a one-register state."""
    (size,) = state.cod.registers
    layer = tensor(*(ops.get(q, Identity(1)) for q in range(size)))
    return compose(state, split_many([1] * size), layer, merge_many([1] * size))


def pivot_matrix(gamma: F2Matrix) -> F2Matrix:
    """``[[1, A], [B, C]] -> [[1, A], [B, C + BA]]``."""
    m, n = gamma.shape
    rows = gamma.tolist()
    out = [row[:] for row in rows]
    for i in range(1, m):
        for j in range(1, n):
            out[i][j] ^= rows[i][0] & rows[0][j]
    return F2Matrix(out)


def pivot_equation(gamma) -> tuple[Diagram, Diagram]:
    """Hadamards on both ends ``u`` (column 0) and ``v`` (row 0) of an edge.

    The result is the state of the pivoted biadjacency matrix with the
    qubits of ``u`` and ``v`` exchanged, the pivot swapping their labels.
    """
    gamma = gamma if isinstance(gamma, F2Matrix) else F2Matrix(gamma)
    if gamma[0, 0] != 1:
        raise ParameterError("pivot needs the first column and first row to be adjacent")
    m, n = gamma.shape
    lhs = on_qubits(bipartite_graph_state(gamma), {0: Hadamard(1), n: Hadamard(1)})
    order = list(range(n + m))
    order[0], order[n] = n, 0
    rhs = compose(bipartite_graph_state(pivot_matrix(gamma)), _regroup([n + m], order, [n + m]))
    return lhs, rhs


def locomp_equation(g: Graph, u: int) -> tuple[Diagram, Diagram]:
    """``X(pi/2)`` on ``u`` and ``Z(-pi/2)`` on its neighbours complement ``N_u``."""
    nb = g.neighbours(u)
    ops = {u: RedSpider(1, 1, 1, math.pi / 2)}
    ops.update({v: GreenSpider(1, 1, 1, -math.pi / 2) for v in nb})
    lhs = on_qubits(graph_state_box(g), ops)
    return lhs, graph_state_box(local_complement(g, u))
