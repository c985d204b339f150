"""Independent reference matrices built from single-qubit kets and Kronecker
products only; used to check the interpreter and the constructions."""

import itertools
from functools import reduce

import numpy as np

KET = [np.array([[1], [0]], dtype=complex), np.array([[0], [1]], dtype=complex)]
H1 = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def kron(*ms):
    return reduce(np.kron, ms, np.ones((1, 1), dtype=complex))


def ket(bits):
    return kron(*(KET[b] for b in bits))


def hadamard(n):
    return kron(*([H1] * n))


def green(k, l, n, phases):
    out = np.zeros((2 ** (n * l), 2 ** (n * k)), dtype=complex)
    for x in itertools.product((0, 1), repeat=n):
        w = np.exp(1j * sum(a * b for a, b in zip(phases, x)))
        out += w * ket(list(x) * l) @ ket(list(x) * k).T
    return out


def red(k, l, n, phases):
    return hadamard(n * l) @ green(k, l, n, phases) @ hadamard(n * k)


def matrix_box(a, forward=True):
    """|x> -> |Ax> with ``a`` a 0/1 numpy array; qubit 0 is coordinate 0."""
    a = np.asarray(a, dtype=int)
    m, n = a.shape
    out = np.zeros((2**m, 2**n), dtype=complex)
    for x in itertools.product((0, 1), repeat=n):
        y = a @ np.array(x) % 2
        out += ket(list(y)) @ ket(list(x)).T
    return out if forward else out.T


def cup(n):
    return sum(ket(list(x) * 2) for x in itertools.product((0, 1), repeat=n))


def swap(n, m):
    out = np.zeros((2 ** (n + m), 2 ** (n + m)), dtype=complex)
    for x in itertools.product((0, 1), repeat=n):
        for y in itertools.product((0, 1), repeat=m):
            out += ket(list(y) + list(x)) @ ket(list(x) + list(y)).T
    return out


def cz_graph_state(order, edges):
    """prod_{uv} CZ_uv |+>^n, vertex 0 the most significant qubit."""
    psi = np.zeros(2**order, dtype=complex)
    for i, x in enumerate(itertools.product((0, 1), repeat=order)):
        psi[i] = (-1) ** sum(x[u] * x[v] for u, v in edges)
    return psi / 2 ** (order / 2)


def pauli_on(order, ops):
    """Kronecker product with ``ops[q]`` (2x2) on qubit q, identity elsewhere."""
    return kron(*(ops.get(q, np.eye(2)) for q in range(order)))


X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
