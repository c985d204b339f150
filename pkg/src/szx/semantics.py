"""Interpretation of diagrams as complex matrices.

Basis states are indexed with the leftmost register in the most significant
bits, and inside a register qubit 0 is the most significant.  A diagram of
type ``a -> b`` becomes a ``2**S(b) x 2**S(a)`` matrix.

Rather than taking Kronecker products of whole layers, the interpreter pushes
a batch of basis states through the diagram: it keeps a tensor with one axis
per qubit of the current cut and applies each leaf only to the qubits it
touches.  Wiring leaves (identities, dividers, gatherers) cost nothing and
swaps are axis permutations.

>>> import numpy as np
>>> from szx.diagram import Hadamard
>>> np.round(interpret(Hadamard(1)).matrix * np.sqrt(2), 6).real
array([[ 1.,  1.],
       [ 1., -1.]])
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .diagram import (
    Cap,
    Cup,
    Diagram,
    Divider,
    EmptyScalar,
    Gatherer,
    GreenSpider,
    Hadamard,
    Identity,
    MatrixBox,
    Par,
    RedSpider,
    Seq,
    Swap,
    WireType,
)
from .errors import ComparisonError, ResourceError, StructuralError
from .f2linalg import apply_int

__all__ = [
    "SemanticsValue",
    "interpret",
    "equal_semantics",
    "apply_state",
    "generator_matrix",
    "DEFAULT_MAX_QUBITS",
    "DEFAULT_TOL",
]

DEFAULT_MAX_QUBITS = 14
DEFAULT_TOL = 1e-9
# Extra headroom for intermediate cuts (e.g. a cup opened before its cap).
WORK_HEADROOM = 8


@dataclass(frozen=True)
class SemanticsValue:
    """A matrix together with the wire types it maps between."""

    matrix: np.ndarray
    in_type: WireType
    out_type: WireType

    def __post_init__(self):
        expected = (2 ** self.out_type.size, 2 ** self.in_type.size)
        if self.matrix.shape != expected:
            raise StructuralError(f"matrix shape {self.matrix.shape} does not match types {expected}")

    @property
    def is_scalar(self) -> bool:
        return self.matrix.shape == (1, 1)

    def scalar(self) -> complex:
        if not self.is_scalar:
            raise StructuralError("not a scalar")
        return complex(self.matrix[0, 0])

    def to_json_obj(self) -> dict:
        return {
            "in": list(self.in_type.registers),
            "out": list(self.out_type.registers),
            "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in self.matrix],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "SemanticsValue":
        obj = json.loads(text)
        matrix = np.array([[complex(re, im) for re, im in row] for row in obj["matrix"]], dtype=complex)
        return cls(matrix, WireType(tuple(obj["in"])), WireType(tuple(obj["out"])))


# -- generator matrices -----------------------------------------------------


def _popcount_parity(n_bits: int) -> np.ndarray:
    idx = np.arange(2**n_bits)
    parity = np.zeros(2**n_bits, dtype=np.int64)
    for b in range(n_bits):
        parity ^= (idx >> b) & 1
    return parity


@lru_cache(maxsize=256)
def _hadamard(n: int) -> np.ndarray:
    x = np.arange(2**n)
    signs = 1 - 2 * _popcount_parity(n)[x[:, None] & x[None, :]]
    return signs.astype(complex) / 2 ** (n / 2)


def _repeat_index(x: np.ndarray, n: int, times: int) -> np.ndarray:
    out = np.zeros_like(x)
    for _ in range(times):
        out = (out << n) | x
    return out


@lru_cache(maxsize=1024)
def _green(k: int, l: int, n: int, phases: tuple[float, ...]) -> np.ndarray:
    x = np.arange(2**n)
    bits = (x[:, None] >> np.arange(n - 1, -1, -1)[None, :]) & 1
    weights = np.exp(1j * (bits @ np.asarray(phases, dtype=float)))
    m = np.zeros((2 ** (n * l), 2 ** (n * k)), dtype=complex)
    # accumulate: with no legs at all every term lands on the single entry
    np.add.at(m, (_repeat_index(x, n, l), _repeat_index(x, n, k)), weights)
    return m


@lru_cache(maxsize=1024)
def _red(k: int, l: int, n: int, phases: tuple[float, ...]) -> np.ndarray:
    return _hadamard(n * l) @ _green(k, l, n, phases) @ _hadamard(n * k)


@lru_cache(maxsize=256)
def _cup(n: int) -> np.ndarray:
    x = np.arange(2**n)
    v = np.zeros((2 ** (2 * n), 1), dtype=complex)
    v[(x << n) | x, 0] = 1
    return v


@lru_cache(maxsize=1024)
def _matrix_box(box: MatrixBox) -> np.ndarray:
    a = box.matrix
    m, n = a.shape
    out = np.zeros((2**m, 2**n), dtype=complex)
    for x in range(2**n):
        # F2Matrix packs coordinate j at bit j; basis indices put coordinate 0 on top.
        xv = _reverse_bits(x, n)
        y = _reverse_bits(apply_int(a, xv), m)
        out[y, x] = 1
    return out if box.forward else out.T.copy()


def _reverse_bits(x: int, width: int) -> int:
    out = 0
    for _ in range(width):
        out = (out << 1) | (x & 1)
        x >>= 1
    return out


def generator_matrix(g: Diagram) -> np.ndarray:
    """Dense matrix of a single generator."""
    if isinstance(g, GreenSpider):
        return _green(g.k, g.l, g.n, g.phases)
    if isinstance(g, RedSpider):
        return _red(g.k, g.l, g.n, g.phases)
    if isinstance(g, Hadamard):
        return _hadamard(g.n)
    if isinstance(g, (Identity, Divider, Gatherer)):
        return np.eye(2 ** g.dom.size, dtype=complex)
    if isinstance(g, Swap):
        n, m = g.n, g.m
        out = np.zeros((2 ** (n + m), 2 ** (n + m)), dtype=complex)
        for x in range(2**n):
            for y in range(2**m):
                out[(y << n) | x, (x << m) | y] = 1
        return out
    if isinstance(g, Cup):
        return _cup(g.n)
    if isinstance(g, Cap):
        return _cup(g.n).T.copy()
    if isinstance(g, EmptyScalar):
        return np.ones((1, 1), dtype=complex)
    if isinstance(g, MatrixBox):
        return _matrix_box(g)
    raise StructuralError(f"not a generator: {g!r}")


# -- contraction ------------------------------------------------------------


class _Run:
    def __init__(self, batch: int, limit: int):
        self.batch = batch
        self.limit = limit

    def act(self, d: Diagram, t: np.ndarray, offset: int) -> np.ndarray:
        """Apply ``d`` to qubits ``offset ..`` of the state batch ``t``."""
        if isinstance(d, Seq):
            t = self.act(d.first, t, offset)
            return self.act(d.second, t, offset)
        if isinstance(d, Par):
            # the halves touch disjoint qubits: run the one that narrows the cut first
            if d.right.cod.size - d.right.dom.size < d.left.cod.size - d.left.dom.size:
                t = self.act(d.right, t, offset + d.left.dom.size)
                return self.act(d.left, t, offset)
            t = self.act(d.left, t, offset)
            return self.act(d.right, t, offset + d.left.cod.size)
        if isinstance(d, (Identity, Divider, Gatherer, EmptyScalar)):
            return t
        width = int(np.log2(t.shape[0]))
        k_in, k_out = d.dom.size, d.cod.size
        rest = width - offset - k_in
        if width - k_in + k_out + self.batch > self.limit:
            raise ResourceError(
                f"intermediate cut of {width - k_in + k_out} qubits exceeds the working budget"
            )
        if isinstance(d, Swap):
            v = t.reshape(2**offset, 2**d.n, 2**d.m, 2**rest, -1)
            return v.transpose(0, 2, 1, 3, 4).reshape(-1, t.shape[1])
        mat = generator_matrix(d)
        v = t.reshape(2**offset, 2**k_in, 2**rest, -1)
        v = np.einsum("ij,ajbc->aibc", mat, v, optimize=False)
        return v.reshape(-1, t.shape[1])


def _validate(d: Diagram) -> None:
    stack = [d]
    while stack:
        node = stack.pop()
        if isinstance(node, Seq):
            stack.extend((node.first, node.second))
        elif isinstance(node, Par):
            stack.extend((node.left, node.right))
        elif not isinstance(node, Diagram):
            raise StructuralError(f"not a diagram: {node!r}")


def interpret(d: Diagram, max_qubits: int = DEFAULT_MAX_QUBITS) -> SemanticsValue:
    """The matrix of ``d`` with its input and output types."""
    if not isinstance(d, Diagram):
        raise StructuralError(f"not a diagram: {d!r}")
    _validate(d)
    n_in, n_out = d.dom.size, d.cod.size
    if n_in + n_out > max_qubits:
        raise ResourceError(
            f"diagram of type {d.dom} -> {d.cod} needs {n_in + n_out} qubits, cap is {max_qubits}"
        )
    if n_in > n_out:
        # batch over the narrower side: the transpose has the transposed matrix
        from .diagram import transpose

        m = _contract(transpose(d), n_out, max_qubits).T
    else:
        m = _contract(d, n_in, max_qubits)
    return SemanticsValue(np.ascontiguousarray(m), d.dom, d.cod)


def _contract(d: Diagram, n_in: int, max_qubits: int) -> np.ndarray:
    run = _Run(n_in, max_qubits + WORK_HEADROOM)
    t = np.eye(2**n_in, dtype=complex)
    return run.act(d, t, 0)


def equal_semantics(
    d1: Diagram,
    d2: Diagram,
    tol: float = DEFAULT_TOL,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> bool:
    """Entrywise comparison of interpretations, scalars included."""
    if d1.dom != d2.dom or d1.cod != d2.cod:
        raise ComparisonError((d1.dom, d1.cod), (d2.dom, d2.cod))
    m1 = interpret(d1, max_qubits).matrix
    m2 = interpret(d2, max_qubits).matrix
    return bool(np.max(np.abs(m1 - m2)) <= tol)


def apply_state(d: Diagram, basis_index: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    """Image of the computational basis state ``basis_index`` as a column."""
    dim = 2 ** d.dom.size
    if not 0 <= basis_index < dim:
        raise IndexError(f"basis index {basis_index} out of range for input dimension {dim}")
    return interpret(d, max_qubits).matrix[:, basis_index].copy()
