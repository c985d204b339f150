"""The rule catalog.

Every rule is an instantiation schema: a builder turning parameters into a
left/right diagram pair, and a sampler drawing random parameters for the
soundness suite.  Rules are stored in the left-to-right orientation.

Parameters are kept JSON friendly (matrices as ``"10;01"`` strings, angle
vectors as lists) so that instances can be written to a derivation trace and
rebuilt exactly.

>>> inst = instantiate("w2", n=2)
>>> inst.lhs.dom, inst.rhs
(WireType((2,)), Identity(n=2))
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import f2linalg as f2
from ..diagram import (
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
    RedSpider,
    Swap,
    WireType,
    compose,
    inv_root2,
    leaves,
    permutation,
    phase_scalar,
    rewire,
    root2,
    scalar,
    tensor,
    transpose,
)
from ..errors import ParameterError
from ..f2linalg import F2Matrix

__all__ = [
    "RuleInstance",
    "RuleSchema",
    "EulerAngles",
    "euler_angles",
    "RULES",
    "LIFTABLE",
    "instantiate",
    "big_rule",
    "sample_params",
    "expand_matrix",
    "matrix_core",
    "random_wiring",
]

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class RuleInstance:
    """A named rule with concrete parameters and its two sides."""

    name: str
    params: dict = field(compare=False)
    lhs: Diagram
    rhs: Diagram

    def __post_init__(self):
        if self.lhs.dom != self.rhs.dom or self.lhs.cod != self.rhs.cod:
            raise AssertionError(
                f"rule {self.name}: sides have types {self.lhs.dom} -> {self.lhs.cod} "
                f"and {self.rhs.dom} -> {self.rhs.cod}"
            )

    def sides(self, direction: str = "L2R") -> tuple[Diagram, Diagram]:
        """``(pattern, replacement)`` for the given direction."""
        if direction == "L2R":
            return self.lhs, self.rhs
        if direction == "R2L":
            return self.rhs, self.lhs
        raise ParameterError(f"direction must be L2R or R2L, got {direction!r}")


@dataclass(frozen=True)
class RuleSchema:
    name: str
    group: str
    summary: str
    build: Callable[..., tuple[Diagram, Diagram]]
    sample: Callable[[np.random.Generator], dict]
    liftable: bool = False


# -- parameter coercion -----------------------------------------------------


def _size(name: str, v, minimum: int = 1) -> int:
    if isinstance(v, bool) or int(v) != v or v < minimum:
        raise ParameterError(f"{name} must be an integer >= {minimum}, got {v!r}")
    return int(v)


def _vec(name: str, v, n: int) -> tuple[float, ...]:
    if v is None:
        return (0.0,) * n
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return (float(v),) * n
    vec = tuple(float(x) for x in v)
    if len(vec) != n:
        raise ParameterError(f"{name} has length {len(vec)}, expected {n}")
    return vec


def _bits(name: str, v, n: int) -> tuple[int, ...]:
    vec = tuple(int(x) for x in v)
    if len(vec) != n or any(b not in (0, 1) for b in vec):
        raise ParameterError(f"{name} must be {n} bits, got {v!r}")
    return vec


def _mat(name: str, v) -> F2Matrix:
    try:
        if isinstance(v, F2Matrix):
            return v
        if isinstance(v, str):
            return F2Matrix.from_compact(v)
        return F2Matrix(v)
    except ValueError as exc:
        raise ParameterError(f"{name}: {exc}") from None


def _colour(v: str) -> str:
    if v not in ("green", "red"):
        raise ParameterError(f"colour must be 'green' or 'red', got {v!r}")
    return v


def _jsonable(v):
    if isinstance(v, F2Matrix):
        return v.to_compact()
    if isinstance(v, WireType):
        return list(v.registers)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return float(v)
    if isinstance(v, np.ndarray):
        return [_jsonable(x) for x in v.tolist()]
    return v


# -- building blocks --------------------------------------------------------


def _spider(colour: str, k: int, l: int, n: int, phases=None) -> Diagram:
    cls = GreenSpider if colour == "green" else RedSpider
    return cls(k, l, n, phases)


def _other(colour: str) -> str:
    return "red" if colour == "green" else "green"


def _par(*parts: Diagram) -> Diagram:
    """Tensor product that drops empty factors."""
    return tensor(*(p for p in parts if not isinstance(p, EmptyScalar)))


def _seq(*parts: Diagram) -> Diagram:
    """Composition that drops empty factors (they are the unit on type 0)."""
    kept = [p for p in parts if not isinstance(p, EmptyScalar)]
    return compose(*kept) if kept else EmptyScalar()


def _ids(n: int, count: int) -> Diagram:
    return tensor(*([Identity(n)] * count))


def _hs(n: int, count: int) -> Diagram:
    return tensor(*([Hadamard(n)] * count))


def _scalar1(half_powers: int) -> Diagram:
    """``sqrt(2)**half_powers`` as a tensor of size-one gadgets."""
    return tensor(*([scalar(1 if half_powers > 0 else -1)] * abs(half_powers)))


# -- Euler decomposition ----------------------------------------------------


@dataclass(frozen=True)
class EulerAngles:
    """Angles rewriting ``Z(a1) H Z(a2)`` as ``exp(i gamma) X(b1) Z(b2) X(b3)``."""

    x_plus: float
    x_minus: float
    z: complex
    z_prime: complex
    beta1: float
    beta2: float
    beta3: float
    gamma: float


def _arg(c: complex) -> float:
    # arg(0) := 0 keeps the formulas total
    return 0.0 if abs(c) < 1e-15 else cmath.phase(c)


def euler_angles(alpha1: float, alpha2: float) -> EulerAngles:
    """
    >>> e = euler_angles(0.0, 0.0)
    >>> [round(x / math.pi, 6) for x in (e.beta1, e.beta2, e.beta3, e.gamma)]
    [0.5, 0.5, 0.5, -0.25]
    """
    x_plus = (alpha1 + alpha2) / 2
    x_minus = x_plus - alpha2
    z = -math.sin(x_plus) + 1j * math.cos(x_minus)
    z_prime = math.cos(x_plus) - 1j * math.sin(x_minus)
    beta1 = _arg(z) + _arg(z_prime)
    beta3 = _arg(z) - _arg(z_prime)
    beta2 = 0.0 if abs(z_prime) < 1e-15 else 2 * _arg(1j + abs(z / z_prime))
    gamma = x_plus - _arg(z) + (math.pi - beta2) / 2
    return EulerAngles(x_plus, x_minus, z, z_prime, beta1, beta2, beta3, gamma)


# -- matrix expansion -------------------------------------------------------


def matrix_core(a: F2Matrix) -> Diagram:
    """Size-one green/red bipartite diagram with biadjacency ``a``.

    Type ``n * 1_1 -> m * 1_1`` for an ``m x n`` matrix.  Each input column
    is copied by a green spider, the edges are routed to their rows and each
    row is an XOR by a red spider.  The red spiders contribute
    ``sqrt(2)**(m - |a|)``, which the attached scalar cancels.
    """
    a = _mat("A", a)
    m, n = a.shape
    rows = a.tolist()
    col_deg = [sum(rows[i][j] for i in range(m)) for j in range(n)]
    row_deg = [sum(r) for r in rows]
    edges_by_col = [(j, i) for j in range(n) for i in range(m) if rows[i][j]]
    edges_by_row = sorted(edges_by_col, key=lambda e: (e[1], e[0]))
    perm = [edges_by_col.index(e) for e in edges_by_row]
    copies = tensor(*(GreenSpider(1, d, 1) for d in col_deg))
    xors = tensor(*(RedSpider(d, 1, 1) for d in row_deg))
    route = permutation(perm, WireType((1,) * len(edges_by_col)))
    body = _seq(copies, route, xors)
    return _par(body, _scalar1(len(edges_by_col) - m))


def expand_matrix(a) -> Diagram:
    """Bipartite expansion of a forward box, wrapped to type ``1_n -> 1_m``."""
    from ..diagram import merge_many, split_many

    a = _mat("A", a)
    m, n = a.shape
    return _seq(split_many([1] * n), matrix_core(a), merge_many([1] * m))


def _split_tree(n: int, rng: np.random.Generator) -> Diagram:
    if n == 1:
        return Identity(1)
    a = int(rng.integers(1, n))
    return Divider(a, n - a) >> (_split_tree(a, rng) @ _split_tree(n - a, rng))


def random_wiring(dom, cod, rng: np.random.Generator) -> Diagram:
    """A random W-only diagram ``dom -> cod`` (random cascade shapes)."""
    dom, cod = WireType(tuple(dom)), WireType(tuple(cod))
    if dom.size != cod.size:
        raise ParameterError(f"cannot rewire {dom} into {cod}")
    if dom.size == 0:
        return EmptyScalar()
    delta = tensor(*(_split_tree(r, rng) for r in dom))
    gamma = tensor(*(transpose(_split_tree(r, rng)) for r in cod))
    return delta >> gamma


# -- graph states in plain ZX form (triangle rule) ---------------------------


def raw_graph_state(order: int, edges, n: int = 1) -> Diagram:
    """Green vertices joined by Hadamard edges, normalised like a graph state.

    Edges are added one at a time: both endpoints grow an extra leg and the
    two legs are joined through a Hadamard, so the cut never holds more than
    ``order + 2`` registers.
    """
    edges = [tuple(e) for e in edges]
    layers = [tensor(*([GreenSpider(0, 1, n)] * order))]
    for u, v in edges:
        layers.append(tensor(*(GreenSpider(1, 2, n) if w in (u, v) else Identity(n) for w in range(order))))
        lo, hi = min(u, v), max(u, v)
        # after copying, vertex w sits at w + (1 if w > lo) + (1 if w > hi)
        pos = [w + (w > lo) + (w > hi) for w in range(order)]
        layers.append(permutation(pos + [lo + 1, hi + 2], WireType((n,) * (order + 2))))
        layers.append(_ids(n, order) @ ((Hadamard(n) @ Identity(n)) >> Cap(n)))
    return _par(compose(*layers), scalar(n * (len(edges) - order)))


# -- rule builders ----------------------------------------------------------


def _b_s1(n=1, k1=1, l1=0, w=1, k2=0, l2=1, alpha=None, beta=None, colour="green"):
    n, w = _size("n", n), _size("w", w)
    k1, l1, k2, l2 = (_size(s, v, 0) for s, v in (("k1", k1), ("l1", l1), ("k2", k2), ("l2", l2)))
    colour = _colour(colour)
    a, b = _vec("alpha", alpha, n), _vec("beta", beta, n)
    lhs = _seq(
        _par(_spider(colour, k1, l1 + w, n, a), _ids(n, k2)),
        _par(_ids(n, l1), _spider(colour, w + k2, l2, n, b)),
    )
    rhs = _spider(colour, k1 + k2, l1 + l2, n, tuple(x + y for x, y in zip(a, b)))
    return lhs, rhs


def _s_s1(rng):
    n = int(rng.integers(1, 4))
    budget = max(3, 12 // n)
    while True:
        k1, l1, k2, l2 = (int(x) for x in rng.integers(0, 3, size=4))
        w = int(rng.integers(1, 3))
        if k1 + k2 + l1 + l2 + w <= budget:
            break
    return dict(n=n, k1=k1, l1=l1, w=w, k2=k2, l2=l2, alpha=_angles(rng, n), beta=_angles(rng, n),
                colour=_pick_colour(rng))


def _b_w1(n=1, colour="green"):
    n = _size("n", n)
    return _spider(_colour(colour), 1, 1, n), Identity(n)


def _b_w2(n=1):
    n = _size("n", n)
    return Hadamard(n) >> Hadamard(n), Identity(n)


def _b_s2(n=1):
    n = _size("n", n)
    return (
        GreenSpider(0, 1, n, math.pi / 4) >> Hadamard(n) >> GreenSpider(1, 0, n, -math.pi / 4),
        EmptyScalar(),
    )


def _b_c(n=1, l=2, bits=None, colour="green"):
    n, l = _size("n", n), _size("l", l, 0)
    colour = _colour(colour)
    bits = _bits("bits", bits if bits is not None else [0] * n, n)
    state = _spider(_other(colour), 0, 1, n, tuple(b * math.pi for b in bits))
    lhs = state >> _spider(colour, 1, l, n)
    # one sqrt(2)**-n per extra copy (sqrt(2)**n when the state is erased)
    norm = [inv_root2(n)] * (l - 1) if l else [root2(n)]
    rhs = _par(tensor(*([state] * l)), *norm)
    return lhs, rhs


def _b_b(n=1, colour="green"):
    n = _size("n", n)
    colour = _colour(colour)
    top, bottom = _other(colour), colour
    lhs = _spider(top, 2, 1, n) >> _spider(bottom, 1, 2, n)
    rhs = _par(
        compose(
            _spider(bottom, 1, 2, n) @ _spider(bottom, 1, 2, n),
            Identity(n) @ Swap(n, n) @ Identity(n),
            _spider(top, 2, 1, n) @ _spider(top, 2, 1, n),
        ),
        scalar(n),
    )
    return lhs, rhs


def _b_h(n=1, k=1, l=1, alpha=None, colour="green"):
    n, k, l = _size("n", n), _size("k", k, 0), _size("l", l, 0)
    colour = _colour(colour)
    a = _vec("alpha", alpha, n)
    lhs = _seq(_hs(n, k), _spider(colour, k, l, n, a), _hs(n, l))
    return lhs, _spider(_other(colour), k, l, n, a)


def _b_e(n=1, alpha1=None, alpha2=None):
    n = _size("n", n)
    a1, a2 = _vec("alpha1", alpha1, n), _vec("alpha2", alpha2, n)
    angles = [euler_angles(x, y) for x, y in zip(a1, a2)]
    lhs = GreenSpider(1, 1, n, a2) >> Hadamard(n) >> GreenSpider(1, 1, n, a1)
    rhs = _par(
        compose(
            RedSpider(1, 1, n, tuple(e.beta3 for e in angles)),
            GreenSpider(1, 1, n, tuple(e.beta2 for e in angles)),
            RedSpider(1, 1, n, tuple(e.beta1 for e in angles)),
        ),
        phase_scalar([e.gamma for e in angles]),
    )
    return lhs, rhs


def _b_E(a=1, b=1):
    a, b = _size("a", a), _size("b", b)
    return Gatherer(a, b) >> Divider(a, b), Identity(a) @ Identity(b)


def _b_P(a=1, b=1):
    a, b = _size("a", a), _size("b", b)
    return Identity(a + b), Divider(a, b) >> Gatherer(a, b)


def _b_U(a=1, b=1):
    a, b = _size("a", a), _size("b", b)
    lhs = Cup(a + b) >> (Divider(a, b) @ Divider(a, b))
    rhs = (Cup(a) @ Cup(b)) >> (Identity(a) @ Swap(a, b) @ Identity(b))
    return lhs, rhs


def _b_A(a=1, b=1):
    lhs, rhs = _b_U(a, b)
    return transpose(lhs), transpose(rhs)


def _distribute(colour, a=1, b=1, k=1, l=1, alpha=None):
    a, b = _size("a", a), _size("b", b)
    k, l = _size("k", k, 0), _size("l", l, 0)
    vec = _vec("alpha", alpha, a + b)
    if k + l == 0 and alpha is None:
        raise ParameterError("a spider without legs needs alpha")
    lhs = _seq(
        tensor(*([Gatherer(a, b)] * k)),
        _spider(colour, k, l, a + b, vec),
        tensor(*([Divider(a, b)] * l)),
    )
    pairs_in = WireType((a, b) * k)
    perm_in = [2 * j for j in range(k)] + [2 * j + 1 for j in range(k)]
    grouped_out = WireType((a,) * l + (b,) * l)
    perm_out = [x for i in range(l) for x in (i, l + i)]
    rhs = _seq(
        permutation(perm_in, pairs_in) if k else EmptyScalar(),
        _par(_spider(colour, k, l, a, vec[:a]), _spider(colour, k, l, b, vec[a:])),
        permutation(perm_out, grouped_out) if l else EmptyScalar(),
    )
    return lhs, rhs


def _b_Z(a=1, b=1, k=1, l=1, alpha=None):
    return _distribute("green", a, b, k, l, alpha)


def _b_X(a=1, b=1, k=1, l=1, alpha=None):
    return _distribute("red", a, b, k, l, alpha)


def _s_dist(rng):
    a, b = (int(x) for x in rng.integers(1, 4, size=2))
    budget = max(1, 12 // (a + b))
    while True:
        k, l = (int(x) for x in rng.integers(0, 4, size=2))
        if k + l <= budget:
            break
    return dict(a=a, b=b, k=k, l=l, alpha=_angles(rng, a + b))


def _b_W(a=1, b=1):
    a, b = _size("a", a), _size("b", b)
    return compose(Gatherer(a, b), Hadamard(a + b), Divider(a, b)), Hadamard(a) @ Hadamard(b)


def _b_Z1(n=1, alpha=None):
    n = _size("n", n)
    vec = _vec("alpha", alpha, n + 1)
    lhs = GreenSpider(1, 2, n + 1, vec) >> (Divider(1, n) @ Divider(1, n))
    rhs = compose(
        Divider(1, n),
        GreenSpider(1, 2, 1, vec[:1]) @ GreenSpider(1, 2, n, vec[1:]),
        Identity(1) @ Swap(1, n) @ Identity(n),
    )
    return lhs, rhs


def _b_Z2(n=1, alpha=None):
    n = _size("n", n)
    vec = _vec("alpha", alpha, n + 1)
    lhs = GreenSpider(0, 1, n + 1, vec) >> Divider(1, n)
    rhs = GreenSpider(0, 1, 1, vec[:1]) @ GreenSpider(0, 1, n, vec[1:])
    return lhs, rhs


def _b_S(n=1, k=1, l=1, alpha=None):
    n, k, l = _size("n", n), _size("k", k, 0), _size("l", l, 0)
    a = _vec("alpha", alpha, n)
    lhs = _seq(
        GreenSpider(k, l + 1, n, a) @ Identity(n),
        _par(_ids(n, l), Cap(n)),
    )
    return lhs, GreenSpider(k + 1, l, n, a)


def _b_W1(n=1):
    n = _size("n", n)
    return (Identity(n) @ Cup(n)) >> (Cap(n) @ Identity(n)), Identity(n)


def _b_W2(n=1):
    n = _size("n", n)
    return (Cup(n) @ Identity(n)) >> (Identity(n) @ Cap(n)), Identity(n)


def _b_Hprime(n=1):
    n = _size("n", n)
    return (Hadamard(n) @ Identity(n)) >> Cap(n), (Identity(n) @ Hadamard(n)) >> Cap(n)


def _b_zero():
    lhs = MatrixBox(F2Matrix([[0]]))
    rhs = (GreenSpider(1, 0, 1) >> RedSpider(0, 1, 1)) @ scalar(-1)
    return lhs, rhs


def _b_one():
    return MatrixBox(F2Matrix([[1]])), Identity(1)


def _b_L(A="1", B="1"):
    A, B = _mat("A", A), _mat("B", B)
    if A.cols != B.cols:
        raise ParameterError(f"A and B need the same column count, got {A.shape} and {B.shape}")
    lhs = MatrixBox(f2.vstack(A, B))
    rhs = compose(GreenSpider(1, 2, A.cols), MatrixBox(A) @ MatrixBox(B), Gatherer(A.rows, B.rows))
    return lhs, rhs


def _b_C(C="1", D="1"):
    C, D = _mat("C", C), _mat("D", D)
    if C.rows != D.rows:
        raise ParameterError(f"C and D need the same row count, got {C.shape} and {D.shape}")
    m = C.rows
    lhs = MatrixBox(f2.hstack(C, D))
    rhs = _par(
        compose(Divider(C.cols, D.cols), MatrixBox(C) @ MatrixBox(D), RedSpider(2, 1, m)),
        scalar(m),
    )
    return lhs, rhs


def _b_K(A="1"):
    A = _mat("A", A)
    m, n = A.shape
    box = MatrixBox(A)
    return box >> GreenSpider(1, 2, m), GreenSpider(1, 2, n) >> (box @ box)


def _b_G(A="1"):
    A = _mat("A", A)
    m, n = A.shape
    return MatrixBox(A) >> GreenSpider(1, 0, m), GreenSpider(1, 0, n)


def _b_H(A="1"):
    A = _mat("A", A)
    m, n = A.shape
    lhs = compose(Hadamard(n), MatrixBox(A), Hadamard(m))
    return lhs, _par(MatrixBox(A.T, forward=False), scalar(n - m))


def _b_J(A="1"):
    A = _mat("A", A)
    m, n = A.shape
    box = MatrixBox(A)
    lhs = RedSpider(2, 1, n) >> box
    return lhs, _par((box @ box) >> RedSpider(2, 1, m), scalar(m - n))


def _b_F(A="1"):
    A = _mat("A", A)
    m, n = A.shape
    return RedSpider(0, 1, n) >> MatrixBox(A), _par(RedSpider(0, 1, m), scalar(n - m))


def _b_p(A="1", B="1"):
    A, B = _mat("A", A), _mat("B", B)
    if A.shape != B.shape:
        raise ParameterError(f"A and B need equal shapes, got {A.shape} and {B.shape}")
    m, n = A.shape
    lhs = _par(compose(GreenSpider(1, 2, n), MatrixBox(A) @ MatrixBox(B), RedSpider(2, 1, m)), scalar(m))
    return lhs, MatrixBox(A + B)


def _b_m(A="1", C="1"):
    A, C = _mat("A", A), _mat("C", C)
    if C.cols != A.rows:
        raise ParameterError(f"cannot compose {A.shape} then {C.shape}")
    return MatrixBox(A) >> MatrixBox(C), MatrixBox(C @ A)


def _b_N(A="1", v=None):
    A = _mat("A", A)
    m, n = A.shape
    v = _bits("v", v if v is not None else [1] * n, n)
    av = f2.apply(A, f2.column(v)).column_bits()
    lhs = RedSpider(1, 1, n, tuple(b * math.pi for b in v)) >> MatrixBox(A)
    rhs = MatrixBox(A) >> RedSpider(1, 1, m, tuple(b * math.pi for b in av))
    return lhs, rhs


def _b_O(A="1", u=None):
    A = _mat("A", A)
    m, n = A.shape
    u = _bits("u", u if u is not None else [1] * m, m)
    atu = f2.apply(A.T, f2.column(u)).column_bits()
    lhs = MatrixBox(A) >> GreenSpider(1, 1, m, tuple(b * math.pi for b in u))
    rhs = GreenSpider(1, 1, n, tuple(b * math.pi for b in atu)) >> MatrixBox(A)
    return lhs, rhs


def _b_I1(A="1", check=True):
    A = _mat("A", A)
    if check and not f2.is_injective(A):
        raise ParameterError("rule I1 needs an injective matrix")
    return MatrixBox(A) >> MatrixBox(A, forward=False), Identity(A.cols)


def _b_S1(A="1", check=True):
    A = _mat("A", A)
    if check and not f2.is_surjective(A):
        raise ParameterError("rule S1 needs a surjective matrix")
    m, n = A.shape
    lhs = _par(MatrixBox(A, forward=False) >> MatrixBox(A), scalar(-2 * (n - m)))
    return lhs, Identity(m)


def _b_B(A="1"):
    A = _mat("A", A)
    return MatrixBox(A), expand_matrix(A)


def _b_trig(n=1):
    n = _size("n", n)
    path = raw_graph_state(3, [(0, 1), (1, 2)], n)
    local = GreenSpider(1, 1, n, -math.pi / 2) @ RedSpider(1, 1, n, math.pi / 2) @ GreenSpider(1, 1, n, -math.pi / 2)
    return path >> local, raw_graph_state(3, [(0, 1), (1, 2), (0, 2)], n)


def _b_R(dom=(1,), cod=(1,), seed=0):
    dom, cod = WireType(tuple(dom)), WireType(tuple(cod))
    rng = np.random.default_rng(seed)
    return random_wiring(dom, cod, rng), rewire(dom, cod)


# -- samplers ---------------------------------------------------------------


def _angles(rng, n):
    return [float(x) for x in rng.uniform(0, TWO_PI, size=n)]


def _pick_colour(rng):
    return "green" if rng.random() < 0.5 else "red"


def _rand_mat(rng, rows=None, cols=None):
    rows = rows or int(rng.integers(1, 4))
    cols = cols or int(rng.integers(1, 4))
    return F2Matrix.random(rng, rows, cols).to_compact()


def _rand_bits(rng, n):
    return [int(x) for x in rng.integers(0, 2, size=n)]


def _n(rng):
    return int(rng.integers(1, 4))


def _ab(rng):
    return dict(a=_n(rng), b=_n(rng))


def _s_c(rng):
    n = _n(rng)
    return dict(n=n, l=int(rng.integers(0, 1 + min(3, 9 // n))), bits=_rand_bits(rng, n), colour=_pick_colour(rng))


def _s_h(rng):
    n = _n(rng)
    budget = max(1, 9 // n)
    while True:
        k, l = (int(x) for x in rng.integers(0, 4, size=2))
        if 1 <= k + l <= budget:
            break
    return dict(n=n, k=k, l=l, alpha=_angles(rng, n), colour=_pick_colour(rng))


def _s_S(rng):
    n = _n(rng)
    budget = max(1, 10 // n)
    while True:
        k, l = (int(x) for x in rng.integers(0, 3, size=2))
        if k + l + 2 <= budget:
            break
    return dict(n=n, k=k, l=l, alpha=_angles(rng, n))


def _s_injective(rng):
    while True:
        rows, cols = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        a = F2Matrix.random(rng, rows, cols)
        if f2.is_injective(a):
            return dict(A=a.to_compact())


def _s_surjective(rng):
    while True:
        rows, cols = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        a = F2Matrix.random(rng, rows, cols)
        if f2.is_surjective(a):
            return dict(A=a.to_compact())


def _s_wiring(rng):
    total = int(rng.integers(1, 6))

    def composition():
        parts, left = [], total
        while left:
            p = int(rng.integers(1, left + 1))
            parts.append(p)
            left -= p
        return parts

    return dict(dom=composition(), cod=composition(), seed=int(rng.integers(0, 2**31)))


def _s_L(rng):
    n = _n(rng)
    return dict(A=_rand_mat(rng, cols=n), B=_rand_mat(rng, cols=n))


def _s_C(rng):
    m = _n(rng)
    return dict(C=_rand_mat(rng, rows=m), D=_rand_mat(rng, rows=m))


def _s_p(rng):
    m, n = _n(rng), _n(rng)
    return dict(A=_rand_mat(rng, m, n), B=_rand_mat(rng, m, n))


def _s_m(rng):
    n, m, k = _n(rng), _n(rng), _n(rng)
    return dict(A=_rand_mat(rng, m, n), C=_rand_mat(rng, k, m))


def _s_N(rng):
    m, n = _n(rng), _n(rng)
    return dict(A=_rand_mat(rng, m, n), v=_rand_bits(rng, n))


def _s_O(rng):
    m, n = _n(rng), _n(rng)
    return dict(A=_rand_mat(rng, m, n), u=_rand_bits(rng, m))


_FIG1, _FIG2, _WIRES, _FIG3, _DERIVED = "zx", "compact", "distribution", "matrix", "derived"

RULES: dict[str, RuleSchema] = {
    s.name: s
    for s in [
        RuleSchema("s1", _FIG1, "spider fusion along all shared wires", _b_s1, _s_s1, True),
        RuleSchema("w1", _FIG1, "a phase-free 1-1 spider is a wire", _b_w1,
                   lambda r: dict(n=_n(r), colour=_pick_colour(r)), True),
        RuleSchema("w2", _FIG1, "two Hadamards cancel", _b_w2, lambda r: dict(n=_n(r)), True),
        RuleSchema("s2", _FIG1, "the pi/4 bone has value one", _b_s2, lambda r: dict(n=_n(r)), True),
        RuleSchema("c", _FIG1, "a pi-state is copied by a spider of the other colour", _b_c, _s_c, True),
        RuleSchema("b", _FIG1, "bialgebra", _b_b, lambda r: dict(n=_n(r), colour=_pick_colour(r)), True),
        RuleSchema("h", _FIG1, "colour change by Hadamards on every leg", _b_h, _s_h, True),
        RuleSchema("e", _FIG1, "Euler decomposition of Z H Z", _b_e,
                   lambda r: (lambda n: dict(n=n, alpha1=_angles(r, n), alpha2=_angles(r, n)))(_n(r)), True),
        RuleSchema("E", _WIRES, "gatherer then divider is two wires", _b_E, _ab),
        RuleSchema("P", _WIRES, "a wire is a divider then a gatherer", _b_P, _ab),
        RuleSchema("U", _WIRES, "dividers on a cup split it", _b_U, _ab),
        RuleSchema("A", _WIRES, "gatherers into a cap split it", _b_A, _ab),
        RuleSchema("Z", _WIRES, "dividers distribute through green spiders", _b_Z, _s_dist),
        RuleSchema("X", _WIRES, "dividers distribute through red spiders", _b_X, _s_dist),
        RuleSchema("W", _WIRES, "dividers distribute through Hadamards", _b_W, _ab),
        RuleSchema("Z1", _FIG2, "peel one qubit off a green copy", _b_Z1,
                   lambda r: (lambda n: dict(n=n, alpha=_angles(r, n + 1)))(_n(r))),
        RuleSchema("Z2", _FIG2, "peel one qubit off a green state", _b_Z2,
                   lambda r: (lambda n: dict(n=n, alpha=_angles(r, n + 1)))(_n(r))),
        RuleSchema("S", _FIG2, "bending a spider leg with a cap", _b_S, _s_S),
        RuleSchema("W1", _FIG2, "snake equation", _b_W1, lambda r: dict(n=_n(r))),
        RuleSchema("W2", _FIG2, "mirrored snake equation", _b_W2, lambda r: dict(n=_n(r))),
        RuleSchema("H'", _FIG2, "a Hadamard slides through a cap", _b_Hprime, lambda r: dict(n=_n(r))),
        RuleSchema("0", _FIG3, "the zero matrix disconnects", _b_zero, lambda r: {}),
        RuleSchema("1", _FIG3, "the one matrix is a wire", _b_one, lambda r: {}),
        RuleSchema("L", _FIG3, "stacked rows: copy then gather", _b_L, _s_L),
        RuleSchema("C", _FIG3, "stacked columns: divide then add", _b_C, _s_C),
        RuleSchema("K", _DERIVED, "matrices are copied by green spiders", _b_K, lambda r: dict(A=_rand_mat(r))),
        RuleSchema("G", _DERIVED, "matrices are erased by green spiders", _b_G, lambda r: dict(A=_rand_mat(r))),
        RuleSchema("H", _DERIVED, "Hadamards turn a matrix into its backward transpose", _b_H,
                   lambda r: dict(A=_rand_mat(r))),
        RuleSchema("J", _DERIVED, "matrices are copied by red spiders from below", _b_J,
                   lambda r: dict(A=_rand_mat(r))),
        RuleSchema("F", _DERIVED, "matrices absorb the red unit", _b_F, lambda r: dict(A=_rand_mat(r))),
        RuleSchema("p", _DERIVED, "matrix addition", _b_p, _s_p),
        RuleSchema("m", _DERIVED, "matrix multiplication", _b_m, _s_m),
        RuleSchema("N", _DERIVED, "red pi phases push through matrices", _b_N, _s_N),
        RuleSchema("O", _DERIVED, "green pi phases push back through matrices", _b_O, _s_O),
        RuleSchema("I1", _DERIVED, "an injective matrix has a backward left inverse", _b_I1, _s_injective),
        RuleSchema("S1", _DERIVED, "a surjective matrix has a backward right inverse", _b_S1, _s_surjective),
        RuleSchema("B", _DERIVED, "bipartite expansion of a matrix", _b_B, lambda r: dict(A=_rand_mat(r))),
        RuleSchema("trig", _DERIVED, "local complementation of a path closes the triangle", _b_trig, lambda r: dict(n=_n(r))),
        RuleSchema("R", _DERIVED, "any wiring equals the canonical one", _b_R, _s_wiring),
    ]
}

LIFTABLE = tuple(name for name, s in RULES.items() if s.liftable)


def instantiate(name: str, **params) -> RuleInstance:
    """Build the rule ``name`` with the given parameters."""
    schema = RULES.get(name)
    if schema is None:
        raise ParameterError(f"unknown rule {name!r}")
    try:
        lhs, rhs = schema.build(**params)
    except TypeError as exc:
        raise ParameterError(f"rule {name}: {exc}") from None
    return RuleInstance(name, {k: _jsonable(v) for k, v in params.items()}, lhs, rhs)


def sample_params(name: str, rng: np.random.Generator) -> dict:
    """Random parameters for ``name`` within the desk-scale budget."""
    return RULES[name].sample(rng)


def big_rule(name: str, n: int, **params) -> RuleInstance:
    """Size-``n`` version of a plain ZX rule: every generator carries ``n`` qubits."""
    schema = RULES.get(name)
    if schema is None or not schema.liftable:
        raise ParameterError(f"rule {name!r} has no scalable version")
    inst = instantiate(name, n=_size("n", n), **params)
    # every register in a lifted rule has size n
    for side in (inst.lhs, inst.rhs):
        for _, leaf in leaves(side):
            if any(s != n for s in leaf.dom.registers + leaf.cod.registers):
                raise AssertionError(f"lifted rule {name} contains a register not of size {n}")
    return inst
