"""Random diagrams, random sound rewrites and random mutations.

These drive the property tests: rewriting a diagram with sound rules must
never change its meaning, and the decider must agree with the interpreter on
arbitrary pairs.
"""

from __future__ import annotations

import math

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
    compose,
    identity,
    leaves,
    replace_at,
    rewire,
    subterms,
    tensor,
)
from .f2linalg import F2Matrix
from .rewrite.engine import TraceStep, apply_at
from .rewrite.rules import instantiate

__all__ = ["random_type", "random_diagram", "random_rewrites", "mutate", "rewrite_moves"]

TWO_PI = 2 * math.pi


def _angles(rng, n):
    return tuple(float(x) for x in rng.uniform(0, TWO_PI, size=n))


def random_type(rng: np.random.Generator, max_size: int = 4) -> WireType:
    regs = []
    for _ in range(int(rng.integers(0, 3))):
        size = int(rng.integers(1, 4))
        if sum(regs) + size > max_size:
            break
        regs.append(size)
    return WireType(tuple(regs))


def _layer(t: list[int], i: int, width: int, gen: Diagram) -> Diagram:
    parts = [identity(t[:i]), gen, identity(t[i + width:])]
    return tensor(*(p for p in parts if not isinstance(p, EmptyScalar)))


def _random_generator(rng, t: list[int], room: int):
    """Pick ``(position, consumed registers, generator)`` fitting in ``room`` extra qubits."""
    options = []
    for i, n in enumerate(t):
        options.append((i, 1, Hadamard(n)))
        options.append((i, 1, GreenSpider(1, 1, n, _angles(rng, n))))
        options.append((i, 1, RedSpider(1, 1, n, _angles(rng, n))))
        m = int(rng.integers(1, 4))
        if m - n <= room:
            options.append((i, 1, MatrixBox(F2Matrix.random(rng, m, n))))
            options.append((i, 1, MatrixBox(F2Matrix.random(rng, n, m), forward=False)))
        if n >= 2:
            a = int(rng.integers(1, n))
            options.append((i, 1, Divider(a, n - a)))
        if n <= room:
            cls = GreenSpider if rng.random() < 0.5 else RedSpider
            options.append((i, 1, cls(1, 2, n, _angles(rng, n))))
        cls = GreenSpider if rng.random() < 0.5 else RedSpider
        options.append((i, 1, cls(1, 0, n, _angles(rng, n))))
        if i + 1 < len(t):
            n2 = t[i + 1]
            options.append((i, 2, Swap(n, n2)))
            options.append((i, 2, Gatherer(n, n2)))
            if n == n2:
                cls = GreenSpider if rng.random() < 0.5 else RedSpider
                options.append((i, 2, cls(2, 1, n, _angles(rng, n))))
                options.append((i, 2, Cap(n)))
    for i in range(len(t) + 1):
        n = int(rng.integers(1, 3))
        if n <= room:
            cls = GreenSpider if rng.random() < 0.5 else RedSpider
            options.append((i, 0, cls(0, 1, n, _angles(rng, n))))
        if 2 * n <= room:
            options.append((i, 0, Cup(n)))
    options.append((0, 0, GreenSpider(0, 0, 1, _angles(rng, 1))))
    return options[int(rng.integers(len(options)))]


def random_diagram(
    rng: np.random.Generator,
    max_qubits: int = 10,
    layers: int | None = None,
    dom: WireType | None = None,
) -> Diagram:
    """A random well-typed diagram with ``S(dom) + S(cod) <= max_qubits``.

    The cut never carries more than ``max_qubits - S(dom)`` qubits.
    """
    dom = random_type(rng, min(4, max_qubits // 2)) if dom is None else dom
    layers = int(rng.integers(1, 7)) if layers is None else layers
    budget = max_qubits - dom.size
    t = list(dom.registers)
    parts = []
    for _ in range(layers):
        room = budget - sum(t)
        i, width, gen = _random_generator(rng, t, room)
        parts.append(_layer(t, i, width, gen))
        t = t[:i] + list(gen.cod.registers) + t[i + width:]
    if not parts:
        return identity(dom)
    return compose(*parts)


# -- random rewrites --------------------------------------------------------


def _spider_split(rng, leaf):
    """Parameters for un-fusing ``leaf`` with rule s1."""
    k1 = int(rng.integers(0, leaf.k + 1))
    l1 = int(rng.integers(0, leaf.l + 1))
    alpha = _angles(rng, leaf.n)
    beta = tuple(g - a for g, a in zip(leaf.phases, alpha))
    colour = "green" if isinstance(leaf, GreenSpider) else "red"
    return dict(n=leaf.n, k1=k1, l1=l1, w=int(rng.integers(1, 3)), k2=leaf.k - k1, l2=leaf.l - l1,
                alpha=list(alpha), beta=list(beta), colour=colour)


def rewrite_moves(d: Diagram, rng: np.random.Generator) -> list[tuple[str, str, tuple, dict]]:
    """Sound rule applications available in ``d`` as ``(rule, direction, path, params)``."""
    moves = []
    for path, node in subterms(d):
        if isinstance(node, Identity):
            n = node.n
            colour = "green" if rng.random() < 0.5 else "red"
            moves.append(("w1", "R2L", path, dict(n=n, colour=colour)))
            moves.append(("w2", "R2L", path, dict(n=n)))
            moves.append(("W1", "R2L", path, dict(n=n)))
            moves.append(("W2", "R2L", path, dict(n=n)))
            if n >= 2:
                a = int(rng.integers(1, n))
                moves.append(("P", "L2R", path, dict(a=a, b=n - a)))
        elif isinstance(node, (GreenSpider, RedSpider)):
            if node.k + node.l > 0 or rng.random() < 0.5:
                moves.append(("s1", "R2L", path, _spider_split(rng, node)))
            colour = "red" if isinstance(node, GreenSpider) else "green"
            if node.k + node.l <= 3:
                moves.append(("h", "R2L", path, dict(n=node.n, k=node.k, l=node.l, alpha=list(node.phases),
                                                     colour=colour)))
        elif isinstance(node, MatrixBox) and node.forward:
            a = node.matrix
            m, n = a.shape
            moves.append(("B", "L2R", path, dict(A=a.to_compact())))
            if m >= 2:
                cut = int(rng.integers(1, m))
                rows = a.tolist()
                moves.append(("L", "L2R", path, dict(A=F2Matrix(rows[:cut]).to_compact(),
                                                     B=F2Matrix(rows[cut:]).to_compact())))
            if n >= 2:
                cut = int(rng.integers(1, n))
                rows = a.tolist()
                moves.append(("C", "L2R", path, dict(C=F2Matrix([r[:cut] for r in rows]).to_compact(),
                                                     D=F2Matrix([r[cut:] for r in rows]).to_compact())))
            if a.shape == (1, 1):
                moves.append(("1" if a[0, 0] else "0", "L2R", path, {}))
        elif isinstance(node, (Divider, Gatherer)):
            moves.append(("R", "R2L", path, dict(dom=list(node.dom), cod=list(node.cod),
                                                 seed=int(rng.integers(0, 2**31)))))
        elif isinstance(node, Seq):
            f, g = node.first, node.second
            if isinstance(f, Hadamard) and f == g:
                moves.append(("w2", "L2R", path, dict(n=f.n)))
            if isinstance(f, Gatherer) and isinstance(g, Divider) and (f.a, f.b) == (g.a, g.b):
                moves.append(("E", "L2R", path, dict(a=f.a, b=f.b)))
            if isinstance(f, Divider) and isinstance(g, Gatherer) and (f.a, f.b) == (g.a, g.b):
                moves.append(("P", "R2L", path, dict(a=f.a, b=f.b)))
    return moves


def random_rewrites(d: Diagram, rng: np.random.Generator, steps: int) -> tuple[Diagram, list[TraceStep]]:
    """Apply ``steps`` random sound rewrites; returns the result and its trace."""
    trace = []
    for k in range(1, steps + 1):
        moves = rewrite_moves(d, rng)
        if not moves:
            break
        rule, direction, path, params = moves[int(rng.integers(len(moves)))]
        step = TraceStep(k, rule, direction, tuple(path), params)
        d = apply_at(d, step.path, instantiate(rule, **params), direction)
        trace.append(step)
    return d, trace


def mutate(d: Diagram, rng: np.random.Generator) -> Diagram:
    """A same-typed variant of ``d``: usually different, sometimes only
    cosmetically (an angle shifted by a multiple of 2*pi)."""
    candidates = list(leaves(d))
    path, leaf = candidates[int(rng.integers(len(candidates)))]
    choice = rng.random()
    if isinstance(leaf, (GreenSpider, RedSpider)):
        shift = TWO_PI * int(rng.integers(-2, 3)) if choice < 0.3 else float(rng.uniform(0.1, TWO_PI - 0.1))
        phases = list(leaf.phases)
        j = int(rng.integers(len(phases)))
        phases[j] += shift
        new = type(leaf)(leaf.k, leaf.l, leaf.n, tuple(phases))
    elif isinstance(leaf, MatrixBox):
        rows = leaf.matrix.tolist()
        i, j = int(rng.integers(len(rows))), int(rng.integers(len(rows[0])))
        rows[i][j] ^= 1
        new = MatrixBox(F2Matrix(rows), leaf.forward)
    elif isinstance(leaf, Hadamard):
        new = Identity(leaf.n)
    elif isinstance(leaf, Identity):
        new = Hadamard(leaf.n) if choice < 0.5 else RedSpider(1, 1, leaf.n, math.pi)
    elif isinstance(leaf, Swap) and leaf.n == leaf.m:
        new = Identity(leaf.n) @ Identity(leaf.m)
    elif isinstance(leaf, (Divider, Gatherer)):
        new = rewire(leaf.dom, leaf.cod)  # same meaning, different tree only if cascaded
    else:
        return Par(d, GreenSpider(0, 0, 1, (float(rng.uniform(0, TWO_PI)),)))
    return replace_at(d, path, new)
