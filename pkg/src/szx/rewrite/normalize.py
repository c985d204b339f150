"""Expanded form and the equality decider.

Every diagram ``d : a -> b`` is rewritten into ``delta >> core >> gamma``
where ``delta`` divides each input register into single qubits, ``gamma``
gathers single qubits into the output registers, and ``core`` only contains
generators on size-one wires.  Each generator is expanded in one step:

* wires, dividers and gatherers become bundles of size-one wires (P, E);
* a big spider becomes parallel size-one spiders between swap networks (Z, X);
* a big Hadamard becomes parallel size-one Hadamards (W);
* cups and caps split into size-one cups and caps (U, A);
* a register swap becomes a network of size-one swaps (R);
* matrix boxes become their bipartite green/red expansion (B).

The termination measure is the total register size carried by generators not
yet expanded; it drops by at least one at every logged step.  Since all the
core generators are plain ZX generators and the ZX-calculus is complete,
equality of diagrams reduces to equality of their cores' interpretations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

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
    Par,
    RedSpider,
    Seq,
    Swap,
    WireType,
    compose,
    merge_many,
    permutation,
    split_many,
    tensor,
    transpose,
)
from ..errors import ComparisonError, StructuralError
from ..semantics import DEFAULT_MAX_QUBITS, DEFAULT_TOL, equal_semantics
from .engine import format_path
from .rules import matrix_core

__all__ = [
    "ExpandedForm",
    "NormalizationStep",
    "to_expanded_form",
    "decide_equal",
    "is_small",
    "expansion_weight",
]


@dataclass(frozen=True)
class NormalizationStep:
    rule: str
    path: tuple[int, ...]
    generator: str
    measure_before: int
    measure_after: int

    def __str__(self) -> str:
        return (
            f"{self.rule} at {format_path(self.path)} on {self.generator}: "
            f"measure {self.measure_before} -> {self.measure_after}"
        )


@dataclass(frozen=True)
class ExpandedForm:
    delta: Diagram
    core: Diagram
    gamma: Diagram
    log: list = field(default_factory=list, compare=False)

    def recompose(self) -> Diagram:
        return compose(self.delta, self.core, self.gamma)

    def __iter__(self):
        # allows ``gamma, core, delta = to_expanded_form(d)``
        return iter((self.gamma, self.core, self.delta))


def expansion_weight(g: Diagram) -> int:
    """Register size a generator contributes to the termination measure."""
    if isinstance(g, MatrixBox):
        return g.dom.size + g.cod.size
    if isinstance(g, EmptyScalar):
        return 0
    return sum(s for s in g.dom.registers + g.cod.registers if s > 1)


def is_small(d: Diagram) -> bool:
    """True when every generator of ``d`` is a plain size-one ZX generator."""
    stack = [d]
    while stack:
        x = stack.pop()
        if isinstance(x, Seq):
            stack.extend((x.first, x.second))
        elif isinstance(x, Par):
            stack.extend((x.left, x.right))
        elif isinstance(x, (MatrixBox, Divider, Gatherer)):
            return False
        elif any(s != 1 for s in x.dom.registers + x.cod.registers):
            return False
        elif hasattr(x, "n") and x.n != 1:
            return False
    return True


def _ones(count: int) -> WireType:
    return WireType((1,) * count)


def _wires(count: int) -> Diagram:
    return tensor(*([Identity(1)] * count))


def _multiplex(cls, k: int, l: int, n: int, phases) -> Diagram:
    """``n`` size-one spiders, wired so that qubit ``i`` of every leg meets copy ``i``."""
    copies = tensor(*(cls(k, l, 1, (phases[i],)) for i in range(n)))
    # exploded input index r*n + i (leg r, qubit i) goes to copy i, slot r
    perm_in = [r * n + i for i in range(n) for r in range(k)]
    perm_out = [i * l + r for r in range(l) for i in range(n)]
    parts = []
    if k:
        parts.append(permutation(perm_in, _ones(k * n)))
    parts.append(copies)
    if l:
        parts.append(permutation(perm_out, _ones(l * n)))
    return compose(*parts)


def _expand_leaf(g: Diagram) -> tuple[str, Diagram]:
    if isinstance(g, (Identity, Divider, Gatherer)):
        rule = {Identity: "P", Divider: "E", Gatherer: "E"}[type(g)]
        return rule, _wires(g.dom.size)
    if isinstance(g, Hadamard):
        return "W", tensor(*([Hadamard(1)] * g.n))
    if isinstance(g, (GreenSpider, RedSpider)):
        rule = "Z" if isinstance(g, GreenSpider) else "X"
        return rule, _multiplex(type(g), g.k, g.l, g.n, g.phases)
    if isinstance(g, Swap):
        perm = list(range(g.n, g.n + g.m)) + list(range(g.n))
        return "R", permutation(perm, _ones(g.n + g.m))
    if isinstance(g, Cup):
        cups = tensor(*([Cup(1)] * g.n))
        perm = [2 * i for i in range(g.n)] + [2 * i + 1 for i in range(g.n)]
        return "U", cups >> permutation(perm, _ones(2 * g.n)) if g.n > 1 else cups
    if isinstance(g, Cap):
        _, cup = _expand_leaf(Cup(g.n))
        return "A", transpose(cup)
    if isinstance(g, MatrixBox):
        core = matrix_core(g.matrix)
        return "B", core if g.forward else transpose(core)
    if isinstance(g, EmptyScalar):
        return "", g
    raise StructuralError(f"not a generator: {g!r}")


def to_expanded_form(d: Diagram) -> ExpandedForm:
    """Decompose ``d`` into divider cascades, a size-one core and gatherer cascades."""
    from ..diagram import leaves

    measure = sum(expansion_weight(g) for _, g in leaves(d))
    log: list[NormalizationStep] = []

    def expand(node: Diagram, path: tuple[int, ...]) -> Diagram:
        nonlocal measure
        if isinstance(node, Seq):
            return Seq(expand(node.first, path + (0,)), expand(node.second, path + (1,)))
        if isinstance(node, Par):
            return Par(expand(node.left, path + (0,)), expand(node.right, path + (1,)))
        rule, small = _expand_leaf(node)
        weight = expansion_weight(node)
        if weight:
            log.append(NormalizationStep(rule, path, type(node).__name__, measure, measure - weight))
            measure -= weight
        return small

    core = expand(d, ())
    delta = tensor(*(split_many([1] * r) for r in d.dom))
    gamma = tensor(*(merge_many([1] * r) for r in d.cod))
    return ExpandedForm(delta, core, gamma, log)


def decide_equal(
    d1: Diagram,
    d2: Diagram,
    tol: float = DEFAULT_TOL,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> bool:
    """Normalise both diagrams and compare their size-one cores."""
    if d1.dom != d2.dom or d1.cod != d2.cod:
        raise ComparisonError((d1.dom, d1.cod), (d2.dom, d2.cod))
    c1 = to_expanded_form(d1).core
    c2 = to_expanded_form(d2).core
    return equal_semantics(c1, c2, tol=tol, max_qubits=max_qubits)
