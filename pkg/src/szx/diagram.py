"""Scalable ZX diagrams as typed composition trees.

A wire type is an ordered list of register sizes; ``WireType((2, 3))`` is the
formal sum ``1_2 + 1_3`` and the empty list is the unit type ``0``.  A diagram
is either a generator leaf or a binary :class:`Seq` / :class:`Par` node.
``f >> g`` composes sequentially (``f`` first) and ``f @ g`` in parallel.

>>> d = Identity(2) >> Hadamard(2)
>>> d.dom, d.cod
(WireType((2,)), WireType((2,)))
>>> (Cup(1) @ EmptyScalar()).cod
WireType((1, 1))
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterator, Sequence

from .errors import CompositionError, ParameterError, StructuralError
from .f2linalg import F2Matrix

__all__ = [
    "WireType",
    "Diagram",
    "Generator",
    "GreenSpider",
    "RedSpider",
    "Hadamard",
    "Divider",
    "Gatherer",
    "Swap",
    "Cup",
    "Cap",
    "Identity",
    "EmptyScalar",
    "MatrixBox",
    "Seq",
    "Par",
    "seq",
    "par",
    "compose",
    "tensor",
    "identity",
    "split",
    "merge",
    "split_many",
    "merge_many",
    "rewire",
    "permutation",
    "transpose",
    "dagger",
    "is_wiring",
    "leaves",
    "subterm",
    "replace_at",
    "root2",
    "inv_root2",
    "unit_bone",
    "phase_scalar",
    "scalar",
    "phases_close",
    "ANGLE_TOL",
]

ANGLE_TOL = 1e-9
TWO_PI = 2 * math.pi


def _check_size(name: str, value: int, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            if int(value) != value:
                raise TypeError
            value = int(value)
        except (TypeError, ValueError):
            raise ParameterError(f"{name} must be an integer, got {value!r}") from None
    if value < minimum:
        raise ParameterError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class WireType:
    """Ordered register sizes; each entry is one ``1_n`` summand."""

    registers: tuple[int, ...] = ()

    def __post_init__(self):
        regs = tuple(_check_size("register size", r) for r in self.registers)
        object.__setattr__(self, "registers", regs)

    @classmethod
    def of(cls, *sizes: int) -> "WireType":
        return cls(tuple(sizes))

    @classmethod
    def repeat(cls, count: int, size: int) -> "WireType":
        """``count`` registers of ``size`` qubits, written ``k_n``."""
        return cls((size,) * count)

    @property
    def size(self) -> int:
        return sum(self.registers)

    def __add__(self, other: "WireType") -> "WireType":
        return WireType(self.registers + other.registers)

    def __len__(self) -> int:
        return len(self.registers)

    def __iter__(self):
        return iter(self.registers)

    def __getitem__(self, i):
        return self.registers[i]

    def __repr__(self) -> str:
        return f"WireType({self.registers!r})"

    def __str__(self) -> str:
        if not self.registers:
            return "0"
        return " + ".join(f"1_{n}" for n in self.registers)


def _as_type(t) -> WireType:
    return t if isinstance(t, WireType) else WireType(tuple(t))


def phases_close(a: Sequence[float], b: Sequence[float], tol: float = ANGLE_TOL) -> bool:
    """Compare angle vectors modulo 2*pi."""
    if len(a) != len(b):
        return False
    for x, y in zip(a, b):
        d = math.remainder(x - y, TWO_PI)
        if abs(d) > tol:
            return False
    return True


class Diagram:
    """Base class of SZX diagrams. Subclasses expose ``dom`` and ``cod``."""

    dom: WireType
    cod: WireType

    def __rshift__(self, other: "Diagram") -> "Diagram":
        return seq(self, other)

    def __matmul__(self, other: "Diagram") -> "Diagram":
        return par(self, other)

    @property
    def type(self) -> tuple[WireType, WireType]:
        return (self.dom, self.cod)

    def __str__(self) -> str:
        from .dsl import to_dsl

        return to_dsl(self)


class Generator(Diagram):
    """Marker base for leaves of the composition tree."""

    @property
    def sizes(self) -> tuple[int, ...]:
        """Every register size the generator touches."""
        return self.dom.registers + self.cod.registers


def _phase_vector(phases, n: int, k: int, l: int) -> tuple[float, ...]:
    if phases is None:
        if k + l == 0:
            raise ParameterError("a spider without legs needs an explicit phase vector")
        return (0.0,) * n
    if isinstance(phases, (int, float)) and not isinstance(phases, bool):
        if k + l == 0:
            raise ParameterError("single-angle abbreviation needs at least one leg")
        return (float(phases),) * n
    vec = tuple(float(p) for p in phases)
    if len(vec) != n:
        raise ParameterError(f"phase vector has length {len(vec)}, expected {n}")
    return vec


@dataclass(frozen=True)
class _Spider(Generator):
    k: int
    l: int
    n: int = 1
    phases: tuple[float, ...] = None

    def __post_init__(self):
        object.__setattr__(self, "k", _check_size("k", self.k, 0))
        object.__setattr__(self, "l", _check_size("l", self.l, 0))
        object.__setattr__(self, "n", _check_size("n", self.n))
        object.__setattr__(self, "phases", _phase_vector(self.phases, self.n, self.k, self.l))

    @property
    def dom(self) -> WireType:
        return WireType.repeat(self.k, self.n)

    @property
    def cod(self) -> WireType:
        return WireType.repeat(self.l, self.n)


@dataclass(frozen=True)
class GreenSpider(_Spider):
    """Z spider ``k_n -> l_n`` with one angle per qubit of the register."""


@dataclass(frozen=True)
class RedSpider(_Spider):
    """X spider, the Hadamard conjugate of the green one."""


@dataclass(frozen=True)
class Hadamard(Generator):
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "n", _check_size("n", self.n))

    @property
    def dom(self):
        return WireType((self.n,))

    @property
    def cod(self):
        return WireType((self.n,))


@dataclass(frozen=True)
class Identity(Generator):
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "n", _check_size("n", self.n))

    @property
    def dom(self):
        return WireType((self.n,))

    @property
    def cod(self):
        return WireType((self.n,))


@dataclass(frozen=True)
class Divider(Generator):
    """Generalised divider ``1_{a+b} -> 1_a + 1_b``."""

    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", _check_size("a", self.a))
        object.__setattr__(self, "b", _check_size("b", self.b))

    @property
    def dom(self):
        return WireType((self.a + self.b,))

    @property
    def cod(self):
        return WireType((self.a, self.b))


@dataclass(frozen=True)
class Gatherer(Generator):
    """Generalised gatherer ``1_a + 1_b -> 1_{a+b}``."""

    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", _check_size("a", self.a))
        object.__setattr__(self, "b", _check_size("b", self.b))

    @property
    def dom(self):
        return WireType((self.a, self.b))

    @property
    def cod(self):
        return WireType((self.a + self.b,))


@dataclass(frozen=True)
class Swap(Generator):
    n: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "n", _check_size("n", self.n))
        object.__setattr__(self, "m", _check_size("m", self.m))

    @property
    def dom(self):
        return WireType((self.n, self.m))

    @property
    def cod(self):
        return WireType((self.m, self.n))


@dataclass(frozen=True)
class Cup(Generator):
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "n", _check_size("n", self.n))

    @property
    def dom(self):
        return WireType()

    @property
    def cod(self):
        return WireType((self.n, self.n))


@dataclass(frozen=True)
class Cap(Generator):
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "n", _check_size("n", self.n))

    @property
    def dom(self):
        return WireType((self.n, self.n))

    @property
    def cod(self):
        return WireType()


@dataclass(frozen=True)
class EmptyScalar(Generator):
    """The empty diagram ``0 -> 0``."""

    @property
    def dom(self):
        return WireType()

    @property
    def cod(self):
        return WireType()


@dataclass(frozen=True)
class MatrixBox(Generator):
    """``|x> -> |Ax>`` on ``1_n -> 1_m``, or its transpose when ``forward`` is false."""

    matrix: F2Matrix
    forward: bool = True

    def __post_init__(self):
        if not isinstance(self.matrix, F2Matrix):
            object.__setattr__(self, "matrix", F2Matrix(self.matrix))
        object.__setattr__(self, "forward", bool(self.forward))

    @property
    def dom(self):
        m, n = self.matrix.shape
        return WireType((n if self.forward else m,))

    @property
    def cod(self):
        m, n = self.matrix.shape
        return WireType((m if self.forward else n,))


@dataclass(frozen=True)
class Seq(Diagram):
    """``first`` followed by ``second``."""

    first: Diagram
    second: Diagram
    dom: WireType = field(init=False, compare=False, repr=False)
    cod: WireType = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        for part in (self.first, self.second):
            if not isinstance(part, Diagram):
                raise StructuralError(f"not a diagram: {part!r}")
        if self.first.cod != self.second.dom:
            raise CompositionError(self.first.cod, self.second.dom)
        object.__setattr__(self, "dom", self.first.dom)
        object.__setattr__(self, "cod", self.second.cod)


@dataclass(frozen=True)
class Par(Diagram):
    """``left`` beside ``right``; registers are concatenated."""

    left: Diagram
    right: Diagram
    dom: WireType = field(init=False, compare=False, repr=False)
    cod: WireType = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        for part in (self.left, self.right):
            if not isinstance(part, Diagram):
                raise StructuralError(f"not a diagram: {part!r}")
        object.__setattr__(self, "dom", self.left.dom + self.right.dom)
        object.__setattr__(self, "cod", self.left.cod + self.right.cod)


def seq(f: Diagram, g: Diagram) -> Seq:
    return Seq(f, g)


def par(f: Diagram, g: Diagram) -> Par:
    return Par(f, g)


def compose(*diagrams: Diagram) -> Diagram:
    """Left-to-right sequential composition of one or more diagrams."""
    if not diagrams:
        raise ParameterError("compose needs at least one diagram")
    return reduce(Seq, diagrams)


def tensor(*diagrams: Diagram) -> Diagram:
    """Parallel composition; the empty tensor is the empty scalar."""
    if not diagrams:
        return EmptyScalar()
    return reduce(Par, diagrams)


def identity(t) -> Diagram:
    t = _as_type(t)
    return tensor(*(Identity(n) for n in t))


def split(a: int, b: int) -> Divider:
    return Divider(a, b)


def merge(a: int, b: int) -> Gatherer:
    return Gatherer(a, b)


def split_many(parts: Sequence[int]) -> Diagram:
    """Divider cascade ``1_{sum(parts)} -> sum_i 1_{parts[i]}``, peeling the head first."""
    parts = [_check_size("part", p) for p in parts]
    if not parts:
        raise ParameterError("split_many needs at least one part")
    if len(parts) == 1:
        return Identity(parts[0])
    head, rest = parts[0], parts[1:]
    if len(rest) == 1:
        return Divider(head, rest[0])
    return Divider(head, sum(rest)) >> (Identity(head) @ split_many(rest))


def merge_many(parts: Sequence[int]) -> Diagram:
    """Gatherer cascade mirroring :func:`split_many`."""
    parts = [_check_size("part", p) for p in parts]
    if not parts:
        raise ParameterError("merge_many needs at least one part")
    if len(parts) == 1:
        return Identity(parts[0])
    head, rest = parts[0], parts[1:]
    if len(rest) == 1:
        return Gatherer(head, rest[0])
    return (Identity(head) @ merge_many(rest)) >> Gatherer(head, sum(rest))


def _is_identity_tensor(d: Diagram) -> bool:
    if isinstance(d, (Identity, EmptyScalar)):
        return True
    if isinstance(d, Par):
        return _is_identity_tensor(d.left) and _is_identity_tensor(d.right)
    return False


def rewire(a, b) -> Diagram:
    """The canonical wiring ``a -> b``: divider cascades, then gatherer cascades.

    Registers are cut at every boundary of either type (the common refinement),
    so the result only splits what it has to.
    """
    a, b = _as_type(a), _as_type(b)
    if a.size != b.size:
        raise ParameterError(f"cannot rewire {a} (size {a.size}) into {b} (size {b.size})")
    cuts = set()
    for t in (a, b):
        acc = 0
        for n in t:
            acc += n
            cuts.add(acc)
    cuts = sorted(cuts)

    def refine(t: WireType) -> list[list[int]]:
        groups, start = [], 0
        for n in t:
            inner = [c for c in cuts if start < c <= start + n]
            pieces, prev = [], start
            for c in inner:
                pieces.append(c - prev)
                prev = c
            groups.append(pieces)
            start += n
        return groups

    delta = tensor(*(split_many(p) for p in refine(a)))
    gamma = tensor(*(merge_many(p) for p in refine(b)))
    if _is_identity_tensor(gamma):
        return delta
    if _is_identity_tensor(delta):
        return gamma
    return delta >> gamma


def permutation(perm: Sequence[int], a) -> Diagram:
    """Swap network sending register ``perm[j]`` of ``a`` to output position ``j``."""
    a = _as_type(a)
    perm = list(perm)
    if sorted(perm) != list(range(len(a))):
        raise ParameterError(f"{perm} is not a permutation of {len(a)} registers")
    current = list(range(len(a)))
    layers = []
    # bubble sort current towards perm using adjacent transpositions
    target_pos = {reg: j for j, reg in enumerate(perm)}
    changed = True
    while changed:
        changed = False
        for i in range(len(current) - 1):
            if target_pos[current[i]] > target_pos[current[i + 1]]:
                regs = [a[r] for r in current]
                layer = tensor(
                    identity(regs[:i]),
                    Swap(regs[i], regs[i + 1]),
                    identity(regs[i + 2:]),
                )
                layers.append(_strip_empty(layer))
                current[i], current[i + 1] = current[i + 1], current[i]
                changed = True
    if not layers:
        return identity(a)
    return compose(*layers)


def _strip_empty(d: Diagram) -> Diagram:
    """Drop ``EmptyScalar`` padding introduced by empty identity tensors."""
    if isinstance(d, Par):
        left, right = _strip_empty(d.left), _strip_empty(d.right)
        if isinstance(left, EmptyScalar):
            return right
        if isinstance(right, EmptyScalar):
            return left
        return Par(left, right)
    return d


def transpose(d: Diagram) -> Diagram:
    """Flip a diagram upside down; the interpretation is transposed."""
    if isinstance(d, Seq):
        return Seq(transpose(d.second), transpose(d.first))
    if isinstance(d, Par):
        return Par(transpose(d.left), transpose(d.right))
    if isinstance(d, GreenSpider):
        return GreenSpider(d.l, d.k, d.n, d.phases)
    if isinstance(d, RedSpider):
        return RedSpider(d.l, d.k, d.n, d.phases)
    if isinstance(d, Divider):
        return Gatherer(d.a, d.b)
    if isinstance(d, Gatherer):
        return Divider(d.a, d.b)
    if isinstance(d, Swap):
        return Swap(d.m, d.n)
    if isinstance(d, Cup):
        return Cap(d.n)
    if isinstance(d, Cap):
        return Cup(d.n)
    if isinstance(d, MatrixBox):
        return MatrixBox(d.matrix, not d.forward)
    if isinstance(d, (Hadamard, Identity, EmptyScalar)):
        return d
    raise StructuralError(f"not a diagram: {d!r}")


def _conjugate(d: Diagram) -> Diagram:
    if isinstance(d, Seq):
        return Seq(_conjugate(d.first), _conjugate(d.second))
    if isinstance(d, Par):
        return Par(_conjugate(d.left), _conjugate(d.right))
    if isinstance(d, GreenSpider):
        return GreenSpider(d.k, d.l, d.n, tuple(-p for p in d.phases))
    if isinstance(d, RedSpider):
        return RedSpider(d.k, d.l, d.n, tuple(-p for p in d.phases))
    return d


def dagger(d: Diagram) -> Diagram:
    """Conjugate transpose: flip the diagram and negate every angle."""
    return transpose(_conjugate(d))


def is_wiring(d: Diagram) -> bool:
    """True when ``d`` only contains identities, dividers and gatherers."""
    if isinstance(d, (Seq,)):
        return is_wiring(d.first) and is_wiring(d.second)
    if isinstance(d, Par):
        return is_wiring(d.left) and is_wiring(d.right)
    return isinstance(d, (Identity, Divider, Gatherer, EmptyScalar))


Path = tuple[int, ...]


def leaves(d: Diagram, path: Path = ()) -> Iterator[tuple[Path, Generator]]:
    """Yield ``(path, leaf)`` pairs in left-to-right order."""
    if isinstance(d, Seq):
        yield from leaves(d.first, path + (0,))
        yield from leaves(d.second, path + (1,))
    elif isinstance(d, Par):
        yield from leaves(d.left, path + (0,))
        yield from leaves(d.right, path + (1,))
    else:
        yield path, d


def subterms(d: Diagram, path: Path = ()) -> Iterator[tuple[Path, Diagram]]:
    """Every subtree with its path, parents before children."""
    yield path, d
    if isinstance(d, Seq):
        yield from subterms(d.first, path + (0,))
        yield from subterms(d.second, path + (1,))
    elif isinstance(d, Par):
        yield from subterms(d.left, path + (0,))
        yield from subterms(d.right, path + (1,))


def subterm(d: Diagram, path: Path) -> Diagram:
    for step in path:
        if isinstance(d, Seq):
            d = d.first if step == 0 else d.second
        elif isinstance(d, Par):
            d = d.left if step == 0 else d.right
        else:
            raise StructuralError(f"path {path} descends into a generator")
        if step not in (0, 1):
            raise StructuralError(f"path step must be 0 or 1, got {step}")
    return d


def replace_at(d: Diagram, path: Path, new: Diagram) -> Diagram:
    """Rebuild ``d`` with the subtree at ``path`` replaced; types are re-checked."""
    if not path:
        return new
    step, rest = path[0], path[1:]
    if step not in (0, 1):
        raise StructuralError(f"path step must be 0 or 1, got {step}")
    if isinstance(d, Seq):
        if step == 0:
            return Seq(replace_at(d.first, rest, new), d.second)
        return Seq(d.first, replace_at(d.second, rest, new))
    if isinstance(d, Par):
        if step == 0:
            return Par(replace_at(d.left, rest, new), d.right)
        return Par(d.left, replace_at(d.right, rest, new))
    raise StructuralError(f"path {path} descends into a generator")


# -- scalar gadgets ---------------------------------------------------------
#
# Each gadget is a connected 0 -> 0 diagram.  Built at register size n, its
# value is the n-th power of the size-one value, which is what the big
# versions of the rules need.


def root2(n: int = 1) -> Diagram:
    """Green unit into red counit: value ``sqrt(2)**n``."""
    if n == 0:
        return EmptyScalar()
    return GreenSpider(0, 1, n) >> RedSpider(1, 0, n)


def inv_root2(n: int = 1) -> Diagram:
    """Green(pi/3) - H - green(-pi/3): value ``sqrt(2)**-n``."""
    if n == 0:
        return EmptyScalar()
    return GreenSpider(0, 1, n, math.pi / 3) >> Hadamard(n) >> GreenSpider(1, 0, n, -math.pi / 3)


def unit_bone(n: int = 1) -> Diagram:
    """Green(pi/4) - H - green(-pi/4): a non-empty diagram of value one."""
    if n == 0:
        return EmptyScalar()
    return GreenSpider(0, 1, n, math.pi / 4) >> Hadamard(n) >> GreenSpider(1, 0, n, -math.pi / 4)


def _phase_gadget_angles(theta: float) -> tuple[float, float]:
    # green(a) - H - green(b) evaluates to (1 + a + b - ab)/sqrt(2); solve for
    # unit a, b with value exp(i theta).
    w = math.sqrt(2) * cmath.exp(1j * theta) - 1
    v = w - 1
    rho, phi = abs(v), cmath.phase(v)
    c = max(-1.0, min(1.0, (abs(w) ** 2 - 1) / (2 * rho)))
    best = None
    for alpha in (phi + math.acos(c), phi - math.acos(c)):
        a = cmath.exp(1j * alpha)
        if best is None or abs(1 - a) > abs(1 - best[1]):
            best = (alpha, a)
    alpha, a = best
    b = (w - a) / (1 - a)
    return math.remainder(alpha, 2 * math.pi), math.remainder(cmath.phase(b), 2 * math.pi)


def phase_scalar(thetas) -> Diagram:
    """Diagram of value ``exp(i * sum(thetas))`` on a register of ``len(thetas)``."""
    if isinstance(thetas, (int, float)):
        thetas = [thetas]
    angles = [_phase_gadget_angles(float(t)) for t in thetas]
    n = len(angles)
    if n == 0:
        return EmptyScalar()
    return (
        GreenSpider(0, 1, n, tuple(a for a, _ in angles))
        >> Hadamard(n)
        >> GreenSpider(1, 0, n, tuple(b for _, b in angles))
    )


def scalar(half_powers: int = 0, theta: float = 0.0) -> Diagram:
    """Diagram of value ``sqrt(2)**half_powers * exp(i theta)``.

    A zero ``half_powers`` and ``theta`` gives the empty diagram.
    """
    parts = []
    if half_powers > 0:
        parts.append(root2(half_powers))
    elif half_powers < 0:
        parts.append(inv_root2(-half_powers))
    if abs(math.remainder(theta, TWO_PI)) > ANGLE_TOL:
        parts.append(phase_scalar([theta]))
    return tensor(*parts)


def zero_scalar() -> Diagram:
    """Green ``0 -> 0`` spider with angle pi: value zero."""
    return GreenSpider(0, 0, 1, (math.pi,))
