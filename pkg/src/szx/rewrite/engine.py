"""Applying rule instances at tree paths, and derivation traces.

A path is a tuple of 0/1 steps from the root: in a ``Seq`` node 0 selects the
first factor, in a ``Par`` node 0 selects the left one.  Traces have one line
per step::

    step 1: w2 R2L at 0.1 params={"n": 2}

and can be replayed on the diagram they were recorded on.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from ..diagram import Diagram, Par, Seq, phases_close, replace_at, subterm
from ..errors import MatchError, ParseError, StructuralError
from .rules import RuleInstance, instantiate

__all__ = [
    "same_structure",
    "apply_at",
    "TraceStep",
    "format_path",
    "parse_path",
    "format_trace",
    "parse_trace",
    "replay",
]


def same_structure(a: Diagram, b: Diagram, tol: float = 1e-9) -> bool:
    """Tree equality with angles compared modulo 2*pi."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if type(x) is not type(y):
            return False
        if isinstance(x, Seq):
            stack.append((x.first, y.first))
            stack.append((x.second, y.second))
        elif isinstance(x, Par):
            stack.append((x.left, y.left))
            stack.append((x.right, y.right))
        elif hasattr(x, "phases"):
            if (x.k, x.l, x.n) != (y.k, y.l, y.n) or not phases_close(x.phases, y.phases, tol):
                return False
        elif x != y:
            return False
    return True


def apply_at(d: Diagram, path, inst: RuleInstance, direction: str = "L2R") -> Diagram:
    """Replace the subterm at ``path`` (one side of ``inst``) by the other side."""
    pattern, replacement = inst.sides(direction)
    path = tuple(path)
    try:
        target = subterm(d, path)
    except StructuralError as exc:
        raise MatchError(f"bad path {format_path(path)}: {exc}") from None
    if not same_structure(target, pattern):
        raise MatchError(
            f"rule {inst.name} ({direction}) does not match the subterm at {format_path(path)}"
        )
    return replace_at(d, path, replacement)


def format_path(path) -> str:
    return ".".join(str(s) for s in path) if path else "root"


def parse_path(text: str) -> tuple[int, ...]:
    if text == "root":
        return ()
    if not re.fullmatch(r"[01](\.[01])*", text):
        raise ValueError(f"bad path {text!r}")
    return tuple(int(s) for s in text.split("."))


@dataclass(frozen=True)
class TraceStep:
    index: int
    rule: str
    direction: str
    path: tuple[int, ...]
    params: dict = field(default_factory=dict)

    def instance(self) -> RuleInstance:
        return instantiate(self.rule, **self.params)

    def __str__(self) -> str:
        params = json.dumps(self.params, sort_keys=True)
        return f"step {self.index}: {self.rule} {self.direction} at {format_path(self.path)} params={params}"


_STEP_RE = re.compile(r"^step\s+(\d+):\s+(\S+)\s+(L2R|R2L)\s+at\s+(\S+)\s+params=(.*)$")


def format_trace(steps) -> str:
    return "".join(f"{s}\n" for s in steps)


def parse_trace(text: str) -> list[TraceStep]:
    """Parse trace lines; blank lines and ``#`` comments are ignored."""
    steps = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _STEP_RE.match(stripped)
        if not m:
            raise ParseError("expected 'step <k>: <rule> <L2R|R2L> at <path> params=<json>'", lineno, 1)
        try:
            path = parse_path(m.group(4))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, line.index(m.group(4)) + 1) from None
        try:
            params = json.loads(m.group(5))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad params: {exc.msg}", lineno, line.index("params=") + 8 + exc.pos) from None
        if not isinstance(params, dict):
            raise ParseError("params must be a JSON object", lineno, line.index("params=") + 8)
        steps.append(TraceStep(int(m.group(1)), m.group(2), m.group(3), path, params))
    return steps


def replay(d: Diagram, steps) -> Diagram:
    """Apply each trace step in order."""
    for step in steps:
        d = apply_at(d, step.path, step.instance(), step.direction)
    return d
