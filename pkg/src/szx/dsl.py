"""Text syntax for diagrams, plus Graphviz export.

Terms are fully parenthesised::

    (gz k l n a1 ... an)   green spider, one angle per qubit
    (gx k l n a1 ... an)   red spider
    (h n) (id n) (cup n) (cap n) (swap n m) (div a b) (gath a b)
    (mat FWD "11;01")      matrix box, rows separated by semicolons
    (scalar)               the empty diagram
    (seq t t) (par t t)

Angles are decimal numbers or multiples of ``pi`` such as ``pi/2``, ``-3*pi/4``
and ``0.5*pi``.  ``#`` starts a comment running to the end of the line.

>>> d = parse("(seq (div 1 1) (gath 1 1))")
>>> to_dsl(d)
'(seq (div 1 1) (gath 1 1))'
>>> parse("(gz 1 1 2 pi 0)").phases[0]
3.141592653589793
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

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
)
from .errors import CompositionError, ParameterError, ParseError, ShapeError
from .f2linalg import F2Matrix

__all__ = ["parse", "to_dsl", "to_dot", "parse_angle"]


@dataclass
class _Token:
    kind: str  # "(", ")", "atom", "string"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        if ch == '"':
            end = text.find('"', i + 1)
            if end < 0 or "\n" in text[i:end]:
                raise ParseError("unterminated string", line, col)
            tokens.append(_Token("string", text[i + 1 : end], line, col))
            col += end - i + 1
            i = end + 1
            continue
        start, start_col = i, col
        while i < len(text) and not text[i].isspace() and text[i] not in '()"#':
            i += 1
            col += 1
        tokens.append(_Token("atom", text[start:i], line, start_col))
    return tokens


_PI_RE = re.compile(r"^([+-]?)(?:([0-9.eE+-]+)\*)?pi(?:/([0-9.eE+-]+))?$")


def parse_angle(text: str) -> float:
    """Parse ``1.5``, ``pi``, ``-pi/2`` or ``3*pi/4`` into radians."""
    m = _PI_RE.match(text)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        coeff = float(m.group(2)) if m.group(2) else 1.0
        denom = float(m.group(3)) if m.group(3) else 1.0
        return sign * coeff * math.pi / denom
    return float(text)


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.eof = (text.count("\n") + 1, len(text.rsplit("\n", 1)[-1]) + 1)

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, what: str) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input, expected {what}", *self.eof)
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next(repr(kind))
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def integer(self) -> int:
        tok = self.next("an integer")
        if tok.kind != "atom" or not re.fullmatch(r"[0-9]+", tok.text):
            raise ParseError(f"expected an integer, found {tok.text!r}", tok.line, tok.col)
        return int(tok.text)

    def angle(self) -> float:
        tok = self.next("an angle")
        if tok.kind != "atom":
            raise ParseError(f"expected an angle, found {tok.text!r}", tok.line, tok.col)
        try:
            return parse_angle(tok.text)
        except ValueError:
            raise ParseError(f"bad angle {tok.text!r}", tok.line, tok.col) from None

    def term(self) -> Diagram:
        open_tok = self.expect("(")
        head = self.next("a constructor name")
        if head.kind != "atom":
            raise ParseError(f"expected a constructor name, found {head.text!r}", head.line, head.col)
        name = head.text
        try:
            node = self._body(name, head)
        except (ParameterError, ShapeError, CompositionError) as exc:
            raise ParseError(str(exc), open_tok.line, open_tok.col) from exc
        self.expect(")")
        return node

    def _body(self, name: str, head: _Token) -> Diagram:
        if name in ("gz", "gx"):
            k, l, n = self.integer(), self.integer(), self.integer()
            phases = []
            while (tok := self.peek()) is not None and tok.kind == "atom":
                phases.append(self.angle())
            if not phases:
                phases = None
            elif len(phases) == 1 and k + l > 0:
                phases = phases[0]  # single-angle abbreviation
                cls = GreenSpider if name == "gz" else RedSpider
                return cls(k, l, n, phases)
            cls = GreenSpider if name == "gz" else RedSpider
            return cls(k, l, n, phases if phases is None else tuple(phases))
        if name in ("h", "id", "cup", "cap"):
            n = self.integer()
            return {"h": Hadamard, "id": Identity, "cup": Cup, "cap": Cap}[name](n)
        if name in ("swap", "div", "gath"):
            a, b = self.integer(), self.integer()
            return {"swap": Swap, "div": Divider, "gath": Gatherer}[name](a, b)
        if name == "mat":
            direction = self.next("FWD or BWD")
            if direction.text.upper() not in ("FWD", "BWD"):
                raise ParseError(f"expected FWD or BWD, found {direction.text!r}", direction.line, direction.col)
            body = self.next("a quoted matrix")
            if body.kind != "string":
                raise ParseError("matrix rows must be quoted", body.line, body.col)
            try:
                matrix = F2Matrix.from_compact(body.text)
            except ParseError as exc:
                raise ParseError(f"bad matrix: {exc}", body.line, body.col) from None
            return MatrixBox(matrix, direction.text.upper() == "FWD")
        if name == "scalar":
            return EmptyScalar()
        if name in ("seq", "par"):
            left = self.term()
            right = self.term()
            return Seq(left, right) if name == "seq" else Par(left, right)
        raise ParseError(f"unknown constructor {name!r}", head.line, head.col)


def parse(text: str) -> Diagram:
    """Parse one diagram term; trailing tokens are an error."""
    p = _Parser(text)
    d = p.term()
    extra = p.peek()
    if extra is not None:
        raise ParseError(f"unexpected trailing input {extra.text!r}", extra.line, extra.col)
    return d


def _fmt_angle(x: float) -> str:
    return repr(float(x))


def to_dsl(d: Diagram) -> str:
    """Print ``d`` so that ``parse(to_dsl(d)) == d``."""
    if isinstance(d, Seq):
        return f"(seq {to_dsl(d.first)} {to_dsl(d.second)})"
    if isinstance(d, Par):
        return f"(par {to_dsl(d.left)} {to_dsl(d.right)})"
    if isinstance(d, (GreenSpider, RedSpider)):
        tag = "gz" if isinstance(d, GreenSpider) else "gx"
        angles = " ".join(_fmt_angle(a) for a in d.phases)
        return f"({tag} {d.k} {d.l} {d.n} {angles})"
    if isinstance(d, Hadamard):
        return f"(h {d.n})"
    if isinstance(d, Identity):
        return f"(id {d.n})"
    if isinstance(d, Cup):
        return f"(cup {d.n})"
    if isinstance(d, Cap):
        return f"(cap {d.n})"
    if isinstance(d, Swap):
        return f"(swap {d.n} {d.m})"
    if isinstance(d, Divider):
        return f"(div {d.a} {d.b})"
    if isinstance(d, Gatherer):
        return f"(gath {d.a} {d.b})"
    if isinstance(d, MatrixBox):
        return f'(mat {"FWD" if d.forward else "BWD"} "{d.matrix.to_compact()}")'
    if isinstance(d, EmptyScalar):
        return "(scalar)"
    raise ParameterError(f"cannot print {d!r}")


# -- Graphviz ---------------------------------------------------------------

_DOT_STYLE = {
    GreenSpider: 'shape=circle, style=filled, fillcolor="#ccffcc"',
    RedSpider: 'shape=circle, style=filled, fillcolor="#ff9999"',
    Hadamard: 'shape=square, style=filled, fillcolor="#ffff66"',
    Divider: "shape=triangle",
    Gatherer: "shape=invtriangle",
    MatrixBox: "shape=box",
    Swap: "shape=point",
    Cup: "shape=point",
    Cap: "shape=point",
}


def _dot_label(g: Diagram) -> str:
    if isinstance(g, (GreenSpider, RedSpider)):
        nonzero = [a for a in g.phases if abs(math.remainder(a, 2 * math.pi)) > 1e-12]
        angle = "" if not nonzero else (
            f"{g.phases[0]:.3g}" if len(set(g.phases)) == 1 else "[" + ",".join(f"{a:.3g}" for a in g.phases) + "]"
        )
        return f"{angle}" + (f" /{g.n}" if g.n > 1 else "")
    if isinstance(g, MatrixBox):
        return g.matrix.to_compact() + ("" if g.forward else " (bwd)")
    if isinstance(g, Hadamard):
        return "H" + (f"/{g.n}" if g.n > 1 else "")
    return ""


def to_dot(d: Diagram, name: str = "szx") -> str:
    """Graphviz source with one node per non-wire generator; edges carry register sizes."""
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    edges = []
    counter = [0]

    def new_node(attrs: str) -> str:
        nid = f"n{counter[0]}"
        counter[0] += 1
        lines.append(f"  {nid} [{attrs}];")
        return nid

    inputs = []
    for i, size in enumerate(d.dom):
        inputs.append((new_node(f'label="in{i}", shape=plaintext'), size))

    def walk(node: Diagram, wires: list) -> list:
        if isinstance(node, Seq):
            return walk(node.second, walk(node.first, wires))
        if isinstance(node, Par):
            k = len(node.left.dom)
            return walk(node.left, wires[:k]) + walk(node.right, wires[k:])
        if isinstance(node, (Identity, EmptyScalar)):
            return wires
        style = next((s for cls, s in _DOT_STYLE.items() if isinstance(node, cls)), "shape=box")
        nid = new_node(f'label="{_dot_label(node)}", {style}')
        for src, size in wires:
            edges.append(f'  {src} -> {nid} [label="{size}"];')
        return [(nid, size) for size in node.cod]

    outputs = walk(d, inputs)
    for j, (src, size) in enumerate(outputs):
        oid = new_node(f'label="out{j}", shape=plaintext')
        edges.append(f'  {src} -> {oid} [label="{size}"];')
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
