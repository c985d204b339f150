"""Command-line front end.

Exit status: 0 on success or "equal", 1 on "not equal" or a failed check,
2 on usage, parse or type errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .constructions import (
    CpcCode,
    Graph,
    bipartite_graph_state,
    cpc_decoder,
    cpc_encoder,
    cpc_error_equation,
    graph_state_box,
    parse_graph,
)
from .constructions.cpc import bit_syndrome, phase_syndrome
from .constructions.graphstates import _regroup
from .diagram import Identity, compose, dagger
from .dsl import parse, to_dot, to_dsl
from .errors import (
    ComparisonError,
    CompositionError,
    MatchError,
    ParameterError,
    ParseError,
    ResourceError,
    SZXError,
)
from .f2linalg import F2Matrix
from .rewrite import decide_equal, parse_trace, replay, to_expanded_form
from .semantics import equal_semantics, interpret

__all__ = ["main", "build_parser"]


class _Failure(Exception):
    """Usage-level error: message goes to stderr, exit status 2."""


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Failure(f"{path}: {exc.strerror}") from None


def _load_diagram(path: str):
    try:
        return parse(_read(path))
    except ParseError as exc:
        raise _Failure(f"{path}: {exc}") from None


def _load_matrix(path: str) -> F2Matrix:
    try:
        return F2Matrix.from_text(_read(path))
    except ParseError as exc:
        raise _Failure(f"{path}: {exc}") from None


def _format_matrix(m: np.ndarray) -> str:
    def cell(z: complex) -> str:
        re, im = round(z.real, 10) + 0.0, round(z.imag, 10) + 0.0
        if im == 0:
            return f"{re:.6g}"
        return f"{re:.6g}{im:+.6g}j"

    return "\n".join("  ".join(cell(z) for z in row) for row in m)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_interpret(args) -> int:
    d = _load_diagram(args.file)
    value = interpret(d, args.max_qubits)
    text = f"{d.dom} -> {d.cod}\n{_format_matrix(value.matrix)}"
    _emit(args, value.to_json_obj(), text)
    return 0


def _cmd_check_equal(args) -> int:
    d1, d2 = _load_diagram(args.file1), _load_diagram(args.file2)
    if args.method == "semantic":
        equal = equal_semantics(d1, d2, args.tol, args.max_qubits)
    else:
        equal = decide_equal(d1, d2, args.tol, args.max_qubits)
    _emit(args, {"equal": equal, "method": args.method}, "equal" if equal else "not equal")
    return 0 if equal else 1


def _cmd_normalize(args) -> int:
    d = _load_diagram(args.file)
    form = to_expanded_form(d)
    payload = {
        "delta": to_dsl(form.delta),
        "core": to_dsl(form.core),
        "gamma": to_dsl(form.gamma),
        "steps": [str(s) for s in form.log],
    }
    if args.check:
        payload["sound"] = equal_semantics(d, form.recompose(), args.tol, args.max_qubits)
    text = "\n".join(
        [f"delta: {payload['delta']}", f"core: {payload['core']}", f"gamma: {payload['gamma']}"]
        + [f"# {s}" for s in payload["steps"]]
        + ([f"sound: {payload['sound']}"] if args.check else [])
    )
    _emit(args, payload, text)
    return 0 if payload.get("sound", True) else 1


def _cmd_rewrite(args) -> int:
    d = _load_diagram(args.file)
    script = args.script
    try:
        steps = parse_trace(_read(script))
    except ParseError as exc:
        raise _Failure(f"{script}: {exc}") from None
    try:
        result = replay(d, steps)
    except (MatchError, ParameterError) as exc:
        raise _Failure(f"{script}: {exc}") from None
    payload = {"result": to_dsl(result), "steps": len(steps)}
    if args.check:
        payload["sound"] = equal_semantics(d, result, args.tol, args.max_qubits)
    text = payload["result"] + (f"\n# sound: {payload['sound']}" if args.check else "")
    _emit(args, payload, text)
    return 0 if payload.get("sound", True) else 1


def _two_colouring(g: Graph) -> list[int]:
    colour = [-1] * g.order
    for start in range(g.order):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.neighbours(u):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    stack.append(v)
                elif colour[v] == colour[u]:
                    raise _Failure("graph is not bipartite")
    return colour


def _bipartite_state(g: Graph):
    colour = _two_colouring(g)
    cols = [v for v in range(g.order) if colour[v] == 0]
    rows = [v for v in range(g.order) if colour[v] == 1]
    if not rows:
        # an edgeless graph: give the last vertex the other side
        cols, rows = cols[:-1], cols[-1:]
        if not cols:
            raise _Failure("the bipartite construction needs at least two vertices")
    gamma = F2Matrix([[int(g.has_edge(r, c)) for c in cols] for r in rows])
    state = bipartite_graph_state(gamma)
    current = cols + rows
    return compose(state, _regroup([g.order], [current.index(v) for v in range(g.order)], [g.order]))


def _cz_oracle(g: Graph) -> np.ndarray:
    n = g.order
    x = np.arange(2**n)
    bits = (x[:, None] >> np.arange(n - 1, -1, -1)[None, :]) & 1
    parity = np.zeros(2**n, dtype=int)
    for u, v in g.edge_list():
        parity ^= bits[:, u] & bits[:, v]
    return (1 - 2 * parity) / 2 ** (n / 2)


def _cmd_graphstate(args) -> int:
    try:
        g = parse_graph(_read(args.graph))
    except ParseError as exc:
        raise _Failure(f"{args.graph}: {exc}") from None
    d = _bipartite_state(g) if args.bipartite else graph_state_box(g)
    state = interpret(d, args.max_qubits).matrix[:, 0]
    ok = bool(np.max(np.abs(state - _cz_oracle(g))) <= args.tol)
    payload = {
        "construction": "bipartite" if args.bipartite else "inductive",
        "order": g.order,
        "diagram": to_dsl(d),
        "state": [[float(z.real), float(z.imag)] for z in state],
        "matches_cz_oracle": ok,
    }
    text = "\n".join(
        [f"# {payload['construction']} graph state on {g.order} qubits", payload["diagram"]]
        + [f"{i:0{g.order}b}  {z.real:+.6f}" for i, z in enumerate(state)]
        + [f"matches CZ oracle: {ok}"]
    )
    _emit(args, payload, text)
    return 0 if ok else 1


def _parse_errors(text: str, code: CpcCode):
    parts = text.split(",")
    if len(parts) != 3:
        raise _Failure("errors must be three bit strings separated by commas, e.g. 10,0,1")
    vectors = []
    for part, size, name in zip(parts, (code.a, code.b, code.c), "xyz"):
        if len(part) != size or any(ch not in "01" for ch in part):
            raise _Failure(f"error vector {name} must be {size} bits, got {part!r}")
        vectors.append([int(ch) for ch in part])
    return vectors


def _cmd_cpc(args) -> int:
    try:
        code = CpcCode(_load_matrix(args.B), _load_matrix(args.P), _load_matrix(args.C))
    except ParameterError as exc:
        raise _Failure(str(exc)) from None
    payload = {"a": code.a, "b": code.b, "c": code.c}
    lines = [f"code with a={code.a}, b={code.b}, c={code.c}"]
    ok = True
    if args.verify_isometry:
        enc = cpc_encoder(code)
        m = interpret(enc, args.max_qubits).matrix
        iso = bool(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[1]))) <= args.tol)
        inverse = equal_semantics(compose(enc, cpc_decoder(code)), Identity(code.b), args.tol, args.max_qubits)
        adjoint = equal_semantics(cpc_decoder(code), dagger(enc), args.tol, args.max_qubits)
        payload.update(isometry=iso, decoder_inverts=inverse, decoder_is_adjoint=adjoint)
        lines += [f"isometry: {iso}", f"D o E = id: {inverse}", f"D = E^dagger: {adjoint}"]
        ok = iso and inverse and adjoint
    for flag, kind in ((args.error, "phase"), (args.bit_error, "bit")):
        if flag is None:
            continue
        x, y, z = _parse_errors(flag, code)
        if kind == "phase":
            lhs, rhs = cpc_error_equation(code, phase_errors=(x, y, z))
            syndrome = phase_syndrome(code, x, y, z)
        else:
            lhs, rhs = cpc_error_equation(code, bit_errors=(x, y, z))
            syndrome = bit_syndrome(code, x, y, z)
        holds = equal_semantics(lhs, rhs, args.tol, args.max_qubits)
        s = "".join(map(str, syndrome))
        payload[f"{kind}_syndrome"] = s
        payload[f"{kind}_equation_holds"] = holds
        lines += [f"{kind} syndrome: {s}", f"{kind} error equation holds: {holds}"]
        ok = ok and holds
    if not (args.verify_isometry or args.error or args.bit_error):
        raise _Failure("cpc needs --verify-isometry, --error or --bit-error")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def _cmd_export_dot(args) -> int:
    d = _load_diagram(args.file)
    sys.stdout.write(to_dot(d))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="szx", description="Scalable ZX diagrams from the command line.")
    p.add_argument("--tol", type=float, default=1e-9, help="absolute tolerance for matrix comparisons")
    p.add_argument("--max-qubits", type=int, default=14, help="qubit cap for dense interpretation")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("interpret", help="print the matrix of a diagram")
    s.add_argument("file")
    s.set_defaults(func=_cmd_interpret)

    s = sub.add_parser("check-equal", help="decide whether two diagrams are equal")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--method", choices=("normalize", "semantic"), default="normalize")
    s.set_defaults(func=_cmd_check_equal)

    s = sub.add_parser("normalize", help="print the expanded form of a diagram")
    s.add_argument("file")
    s.add_argument("--check", action="store_true", help="also verify the expanded form semantically")
    s.set_defaults(func=_cmd_normalize)

    s = sub.add_parser("rewrite", help="replay a derivation trace on a diagram")
    s.add_argument("file")
    s.add_argument("--script", required=True)
    s.add_argument("--check", action="store_true", help="verify the result against the input")
    s.set_defaults(func=_cmd_rewrite)

    s = sub.add_parser("graphstate", help="build a graph state from a graph file")
    s.add_argument("graph")
    kind = s.add_mutually_exclusive_group(required=True)
    kind.add_argument("--bipartite", action="store_true")
    kind.add_argument("--inductive", action="store_true")
    s.set_defaults(func=_cmd_graphstate)

    s = sub.add_parser("cpc", help="check a CPC code given matrix files B, P, C")
    s.add_argument("B")
    s.add_argument("P")
    s.add_argument("C")
    s.add_argument("--verify-isometry", action="store_true")
    s.add_argument("--error", metavar="x,y,z", help="phase errors as bit strings")
    s.add_argument("--bit-error", metavar="x,y,z", help="bit-flip errors as bit strings")
    s.set_defaults(func=_cmd_cpc)

    s = sub.add_parser("export-dot", help="print Graphviz source for a diagram")
    s.add_argument("file")
    s.set_defaults(func=_cmd_export_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        return args.func(args)
    except _Failure as exc:
        print(f"szx: {exc}", file=sys.stderr)
        return 2
    except (ComparisonError, CompositionError) as exc:
        print(f"szx: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"szx: {exc} (raise --max-qubits)", file=sys.stderr)
        return 2
    except SZXError as exc:
        print(f"szx: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
