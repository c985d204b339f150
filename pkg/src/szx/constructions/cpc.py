"""Tripartite coherent-parity-check codes.

A code is given by ``B`` (a x b), ``P`` (c x b) and ``C`` (c x a).  The
encoder sends a ``b``-qubit data register ``|y>`` to

    2**(-c/2) * sum_z |B y + C^t z> |y + P^t z> |z>

on registers ``a + b + c``: the parity register ``a`` holds ``B y``, and a
uniformly superposed check register ``c`` is fanned into both ``a`` and ``b``
through ``C^t`` and ``P^t``.  The decoder is the transpose (equivalently the
adjoint, everything being real) of the encoder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .. import f2linalg as f2
from ..diagram import (
    Diagram,
    GreenSpider,
    Identity,
    MatrixBox,
    RedSpider,
    Swap,
    compose,
    inv_root2,
    root2,
    tensor,
    transpose,
)
from ..errors import ParameterError
from ..f2linalg import F2Matrix

__all__ = [
    "CpcCode",
    "cpc_encoder",
    "cpc_decoder",
    "cpc_error_equation",
    "phase_syndrome",
    "bit_syndrome",
]


@dataclass(frozen=True)
class CpcCode:
    B: F2Matrix
    P: F2Matrix
    C: F2Matrix

    def __post_init__(self):
        for name in ("B", "P", "C"):
            value = getattr(self, name)
            if not isinstance(value, F2Matrix):
                value = F2Matrix.from_compact(value) if isinstance(value, str) else F2Matrix(value)
                object.__setattr__(self, name, value)
        a, b = self.B.shape
        if self.P.cols != b:
            raise ParameterError(f"P must have {b} columns (like B), got shape {self.P.shape}")
        c = self.P.rows
        if self.C.shape != (c, a):
            raise ParameterError(f"C must have shape ({c}, {a}), got {self.C.shape}")

    @property
    def a(self) -> int:
        return self.B.rows

    @property
    def b(self) -> int:
        return self.B.cols

    @property
    def c(self) -> int:
        return self.P.rows

    @classmethod
    def random(cls, rng, a: int, b: int, c: int, p: float = 0.5) -> "CpcCode":
        return cls(F2Matrix.random(rng, a, b, p), F2Matrix.random(rng, c, b, p), F2Matrix.random(rng, c, a, p))


def cpc_encoder(code: CpcCode) -> Diagram:
    a, b, c = code.a, code.b, code.c
    body = compose(
        GreenSpider(1, 2, b) @ GreenSpider(0, 3, c),
        tensor(MatrixBox(code.B), Identity(b), MatrixBox(code.C.T), MatrixBox(code.P.T), Identity(c)),
        tensor(Identity(a), Swap(b, a), Identity(b), Identity(c)),
        tensor(RedSpider(2, 1, a), RedSpider(2, 1, b), Identity(c)),
    )
    return tensor(body, root2(a + b), inv_root2(c))


def cpc_decoder(code: CpcCode) -> Diagram:
    return transpose(cpc_encoder(code))


def _vector(name: str, v, n: int) -> F2Matrix:
    bits = [int(x) for x in v]
    if len(bits) != n or any(x not in (0, 1) for x in bits):
        raise ParameterError(f"{name} must be {n} bits, got {list(v)!r}")
    return f2.column(bits)


def phase_syndrome(code: CpcCode, x, y, z) -> tuple[int, ...]:
    """``z + C x + P y``: the check-register syndrome of phase errors."""
    x, y, z = _vector("x", x, code.a), _vector("y", y, code.b), _vector("z", z, code.c)
    return (z + code.C @ x + code.P @ y).column_bits()


def bit_syndrome(code: CpcCode, x, y, z) -> tuple[int, ...]:
    """``x + B y + C^t z + B P^t z``: the parity-register syndrome of bit flips."""
    x, y, z = _vector("x'", x, code.a), _vector("y'", y, code.b), _vector("z'", z, code.c)
    return (x + code.B @ y + code.C.T @ z + code.B @ (code.P.T @ z)).column_bits()


def _pi(bits) -> tuple[float, ...]:
    return tuple(math.pi * int(b) for b in bits)


def cpc_error_equation(code: CpcCode, phase_errors=None, bit_errors=None) -> tuple[Diagram, Diagram]:
    """Both sides of the error-propagation equality for one kind of error.

    Phase errors ``(x, y, z)`` pass through the code as a phase on the data
    and a zero test on the syndrome ``z + Cx + Py``; bit errors
    ``(x', y', z')`` become a bit flip on the data and a zero test on
    ``x' + By' + C^t z' + BP^t z'``.  The zero test on a syndrome ``s`` of
    length ``k`` is the legless spider of angles ``s*pi`` scaled by
    ``2**-k``.
    """
    if (phase_errors is None) == (bit_errors is None):
        raise ParameterError("give exactly one of phase_errors or bit_errors")
    a, b, c = code.a, code.b, code.c
    enc, dec = cpc_encoder(code), cpc_decoder(code)
    if phase_errors is not None:
        x, y, z = phase_errors
        s = phase_syndrome(code, x, y, z)
        flips = f2.column([int(t) for t in y]) + code.B.T @ _vector("x", x, a)
        errors = tensor(GreenSpider(1, 1, a, _pi(x)), GreenSpider(1, 1, b, _pi(y)), GreenSpider(1, 1, c, _pi(z)))
        rhs = tensor(GreenSpider(1, 1, b, _pi(flips.column_bits())), GreenSpider(0, 0, c, _pi(s)), inv_root2(2 * c))
    else:
        x, y, z = bit_errors
        s = bit_syndrome(code, x, y, z)
        flips = f2.column([int(t) for t in y]) + code.P.T @ _vector("z'", z, c)
        errors = tensor(RedSpider(1, 1, a, _pi(x)), RedSpider(1, 1, b, _pi(y)), RedSpider(1, 1, c, _pi(z)))
        rhs = tensor(RedSpider(1, 1, b, _pi(flips.column_bits())), GreenSpider(0, 0, a, _pi(s)), inv_root2(2 * a))
    return compose(enc, errors, dec), rhs
