import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from szx import parse, to_dsl
from szx.dsl import parse_angle, to_dot
from szx.errors import ParseError
from szx.sampling import random_diagram
from szx.semantics import equal_semantics


@pytest.mark.parametrize("text,value", [("pi", math.pi), ("pi/2", math.pi / 2), ("-3*pi/4", -3 * math.pi / 4),
                                        ("0.25", 0.25), ("0.5*pi", math.pi / 2)])
def test_angles(text, value):
    assert math.isclose(parse_angle(text), value)


def test_parse_example():
    d = parse("""
        # a Hadamard sandwich
        (seq (h 2) (seq (gz 1 1 2 pi/2 0) (h 2)))
    """)
    assert d.dom.registers == (2,) and d.cod.registers == (2,)
    assert d.second.first.phases == (math.pi / 2, 0.0)


def test_parse_matrix_box():
    d = parse('(mat FWD "101;011")')
    assert d.matrix.shape == (2, 3) and d.forward


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_round_trip(seed):
    d = random_diagram(np.random.default_rng(seed), max_qubits=8)
    back = parse(to_dsl(d))
    assert back.type == d.type
    assert equal_semantics(back, d)


@pytest.mark.parametrize("text,line,col", [
    ("(seq (h 1)\n  (frob 1))", 2, 4),
    ("(h 1", 1, 5),
    ("(seq (h 2) (h 1))", 1, 1),
    ("(h 1) extra", 1, 7),
])
def test_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == line
    assert info.value.column == col


def test_dot_export():
    out = to_dot(parse("(seq (div 1 1) (gath 1 1))"))
    assert out.startswith("digraph")
    assert "->" in out
