import numpy as np
import pytest

from szx import Divider, EmptyScalar, Gatherer, GreenSpider, Hadamard, Identity, MatrixBox, WireType
from szx.diagram import leaves, rewire
from szx.errors import ComparisonError
from szx.f2linalg import F2Matrix
from szx.rewrite import decide_equal, is_small, to_expanded_form
from szx.sampling import mutate, random_diagram, random_rewrites
from szx.semantics import equal_semantics


def assert_expanded(d):
    form = to_expanded_form(d)
    assert is_small(form.core)
    for _, g in leaves(form.core):
        assert all(s == 1 for s in g.dom.registers + g.cod.registers)
    assert all(isinstance(g, (Divider, Identity, EmptyScalar)) for _, g in leaves(form.delta))
    assert all(isinstance(g, (Gatherer, Identity, EmptyScalar)) for _, g in leaves(form.gamma))
    assert form.delta.cod == WireType((1,) * d.dom.size)
    assert form.gamma.dom == WireType((1,) * d.cod.size)
    assert equal_semantics(form.recompose(), d)
    measures = [form.log[0].measure_before] + [s.measure_after for s in form.log] if form.log else [0]
    assert all(a > b for a, b in zip(measures, measures[1:]))
    assert measures[-1] == 0
    return form


def test_simple_expansions():
    assert_expanded(Hadamard(3))
    assert_expanded(GreenSpider(2, 1, 2, (0.3, 0.4)))
    assert_expanded(MatrixBox(F2Matrix([[1, 1, 0], [0, 1, 1]])))
    assert_expanded(rewire([2, 3], [1, 4]))


def test_unpacking_order():
    gamma, core, delta = to_expanded_form(Hadamard(2))
    assert delta.dom == WireType((2,)) and gamma.cod == WireType((2,))


def test_random_diagrams_normalise():
    rng = np.random.default_rng(11)
    for _ in range(60):
        assert_expanded(random_diagram(rng, max_qubits=10))


def test_decider_on_rewrites_and_mutations():
    rng = np.random.default_rng(12)
    for _ in range(40):
        d = random_diagram(rng, max_qubits=8)
        d2, _ = random_rewrites(d, rng, int(rng.integers(1, 11)))
        assert decide_equal(d, d2)
        m = mutate(d, rng)
        assert decide_equal(d, m) == equal_semantics(d, m)


def test_decider_distinguishes():
    assert not decide_equal(Hadamard(2), Identity(2))
    assert decide_equal(Divider(1, 2) >> Gatherer(1, 2), Identity(3))
    with pytest.raises(ComparisonError):
        decide_equal(Hadamard(2), Hadamard(1))
