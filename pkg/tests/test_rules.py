import itertools
import math

import numpy as np
import pytest

import oracles
from szx import GreenSpider, Hadamard, MatrixBox, RedSpider
from szx import f2linalg as f2
from szx.diagram import leaves
from szx.errors import ParameterError
from szx.f2linalg import F2Matrix
from szx.rewrite import LIFTABLE, RULES, big_rule, euler_angles, expand_matrix, instantiate, sample_params
from szx.semantics import equal_semantics, interpret

TOL = 1e-9


@pytest.mark.parametrize("name", sorted(RULES))
def test_rule_is_sound_on_random_instances(name):
    rng = np.random.default_rng(sum(map(ord, name)))
    for _ in range(50):
        inst = instantiate(name, **sample_params(name, rng))
        assert equal_semantics(inst.lhs, inst.rhs, tol=TOL), (name, inst.params)


@pytest.mark.parametrize("name", LIFTABLE)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_big_rules(name, n):
    rng = np.random.default_rng(n)
    checked = 0
    while checked < 5:
        params = sample_params(name, rng)
        params.pop("n", None)
        params = _resize(name, params, n, rng)
        inst = big_rule(name, n, **params)
        if inst.lhs.dom.size + inst.lhs.cod.size > 18:
            continue
        checked += 1
        assert equal_semantics(inst.lhs, inst.rhs, tol=TOL, max_qubits=22)


def _resize(name, params, n, rng):
    """Re-sample per-qubit parameters for register size n."""
    for key in ("alpha", "beta", "alpha1", "alpha2"):
        if key in params:
            params[key] = list(rng.uniform(0, 2 * math.pi, n))
    if "bits" in params:
        params["bits"] = list(rng.integers(0, 2, n))
    return params


def test_only_plain_rules_lift():
    with pytest.raises(ParameterError):
        big_rule("E", 2)
    with pytest.raises(ParameterError):
        instantiate("nonsense")


def test_lifted_rule_uses_only_size_n_registers():
    inst = big_rule("b", 3)
    for side in (inst.lhs, inst.rhs):
        for _, leaf in leaves(side):
            assert set(leaf.dom.registers + leaf.cod.registers) <= {3}


@pytest.mark.parametrize("a1,a2", [(0, 0), (math.pi / 2, math.pi / 2), (math.pi / 2, -math.pi / 2),
                                   (math.pi, 0), (0.3, 2.9), (-1.0, 1.0)])
def test_euler_decomposition(a1, a2):
    e = euler_angles(a1, a2)
    lhs = oracles.green(1, 1, 1, [a2]) @ oracles.hadamard(1) @ oracles.green(1, 1, 1, [a1])
    rhs = np.exp(1j * e.gamma) * oracles.red(1, 1, 1, [e.beta3]) @ oracles.green(1, 1, 1, [e.beta2]) \
        @ oracles.red(1, 1, 1, [e.beta1])
    assert np.allclose(lhs, rhs, atol=TOL)
    inst = instantiate("e", n=1, alpha1=[a1], alpha2=[a2])
    assert equal_semantics(inst.lhs, inst.rhs)


def test_injective_and_surjective_rules_check_their_matrix():
    with pytest.raises(ParameterError):
        instantiate("I1", A="11")  # 1x2 is not injective
    with pytest.raises(ParameterError):
        instantiate("S1", A="1;1")  # 2x1 is not surjective
    # bypassing the check gives an unsound equation
    inst = instantiate("I1", A="11", check=False)
    assert not equal_semantics(inst.lhs, inst.rhs)


def test_injective_left_inverse_exhaustive():
    for m, n in [(2, 1), (2, 2), (3, 2)]:
        for bits in itertools.product((0, 1), repeat=m * n):
            a = F2Matrix([list(bits[i * n:(i + 1) * n]) for i in range(m)])
            inst = instantiate("I1", A=a.to_compact(), check=False)
            assert equal_semantics(inst.lhs, inst.rhs) == f2.is_injective(a)


def test_pi_push_through_matrix():
    # red pi on v before A equals red pi on Av after A: X^v then A is A then X^{Av}
    a = F2Matrix([[1, 1, 0], [0, 1, 1]])
    for v in itertools.product((0, 1), repeat=3):
        inst = instantiate("N", A=a.to_compact(), v=list(v))
        assert equal_semantics(inst.lhs, inst.rhs)
        av = a.to_numpy().astype(int) @ np.array(v) % 2
        pushed = oracles.red(1, 1, 2, list(av * math.pi)) @ oracles.matrix_box(a.to_numpy())
        assert np.allclose(interpret(inst.rhs).matrix, pushed) or np.allclose(interpret(inst.lhs).matrix, pushed)


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_expand_matrix_against_oracle(m, n):
    rng = np.random.default_rng(m * 7 + n)
    cases = [F2Matrix([list(b[i * n:(i + 1) * n]) for i in range(m)])
             for b in itertools.product((0, 1), repeat=m * n)] if m * n <= 6 else \
        [F2Matrix.random(rng, m, n) for _ in range(100)]
    for a in cases:
        got = interpret(expand_matrix(a)).matrix
        assert np.allclose(got, oracles.matrix_box(a.to_numpy()), atol=TOL)


def test_hadamard_rule_conjugates_colour():
    inst = instantiate("h", n=2, k=1, l=2, alpha=[0.1, 0.2], colour="green")
    assert equal_semantics(inst.lhs, inst.rhs)


def test_wire_elimination_and_expansion_orientation():
    from szx import Divider, Gatherer, Identity
    from szx.rewrite import same_structure

    e = instantiate("E", a=2, b=3)
    assert same_structure(e.lhs, Gatherer(2, 3) >> Divider(2, 3))
    assert same_structure(e.rhs, Identity(2) @ Identity(3))
    # divide-then-gather on 1_5 is the identity: rule P read right to left
    p = instantiate("P", a=2, b=3)
    assert same_structure(p.rhs, Divider(2, 3) >> Gatherer(2, 3))
    assert same_structure(p.lhs, Identity(5))
    assert equal_semantics(p.rhs, p.lhs) and equal_semantics(e.lhs, e.rhs)
