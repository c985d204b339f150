import math

import pytest

from szx import (
    Cap,
    Cup,
    Divider,
    Gatherer,
    GreenSpider,
    Hadamard,
    Identity,
    MatrixBox,
    RedSpider,
    Swap,
    WireType,
)
from szx.diagram import (
    Par,
    Seq,
    compose,
    dagger,
    is_wiring,
    leaves,
    merge_many,
    permutation,
    replace_at,
    rewire,
    split_many,
    subterm,
    tensor,
    transpose,
)
from szx.errors import CompositionError, ParameterError
from szx.f2linalg import F2Matrix
from szx.semantics import equal_semantics, interpret


def test_wire_types():
    t = WireType((2, 3))
    assert t.size == 5
    assert t + WireType((1,)) == WireType((2, 3, 1))
    assert WireType.repeat(3, 2) == WireType((2, 2, 2))
    assert WireType(()).size == 0
    with pytest.raises(Exception):
        WireType((0,))


def test_generator_types():
    assert GreenSpider(2, 3, 2).dom == WireType((2, 2))
    assert GreenSpider(2, 3, 2).cod == WireType((2, 2, 2))
    assert Divider(2, 3).dom == WireType((5,)) and Divider(2, 3).cod == WireType((2, 3))
    assert Gatherer(2, 3).cod == WireType((5,))
    assert Swap(1, 2).cod == WireType((2, 1))
    assert Cup(2).dom == WireType(()) and Cap(2).dom == WireType((2, 2))
    box = MatrixBox(F2Matrix([[1, 0, 1], [0, 1, 1]]))
    assert box.dom == WireType((3,)) and box.cod == WireType((2,))
    assert MatrixBox(F2Matrix([[1, 0, 1], [0, 1, 1]]), forward=False).dom == WireType((2,))


def test_phase_vectors():
    assert GreenSpider(1, 1, 3, 0.5).phases == (0.5, 0.5, 0.5)
    assert RedSpider(1, 1, 2).phases == (0.0, 0.0)
    with pytest.raises(ParameterError):
        GreenSpider(1, 1, 2, (0.1,))
    with pytest.raises(ParameterError):
        GreenSpider(0, 0, 2)


def test_composition_type_checks():
    with pytest.raises(CompositionError):
        Hadamard(2) >> Hadamard(3)
    with pytest.raises(CompositionError):
        Identity(2) >> (Identity(1) @ Identity(1))
    d = Hadamard(2) >> Identity(2)
    assert isinstance(d, Seq) and isinstance(Hadamard(1) @ Hadamard(2), Par)


def test_split_merge_rewire():
    assert split_many([2, 3]) == Divider(2, 3)
    assert merge_many([2, 3]) == Gatherer(2, 3)
    assert split_many([1, 1, 1]).cod == WireType((1, 1, 1))
    w = rewire([2, 3], [1, 4])
    assert w.dom == WireType((2, 3)) and w.cod == WireType((1, 4))
    assert is_wiring(w)
    assert equal_semantics(w, rewire([2, 3], [5]) >> rewire([5], [1, 4]))


def test_permutation_moves_registers():
    p = permutation([2, 0, 1], WireType((1, 2, 3)))
    assert p.cod == WireType((3, 1, 2))
    # equal to a composite of two swaps
    assert equal_semantics(p, Identity(1) @ Swap(2, 3) >> Swap(1, 3) @ Identity(2))


def test_transpose_and_dagger():
    d = compose(GreenSpider(1, 2, 1, 0.3), Identity(1) @ MatrixBox(F2Matrix([[1, 1]]).T))
    t = transpose(d)
    assert t.dom == d.cod and t.cod == d.dom
    assert (abs(interpret(t).matrix - interpret(d).matrix.T) < 1e-12).all()
    assert (abs(interpret(dagger(d)).matrix - interpret(d).matrix.conj().T) < 1e-12).all()


def test_tree_paths():
    d = compose(Hadamard(1), GreenSpider(1, 1, 1, math.pi), Hadamard(1))
    paths = [p for p, _ in leaves(d)]
    assert len(paths) == 3
    p = paths[1]
    assert subterm(d, p) == GreenSpider(1, 1, 1, math.pi)
    d2 = replace_at(d, p, RedSpider(1, 1, 1, math.pi))
    assert equal_semantics(d2, compose(Hadamard(1), RedSpider(1, 1, 1, math.pi), Hadamard(1)))
    with pytest.raises(CompositionError):
        replace_at(d, p, Hadamard(2))


def test_tensor_of_nothing_is_empty():
    assert tensor().dom == WireType(()) and tensor().cod == WireType(())
