"""F2 matrices against plain numpy integer arithmetic mod 2."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from szx import f2linalg as f2
from szx.errors import ParseError, ShapeError
from szx.f2linalg import F2Matrix


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(st.integers(0, 1), min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]).map(F2Matrix)
    )


def all_matrices(m, n):
    for bits in itertools.product((0, 1), repeat=m * n):
        yield F2Matrix([list(bits[i * n:(i + 1) * n]) for i in range(m)])


def vectors(n):
    return [np.array(v, dtype=int) for v in itertools.product((0, 1), repeat=n)]


def image_size(a: F2Matrix) -> int:
    arr = a.to_numpy().astype(int)
    return len({tuple(arr @ x % 2) for x in vectors(a.cols)})


def kernel_size(a: F2Matrix) -> int:
    arr = a.to_numpy().astype(int)
    return sum(1 for x in vectors(a.cols) if not (arr @ x % 2).any())


def test_construction_and_shape():
    a = F2Matrix([[1, 0, 1], [0, 1, 1]])
    assert a.shape == (2, 3)
    assert a[0, 2] == 1 and a[1, 0] == 0
    assert a.tolist() == [[1, 0, 1], [0, 1, 1]]
    assert F2Matrix.identity(3) == F2Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert F2Matrix.zeros(2, 2).tolist() == [[0, 0], [0, 0]]
    assert F2Matrix.ones(1, 2).tolist() == [[1, 1]]


def test_rejects_bad_entries():
    with pytest.raises(Exception):
        F2Matrix([[1, 2]])
    with pytest.raises(Exception):
        F2Matrix([[1, 0], [1]])


def test_text_and_compact_round_trip():
    a = F2Matrix([[1, 0, 1], [0, 1, 1]])
    assert F2Matrix.from_text(a.to_text()) == a
    assert F2Matrix.from_compact(a.to_compact()) == a
    assert F2Matrix.from_compact("10;01") == F2Matrix.identity(2)


def test_from_text_reports_position():
    with pytest.raises(ParseError) as info:
        F2Matrix.from_text("10\n1x\n")
    assert (info.value.line, info.value.column) == (2, 2)
    with pytest.raises(ParseError, match="ragged"):
        F2Matrix.from_text("10\n101\n")


def test_known_products():
    a = F2Matrix([[1, 1], [0, 1]])
    assert a @ a == F2Matrix.identity(2)
    assert f2.add(a, a) == F2Matrix.zeros(2, 2)
    assert f2.rank(F2Matrix([[1, 1], [1, 1]])) == 1
    assert f2.apply_int(F2Matrix([[1, 1]]), 0b11) == 0


def test_shape_errors():
    with pytest.raises(ShapeError):
        f2.mul(F2Matrix.identity(2), F2Matrix.identity(3))
    with pytest.raises(ShapeError):
        f2.add(F2Matrix.identity(2), F2Matrix.ones(2, 3))
    with pytest.raises(ShapeError):
        f2.vstack(F2Matrix.identity(2), F2Matrix.ones(1, 3))
    with pytest.raises(ShapeError):
        f2.hstack(F2Matrix.identity(2), F2Matrix.ones(3, 1))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.data())
def test_mul_matches_numpy(m, n, k, data):
    a = data.draw(matrices(st.just(m), st.just(n)))
    b = data.draw(matrices(st.just(n), st.just(k)))
    expected = a.to_numpy().astype(int) @ b.to_numpy().astype(int) % 2
    assert (f2.mul(a, b).to_numpy() == expected).all()


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.data())
def test_associativity_and_distributivity(m, n, k, r, data):
    a = data.draw(matrices(st.just(m), st.just(n)))
    b = data.draw(matrices(st.just(n), st.just(k)))
    b2 = data.draw(matrices(st.just(n), st.just(k)))
    c = data.draw(matrices(st.just(k), st.just(r)))
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ (b + b2) == a @ b + a @ b2
    assert (b + b2) @ c == b @ c + b2 @ c
    assert b + b2 == b2 + b


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.data())
def test_transpose_is_anti_homomorphism(m, n, k, data):
    a = data.draw(matrices(st.just(m), st.just(n)))
    b = data.draw(matrices(st.just(n), st.just(k)))
    assert f2.transpose(a @ b) == f2.transpose(b) @ f2.transpose(a)
    assert f2.transpose(f2.transpose(a)) == a
    assert (f2.transpose(a).to_numpy() == a.to_numpy().T).all()


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_stacking(a, data):
    b = data.draw(matrices(st.integers(1, 3), st.just(a.cols)))
    c = data.draw(matrices(st.just(a.rows), st.integers(1, 3)))
    assert (f2.vstack(a, b).to_numpy() == np.vstack([a.to_numpy(), b.to_numpy()])).all()
    assert (f2.hstack(a, c).to_numpy() == np.hstack([a.to_numpy(), c.to_numpy()])).all()


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_apply_matches_numpy(a):
    arr = a.to_numpy().astype(int)
    for x in vectors(a.cols):
        got = f2.apply(a, f2.column(list(x))).column_bits()
        assert tuple(got) == tuple(arr @ x % 2)
    assert f2.popcount(a) == int(arr.sum())


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5) if m * n <= 12])
def test_rank_injective_surjective_exhaustive(m, n):
    """Rank, injectivity and surjectivity against brute-force kernel and image
    enumeration, for every matrix of the given shape (random sample when large)."""
    if m * n <= 9:
        cases = list(all_matrices(m, n))
    else:
        rng = np.random.default_rng(m * 10 + n)
        cases = [F2Matrix.random(rng, m, n) for _ in range(300)]
    for a in cases:
        img, ker = image_size(a), kernel_size(a)
        assert 2 ** f2.rank(a) == img
        assert img * ker == 2 ** n  # rank-nullity
        assert f2.is_injective(a) == (ker == 1)
        assert f2.is_surjective(a) == (img == 2 ** m)
        assert f2.rank(a) == f2.rank(f2.transpose(a))


def test_exhaustive_four_by_four_sample():
    rng = np.random.default_rng(4)
    for _ in range(500):
        a = F2Matrix.random(rng, 4, 4)
        assert 2 ** f2.rank(a) == image_size(a)
        assert f2.is_injective(a) == (kernel_size(a) == 1) == f2.is_surjective(a)
