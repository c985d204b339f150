import numpy as np
import pytest

import oracles
from szx import Identity
from szx.constructions import (
    CpcCode,
    bit_syndrome,
    cpc_decoder,
    cpc_encoder,
    cpc_error_equation,
    phase_syndrome,
)
from szx.diagram import compose
from szx.errors import ParameterError
from szx.semantics import equal_semantics, interpret

TOL = 1e-9
Q = 20


def random_code(rng, total=8):
    while True:
        a, b, c = (int(x) for x in rng.integers(1, 4, size=3))
        if a + b + c <= total:
            return CpcCode.random(rng, a, b, c)


def bits(rng, n):
    return [int(x) for x in rng.integers(0, 2, n)]


def paulis(p, x, y, z):
    return oracles.kron(*(p if t else np.eye(2) for t in list(x) + list(y) + list(z)))


def test_shape_validation():
    with pytest.raises(ParameterError):
        CpcCode("11", "1", "1")  # P needs two columns like B


def test_encoder_is_an_isometry_and_decoder_inverts_it():
    rng = np.random.default_rng(1)
    for _ in range(15):
        code = random_code(rng)
        e = interpret(cpc_encoder(code), Q).matrix
        assert np.allclose(e.conj().T @ e, np.eye(2**code.b), atol=TOL)
        assert equal_semantics(compose(cpc_encoder(code), cpc_decoder(code)), Identity(code.b), TOL, Q)


def test_syndromes_match_numpy():
    rng = np.random.default_rng(2)
    for _ in range(30):
        code = random_code(rng)
        B, P, C = (m.to_numpy().astype(int) for m in (code.B, code.P, code.C))
        x, y, z = bits(rng, code.a), bits(rng, code.b), bits(rng, code.c)
        assert list(phase_syndrome(code, x, y, z)) == list((np.array(z) + C @ x + P @ y) % 2)
        assert list(bit_syndrome(code, x, y, z)) == list((np.array(x) + B @ y + C.T @ z + B @ P.T @ z) % 2)


def test_error_propagation_against_matrix_oracle():
    """D (errors) E computed from raw matrices: the syndrome decides whether
    the data survives, and the residual error is a Pauli on the data."""
    rng = np.random.default_rng(3)
    for _ in range(15):
        code = random_code(rng, total=7)
        B, P = code.B.to_numpy().astype(int), code.P.to_numpy().astype(int)
        e = interpret(cpc_encoder(code), Q).matrix
        x, y, z = bits(rng, code.a), bits(rng, code.b), bits(rng, code.c)
        # phase errors
        got = e.conj().T @ paulis(oracles.Z, x, y, z) @ e
        s = phase_syndrome(code, x, y, z)
        flips = (np.array(y) + B.T @ x) % 2
        expected = (not any(s)) * paulis(oracles.Z, [], flips, [])
        assert np.allclose(got, expected, atol=TOL)
        lhs, rhs = cpc_error_equation(code, phase_errors=(x, y, z))
        assert equal_semantics(lhs, rhs, TOL, Q)
        # bit errors
        got = e.conj().T @ paulis(oracles.X, x, y, z) @ e
        s = bit_syndrome(code, x, y, z)
        flips = (np.array(y) + P.T @ z) % 2
        expected = (not any(s)) * paulis(oracles.X, [], flips, [])
        assert np.allclose(got, expected, atol=TOL)
        lhs, rhs = cpc_error_equation(code, bit_errors=(x, y, z))
        assert equal_semantics(lhs, rhs, TOL, Q)


def test_error_equation_arguments():
    code = CpcCode("1", "1", "1")
    with pytest.raises(ParameterError):
        cpc_error_equation(code)
    with pytest.raises(ParameterError):
        cpc_error_equation(code, phase_errors=([1, 0], [0], [0]))
