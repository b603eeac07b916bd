import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfexp.groups import IntWindow, WindowOverflow, s3
from hopfexp.hopf import (DualVector, FunctionElement, basis_vector, constant, convolve, counit_vector,
                          delta, haar_finite, haar_Z, pairing_matrix)

G = s3()
cplx = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)
vec6 = st.lists(cplx, min_size=6, max_size=6)


def brute_convolve(a, b, group):
    out = np.zeros(group.order, dtype=complex)
    for x, y in itertools.product(range(group.order), repeat=2):
        out[group.mul(x, y)] += a[x] * b[y]
    return out


def test_counit_is_unit():
    eps = counit_vector(G)
    beta = DualVector(G, np.arange(6) + 1j)
    assert np.allclose((eps * beta).coeffs, beta.coeffs)
    assert np.allclose((beta * eps).coeffs, beta.coeffs)
    assert np.array_equal((eps * eps).coeffs, eps.coeffs)


def test_counit_column_vector():
    assert np.array_equal(counit_vector(G).coeffs, [1, 0, 0, 0, 0, 0])
    W = IntWindow(5)
    z0 = counit_vector(W).coeffs
    assert z0[5] == 1 and np.count_nonzero(z0) == 1


def test_group_like_products():
    zu, zv = basis_vector(G, "u"), basis_vector(G, "v")
    assert np.array_equal((zu * zv).coeffs, basis_vector(G, "(1,3,2)").coeffs)
    assert np.array_equal((zu * zu).coeffs, counit_vector(G).coeffs)


@given(vec6, vec6)
def test_convolution_matches_brute_force(a, b):
    got = convolve(DualVector(G, a), DualVector(G, b)).coeffs
    assert np.allclose(got, brute_convolve(a, b, G), atol=1e-9)


@given(vec6, vec6, vec6)
def test_convolution_associative(a, b, c):
    A, B, C = (DualVector(G, v) for v in (a, b, c))
    lhs, rhs = ((A * B) * C).coeffs, (A * (B * C)).coeffs
    assert np.allclose(lhs, rhs, atol=1e-9 * (1 + np.abs(lhs).max()))


def test_convolution_associative_on_basis():
    for i, j, k in itertools.product(G.labels, repeat=3):
        A, B, C = (basis_vector(G, x) for x in (i, j, k))
        assert np.array_equal(((A * B) * C).coeffs, (A * (B * C)).coeffs)


@settings(max_examples=50)
@given(st.lists(cplx, min_size=5, max_size=5), st.lists(cplx, min_size=5, max_size=5))
def test_window_convolution_matches_brute_force(a, b):
    W = IntWindow(8)
    A = np.zeros(W.order, dtype=complex)
    B = np.zeros(W.order, dtype=complex)
    A[6:11], B[6:11] = a, b  # support in -2..2, product in -4..4
    got = convolve(DualVector(W, A), DualVector(W, B)).coeffs
    expect = np.zeros(W.order, dtype=complex)
    for i, j in itertools.product(range(W.order), repeat=2):
        n = W.value(i) + W.value(j)
        if abs(n) <= W.radius:
            expect[W.position(n)] += A[i] * B[j]
    assert np.allclose(got, expect, atol=1e-9)


def test_window_overflow_is_an_error():
    W = IntWindow(2)
    edge = basis_vector(W, 2)
    with pytest.raises(WindowOverflow):
        convolve(edge, edge)


def test_mismatched_groups():
    with pytest.raises(ValueError):
        convolve(counit_vector(G), counit_vector(s3()))


def test_haar_finite():
    assert haar_finite(constant(G)) == pytest.approx(1)
    for g in G.labels:
        assert haar_finite(delta(G, g)) == pytest.approx(1 / 6)
    f = FunctionElement(G, np.arange(6) * (1 + 2j))
    assert haar_finite(f.conj()) == pytest.approx(np.conj(haar_finite(f)))


def test_haar_Z():
    W = IntWindow(4)
    assert haar_Z(delta(W, -3)) == 1
    assert haar_Z(constant(W)) == 9
    f = FunctionElement(W, np.arange(9) * (1 - 1j))
    assert haar_Z(f.conj()) == pytest.approx(np.conj(haar_Z(f)))


def test_right_integral_property():
    # sum_{xy=g} phi(delta_x) delta_y == phi(delta_g) * 1
    for g in range(6):
        out = np.zeros(6, dtype=complex)
        for x, y in itertools.product(range(6), repeat=2):
            if G.mul(x, y) == g:
                out[y] += haar_finite(delta(G, G.labels[x]))
        assert np.allclose(out, haar_finite(delta(G, G.labels[g])) * np.ones(6))


def test_pairing_matrix_is_identity():
    assert np.array_equal(pairing_matrix(G), np.eye(6))


def test_delta_idempotents():
    for g, h in itertools.product(G.labels, repeat=2):
        prod = delta(G, g) * delta(G, h)
        expect = delta(G, g).values if g == h else np.zeros(6)
        assert np.array_equal(prod.values, expect)


def test_right_translate():
    f = FunctionElement(G, np.arange(6))
    u = G.index("u")
    Rf = f.right_translate(u)
    for g in range(6):
        assert Rf.values[g] == f.values[G.mul(g, u)]
    W = IntWindow(3)
    h = FunctionElement(W, np.arange(7) + 1)
    assert list(h.right_translate(W.position(1)).values.real) == [2, 3, 4, 5, 6, 7, 0]


def test_serialization_roundtrip():
    beta = DualVector(G, np.arange(6) * (0.5 - 1j))
    assert np.array_equal(DualVector.from_json(beta.to_json(), G).coeffs, beta.coeffs)
    assert np.array_equal(DualVector.from_csv(beta.to_csv(), G).coeffs, beta.coeffs)
    import json
    doc = json.loads(beta.to_json())
    assert doc["group"] == "S3" and doc["coeffs"][1] == [0.5, -1.0]
    with pytest.raises(ValueError):
        DualVector.from_json(beta.to_json(), IntWindow(2))


def test_length_checked():
    with pytest.raises(ValueError):
        DualVector(G, [1, 2, 3])
