import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfexp.calculus import (GroupCalculus, InvariantVectorField, UnsupportedCalculus,
                              calculus_from_config, divergence_check, exterior_derivative,
                              field_on_window, integer_calculus, is_real, omega_delta, x_circ_omega)
from hopfexp.groups import s3
from hopfexp.hopf import FunctionElement, delta

G = s3()
CAL = GroupCalculus.from_labels(G, ["u", "v", "w"])
cplx = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)
reals = st.floats(-5, 5, allow_nan=False)


def field(xu, xv, xw):
    return InvariantVectorField.from_mapping(CAL, {"u": xu, "v": xv, "w": xw})


def test_construction_rules():
    with pytest.raises(ValueError):
        GroupCalculus.from_labels(G, ["e", "u"])
    with pytest.raises(ValueError):
        GroupCalculus.from_labels(G, ["u", "u"])
    assert CAL.star_closed
    assert not GroupCalculus.from_labels(G, ["(1,2,3)"]).star_closed
    assert calculus_from_config({"group": "S3", "cset": ["u", "v", "w"]}).cset == CAL.cset


def test_omega_at_identity():
    assert omega_delta(CAL, 0) == {a: 1.0 for a in CAL.cset}


def test_omega_at_u():
    u = G.index("u")
    w = omega_delta(CAL, u)
    assert w[u] == -1.0 and sum(abs(x) for x in w.values()) == 1.0


def test_omega_at_three_cycle():
    assert all(x == 0 for x in omega_delta(CAL, 1).values())


def test_omega_sums_to_zero():
    total = {a: 0.0 for a in CAL.cset}
    for g in range(6):
        for a, x in omega_delta(CAL, g).items():
            total[a] += x
    assert all(x == 0 for x in total.values())


def test_x_circ_omega_zero_field():
    assert np.array_equal(x_circ_omega(field(0, 0, 0)).coeffs, np.zeros(6))


def test_x_circ_omega_single_direction():
    v = x_circ_omega(field(1j, 0, 0))
    assert v["e"] == 1j and v["u"] == -1j
    assert np.count_nonzero(v.coeffs) == 2


def test_x_circ_omega_matches_omega_delta():
    X = field(0.3, -1j, 2 + 1j)
    v = x_circ_omega(X)
    for g in range(6):
        w = omega_delta(CAL, g)
        assert v.coeffs[g] == pytest.approx(sum(X.coeffs[k] * w[a] for k, a in enumerate(CAL.cset)))


def test_x_circ_omega_on_integers():
    X = field_on_window(2 + 1j, -0.5, 5)
    v = x_circ_omega(X).coeffs
    W = X.calculus.group
    assert v[W.position(0)] == 1.5 + 1j
    assert v[W.position(1)] == 0.5
    assert v[W.position(-1)] == -(2 + 1j)


@given(cplx, cplx, cplx, cplx, cplx, cplx)
def test_x_circ_omega_linear(a, b, c, d, e, f):
    X, Y = field(a, b, c), field(d, e, f)
    lhs = x_circ_omega(X + 2 * Y).coeffs
    rhs = x_circ_omega(X).coeffs + 2 * x_circ_omega(Y).coeffs
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_reality():
    assert is_real(field(1j, 2j, -0.5j))
    assert not is_real(field(1, 0, 0))
    assert is_real(field_on_window(1, -1, 4))
    assert not is_real(field_on_window(-1, -1, 4))
    assert is_real(field_on_window(1 + 2j, -1 + 2j, 4))
    odd = GroupCalculus.from_labels(G, ["(1,2,3)"])
    with pytest.raises(UnsupportedCalculus):
        is_real(InvariantVectorField(odd, [1j]))


@given(reals, reals, reals)
def test_real_field_gives_antihermitian_vector(p, q, r):
    v = x_circ_omega(field(1j * p, 1j * q, 1j * r)).coeffs
    for g in range(6):
        assert np.conj(v[g]) == pytest.approx(-v[G.inv(g)], abs=1e-12)


def test_divergence_zero_field():
    assert divergence_check(field(0, 0, 0)) == 0


def test_divergence_random_fields():
    rng = np.random.default_rng(7)
    for _ in range(100):
        X = field(*(rng.normal(size=3) + 1j * rng.normal(size=3)))
        assert divergence_check(X) < 1e-12


def test_exterior_derivative_components():
    f = FunctionElement(G, np.arange(6.0))
    df = exterior_derivative(CAL, f)
    for a in CAL.cset:
        for g in range(6):
            assert df[a].values[g] == f.values[G.mul(g, a)] - f.values[g]


def test_field_on_df_is_coproduct_formula():
    # X(d delta_g) = (X o omega)(delta_y) delta_x summed over xy = g
    X = field(0.7 - 1j, 2j, -1.3)
    v = x_circ_omega(X).coeffs
    for g in range(6):
        expect = np.zeros(6, dtype=complex)
        for x in range(6):
            expect[x] += v[G.mul(G.inv(x), g)]
        assert np.allclose(X.apply_d(delta(G, G.labels[g])).values, expect, atol=1e-14)


def test_integer_calculus():
    cal = integer_calculus(3)
    assert cal.star_closed and cal.labels == ["1", "-1"]
