import itertools
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfexp import sweedler as sw
from hopfexp.sweedler import SweedlerDual as D, SweedlerElement as E

ONE, T, X, TX = (E.basis(n) for n in sw.BASIS)
cplx = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


def close(x, y, tol=1e-12):
    return np.abs(np.asarray(x) - np.asarray(y)).max() <= tol


def star_form(forms):
    """``(sum f_i e_i)* = -sum e_i f_i*`` rewritten with coefficients on the left."""
    # e_i letter = sum c letter e_j, from e_t t = -t e_t, e_x t = t e_x, e_x x = x e_x,
    # e_t x = -x e_t - 2 e_x
    push = {("t", "t"): [(-1, "t", "t")], ("x", "t"): [(1, "t", "x")],
            ("x", "x"): [(1, "x", "x")], ("t", "x"): [(-1, "x", "t"), (-2, None, "x")]}
    out = {"t": E(np.zeros(4)), "x": E(np.zeros(4))}
    for form, f in forms.items():
        g = sw.star(f)
        for k, word in enumerate(sw._WORDS):
            if g.coeffs[k] == 0:
                continue
            acc = [(-g.coeffs[k], ONE, form)]  # coefficient, left factor, form
            for letter in word:
                new = []
                for c, left, e in acc:
                    for c2, lt, e2 in push[(e, letter)]:
                        new.append((c * c2, left * E.basis(lt) if lt else left, e2))
                acc = new
            for c, left, e in acc:
                out[e] = out[e] + c * left
    return out


# -- algebra -------------------------------------------------------------------------

def test_relations():
    assert close((T * T).coeffs, ONE.coeffs)
    assert close((X * X).coeffs, 0)
    assert close((X * T).coeffs, (-TX).coeffs)
    assert close((TX * TX).coeffs, 0)


def test_structure_constants_associative():
    M = sw.structure_constants()
    lhs = np.einsum("ijm,mkn->ijkn", M, M)
    rhs = np.einsum("jkm,imn->ijkn", M, M)
    assert np.array_equal(lhs, rhs)


def test_coproduct_on_basis():
    expect = {
        "1": {("1", "1"): 1}, "t": {("t", "t"): 1},
        "x": {("x", "t"): 1, ("1", "x"): 1}, "tx": {("tx", "1"): 1, ("t", "tx"): 1},
    }
    for name, terms in expect.items():
        M = sw.coproduct(E.basis(name))
        want = np.zeros((4, 4))
        for (l, r), c in terms.items():
            want[sw.BASIS.index(l), sw.BASIS.index(r)] = c
        assert np.array_equal(M, want)


def test_coproduct_algebra_map_and_coassociative():
    C = sw.coproduct_tensor()
    M = sw.structure_constants()
    for i, j in itertools.product(range(4), repeat=2):
        prod = sum(M[i, j, k] * C[k] for k in range(4))
        tens = np.einsum("ab,cd,ace,bdf->ef", C[i], C[j], M, M)
        assert np.array_equal(prod, tens)
    left = np.einsum("kij,iab->kabj", C, C)
    right = np.einsum("kij,jab->kiab", C, C)
    assert np.array_equal(left, right)


def test_counit_axioms():
    for name in sw.BASIS:
        M = sw.coproduct(E.basis(name))
        assert np.array_equal(sw.COUNIT @ M, E.basis(name).coeffs)
        assert np.array_equal(M @ sw.COUNIT, E.basis(name).coeffs)


def test_antipode_axiom():
    for name in sw.BASIS:
        h = E.basis(name)
        M = sw.coproduct(h)
        left = sum((M[i, j] * (sw.antipode(E.basis(sw.BASIS[i])) * E.basis(sw.BASIS[j])))
                   for i in range(4) for j in range(4) if M[i, j])
        right = sum((M[i, j] * (E.basis(sw.BASIS[i]) * sw.antipode(E.basis(sw.BASIS[j]))))
                    for i in range(4) for j in range(4) if M[i, j])
        target = sw.counit(h) * ONE.coeffs
        assert close(left.coeffs, target) and close(right.coeffs, target)


def test_star_involution():
    for name in sw.BASIS:
        h = (1 + 2j) * E.basis(name)
        assert close(sw.star(sw.star(h)).coeffs, h.coeffs)
    assert close(sw.star(TX).coeffs, (X * T).coeffs)
    for i, j in itertools.product(sw.BASIS, repeat=2):
        x, y = E.basis(i), E.basis(j)
        assert close(sw.star(x * y).coeffs, (sw.star(y) * sw.star(x)).coeffs)


# -- dual algebra -----------------------------------------------------------------------

def test_dual_product_table():
    nonzero = {("1", "1"): "1", ("t", "t"): "t", ("x", "t"): "x", ("1", "x"): "x",
               ("tx", "1"): "tx", ("t", "tx"): "tx"}
    for i, j in itertools.product(sw.BASIS, repeat=2):
        got = (D.delta(i) * D.delta(j)).coeffs
        want = D.delta(nonzero[(i, j)]).coeffs if (i, j) in nonzero else np.zeros(4)
        assert np.array_equal(got, want), (i, j)


def test_counit_is_dual_unit():
    eps = D.counit()
    assert np.array_equal(eps.coeffs, [1, 1, 0, 0])
    for name in sw.BASIS:
        assert np.array_equal((eps * D.delta(name)).coeffs, D.delta(name).coeffs)
        assert np.array_equal((D.delta(name) * eps).coeffs, D.delta(name).coeffs)


def test_x_circ_omega_components():
    assert np.array_equal(sw.x_circ_omega_st(1, 0).coeffs, (-D.delta("t")).coeffs)
    assert np.array_equal(sw.x_circ_omega_st(0, 1).coeffs, (-D.delta("x") - D.delta("tx")).coeffs)


@given(cplx, cplx)
def test_power_law(a, b):
    v = sw.x_circ_omega_st(a, b)
    assert close((v * v).coeffs, (-a * v).coeffs, 1e-12)
    p = v
    for n in range(2, 7):
        p = p * v
        assert close(p.coeffs, ((-a) ** (n - 1) * v).coeffs, 1e-12 * max(1, abs(a)) ** n * (1 + abs(b)))


# -- exponential ------------------------------------------------------------------------

def test_exp_at_zero():
    assert np.array_equal(sw.exp_closed(1 + 1j, 2, 0.0).coeffs, [1, 1, 0, 0])


def test_exp_nilpotent_case():
    v = sw.x_circ_omega_st(0, 1.5)
    assert close(sw.exp_closed(0, 1.5, 0.7).coeffs, (D.counit() - 0.7 * v).coeffs)
    assert close(sw.exp_series(0, 1.5, 0.7).coeffs, (D.counit() - 0.7 * v).coeffs)


def test_exp_small_a_branch_continuous():
    for a in (1e-3, 1e-5, 1e-7, 1e-9):
        # the naive quotient loses about eps/a to cancellation
        direct = D.counit() - ((np.exp(a * 0.9) - 1) / a) * sw.x_circ_omega_st(a, 2)
        assert close(sw.exp_closed(a, 2, 0.9).coeffs, direct.coeffs, 1e-15 / a)
        assert close(sw.exp_closed(a, 2, 0.9).coeffs, sw.exp_series(a, 2, 0.9).coeffs, 1e-14)


@settings(max_examples=50)
@given(st.complex_numbers(max_magnitude=1.5), cplx, st.floats(-2, 2))
def test_closed_matches_series(a, b, s):
    # |a s| <= 3 keeps the 30-term truncation below 1e-17
    ref = sw.exp_series(a, b, s).coeffs
    assert close(sw.exp_closed(a, b, s).coeffs, ref, 1e-12 * max(1, np.abs(ref).max()))


@settings(max_examples=30)
@given(cplx, cplx, st.floats(-1, 1), st.floats(-1, 1))
def test_one_parameter(a, b, s, u):
    prod = sw.exp_closed(a, b, s) * sw.exp_closed(a, b, u)
    ref = sw.exp_closed(a, b, s + u).coeffs
    assert close(prod.coeffs, ref, 1e-12 * max(1, np.abs(ref).max()))


# -- calculus and evolution ---------------------------------------------------------------

def test_derivative_on_basis():
    d = sw.exterior_derivative
    assert close(d(T)["t"].coeffs, T.coeffs) and close(d(T)["x"].coeffs, 0)
    assert close(d(X)["t"].coeffs, X.coeffs) and close(d(X)["x"].coeffs, ONE.coeffs)
    assert close(d(TX)["t"].coeffs, 0) and close(d(TX)["x"].coeffs, (-T).coeffs)
    assert all(not f.coeffs.any() for f in d(ONE).values())


def test_derivative_is_leibniz_with_relations():
    # d(xy) = (dx) y + x dy, moving forms past functions with the bimodule relations
    def times_right(forms, y):
        out = {"t": E(np.zeros(4)), "x": E(np.zeros(4))}
        for form, f in forms.items():
            for k, word in enumerate(sw._WORDS):
                if y.coeffs[k] == 0:
                    continue
                moved = star_like_push(form, word)
                for e, left in moved:
                    out[e] = out[e] + y.coeffs[k] * (f * left)
        return out

    def star_like_push(form, word):
        push = {("t", "t"): [(-1, "t", "t")], ("x", "t"): [(1, "t", "x")],
                ("x", "x"): [(1, "x", "x")], ("t", "x"): [(-1, "x", "t"), (-2, None, "x")]}
        acc = [(1, ONE, form)]
        for letter in word:
            new = []
            for c, left, e in acc:
                for c2, lt, e2 in push[(e, letter)]:
                    new.append((c * c2, left * E.basis(lt) if lt else left, e2))
            acc = new
        return [(e, c * left) for c, left, e in acc]

    for i, j in itertools.product(sw.BASIS, repeat=2):
        x, y = E.basis(i), E.basis(j)
        lhs = sw.exterior_derivative(x * y)
        rhs = times_right(sw.exterior_derivative(x), y)
        dy = sw.exterior_derivative(y)
        for e in ("t", "x"):
            assert close(lhs[e].coeffs, (rhs[e] + x * dy[e]).coeffs), (i, j, e)


def test_derivative_commutes_with_star():
    for name in sw.BASIS:
        h = (0.5 - 1j) * E.basis(name)
        lhs = sw.exterior_derivative(sw.star(h))
        rhs = star_form(sw.exterior_derivative(h))
        for e in ("t", "x"):
            assert close(lhs[e].coeffs, rhs[e].coeffs), (name, e)


def test_evolve_at_zero_and_example_path():
    a, b = 0.4 + 1j, -0.3 + 0.2j
    m0 = T + X
    assert close(sw.evolve(m0, a, b, 0.0).coeffs, m0.coeffs)
    s = 0.8
    f = (1 - np.exp(s * a)) / a
    assert close(sw.evolve(m0, a, b, s).coeffs, (m0 + f * (-a * T - a * X - b * ONE)).coeffs)
    assert close(sw.evolve_display(m0, a, b, s).coeffs, sw.evolve(m0, a, b, s).coeffs)


def test_textbook_path_agrees_with_evolution_only_when_a_equals_b():
    a = 0.4 + 1j
    assert close(sw.worked_example_m(a, a, 0.8).coeffs, sw.evolve(T + X, a, a, 0.8).coeffs)
    assert not close(sw.worked_example_m(a, 2 * a, 0.8).coeffs, sw.evolve(T + X, a, 2 * a, 0.8).coeffs)


def test_evolve_series_route():
    a, b, s = 0.4 + 1j, -0.3 + 0.2j, 1.3
    m0 = 2 * ONE - T + 1j * X + 0.5 * TX
    via_series = E(sw.coproduct(m0) @ sw.exp_series(a, b, s).coeffs)
    assert close(via_series.coeffs, sw.evolve(m0, a, b, s).coeffs)


@pytest.mark.parametrize("s", [0.0, 0.5, 1.7])
def test_ode_residual(s):
    a, b, h = 0.4 + 1j, -0.3 + 0.2j, 1e-5
    m0 = 2 * ONE - T + 1j * X + 0.5 * TX
    deriv = (sw.evolve(m0, a, b, s + h) - sw.evolve(m0, a, b, s - h)) / (2 * h)
    m = sw.evolve(m0, a, b, s)
    assert close(deriv.coeffs, (-sw.field_derivative(m, a, b)).coeffs, 1e-7)


# -- Haar integral and states ------------------------------------------------------------

def test_haar_and_state_examples():
    lam = 1j
    assert sw.haar(TX, lam) == lam and sw.haar(ONE + T + X, lam) == 0
    assert close(sw.state_functional(ONE, lam).coeffs, (lam * D.delta("tx")).coeffs)
    assert close(sw.state_functional(T + X, lam).coeffs, (-lam * D.delta("tx")).coeffs)


def test_haar_is_right_invariant():
    # phi(h_(1)) h_(2) = phi(h) 1
    for name in sw.BASIS:
        M = sw.coproduct(E.basis(name))
        got = sum(M[i, j] * sw.haar(E.basis(sw.BASIS[i])) * E.basis(sw.BASIS[j]).coeffs
                  for i in range(4) for j in range(4))
        assert close(got, sw.haar(E.basis(name)) * ONE.coeffs)


@settings(max_examples=30)
@given(st.lists(cplx, min_size=4, max_size=4), st.floats(-3, 3))
def test_state_display_matches_definition(m, lam_im):
    mm = E(m)
    lam = 1j * lam_im
    assert close(sw.state_functional(mm, lam).coeffs, sw.state_display(mm, lam).coeffs, 1e-10)


@settings(max_examples=50)
@given(cplx.filter(lambda z: abs(z) > 0.05), cplx, st.floats(-1.5, 1.5))
def test_worked_example_state(a, b, s):
    lam = 1j
    m = sw.worked_example_m(a, b, s)
    got = sw.state_functional(m, lam).coeffs
    want = sw.worked_example_state(a, b, s, lam).coeffs
    assert close(got, want, 1e-10 * max(1, np.abs(want).max()))


def test_state_continuous_at_zero():
    rng = np.random.default_rng(2)
    for _ in range(5):
        m0 = E(rng.normal(size=4) + 1j * rng.normal(size=4))
        a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
        assert close(sw.state_functional(sw.evolve(m0, a, b, 0.0)).coeffs,
                     sw.state_functional(m0).coeffs)


def test_state_warns_for_real_lambda():
    with pytest.warns(UserWarning):
        sw.state_functional(ONE, 1.0)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        sw.state_functional(ONE, 2j)
