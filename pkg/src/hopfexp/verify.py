"""Oracle cross-checks bundled for the command line ``--verify`` mode.

Each check returns ``(name, residual, tolerance)``.  The checks are small
versions of the test-suite comparisons: independent routes to the same
exponential must agree.
"""
from __future__ import annotations

import numpy as np

from . import qsu2, sweedler
from .calculus import divergence_check, x_circ_omega
from .expmap import (auto_squarings, exp_dual, ode_residual, s3_closed_form, s3_density_display,
                     s3_field, series_exp_dual, state_density, z_closed_form, z_diffusion,
                     z_generator_matrix, z_state_weights, matexp_apply)
from .groups import IntWindow
from .hopf import counit_vector

Check = tuple[str, float, float]


def s3_checks(p, q, r, times, rng) -> list[Check]:
    X = s3_field(p, q, r)
    v = x_circ_omega(X)
    route, norm, dens, ode = 0.0, 0.0, 0.0, 0.0
    for t in times:
        closed = s3_closed_form(p, q, r, t).coeffs
        mat = exp_dual(X, t).coeffs
        ser = series_exp_dual(v, t, 40, auto_squarings(v, t)).value.coeffs
        route = max(route, np.abs(closed - mat).max(), np.abs(closed - ser).max())
        norm = max(norm, abs(np.linalg.norm(closed) - 1))
        dens = max(dens, np.abs(state_density(X, t).weights - s3_density_display(p, q, r, t)).max())
    for t in rng.uniform(0, 7, size=3):
        ode = max(ode, ode_residual(X, t))
    return [("s3 closed vs matrix vs series", route, 1e-9),
            ("s3 unit norm", norm, 1e-10),
            ("s3 density vs expanded display", dens, 1e-9),
            ("s3 divergence", divergence_check(X), 1e-12),
            ("s3 ode residual", ode, 1e-7)]


def integer_checks(xp, times, window: IntWindow, lam=None) -> list[Check]:
    xm = -np.conj(xp)
    closed, mass, dmass = 0.0, 0.0, 0.0
    N = window.radius
    inner = slice(N - 8, N + 9)
    T = z_generator_matrix(xp, xm, window)
    for t in times:
        cf = z_closed_form(xp, xm, t, window).coeffs
        me = matexp_apply(T, t, counit_vector(window)).coeffs
        closed = max(closed, np.abs(cf - me)[inner].max())
        mass = max(mass, abs(z_state_weights(xp, xm, t, window).total() - 1))
        if lam is not None:
            dmass = max(dmass, abs(z_diffusion(lam, t, window).coeffs.real.sum() - 1))
    out = [("integers closed form vs truncated matrix", closed, 1e-9),
           ("integers state mass", mass, 1e-10)]
    if lam is not None:
        out.append(("integers diffusion mass", dmass, 1e-10))
    return out


def qsu2_checks(q, gamma, delta, times) -> list[Check]:
    series, psi, ode = 0.0, 0.0, 0.0
    h = 1e-5
    for t in times:
        for g in "abcd":
            m0 = qsu2.QSU2Element.generator(g, q)
            cf = qsu2.evolve_generator(g, gamma, delta, t, q)
            series = max(series, cf.max_abs_diff(qsu2.evolve_series(m0, gamma, delta, t)))
            d = (qsu2.evolve_generator(g, gamma, delta, t + h, q)
                 - qsu2.evolve_generator(g, gamma, delta, t - h, q)) / (2 * h)
            ode = max(ode, d.max_abs_diff(-qsu2.field_derivative(cf, gamma, delta)))
        if abs(np.conj(gamma) + delta / q) < 1e-12:
            m = qsu2.evolve_generator("a", gamma, delta, t, q)
            psi = max(psi, abs(qsu2.state_value(m, qsu2.QSU2Element.one(q)) - q * q / (1 + q * q)))
    tag = f"q={q:g}"
    return [(f"qsu2 {tag} closed form vs 40-term series", series, 1e-10),
            (f"qsu2 {tag} psi_t(1) constant", psi, 1e-10),
            (f"qsu2 {tag} ode residual", ode, 1e-7)]


def sweedler_checks(a, b, times, m0) -> list[Check]:
    series, ode, group = 0.0, 0.0, 0.0
    h = 1e-5
    for s in times:
        series = max(series, np.abs(sweedler.exp_closed(a, b, s).coeffs
                                    - sweedler.exp_series(a, b, s).coeffs).max())
        d = (sweedler.evolve(m0, a, b, s + h) - sweedler.evolve(m0, a, b, s - h)) / (2 * h)
        ode = max(ode, np.abs((d + sweedler.field_derivative(sweedler.evolve(m0, a, b, s), a, b))
                              .coeffs).max())
        prod = sweedler.exp_closed(a, b, s) * sweedler.exp_closed(a, b, 0.5)
        group = max(group, np.abs(prod.coeffs - sweedler.exp_closed(a, b, s + 0.5).coeffs).max())
    v = sweedler.x_circ_omega_st(a, b)
    square = np.abs((v * v + a * v).coeffs).max()
    return [("sweedler closed vs series", series, 1e-12),
            ("sweedler square law", square, 1e-12),
            ("sweedler one-parameter", group, 1e-10),
            ("sweedler ode residual", ode, 1e-7)]


def verify_all(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    p, q, r = rng.uniform(-3, 3, 3)
    checks = s3_checks(p, q, r, [0.5, 1, 3, 7], rng)
    checks += integer_checks(1.0, np.linspace(0, 5, 11), IntWindow(64), lam=1.0)
    for qq in (0.5, 0.9, 2.0):
        g, d = rng.normal(size=2) + 1j * rng.normal(size=2)
        g, d = g / max(1, abs(g)), d / max(1, abs(d))
        checks += qsu2_checks(qq, g, d, [0.0, 1.5, 3.0])
        checks += [(name + " (real field)", res, tol) for name, res, tol in
                   qsu2_checks(qq, g, qsu2.real_delta(g, qq), [0.7, 2.0])]
    a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
    checks += sweedler_checks(a, b, [0.0, 0.4, 1.3],
                              sweedler.SweedlerElement.basis("t") + sweedler.SweedlerElement.basis("x"))
    return checks


def report(checks: list[Check]) -> dict:
    return {name: {"residual": float(res), "tolerance": tol, "pass": bool(res <= tol)}
            for name, res, tol in checks}


def all_pass(checks: list[Check]) -> bool:
    return all(res <= tol for _, res, tol in checks)

