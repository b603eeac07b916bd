"""Exponentials of invariant vector fields in the dual group algebra.

Two sign conventions appear and both are exposed explicitly:

* ``alpha_t = exp(t X o omega)`` solves ``d alpha/dt = alpha * (X o omega)``,
  i.e. ``d alpha/dt = T alpha`` with the transfer matrix ``T``;
* the path ``m(t)`` and the states built from it use ``exp(-t X o omega)``.

Finite groups can be exponentiated three ways (matrix exponential, power
series under convolution, closed form on S3); the integers use the 0F1
closed form, with a truncated banded matrix as the check.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .calculus import (GroupCalculus, InvariantVectorField, UnsupportedCalculus, field_on_window,
                       is_real, x_circ_omega)
from .groups import FiniteGroup, IntWindow, s3
from .hopf import DualVector, FunctionElement, convolve, counit_vector
from .linalg import NumericError, expm
from .special import hyp0f1

SMALL_ARG = 1e-4
MASS_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class TransferMatrix:
    """``T[i, k] = (X o omega)(delta_{g_k^-1 g_i})``, the matrix of right convolution by ``X o omega``."""

    group: FiniteGroup | IntWindow
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def is_skew_adjoint(self, tol=1e-14) -> bool:
        return bool(np.linalg.norm(self.entries + self.entries.conj().T) < tol)


@dataclass(frozen=True, eq=False)
class StateDensity:
    """Weights ``w_g`` of the state ``psi_t(f) = sum_g f(g) w_g`` at a given time."""

    group: FiniteGroup | IntWindow
    weights: np.ndarray
    time: float

    def total(self) -> float:
        return float(self.weights.sum())

    def psi(self, f: FunctionElement) -> complex:
        return complex(self.weights @ f.values)

    def __getitem__(self, label):
        return self.weights[self.group.index(label)]


def transfer_matrix(X: InvariantVectorField) -> TransferMatrix:
    group = X.calculus.group
    v = x_circ_omega(X).coeffs
    n = group.order
    if isinstance(group, IntWindow):
        # X o omega is supported on {-1, 0, 1}, so T is tridiagonal
        r = group.radius
        T = (np.diag(np.full(n, v[r]))
             + np.diag(np.full(n - 1, v[r + 1]), -1)
             + np.diag(np.full(n - 1, v[r - 1]), 1))
        return TransferMatrix(group, T)
    table, inv = group.mul_table, group.inv_table
    # T[i, k] = v[g_k^-1 g_i]
    T = v[table[inv[None, :], np.arange(n)[:, None]]]
    return TransferMatrix(group, T)


def matexp_apply(T: TransferMatrix, t: float, v: DualVector) -> DualVector:
    """``exp(t T) v``."""
    if v.group.order != T.dim:
        raise ValueError(f"vector of length {v.group.order} does not match {T.dim}x{T.dim} matrix")
    if not np.isfinite(t):
        raise NumericError("time must be finite")
    return DualVector(v.group, expm(t * T.entries) @ v.coeffs)


@dataclass(frozen=True, eq=False)
class SeriesExp:
    value: DualVector
    last_term_norm: float


def series_exp_dual(v: DualVector, t: float, nterms: int = 64, squarings: int = 0) -> SeriesExp:
    """``sum_{k < nterms} t^k v^k / k!`` with powers taken by convolution.

    With ``squarings = s`` the series is summed at ``t / 2^s`` and the result
    convolved with itself ``s`` times, using ``exp((a+b)v) = exp(av) * exp(bv)``.
    ``last_term_norm`` is the 2-norm of the final series term.
    """
    if isinstance(v.group, IntWindow):
        raise TypeError("series_exp_dual needs a finite group; products leave an integer window")
    tau = t / 2.0 ** squarings
    term = counit_vector(v.group)
    total = term
    for k in range(1, nterms):
        term = convolve(term, v) * (tau / k)
        total = total + term
    for _ in range(squarings):
        total = convolve(total, total)
    return SeriesExp(total, term.norm() if nterms > 1 else 1.0)


def auto_squarings(v: DualVector, t: float, target: float = 0.5) -> int:
    """Squarings needed to bring ``|t| * ||v||_1`` under ``target``."""
    size = abs(t) * np.abs(v.coeffs).sum()
    return 0 if size <= target else int(np.ceil(np.log2(size / target)))


def exp_dual(X: InvariantVectorField, t: float, route: str = "matrix") -> DualVector:
    """``alpha_t = exp(t X o omega)`` by the chosen route (``"matrix"`` or ``"series"``)."""
    v = x_circ_omega(X)
    if route == "matrix":
        return matexp_apply(transfer_matrix(X), t, counit_vector(X.calculus.group))
    if route == "series":
        return series_exp_dual(v, t, 40, auto_squarings(v, t)).value
    raise ValueError(f"unknown route {route!r}")


def _sinc(z):
    """``sin(z)/z`` for ``z`` given through ``z**2``; even, so branch-free."""
    z2 = complex(z) ** 2
    if abs(z2) < SMALL_ARG ** 2:
        return 1 - z2 / 6 + z2 ** 2 / 120 - z2 ** 3 / 5040
    z = np.sqrt(z2)
    return np.sin(z) / z


def _s3_gamma2(p, q, r):
    # p^2 + q^2 + r^2 - pq - pr - qr, as a sum of squares so real inputs never round below zero
    return ((p - q) ** 2 + (q - r) ** 2 + (r - p) ** 2) / 2


def s3_closed_form(p, q, r, t: float = 1.0, group: FiniteGroup | None = None) -> DualVector:
    """``exp(i(p e_u + q e_v + r e_w) o omega)`` at time ``t`` on S3, in closed form.

    The parameters are scaled to ``(tp, tq, tr)``.  Entries are ordered
    ``e, (1,2,3), (1,3,2), u, v, w``.
    """
    group = group or s3()
    p, q, r = complex(p) * t, complex(q) * t, complex(r) * t
    total = p + q + r
    g2 = _s3_gamma2(p, q, r)
    cg = np.cos(np.sqrt(g2))
    sg = _sinc(np.sqrt(g2))
    ct, st = np.cos(total), np.sin(total)
    vec = np.array([
        2 * cg + ct,
        ct - cg,
        ct - cg,
        -1j * (sg * (2 * p - q - r) + st),
        -1j * (sg * (2 * q - p - r) + st),
        -1j * (sg * (2 * r - p - q) + st),
    ]) * np.exp(1j * total) / 3
    return DualVector(group, vec)


def s3_field(p, q, r, group: FiniteGroup | None = None) -> InvariantVectorField:
    """``X = i p e_u + i q e_v + i r e_w`` on S3 with the calculus ``C = {u, v, w}``."""
    group = group or s3()
    cal = GroupCalculus.from_labels(group, ["u", "v", "w"])
    return InvariantVectorField(cal, [1j * p, 1j * q, 1j * r])


def s3_density_display(p, q, r, t: float = 1.0) -> np.ndarray:
    """The expanded density ``|exp(-t X o omega)(delta_{g^-1})|^2`` on S3, term by term.

    Order ``e, (1,2,3), (1,3,2), u, v, w``.  Written out from the squared
    cosine/sine expansion; it does not go through any exponential.
    """
    p, q, r = p * t, q * t, r * t
    total = p + q + r
    g2 = _s3_gamma2(p, q, r)
    cg, sg = np.cos(np.sqrt(g2)).real, _sinc(np.sqrt(g2)).real
    ct, st = np.cos(total), np.sin(total)
    rot = (ct - cg) ** 2
    return np.array([
        (2 * cg + ct) ** 2, rot, rot,
        ((2 * p - q - r) * sg + st) ** 2,
        ((2 * q - p - r) * sg + st) ** 2,
        ((2 * r - q - p) * sg + st) ** 2,
    ]) / 9


def state_density(X: InvariantVectorField, t: float) -> StateDensity:
    """Density of ``psi_t`` starting from ``m(0) = delta_e``.

    The weight of ``g^-1`` is ``|exp(-t T) epsilon (delta_g)|^2``.  Reported
    unnormalised by ``1/|G|``, so the weights sum to one for a real field.
    """
    group = X.calculus.group
    if X.calculus.star_closed and not is_real(X):
        warnings.warn("vector field is not real; weights need not sum to 1", stacklevel=2)
    beta = matexp_apply(transfer_matrix(X), -t, counit_vector(group)).coeffs
    if isinstance(group, IntWindow):
        weights = np.abs(beta[::-1]) ** 2
    else:
        weights = np.abs(beta[group.inv_table]) ** 2
    return StateDensity(group, weights, t)


def path_m(X: InvariantVectorField, t: float, m0: FunctionElement | None = None,
           route: str = "matrix") -> FunctionElement:
    """``m(t) = m0_(1) exp(-t X o omega)(m0_(2))``; ``m0`` defaults to ``delta_e``."""
    group = X.calculus.group
    if isinstance(group, IntWindow):
        Xp, Xm = X.coeffs
        beta = z_closed_form(Xp, Xm, -t, group).coeffs if route == "closed" else \
            matexp_apply(transfer_matrix(X), -t, counit_vector(group)).coeffs
        if m0 is not None:
            raise NotImplementedError("integer paths start from delta_0")
        return FunctionElement(group, beta[::-1])
    beta = exp_dual(X, -t, route).coeffs
    if m0 is None:
        return FunctionElement(group, beta[group.inv_table])
    # delta_g -> sum_{xy=g} delta_x beta(delta_y)
    table, inv = group.mul_table, group.inv_table
    out = np.zeros(group.order, dtype=complex)
    for g, c in enumerate(m0.values):
        if c:
            np.add.at(out, table[g, inv], c * beta)
    return FunctionElement(group, out)


def ode_residual(X: InvariantVectorField, t: float, h: float = 1e-5,
                 m0: FunctionElement | None = None) -> float:
    """``max |(m(t+h) - m(t-h))/2h + X(dm(t))|`` along the path from ``m0``."""
    deriv = (path_m(X, t + h, m0).values - path_m(X, t - h, m0).values) / (2 * h)
    return float(np.max(np.abs(deriv + X.apply_d(path_m(X, t, m0)).values)))


# -- the integers ----------------------------------------------------------------

def z_closed_form(Xp: complex, Xm: complex, t: float, window: IntWindow) -> DualVector:
    """``exp(t X o omega)`` for ``X = Xp e_{+1} + Xm e_{-1}`` on the integers.

    Coefficient of ``z_0`` is ``e^{t(Xp+Xm)} 0F1(;1; t^2 Xm Xp)``; ``z_n`` and
    ``z_{-n}`` (``n > 0``) carry ``0F1(;n+1; t^2 Xm Xp)/n!`` times
    ``(-t Xm)^n`` and ``(-t Xp)^n`` respectively.
    """
    Xp, Xm = complex(Xp), complex(Xm)
    x = t * t * Xm * Xp
    pref = np.exp(t * (Xp + Xm))
    N = window.radius
    out = np.zeros(window.order, dtype=complex)
    out[N] = pref * hyp0f1(1, x)
    up = down = 1.0 + 0j
    for n in range(1, N + 1):
        up *= -t * Xm / n
        down *= -t * Xp / n
        f = hyp0f1(n + 1, x)
        out[N + n] = pref * f * up
        out[N - n] = pref * f * down
    return DualVector(window, out)


def z_field(Xp: complex, Xm: complex, window: IntWindow) -> InvariantVectorField:
    return field_on_window(Xp, Xm, window.radius)


def z_generator_matrix(Xp: complex, Xm: complex, window: IntWindow) -> TransferMatrix:
    """Banded truncation of ``-Xp N_{-1} + (Xp + Xm) N_0 - Xm N_1`` (position order ``-N..N``)."""
    return transfer_matrix(z_field(Xp, Xm, window))


def z_state_weights(Xp: complex, Xm: complex, t: float, window: IntWindow,
                    route: str = "closed") -> StateDensity:
    """Weights ``w_n = |exp(-t X o omega)(delta_{-n})|^2`` for a real field on the integers.

    ``route="matrix"`` uses the banded truncation instead of the 0F1 sums,
    which lose precision to cancellation once ``t |Xp|`` reaches about 10.
    """
    Xp, Xm = complex(Xp), complex(Xm)
    if abs(np.conj(Xp) + Xm) > 1e-12:
        raise UnsupportedCalculus("state weights need a real field, conj(X+) = -X-; "
                                  "use z_diffusion for the imaginary case")
    if route == "closed":
        with np.errstate(over="ignore", invalid="ignore"):
            beta = z_closed_form(Xp, Xm, -t, window).coeffs
    elif route == "matrix":
        beta = matexp_apply(z_generator_matrix(Xp, Xm, window), -t, counit_vector(window)).coeffs
    else:
        raise ValueError(f"unknown route {route!r}")
    with np.errstate(over="ignore", invalid="ignore"):
        weights = np.abs(beta[::-1]) ** 2
    _check_mass(weights.sum(), t, window)
    # the truncated matrix conserves mass even when it reflects off the edges
    edge = weights[:2].sum() + weights[-2:].sum()
    if not edge <= MASS_TOL:
        raise NumericError(f"weight {float(edge)!r} reaches the window edge at t={t}; "
                           "enlarge the window")
    return StateDensity(window, weights, t)


def _check_mass(total, t, window):
    # lost mass means either support beyond the window or cancellation in the 0F1 sums
    if not abs(total - 1) <= MASS_TOL:
        raise NumericError(f"mass {float(total)!r} at t={t} on window radius {window.radius}; "
                           "the window is too small or t too large for the series")


def z_diffusion(lam: float, t: float, window: IntWindow) -> DualVector:
    """Heat kernel ``f(n, t)`` of ``df/dt = -lam (2f(n) - f(n-1) - f(n+1))`` from ``f(., 0) = delta_0``.

    This is ``exp(t X o omega)`` with ``X^{+1} = X^{-1} = -lam``; the values are
    ``e^{-2 lam t} I_n(2 lam t)``, real and nonnegative.
    """
    if lam <= 0:
        raise ValueError("diffusion constant must be positive")
    vals = z_closed_form(-lam, -lam, t, window).coeffs.real
    _check_mass(vals.sum(), t, window)
    return DualVector(window, vals)


def first_amplitude_zero(lo: float = 0.5, hi: float = 2.0, Xp: complex = 1.0) -> float:
    """First positive zero of the ``z_0`` amplitude ``0F1(;1;-t^2 |Xp|^2)`` in ``[lo, hi]``."""
    from scipy.optimize import brentq
    a2 = abs(Xp) ** 2
    return brentq(lambda s: hyp0f1(1, -s * s * a2).real, lo, hi, xtol=1e-15)
