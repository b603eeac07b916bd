"""The four-dimensional Sweedler-Taft Hopf *-algebra and its 2D calculus.

Basis order is ``(1, t, x, tx)`` for the algebra (``t^2 = 1``, ``x^2 = 0``,
``xt = -tx``) and ``(delta_1, delta_t, delta_x, delta_tx)`` for the dual.

The calculus has invariant forms ``e_t = [t - 1]`` and ``e_x = [x]`` with

    dt = t e_t,  dx = x e_t + e_x,  d(tx) = -t e_x,
    e_t t = -t e_t,  e_x t = t e_x,  e_x x = x e_x,  e_t x = -x e_t - 2 e_x.

A vector field is written ``X = a E_t + b E_x`` with ``E_t, E_x`` dual to
``e_t, e_x``, so that ``X o omega = -a delta_t - b (delta_x + delta_tx)``.
"""
from __future__ import annotations

import warnings
from functools import lru_cache

import numpy as np

BASIS = ("1", "t", "x", "tx")
_WORDS = ((), ("t",), ("x",), ("t", "x"))
SMALL_ARG = 1e-4


def _normal_word(word):
    """Reduce a word in t, x to ``(sign, basis_index)``, or ``None`` if it vanishes."""
    sign = 1
    # bubble every t to the left; each swap past an x costs a sign
    xs_seen = 0
    n_t = 0
    for letter in word:
        if letter == "t":
            sign *= (-1) ** xs_seen
            n_t += 1
        else:
            xs_seen += 1
    if xs_seen > 1:
        return None
    index = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}[(n_t % 2, xs_seen)]
    return sign, index


@lru_cache(maxsize=None)
def structure_constants() -> np.ndarray:
    """``M[i, j, k]``: coefficient of basis ``k`` in ``basis_i * basis_j``."""
    M = np.zeros((4, 4, 4))
    for i in range(4):
        for j in range(4):
            red = _normal_word(_WORDS[i] + _WORDS[j])
            if red:
                M[i, j, red[1]] = red[0]
    return M


@lru_cache(maxsize=None)
def coproduct_tensor() -> np.ndarray:
    """``C[k, i, j]``: coefficient of ``basis_i (x) basis_j`` in ``Delta(basis_k)``.

    Generated from ``Delta t = t (x) t`` and ``Delta x = x (x) t + 1 (x) x``.
    """
    M = structure_constants()
    gen = {"t": np.zeros((4, 4)), "x": np.zeros((4, 4))}
    gen["t"][1, 1] = 1
    gen["x"][2, 1] = 1
    gen["x"][0, 2] = 1
    C = np.zeros((4, 4, 4))
    for k, word in enumerate(_WORDS):
        T = np.zeros((4, 4))
        T[0, 0] = 1
        for letter in word:
            G = gen[letter]
            # (l1 (x) r1)(l2 (x) r2) = l1 l2 (x) r1 r2
            T = np.einsum("ij,kl,ikm,jln->mn", T, G, M, M)
        C[k] = T
    return C


COUNIT = np.array([1, 1, 0, 0], dtype=complex)


class SweedlerElement:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=complex).reshape(-1)
        if arr.shape != (4,):
            raise ValueError("a Sweedler element has 4 coefficients")
        self.coeffs = arr

    @classmethod
    def basis(cls, name: str) -> "SweedlerElement":
        v = np.zeros(4, dtype=complex)
        v[BASIS.index(name)] = 1
        return cls(v)

    def __add__(self, other):
        return SweedlerElement(self.coeffs + _coeffs(other))

    __radd__ = __add__

    def __sub__(self, other):
        return SweedlerElement(self.coeffs - _coeffs(other))

    def __neg__(self):
        return SweedlerElement(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, SweedlerElement):
            return multiply(self, other)
        return SweedlerElement(self.coeffs * other)

    def __rmul__(self, scalar):
        return SweedlerElement(scalar * self.coeffs)

    def __truediv__(self, scalar):
        return SweedlerElement(self.coeffs / scalar)

    def __repr__(self):
        return "SweedlerElement(" + ", ".join(f"{b}: {c:.6g}" for b, c in zip(BASIS, self.coeffs)) + ")"


def _coeffs(x):
    if isinstance(x, SweedlerElement):
        return x.coeffs
    return np.array([x, 0, 0, 0], dtype=complex)


class SweedlerDual:
    """A functional on the algebra, stored through its values on ``1, t, x, tx``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=complex).reshape(-1)
        if arr.shape != (4,):
            raise ValueError("a dual element has 4 coefficients")
        self.coeffs = arr

    @classmethod
    def delta(cls, name: str) -> "SweedlerDual":
        v = np.zeros(4, dtype=complex)
        v[BASIS.index(name)] = 1
        return cls(v)

    @classmethod
    def counit(cls) -> "SweedlerDual":
        return cls(COUNIT)

    def __call__(self, h: SweedlerElement) -> complex:
        return complex(self.coeffs @ h.coeffs)

    def __add__(self, other):
        return SweedlerDual(self.coeffs + other.coeffs)

    def __sub__(self, other):
        return SweedlerDual(self.coeffs - other.coeffs)

    def __neg__(self):
        return SweedlerDual(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, SweedlerDual):
            return dual_product(self, other)
        return SweedlerDual(self.coeffs * other)

    def __rmul__(self, scalar):
        return SweedlerDual(scalar * self.coeffs)

    def __repr__(self):
        return "SweedlerDual(" + ", ".join(f"d_{b}: {c:.6g}" for b, c in zip(BASIS, self.coeffs)) + ")"


def multiply(x: SweedlerElement, y: SweedlerElement) -> SweedlerElement:
    return SweedlerElement(np.einsum("i,j,ijk->k", x.coeffs, y.coeffs, structure_constants()))


def coproduct(x: SweedlerElement) -> np.ndarray:
    """``Delta(x)`` as a 4x4 matrix over ``basis_i (x) basis_j``."""
    return np.einsum("k,kij->ij", x.coeffs, coproduct_tensor())


def dual_product(alpha: SweedlerDual, beta: SweedlerDual) -> SweedlerDual:
    """``(alpha beta)(h) = alpha(h_(1)) beta(h_(2))``."""
    return SweedlerDual(np.einsum("kij,i,j->k", coproduct_tensor(), alpha.coeffs, beta.coeffs))


def counit(x: SweedlerElement) -> complex:
    return complex(COUNIT @ x.coeffs)


def _anti(x: SweedlerElement, images, conjugate):
    out = SweedlerElement(np.zeros(4))
    c = x.coeffs.conj() if conjugate else x.coeffs
    for k, word in enumerate(_WORDS):
        if c[k] == 0:
            continue
        term = SweedlerElement.basis("1")
        for letter in reversed(word):
            term = term * images[letter]
        out = out + c[k] * term
    return out


def antipode(x: SweedlerElement) -> SweedlerElement:
    """Linear antimultiplicative ``S`` with ``S t = t``, ``S x = tx``."""
    return _anti(x, {"t": SweedlerElement.basis("t"), "x": SweedlerElement.basis("tx")}, False)


def star(x: SweedlerElement) -> SweedlerElement:
    """Antilinear antimultiplicative involution fixing ``t`` and ``x``."""
    return _anti(x, {"t": SweedlerElement.basis("t"), "x": SweedlerElement.basis("x")}, True)


# -- calculus --------------------------------------------------------------------------

FORMS = ("t", "x")  # e_t = [t - 1], e_x = [x]


def omega(h: SweedlerElement) -> dict:
    """Invariant derivative on ``h`` as coefficients on ``e_t, e_x``."""
    c = h.coeffs
    return {"t": -c[1], "x": -(c[2] + c[3])}


def exterior_derivative(h: SweedlerElement) -> dict:
    """``dh`` as ``{form: left coefficient}``."""
    t, x = SweedlerElement.basis("t"), SweedlerElement.basis("x")
    c = h.coeffs
    return {"t": c[1] * t + c[2] * x, "x": c[2] * SweedlerElement.basis("1") - c[3] * t}


def _move_letter(letter, form):
    """``letter e_form`` rewritten as ``sum e_f' r_f'`` (functions on the right)."""
    one = SweedlerElement.basis("1")
    el = SweedlerElement.basis(letter)
    if letter == "t":
        return {form: (-1 if form == "t" else 1) * el}
    if form == "x":
        return {"x": el}
    return {"t": -el, "x": -2 * one}


def _move_right(h: SweedlerElement, form: str) -> dict:
    out = {f: SweedlerElement(np.zeros(4)) for f in FORMS}
    for k, word in enumerate(_WORDS):
        if h.coeffs[k] == 0:
            continue
        acc = {form: SweedlerElement.basis("1")}
        for letter in reversed(word):
            new = {f: SweedlerElement(np.zeros(4)) for f in FORMS}
            for f, g in acc.items():
                for f2, r in _move_letter(letter, f).items():
                    new[f2] = new[f2] + r * g
            acc = new
        for f, g in acc.items():
            out[f] = out[f] + h.coeffs[k] * g
    return out


def apply_field(a: complex, b: complex, form_components: dict) -> SweedlerElement:
    """Right-module evaluation of ``X = a E_t + b E_x`` on ``sum f_i e_i``."""
    X = {"t": a, "x": b}
    out = SweedlerElement(np.zeros(4))
    for form, f in form_components.items():
        for f2, g in _move_right(f, form).items():
            out = out + X[f2] * g
    return out


def field_derivative(m: SweedlerElement, a: complex, b: complex) -> SweedlerElement:
    """``X(dm)`` from the calculus relations."""
    return apply_field(a, b, exterior_derivative(m))


def x_circ_omega_st(a: complex, b: complex) -> SweedlerDual:
    """``X o omega = -a delta_t - b (delta_x + delta_tx)``."""
    return SweedlerDual([0, -a, -b, -b])


def _expm1_over(a: complex, s: float) -> complex:
    """``(e^{a s} - 1)/a``, continuous at ``a = 0``."""
    z = a * s
    if abs(z) < SMALL_ARG:
        return s * (1 + z / 2 + z * z / 6 + z ** 3 / 24)
    return np.expm1(z) / a


def exp_closed(a: complex, b: complex, s: float) -> SweedlerDual:
    """``exp(-s X o omega) = eps - ((e^{a s} - 1)/a) X o omega``."""
    return SweedlerDual.counit() - _expm1_over(a, s) * x_circ_omega_st(a, b)


def exp_series(a: complex, b: complex, s: float, nterms: int = 30) -> SweedlerDual:
    """``sum_{n < nterms} (-s X o omega)^n / n!`` in the dual algebra."""
    v = -s * x_circ_omega_st(a, b)
    term = SweedlerDual.counit()
    total = term
    for n in range(1, nterms):
        term = (term * v) * (1.0 / n)
        total = total + term
    return total


def evolve(m0: SweedlerElement, a: complex, b: complex, s: float) -> SweedlerElement:
    """``m(s) = m0_(1) exp(-s X o omega)(m0_(2))``."""
    E = exp_closed(a, b, s).coeffs
    D = coproduct(m0)
    return SweedlerElement(D @ E)


def evolve_display(m0: SweedlerElement, a: complex, b: complex, s: float) -> SweedlerElement:
    """``m(0) + m0_(1) ((1 - e^{s a})/a) (X o omega)(m0_(2))``, written out."""
    D = coproduct(m0)
    return m0 + SweedlerElement(-_expm1_over(a, s) * (D @ x_circ_omega_st(a, b).coeffs))


# -- Haar integral and the state functional --------------------------------------------

def haar(h: SweedlerElement, lam: complex = 1j) -> complex:
    """``phi(tx) = lam``, zero on ``1, t, x``."""
    return lam * h.coeffs[3]


def state_functional(m: SweedlerElement, lam: complex = 1j) -> SweedlerDual:
    """The functional ``h -> phi(m h m*)`` as a dual element."""
    if abs(complex(lam).real) > 1e-12:
        warnings.warn("lambda is not imaginary; the integral is not Hermitian", stacklevel=2)
    ms = star(m)
    return SweedlerDual([haar(m * SweedlerElement.basis(h) * ms, lam) for h in BASIS])


def state_display(m: SweedlerElement, lam: complex = 1j) -> SweedlerDual:
    """The same functional written out in the coefficients ``m = m_1 + m_t t + m_x x + m_tx tx``."""
    m1, mt, mx, mtx = m.coeffs
    c = np.conj
    return SweedlerDual(lam * np.array([
        -m1 * c(mtx) + mt * c(mx) - mx * c(mt) + mtx * c(m1),
        m1 * c(mx) - mt * c(mtx) - mx * c(m1) + mtx * c(mt),
        -m1 * c(mt) + mt * c(m1),
        abs(m1) ** 2 - abs(mt) ** 2,
    ]))


def worked_example_m(a: complex, b: complex, s: float) -> SweedlerElement:
    """``t + x + ((1 - e^{s a})/a)(-t b - x b - a)``, the textbook path from ``t + x``.

    Note: with ``X o omega = -a delta_t - b(delta_x + delta_tx)`` the coproduct
    gives ``t + x + ((1 - e^{s a})/a)(-a t - a x - b)`` instead (see :func:`evolve`);
    the two agree only when ``a = b``.
    """
    f = -_expm1_over(a, s)
    return SweedlerElement([-f * a, 1 - f * b, 1 - f * b, 0])


def worked_example_state(a: complex, b: complex, s: float, lam: complex = 1j) -> SweedlerDual:
    """Closed form of ``h -> phi(m h m*)`` for ``m = worked_example_m(a, b, s)``."""
    E, Ec = np.exp(s * a), np.exp(s * np.conj(a))
    ratio, ratio_c = b / a, np.conj(b) / np.conj(a)
    k = abs(E - 1) ** 2
    td = E - Ec + k * (ratio_c - ratio)
    tx = k * (1 - abs(ratio) ** 2) - 1 - ratio * (E - 1) - ratio_c * (Ec - 1)
    return SweedlerDual(lam * np.array([0, td, -td, tx]))
