"""The quantum group C_q[SU_2] at a fixed numeric q.

Elements are finite sums of normal-ordered monomials ``a^n b^r c^s`` or
``d^m b^r c^s``.  A monomial is keyed by ``(n, r, s)`` with ``n > 0`` for a
power of ``a``, ``n < 0`` for ``d^{-n}`` and ``n = 0`` for neither.

Products are normal-ordered by the rewrite rules

    ba -> q ab      ca -> q ac      cb -> bc
    bd -> q^-1 db   cd -> q^-1 dc
    ad -> 1 + q^-1 bc               da -> 1 + q bc

The dual side (the elements nu_0, nu_+, nu_- and their exponentials) is
never materialised; functionals are evaluated on monomials through the
coproduct.
"""
from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Callable, Iterable, Mapping

import numpy as np

FUEL = 10 ** 6

GRADE = {"a": 1, "b": -1, "c": 1, "d": -1}
_RANK = {"a": 0, "d": 0, "b": 1, "c": 2}


class RewriteExhausted(RuntimeError):
    pass


def key_word(key) -> tuple:
    n, r, s = key
    head = ("a",) * n if n >= 0 else ("d",) * (-n)
    return head + ("b",) * r + ("c",) * s


def grade(key) -> int:
    n, r, s = key
    return n - r + s


def counit_key(key) -> float:
    _, r, s = key
    return 1.0 if r == 0 and s == 0 else 0.0


def key_label(key) -> str:
    n, r, s = key
    parts = []
    for letter, power in (("a" if n > 0 else "d", abs(n)), ("b", r), ("c", s)):
        if power == 1:
            parts.append(letter)
        elif power > 1:
            parts.append(f"{letter}^{power}")
    return "".join(parts) or "1"


def _word_key(word) -> tuple:
    n = word.count("a") - word.count("d")
    return (n, word.count("b"), word.count("c"))


def _rules(q):
    return {
        ("b", "a"): ((q, ("a", "b")),),
        ("c", "a"): ((q, ("a", "c")),),
        ("c", "b"): ((1.0, ("b", "c")),),
        ("b", "d"): ((1 / q, ("d", "b")),),
        ("c", "d"): ((1 / q, ("d", "c")),),
        ("a", "d"): ((1.0, ()), (1 / q, ("b", "c"))),
        ("d", "a"): ((1.0, ()), (q, ("b", "c"))),
    }


@lru_cache(maxsize=None)
def normal_order(word: tuple, q: float) -> tuple:
    """Normal form of a word in the generators, as a tuple of ``(key, coeff)`` pairs."""
    rules = _rules(q)
    pending = {tuple(word): 1.0 + 0j}
    done: dict = {}
    fuel = FUEL
    while pending:
        w, c = pending.popitem()
        for i in range(len(w) - 1):
            rhs = rules.get((w[i], w[i + 1]))
            if rhs is not None:
                break
        else:
            k = _word_key(w)
            done[k] = done.get(k, 0) + c
            continue
        fuel -= 1
        if fuel <= 0:
            raise RewriteExhausted("normal ordering did not terminate")
        for coeff, sub in rhs:
            nw = w[:i] + sub + w[i + 2:]
            pending[nw] = pending.get(nw, 0) + c * coeff
    return tuple((k, v) for k, v in done.items() if v != 0)


@lru_cache(maxsize=None)
def _mul_keys(k1, k2, q):
    return normal_order(key_word(k1) + key_word(k2), q)


class QSU2Element:
    """A finite combination of normal-ordered monomials at parameter ``q``."""

    __slots__ = ("q", "terms")

    def __init__(self, terms: Mapping | Iterable = (), q: float = 0.9):
        self.q = float(q)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for k, v in items:
            k = tuple(int(x) for x in k)
            if k[1] < 0 or k[2] < 0:
                raise ValueError(f"bad monomial key {k}")
            clean[k] = clean.get(k, 0) + complex(v)
        self.terms = {k: v for k, v in clean.items() if v != 0}

    @classmethod
    def generator(cls, name: str, q: float = 0.9) -> "QSU2Element":
        return cls({_word_key((name,)): 1}, q)

    @classmethod
    def one(cls, q: float = 0.9) -> "QSU2Element":
        return cls({(0, 0, 0): 1}, q)

    @classmethod
    def word(cls, letters: Iterable[str], q: float = 0.9) -> "QSU2Element":
        return cls(normal_order(tuple(letters), float(q)), q)

    def _check(self, other):
        if not math.isclose(self.q, other.q, rel_tol=0, abs_tol=0):
            raise ValueError("elements have different q")

    def __add__(self, other):
        if not isinstance(other, QSU2Element):
            other = QSU2Element({(0, 0, 0): other}, self.q)
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return QSU2Element(out, self.q)

    __radd__ = __add__

    def __neg__(self):
        return QSU2Element({k: -v for k, v in self.terms.items()}, self.q)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSU2Element):
            return multiply(self, other)
        return QSU2Element({k: v * other for k, v in self.terms.items()}, self.q)

    def __rmul__(self, scalar):
        return QSU2Element({k: scalar * v for k, v in self.terms.items()}, self.q)

    def __truediv__(self, scalar):
        return QSU2Element({k: v / scalar for k, v in self.terms.items()}, self.q)

    def __pow__(self, n: int):
        out = QSU2Element.one(self.q)
        for _ in range(n):
            out = out * self
        return out

    def coeff(self, key) -> complex:
        return self.terms.get(tuple(key), 0j)

    def max_abs_diff(self, other) -> float:
        d = (self - other).terms
        return max((abs(v) for v in d.values()), default=0.0)

    def to_dict(self) -> dict:
        return {key_label(k): [float(v.real), float(v.imag)] for k, v in sorted(self.terms.items())}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v:.6g}){key_label(k)}" for k, v in sorted(self.terms.items()))


def multiply(x: QSU2Element, y: QSU2Element) -> QSU2Element:
    x._check(y)
    out: dict = {}
    for k1, v1 in x.terms.items():
        for k2, v2 in y.terms.items():
            for k, c in _mul_keys(k1, k2, x.q):
                out[k] = out.get(k, 0) + v1 * v2 * c
    return QSU2Element(out, x.q)


# -- Hopf structure ------------------------------------------------------------------

_DELTA_GEN = {
    "a": ((("a",), ("a",)), (("b",), ("c",))),
    "b": ((("b",), ("d",)), (("a",), ("b",))),
    "c": ((("c",), ("a",)), (("d",), ("c",))),
    "d": ((("d",), ("d",)), (("c",), ("b",))),
}


@lru_cache(maxsize=None)
def coproduct_key(key, q) -> tuple:
    """Coproduct of a monomial: tuple of ``((left_key, right_key), coeff)``."""
    tensor = {((0, 0, 0), (0, 0, 0)): 1.0 + 0j}
    for letter in key_word(key):
        new: dict = {}
        for (l1, r1), c in tensor.items():
            for lw, rw in _DELTA_GEN[letter]:
                for kl, cl in normal_order(key_word(l1) + lw, q):
                    for kr, cr in normal_order(key_word(r1) + rw, q):
                        new[(kl, kr)] = new.get((kl, kr), 0) + c * cl * cr
        tensor = {k: v for k, v in new.items() if v != 0}
    return tuple(tensor.items())


def coproduct(x: QSU2Element) -> dict:
    """``Delta(x)`` as ``{(left_key, right_key): coeff}``."""
    out: dict = {}
    for k, v in x.terms.items():
        for pair, c in coproduct_key(k, x.q):
            out[pair] = out.get(pair, 0) + v * c
    return {k: v for k, v in out.items() if v != 0}


def counit(x: QSU2Element) -> complex:
    return sum((v * counit_key(k) for k, v in x.terms.items()), 0j)


def tensor_mul(s: dict, t: dict, q: float) -> dict:
    """Product in ``H (x) H`` of tensors given as ``{(left_key, right_key): coeff}``."""
    out: dict = {}
    for (l1, r1), c1 in s.items():
        for (l2, r2), c2 in t.items():
            for kl, cl in _mul_keys(l1, l2, q):
                for kr, cr in _mul_keys(r1, r2, q):
                    out[(kl, kr)] = out.get((kl, kr), 0) + c1 * c2 * cl * cr
    return {k: v for k, v in out.items() if v != 0}


_STAR_GEN = {"a": (1.0, "d"), "d": (1.0, "a"), "c": ("-q", "b"), "b": ("-1/q", "c")}
_ANTIPODE_GEN = {"a": (1.0, "d"), "d": (1.0, "a"), "b": ("-q", "b"), "c": ("-1/q", "c")}


def _factor(entry, q):
    return {"-q": -q, "-1/q": -1 / q}.get(entry, entry)


def _anti_map(x: QSU2Element, table, conjugate: bool) -> QSU2Element:
    q = x.q
    out: dict = {}
    for k, v in x.terms.items():
        coeff = np.conj(v) if conjugate else v
        word = []
        for letter in reversed(key_word(k)):
            f, img = table[letter]
            coeff = coeff * _factor(f, q)
            word.append(img)
        for nk, c in normal_order(tuple(word), q):
            out[nk] = out.get(nk, 0) + coeff * c
    return QSU2Element(out, q)


def star(x: QSU2Element) -> QSU2Element:
    """Antilinear antimultiplicative involution with ``a* = d``, ``c* = -q b``, ``b* = -c/q``."""
    return _anti_map(x, _STAR_GEN, True)


def antipode(x: QSU2Element) -> QSU2Element:
    """Linear antimultiplicative ``S`` with ``S(a) = d``, ``S(b) = -q b``, ``S(c) = -c/q``."""
    return _anti_map(x, _ANTIPODE_GEN, False)


# -- calculus -----------------------------------------------------------------------

FORMS = ("0", "+", "-")
_TAU_POWER = {"0": 2, "+": 1, "-": 1}


def omega_generators(q: float) -> dict:
    """``omega`` on the generators, as coefficients on ``e^0, e^+, e^-``."""
    return {
        "a": {"0": q ** -2},
        "b": {"-": 1 / q},
        "c": {"+": q ** 2},
        "d": {"0": -1.0},
    }


def _d_generator(letter, q):
    """``d(letter)`` as ``{form: element}`` with functions on the left of the forms."""
    g = lambda name: QSU2Element.generator(name, q)  # noqa: E731
    return {
        "a": {"0": g("a"), "+": q * g("b")},
        "b": {"-": g("a"), "0": -q ** -2 * g("b")},
        "c": {"0": g("c"), "+": q * g("d")},
        "d": {"-": g("c"), "0": -q ** -2 * g("d")},
    }[letter]


def _tau(x: QSU2Element, form: str, inverse: bool = False) -> QSU2Element:
    # e^i y = q^{p|y|} y e^i on monomials, p = 2 for e^0 and 1 for e^+-
    p = _TAU_POWER[form] * (-1 if inverse else 1)
    return QSU2Element({k: v * x.q ** (p * grade(k)) for k, v in x.terms.items()}, x.q)


def exterior_derivative(x: QSU2Element) -> dict:
    """``dx`` as ``{form: coefficient}`` with coefficients to the left of ``e^0, e^+, e^-``.

    Built from the values on generators by the Leibniz rule, commuting forms
    past functions with ``e^i y = tau_i(y) e^i``.
    """
    q = x.q
    out = {f: QSU2Element({}, q) for f in FORMS}
    for k, v in x.terms.items():
        word = key_word(k)
        for j, letter in enumerate(word):
            left = QSU2Element.word(word[:j], q)
            right = QSU2Element.word(word[j + 1:], q)
            for form, coef in _d_generator(letter, q).items():
                out[form] = out[form] + v * (left * coef * _tau(right, form))
    return out


def apply_field(coeffs: Mapping[str, complex], form_components: Mapping) -> QSU2Element:
    """Right-module evaluation ``X(sum_i f_i e^i) = sum_i X^i tau_i^{-1}(f_i)``."""
    q = next(iter(form_components.values())).q
    out = QSU2Element({}, q)
    for form, f in form_components.items():
        x = coeffs.get(form, 0)
        if x:
            out = out + x * _tau(f, form, inverse=True)
    return out


# -- the nu elements -----------------------------------------------------------------

NU_KINDS = ("nu0", "nu_plus", "nu_minus")


def nu_generator_values(kind: str, q: float) -> dict:
    """Pairings of ``nu`` with the generators, read off from ``omega``."""
    form = {"nu0": "0", "nu_plus": "+", "nu_minus": "-"}[kind]
    return {g: vals.get(form, 0.0) for g, vals in omega_generators(q).items()}


def rho(kind: str, q: float) -> np.ndarray:
    """2x2 matrix of ``nu`` in the fundamental representation, rows/cols ``(a b; c d)``."""
    if kind == "nu0":
        return np.diag([q ** -2, -1.0])
    if kind == "nu_plus":
        return np.array([[0, 0], [q ** 2, 0]], dtype=float)
    if kind == "nu_minus":
        return np.array([[0, 1 / q], [0, 0]], dtype=float)
    raise ValueError(f"unknown nu element {kind!r}")


@lru_cache(maxsize=None)
def _nu_word(kind, word, q):
    if not word:
        return 0.0
    seed = nu_generator_values(kind, q)
    if len(word) == 1:
        return seed[word[0]]
    head, rest = word[0], word[1:]
    eps_head = 1.0 if head in "ad" else 0.0
    eps_rest = 1.0 if all(x in "ad" for x in rest) else 0.0
    power = 2 if kind == "nu0" else 1
    return seed[head] * eps_rest + q ** (-power * GRADE[head]) * eps_head * _nu_word(kind, rest, q)


def nu_apply(kind: str, x: QSU2Element) -> complex:
    """Evaluate ``nu`` on ``x`` using the twisted product rule seeded by generator values."""
    if kind not in NU_KINDS:
        raise ValueError(f"unknown nu element {kind!r}")
    return sum((v * _nu_word(kind, key_word(k), x.q) for k, v in x.terms.items()), 0j)


def q_integer(n: int, q2: float) -> float:
    """``[n]_{q2} = (1 - q2^n) / (1 - q2)``, with ``[n]_1 = n``."""
    if q2 == 1:
        return float(n)
    return (1 - q2 ** n) / (1 - q2)


def nu0_closed(key, q: float) -> float:
    """``-[-|y|]_{q^2} eps(y)`` on a monomial."""
    return -q_integer(-grade(key), q * q) * counit_key(key)


def exp_nu0(t: float, key, q: float) -> complex:
    """``exp(i t nu_0)`` on a monomial: ``exp(-i t [-|y|]_{q^2}) eps(y)``."""
    return cmath.exp(-1j * t * q_integer(-grade(key), q * q)) * counit_key(key)


class DualFunctional:
    """A linear functional on ``C_q[SU_2]`` given by its values on monomials.

    Products use the coproduct, ``(fg)(y) = f(y_(1)) g(y_(2))``; powers are memoised.
    """

    def __init__(self, on_key: Callable, q: float):
        self.on_key = on_key
        self.q = q
        self._powers: dict = {}

    @classmethod
    def combination(cls, coeffs: Mapping[str, complex], q: float) -> "DualFunctional":
        def on_key(k):
            w = key_word(k)
            return sum(c * _nu_word(kind, w, q) for kind, c in coeffs.items())
        return cls(on_key, q)

    def __call__(self, x: QSU2Element) -> complex:
        return sum((v * self.on_key(k) for k, v in x.terms.items()), 0j)

    def power(self, n: int, key) -> complex:
        """``f^n`` on a monomial; ``f^0 = eps``."""
        if n == 0:
            return counit_key(key)
        if n == 1:
            return self.on_key(key)
        memo = (n, key)
        if memo not in self._powers:
            self._powers[memo] = sum(
                (c * self.on_key(k1) * self.power(n - 1, k2)
                 for (k1, k2), c in coproduct_key(key, self.q)), 0j)
        return self._powers[memo]

    def exp_series(self, s: complex, key, nterms: int = 40) -> complex:
        """``sum_{n < nterms} s^n f^n(y) / n!`` on a monomial."""
        total, fact = 0j, 1.0
        for n in range(nterms):
            if n:
                fact *= n
            total += s ** n * self.power(n, key) / fact
        return total


def field_functional(gamma: complex, delta: complex, q: float) -> DualFunctional:
    """``X o omega = gamma nu_+ + delta nu_-`` for ``X = gamma e_+ + delta e_-``."""
    return DualFunctional.combination({"nu_plus": gamma, "nu_minus": delta}, q)


# -- evolution -----------------------------------------------------------------------

_PARTNER = {"a": ("b", "gamma"), "b": ("a", "delta"), "c": ("d", "gamma"), "d": ("c", "delta")}


def _sinhc(z2: complex) -> complex:
    """``sinh(z)/z`` as a function of ``z^2``."""
    if abs(z2) < 1e-8:
        return 1 + z2 / 6 + z2 ** 2 / 120 + z2 ** 3 / 5040
    z = cmath.sqrt(z2)
    return cmath.sinh(z) / z


def evolve_generator(g: str, gamma: complex, delta: complex, t: float, q: float,
                     branch: int = 1) -> QSU2Element:
    """``m(t)`` for ``m(0)`` a generator, under ``X = gamma e_+ + delta e_-``.

    ``m(t) = g cosh(t k) - g' C sinh(t k)/k`` with ``k = sqrt(q gamma delta)``,
    ``(g', C) = (b, q^2 gamma), (a, delta/q), (d, q^2 gamma), (c, delta/q)``
    for ``g = a, b, c, d``.  ``branch = -1`` takes the other square root; the
    result does not depend on it.  For ``gamma delta = 0`` the ``sinh(tk)/k``
    factor is taken as its limit ``t``.
    """
    if g not in _PARTNER:
        raise ValueError(f"unknown generator {g!r}")
    partner, which = _PARTNER[g]
    C = q ** 2 * gamma if which == "gamma" else delta / q
    k2 = q * gamma * delta
    if k2 == 0:
        ch, sh_over_k = 1.0, t
    else:
        k = branch * cmath.sqrt(k2)
        ch = cmath.cosh(t * k)
        sh_over_k = t * _sinhc((t * k) ** 2)
    gen = QSU2Element.generator
    return ch * gen(g, q) - (C * sh_over_k) * gen(partner, q)


def evolve_series(m0: QSU2Element, gamma: complex, delta: complex, t: float,
                  nterms: int = 40) -> QSU2Element:
    """``m(t) = m0_(1) exp(-t x)(m0_(2))`` with the exponential as a truncated series."""
    x = field_functional(gamma, delta, m0.q)
    out: dict = {}
    for (k1, k2), c in coproduct(m0).items():
        out[k1] = out.get(k1, 0) + c * x.exp_series(-t, k2, nterms)
    return QSU2Element(out, m0.q)


def evolve_nu0(m0: QSU2Element, t: float) -> QSU2Element:
    """``m(t)`` for the real field ``X = i e_0``: each monomial ``y`` picks up ``exp(i t [-|y|]_{q^2})``."""
    q2 = m0.q ** 2
    return QSU2Element({k: v * cmath.exp(1j * t * q_integer(-grade(k), q2))
                        for k, v in m0.terms.items()}, m0.q)


def real_delta(gamma: complex, q: float) -> complex:
    """The ``delta`` making ``gamma e_+ + delta e_-`` real: ``delta = -q conj(gamma)``."""
    return -q * np.conj(gamma)


def field_derivative(m: QSU2Element, gamma: complex, delta: complex) -> QSU2Element:
    """``X(dm)`` computed from the calculus relations, independent of the coproduct."""
    return apply_field({"+": gamma, "-": delta}, exterior_derivative(m))


# -- Haar integral and states -------------------------------------------------------

def haar_key(key, q: float) -> float:
    n, r, s = key
    if n != 0 or r != s:
        return 0.0
    return (-1) ** r * q ** r / q_integer(r + 1, q * q)


def haar(x: QSU2Element) -> complex:
    """Haar integral: zero on every basis monomial except ``(bc)^r``."""
    return sum((v * haar_key(k, x.q) for k, v in x.terms.items()), 0j)


def state_value(m: QSU2Element, h: QSU2Element) -> complex:
    """``phi(m h m*)``."""
    m._check(h)
    return haar(m * h * star(m))
