"""Left covariant first-order calculi on functions on a group.

A calculus is fixed by a subset ``C`` of non-identity elements.  Forms are
spanned by invariant forms ``e^a`` with ``e^a f = R_a(f) e^a`` and
``df = sum_a (R_a f - f) e^a``.  Invariant vector fields ``X = sum X^a e_a``
are the dual basis combinations; composing with the invariant derivative
gives the dual vector ``X o omega``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .groups import FiniteGroup, IntWindow, WindowOverflow, get_group
from .hopf import DualVector, FunctionElement, delta, haar_finite

TOL = 1e-12


class UnsupportedCalculus(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GroupCalculus:
    group: FiniteGroup | IntWindow
    cset: tuple

    def __post_init__(self):
        cset = tuple(int(a) for a in self.cset)
        if len(set(cset)) != len(cset):
            raise ValueError("calculus subset has repeated elements")
        for a in cset:
            if not 0 <= a < self.group.order:
                raise IndexError(f"element index {a} out of range")
            if a == self.group.identity_index:
                raise ValueError("the identity cannot belong to the calculus subset")
        object.__setattr__(self, "cset", cset)

    @classmethod
    def from_labels(cls, group, labels) -> "GroupCalculus":
        return cls(group, tuple(group.index(g) for g in labels))

    @property
    def star_closed(self) -> bool:
        return all(self.group.inv(a) in self.cset for a in self.cset)

    @property
    def labels(self) -> list[str]:
        return [self.group.labels[a] for a in self.cset]


def calculus_from_config(config: Mapping) -> GroupCalculus:
    """``{"group": "S3", "cset": ["u", "v", "w"]}`` -> calculus."""
    return GroupCalculus.from_labels(get_group(config["group"]), config["cset"])


def integer_calculus(radius: int) -> GroupCalculus:
    """The calculus ``C = {+1, -1}`` on the integer window of the given radius."""
    w = IntWindow(radius)
    return GroupCalculus(w, (w.position(1), w.position(-1)))


@dataclass(frozen=True, eq=False)
class InvariantVectorField:
    calculus: GroupCalculus
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=complex).reshape(-1)
        if arr.shape != (len(self.calculus.cset),):
            raise ValueError(f"need one coefficient per element of C ({len(self.calculus.cset)})")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_mapping(cls, calculus, values: Mapping) -> "InvariantVectorField":
        g = calculus.group
        coeffs = np.zeros(len(calculus.cset), dtype=complex)
        for label, x in values.items():
            coeffs[calculus.cset.index(g.index(label))] = x
        return cls(calculus, coeffs)

    def component(self, label) -> complex:
        g = self.calculus.group
        return complex(self.coeffs[self.calculus.cset.index(g.index(label))])

    def __add__(self, other):
        return InvariantVectorField(self.calculus, self.coeffs + other.coeffs)

    def __mul__(self, scalar):
        return InvariantVectorField(self.calculus, self.coeffs * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return InvariantVectorField(self.calculus, -self.coeffs)

    def on_form(self, f_by_a: Mapping[int, FunctionElement]) -> FunctionElement:
        """Apply ``X`` to the 1-form ``sum_a f_a e^a`` (functions written on the left).

        ``X`` is a right-module map, so each term is first rewritten as
        ``e^a R_{a^-1}(f_a)`` and then ``X(e^a) = X^a`` is taken out.
        """
        g = self.calculus.group
        out = np.zeros(g.order, dtype=complex)
        for x, a in zip(self.coeffs, self.calculus.cset):
            if a in f_by_a:
                out += x * f_by_a[a].right_translate(g.inv(a)).values
        return FunctionElement(g, out)

    def apply_d(self, f: FunctionElement) -> FunctionElement:
        """``X(df)``."""
        return self.on_form(exterior_derivative(self.calculus, f))


def exterior_derivative(calculus: GroupCalculus, f: FunctionElement) -> dict[int, FunctionElement]:
    """Components of ``df`` on ``e^a``, functions on the left."""
    return {a: f.right_translate(a) - f for a in calculus.cset}


def omega_delta(calculus: GroupCalculus, g: int) -> dict[int, complex]:
    """Coefficients of ``omega(delta_g)`` on the basis ``e^a``, keyed by ``a``."""
    group = calculus.group
    if not 0 <= g < group.order:
        raise IndexError(f"element index {g} out of range")
    if g == group.identity_index:
        return {a: 1.0 for a in calculus.cset}
    ginv = group.inv(g)
    return {a: (-1.0 if a == ginv else 0.0) for a in calculus.cset}


def x_circ_omega(X: InvariantVectorField) -> DualVector:
    """``X o omega`` as a dual vector: ``sum X^a`` at the identity, ``-X^a`` at ``a^-1``."""
    group = X.calculus.group
    vals = np.zeros(group.order, dtype=complex)
    vals[group.identity_index] = X.coeffs.sum()
    for x, a in zip(X.coeffs, X.calculus.cset):
        vals[group.inv(a)] -= x
    return DualVector(group, vals)


def is_real(X: InvariantVectorField, tol: float = TOL) -> bool:
    """Reality condition ``conj(X^a) = -X^{a^-1}`` for every ``a`` in ``C``."""
    cal = X.calculus
    if not cal.star_closed:
        raise UnsupportedCalculus("reality needs a calculus subset closed under inversion")
    group = cal.group
    for x, a in zip(X.coeffs, cal.cset):
        partner = X.coeffs[cal.cset.index(group.inv(a))]
        if abs(np.conj(x) + partner) > tol:
            return False
    return True


def divergence_check(X: InvariantVectorField) -> float:
    """Largest ``|phi(X(d delta_g))|`` over the delta basis, ``phi`` the normalised Haar measure.

    Zero for every invariant field, up to rounding.
    """
    group = X.calculus.group
    if not isinstance(group, FiniteGroup):
        raise TypeError("divergence_check needs a finite group")
    return max(abs(haar_finite(X.apply_d(delta(group, g)))) for g in group.elements)


def field_on_window(Xp: complex, Xm: complex, radius: int) -> InvariantVectorField:
    """``X = Xp e_{+1} + Xm e_{-1}`` on an integer window."""
    return InvariantVectorField(integer_calculus(radius), [Xp, Xm])


__all__ = [
    "GroupCalculus", "InvariantVectorField", "UnsupportedCalculus", "WindowOverflow",
    "calculus_from_config", "integer_calculus", "field_on_window", "exterior_derivative",
    "omega_delta", "x_circ_omega", "is_real", "divergence_check",
]
