"""Functions on a group and the dual group algebra.

A :class:`FunctionElement` is ``f = sum_g f(g) delta_g`` in the function
algebra; a :class:`DualVector` is a functional ``beta`` stored through its
values ``beta(delta_g)``, i.e. the element ``sum_g beta(delta_g) z_g`` of the
group algebra.  The product on dual vectors is convolution,
``(alpha * beta)(delta_g) = sum_{xy=g} alpha(delta_x) beta(delta_y)``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup, IntWindow, WindowOverflow


def _as_coeffs(values, n):
    arr = np.array(values, dtype=complex).reshape(-1)
    if arr.shape != (n,):
        raise ValueError(f"expected {n} coefficients, got {arr.size}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class DualVector:
    group: FiniteGroup | IntWindow
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs, self.group.order))

    def __getitem__(self, label):
        return self.coeffs[self.group.index(label)]

    def __add__(self, other):
        _same_group(self, other)
        return DualVector(self.group, self.coeffs + other.coeffs)

    def __sub__(self, other):
        _same_group(self, other)
        return DualVector(self.group, self.coeffs - other.coeffs)

    def __neg__(self):
        return DualVector(self.group, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, DualVector):
            return convolve(self, other)
        return DualVector(self.group, self.coeffs * other)

    def __rmul__(self, scalar):
        return DualVector(self.group, scalar * self.coeffs)

    def __truediv__(self, scalar):
        return DualVector(self.group, self.coeffs / scalar)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def pair(self, f: "FunctionElement") -> complex:
        """Evaluate the functional on ``f``: ``sum_g beta(delta_g) f(g)``."""
        _same_group(self, f)
        return complex(self.coeffs @ f.values)

    def to_json(self) -> str:
        return json.dumps({"group": self.group.name,
                           "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs]})

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for label, c in zip(self.group.labels, self.coeffs):
            writer.writerow([label, repr(float(c.real)), repr(float(c.imag))])
        return buf.getvalue()

    @classmethod
    def from_json(cls, text: str, group):
        data = json.loads(text)
        if data["group"] != group.name:
            raise ValueError(f"vector belongs to {data['group']!r}, not {group.name!r}")
        return cls(group, [complex(re, im) for re, im in data["coeffs"]])

    @classmethod
    def from_csv(cls, text: str, group):
        coeffs = np.zeros(group.order, dtype=complex)
        for label, re, im in csv.reader(io.StringIO(text)):
            coeffs[group.index(label)] = complex(float(re), float(im))
        return cls(group, coeffs)


@dataclass(frozen=True, eq=False)
class FunctionElement:
    group: FiniteGroup | IntWindow
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _as_coeffs(self.values, self.group.order))

    def __mul__(self, other):
        if isinstance(other, FunctionElement):
            _same_group(self, other)
            return FunctionElement(self.group, self.values * other.values)
        return FunctionElement(self.group, self.values * other)

    __rmul__ = __mul__

    def __add__(self, other):
        _same_group(self, other)
        return FunctionElement(self.group, self.values + other.values)

    def __sub__(self, other):
        _same_group(self, other)
        return FunctionElement(self.group, self.values - other.values)

    def conj(self) -> "FunctionElement":
        return FunctionElement(self.group, self.values.conj())

    def right_translate(self, a: int) -> "FunctionElement":
        """``R_a f (g) = f(g a)`` for a group element index ``a``.

        On an integer window, values shifted in from outside are taken as zero.
        """
        if isinstance(self.group, IntWindow):
            shift = self.group.value(a)
            out = np.zeros_like(self.values)
            n = self.group.order
            if shift >= 0:
                out[:n - shift] = self.values[shift:]
            else:
                out[-shift:] = self.values[:n + shift]
            return FunctionElement(self.group, out)
        table = self.group.mul_table
        return FunctionElement(self.group, self.values[table[:, a]])


def _same_group(x, y):
    if x.group is not y.group and x.group != y.group:
        raise ValueError("operands live on different groups")


def delta(group, label) -> FunctionElement:
    vals = np.zeros(group.order, dtype=complex)
    vals[group.index(label)] = 1
    return FunctionElement(group, vals)


def constant(group, c=1.0) -> FunctionElement:
    return FunctionElement(group, np.full(group.order, c, dtype=complex))


def basis_vector(group, label) -> DualVector:
    """The group-like element ``z_g``: evaluation at ``g``."""
    vals = np.zeros(group.order, dtype=complex)
    vals[group.index(label)] = 1
    return DualVector(group, vals)


def counit_vector(group) -> DualVector:
    """The counit ``epsilon``, the unit of the dual algebra."""
    vals = np.zeros(group.order, dtype=complex)
    vals[group.identity_index] = 1
    return DualVector(group, vals)


def convolve(alpha: DualVector, beta: DualVector) -> DualVector:
    """Product in the group algebra.

    On an :class:`IntWindow` the product must fit inside the window; mass that
    would land outside raises :class:`WindowOverflow`.
    """
    _same_group(alpha, beta)
    group = alpha.group
    if isinstance(group, IntWindow):
        full = np.convolve(alpha.coeffs, beta.coeffs)
        r = group.radius
        if np.any(full[:r] != 0) or np.any(full[-r:] != 0):
            raise WindowOverflow("convolution support exceeds the window; enlarge the radius")
        return DualVector(group, full[r:-r])
    out = np.zeros(group.order, dtype=complex)
    np.add.at(out, group.mul_table.ravel(), np.outer(alpha.coeffs, beta.coeffs).ravel())
    return DualVector(group, out)


def haar_finite(f: FunctionElement) -> complex:
    """Normalised Haar measure ``(1/|G|) sum_g f(g)``."""
    return complex(f.values.mean())


def haar_Z(f: FunctionElement) -> complex:
    """Counting measure on the integers, summed over the window."""
    if not isinstance(f.group, IntWindow):
        raise TypeError("haar_Z needs a function on an IntWindow")
    return complex(f.values.sum())


def pairing_matrix(group: FiniteGroup) -> np.ndarray:
    """``P[i, j] = <z_{g_i}, delta_{g_j}>``; the identity for a nondegenerate pairing."""
    return np.array([[basis_vector(group, group.elements[i]).pair(delta(group, group.elements[j]))
                      for j in range(group.order)] for i in range(group.order)])
