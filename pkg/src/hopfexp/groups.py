"""Finite groups given by multiplication tables, and a finite window onto the integers.

Everything downstream works with element *indices*.  A :class:`FiniteGroup`
stores a full Cayley table; :class:`IntWindow` presents the integers
``-N..N`` with addition, raising :class:`WindowOverflow` when a product
leaves the window.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np


class WindowOverflow(ValueError):
    """A product of window elements fell outside the window."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group as an indexed element list with a Cayley table.

    ``mul_table[i, j]`` is the index of ``elements[i] * elements[j]``.
    """

    name: str
    elements: tuple
    mul_table: np.ndarray
    identity_index: int = field(init=False)
    inv_table: np.ndarray = field(init=False)

    def __post_init__(self):
        table = np.asarray(self.mul_table, dtype=np.intp)
        n = len(self.elements)
        if table.shape != (n, n):
            raise ValueError(f"multiplication table must be {n}x{n}, got {table.shape}")
        if table.min() < 0 or table.max() >= n:
            raise ValueError("multiplication table refers to unknown elements")
        table.setflags(write=False)
        object.__setattr__(self, "mul_table", table)

        rng = np.arange(n)
        ids = [e for e in range(n) if (table[e] == rng).all() and (table[:, e] == rng).all()]
        if len(ids) != 1:
            raise ValueError("multiplication table has no two-sided identity")
        e = ids[0]
        inv = np.empty(n, dtype=np.intp)
        for i in range(n):
            right = np.flatnonzero(table[i] == e)
            if len(right) != 1 or table[right[0], i] != e:
                raise ValueError(f"element {self.elements[i]!r} has no two-sided inverse")
            inv[i] = right[0]
        inv.setflags(write=False)
        object.__setattr__(self, "identity_index", e)
        object.__setattr__(self, "inv_table", inv)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def labels(self) -> list[str]:
        return [str(g) for g in self.elements]

    def _check(self, i):
        if not 0 <= i < self.order:
            raise IndexError(f"element index {i} out of range for group of order {self.order}")

    def mul(self, i: int, j: int) -> int:
        self._check(i)
        self._check(j)
        return int(self.mul_table[i, j])

    def inv(self, i: int) -> int:
        self._check(i)
        return int(self.inv_table[i])

    def index(self, label) -> int:
        """Index of an element given either the element itself or its string label."""
        for k, g in enumerate(self.elements):
            if g == label or str(g) == str(label):
                return k
        raise KeyError(f"{label!r} is not an element of {self.name}")

    def is_associative(self) -> bool:
        t = self.mul_table
        # (ij)k == i(jk) for all triples, vectorised over k
        return all((t[t[i, j]] == t[i][t[j]]).all() for i in range(self.order) for j in range(self.order))


def _compose(p, r, composition):
    # permutations as tuples of images of 0..n-1
    if composition == "left-to-right":  # apply p first, then r
        return tuple(r[p[k]] for k in range(len(p)))
    return tuple(p[r[k]] for k in range(len(p)))


def permutation_group(name: str, perms: Sequence[tuple], labels: Sequence[str] | None = None,
                      composition: str = "left-to-right") -> FiniteGroup:
    """Build a group from a list of permutations closed under composition.

    ``composition`` fixes the meaning of ``g*h``: ``"left-to-right"`` applies
    ``g`` first, ``"right-to-left"`` is ordinary function composition ``g(h(.))``.
    """
    if composition not in ("left-to-right", "right-to-left"):
        raise ValueError(f"unknown composition convention {composition!r}")
    perms = [tuple(p) for p in perms]
    where = {p: k for k, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.intp)
    for i, j in itertools.product(range(n), repeat=2):
        prod = _compose(perms[i], perms[j], composition)
        if prod not in where:
            raise ValueError("permutations are not closed under composition")
        table[i, j] = where[prod]
    return FiniteGroup(name, tuple(labels) if labels else tuple(perms), table)


def cycle_to_perm(cycle: Sequence[int], n: int) -> tuple:
    """One-based cycle notation, e.g. ``(1, 2, 3)``, to a tuple of zero-based images."""
    img = list(range(n))
    for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
        img[a - 1] = b - 1
    return tuple(img)


S3_LABELS = ("e", "(1,2,3)", "(1,3,2)", "u", "v", "w")
S3_CYCLES = ((1,), (1, 2, 3), (1, 3, 2), (1, 2), (2, 3), (1, 3))


def s3(composition: str = "left-to-right") -> FiniteGroup:
    """The symmetric group on three letters in the order
    ``e, (1,2,3), (1,3,2), u=(1,2), v=(2,3), w=(1,3)``.

    The default multiplies left to right (``u*v`` applies ``u`` first, giving
    ``(1,3,2)``).  Pass ``composition="right-to-left"`` for ordinary function
    composition; the transfer matrix then has exactly the textbook block layout
    with rows ``(-X^u, -X^v, -X^w), (-X^v, -X^w, -X^u), ...``.
    """
    perms = [cycle_to_perm(c, 3) for c in S3_CYCLES]
    return permutation_group("S3", perms, S3_LABELS, composition)


def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return FiniteGroup(f"C{n}", tuple(str(k) for k in range(n)), (idx[:, None] + idx[None, :]) % n)


def load_table(path: str | Path, name: str | None = None) -> FiniteGroup:
    """Read a group from a plain-text table.

    The first non-comment line lists the element labels; each following line
    is one row of the multiplication table, ``row i, column j`` holding the
    label of ``g_i * g_j``.  ``#`` starts a comment.
    """
    path = Path(path)
    rows = []
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ValueError(f"{path}: empty group table")
    labels, body = rows[0], rows[1:]
    if len(set(labels)) != len(labels):
        raise ValueError(f"{path}: duplicate element labels")
    where = {g: k for k, g in enumerate(labels)}
    if len(body) != len(labels) or any(len(r) != len(labels) for r in body):
        raise ValueError(f"{path}: table must be {len(labels)}x{len(labels)}")
    try:
        table = [[where[x] for x in r] for r in body]
    except KeyError as exc:
        raise ValueError(f"{path}: unknown element {exc.args[0]!r} in table") from None
    group = FiniteGroup(name or path.stem, tuple(labels), np.array(table))
    if not group.is_associative():
        raise ValueError(f"{path}: multiplication is not associative")
    return group


PRESETS = {"S3": s3}


def get_group(name: str) -> FiniteGroup:
    try:
        return PRESETS[name]()
    except KeyError:
        raise KeyError(f"no built-in group named {name!r}; known: {sorted(PRESETS)}") from None


@dataclass(frozen=True)
class IntWindow:
    """The integers ``-radius..radius``; integer ``n`` sits at position ``n + radius``."""

    radius: int

    def __post_init__(self):
        if int(self.radius) != self.radius or self.radius < 1:
            raise ValueError("window radius must be a positive integer")

    name = "Z"

    @property
    def order(self) -> int:
        return 2 * self.radius + 1

    @property
    def identity_index(self) -> int:
        return self.radius

    @property
    def elements(self) -> tuple:
        return tuple(range(-self.radius, self.radius + 1))

    @property
    def labels(self) -> list[str]:
        return [str(n) for n in self.elements]

    def position(self, n: int) -> int:
        if abs(n) > self.radius:
            raise WindowOverflow(f"{n} lies outside the window |n| <= {self.radius}")
        return n + self.radius

    def value(self, pos: int) -> int:
        if not 0 <= pos < self.order:
            raise IndexError(f"position {pos} out of range for window of size {self.order}")
        return pos - self.radius

    def index(self, label) -> int:
        return self.position(int(label))

    def mul(self, i: int, j: int) -> int:
        return self.position(self.value(i) + self.value(j))

    def inv(self, i: int) -> int:
        return self.position(-self.value(i))
