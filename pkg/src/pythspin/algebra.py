"""Composition algebras over exact integers: complex, duplex, quaternion,
kwaternion (split quaternion) and octonion numbers.

Each kind carries an explicit multiplication table: ``table[i][j] = (sign, k)``
means ``e_i * e_j = sign * e_k``. The tables are checked when the module is
imported.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from .errors import KindMismatch, NullNorm
from .matrices import exact

_COMPLEX = (
    ((+1, 0), (+1, 1)),
    ((+1, 1), (-1, 0)),
)

# split-complex: I^2 = +1
_DUPLEX = (
    ((+1, 0), (+1, 1)),
    ((+1, 1), (+1, 0)),
)

_QUATERNION = (
    ((+1, 0), (+1, 1), (+1, 2), (+1, 3)),
    ((+1, 1), (-1, 0), (+1, 3), (-1, 2)),
    ((+1, 2), (-1, 3), (-1, 0), (+1, 1)),
    ((+1, 3), (+1, 2), (-1, 1), (-1, 0)),
)

# i^2 = j^2 = 1, k^2 = -1, ij = k, jk = -i, ki = -j, distinct units anticommute
_KWATERNION = (
    ((+1, 0), (+1, 1), (+1, 2), (+1, 3)),
    ((+1, 1), (+1, 0), (+1, 3), (+1, 2)),
    ((+1, 2), (-1, 3), (+1, 0), (-1, 1)),
    ((+1, 3), (-1, 2), (+1, 1), (-1, 0)),
)

# Cayley-Dickson double of the quaternions, (a, b)(c, d) = (ac - d*b, da + bc*),
# with e4..e7 = (0, 1), (0, i), (0, j), (0, k). Positive definite.
_OCTONION = (
    ((+1, 0), (+1, 1), (+1, 2), (+1, 3), (+1, 4), (+1, 5), (+1, 6), (+1, 7)),
    ((+1, 1), (-1, 0), (+1, 3), (-1, 2), (+1, 5), (-1, 4), (-1, 7), (+1, 6)),
    ((+1, 2), (-1, 3), (-1, 0), (+1, 1), (+1, 6), (+1, 7), (-1, 4), (-1, 5)),
    ((+1, 3), (+1, 2), (-1, 1), (-1, 0), (+1, 7), (-1, 6), (+1, 5), (-1, 4)),
    ((+1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (+1, 1), (+1, 2), (+1, 3)),
    ((+1, 5), (+1, 4), (-1, 7), (+1, 6), (-1, 1), (-1, 0), (-1, 3), (+1, 2)),
    ((+1, 6), (+1, 7), (+1, 4), (-1, 5), (-1, 2), (+1, 3), (-1, 0), (-1, 1)),
    ((+1, 7), (-1, 6), (+1, 5), (+1, 4), (-1, 3), (-1, 2), (+1, 1), (-1, 0)),
)


class AlgebraKind(Enum):
    COMPLEX = ("Complex", _COMPLEX, ("1", "i"))
    DUPLEX = ("Duplex", _DUPLEX, ("1", "I"))
    QUATERNION = ("Quaternion", _QUATERNION, ("1", "i", "j", "k"))
    KWATERNION = ("Kwaternion", _KWATERNION, ("1", "i", "j", "k"))
    OCTONION = ("Octonion", _OCTONION, tuple(f"e{i}" for i in range(8)))

    def __init__(self, label, table, units):
        self.label = label
        self.table = table
        self.units = units
        self.dim = len(table)
        # sign of the norm form on each basis unit: conj(e_i) e_i = -e_i^2 for i > 0
        self.norm_signs = (1,) + tuple(-table[i][i][0] for i in range(1, self.dim))

    @property
    def signature(self) -> Tuple[int, int]:
        r = sum(1 for s in self.norm_signs if s > 0)
        return r, self.dim - r

    @property
    def associative(self) -> bool:
        return self is not AlgebraKind.OCTONION

    @classmethod
    def parse(cls, name: str) -> "AlgebraKind":
        for k in cls:
            if k.label.lower() == name.lower() or k.name.lower() == name.lower():
                return k
        raise ValueError(f"unknown algebra {name!r}")


@dataclass(frozen=True)
class Element:
    kind: AlgebraKind
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.kind.dim:
            raise ValueError(
                f"{self.kind.label} needs {self.kind.dim} coefficients, got {len(self.coeffs)}"
            )

    @property
    def real(self):
        return self.coeffs[0]

    def is_real(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def _check(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.kind is not self.kind:
            raise KindMismatch(f"{self.kind.label} vs {other.kind.label}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Element(self.kind, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Element(self.kind, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Element(self.kind, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return Element(self.kind, tuple(a * other for a in self.coeffs))

    def __rmul__(self, other):
        return Element(self.kind, tuple(other * a for a in self.coeffs))

    def __str__(self):
        terms = [f"{c}{'' if u == '1' else u}" for c, u in zip(self.coeffs, self.kind.units) if c]
        return " + ".join(terms).replace("+ -", "- ") or "0"


def element(kind: AlgebraKind, *coeffs) -> Element:
    return Element(kind, tuple(coeffs))


def zero(kind: AlgebraKind) -> Element:
    return Element(kind, (0,) * kind.dim)


def unit(kind: AlgebraKind) -> Element:
    return basis(kind, 0)


def basis(kind: AlgebraKind, i: int) -> Element:
    c = [0] * kind.dim
    c[i] = 1
    return Element(kind, tuple(c))


def mul(a: Element, b: Element) -> Element:
    if a.kind is not b.kind:
        raise KindMismatch(f"cannot multiply {a.kind.label} by {b.kind.label}")
    table = a.kind.table
    out = [0] * a.kind.dim
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        row = table[i]
        for j, y in enumerate(b.coeffs):
            if y:
                s, k = row[j]
                out[k] += s * x * y
    return Element(a.kind, tuple(out))


def conj(a: Element) -> Element:
    c = a.coeffs
    return Element(a.kind, (c[0],) + tuple(-x for x in c[1:]))


def norm2(a: Element):
    """Real part of conj(a) * a, i.e. the (possibly indefinite) quadratic norm."""
    return sum(s * x * x for s, x in zip(a.kind.norm_signs, a.coeffs))


def inverse(a: Element) -> Element:
    n = norm2(a)
    if n == 0:
        raise NullNorm(f"{a} has zero norm")
    if isinstance(n, float):
        return conj(a) * (1.0 / n)
    return Element(a.kind, tuple(exact(Fraction(x) / n) for x in conj(a).coeffs))


def _self_test():
    for kind in AlgebraKind:
        t, d = kind.table, kind.dim
        if any(len(row) != d for row in t):
            raise RuntimeError(f"{kind.label}: table is not square")
        for i in range(d):
            if t[0][i] != (1, i) or t[i][0] != (1, i):
                raise RuntimeError(f"{kind.label}: e0 is not the unit")
            row = [k for _, k in t[i]]
            if sorted(row) != list(range(d)) or any(s not in (1, -1) for s, _ in t[i]):
                raise RuntimeError(f"{kind.label}: row {i} is not a signed permutation")
            if t[i][i][1] != 0:
                raise RuntimeError(f"{kind.label}: e{i}^2 is not real")
            for j in range(1, d):
                if i and j != i and (t[i][j][1] != t[j][i][1] or t[i][j][0] != -t[j][i][0]):
                    raise RuntimeError(f"{kind.label}: e{i}, e{j} do not anticommute")
    k = _KWATERNION
    I, J, K = 1, 2, 3
    rules = {(I, I): (1, 0), (J, J): (1, 0), (K, K): (-1, 0),
             (I, J): (1, K), (J, K): (-1, I), (K, I): (-1, J)}
    for (x, y), want in rules.items():
        if k[x][y] != want:
            raise RuntimeError("kwaternion table disagrees with its defining rules")


_self_test()
