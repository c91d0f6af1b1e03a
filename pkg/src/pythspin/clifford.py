"""The Clifford algebra R_{2,1} and its 2x2 real matrix representation.

Generators f1, f2, f3 with f1^2 = f2^2 = 1, f3^2 = -1, pairwise anticommuting.
Multivectors are stored on the basis

    1, f1, f2, f3, f1f2, f2f3, f3f1, f1f2f3

The minimal (4-dim) quotient is the kwaternion algebra, realised by the
matrices sigma0..sigma3.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import algebra
from .algebra import AlgebraKind, Element
from .errors import NotUnit, NotVector
from .matrices import SIGMA0, SIGMA1, SIGMA2, SIGMA3, Mat2, exact

BLADE_NAMES = ("1", "f1", "f2", "f3", "f1f2", "f2f3", "f3f1", "f1f2f3")

# basis element -> (bitmask of generators in ascending order, sign)
# f3f1 = -f1f3, everything else is already ascending
_BLADES = ((0, 1), (1, 1), (2, 1), (4, 1), (3, 1), (6, 1), (5, -1), (7, 1))
_MASK_INDEX = {mask: (i, s) for i, (mask, s) in enumerate(_BLADES)}
_SQUARES = (1, 1, -1)  # f1^2, f2^2, f3^2


def _ascending_product(a: int, b: int):
    """Product of ascending generator blades a and b -> (sign, mask)."""
    sign = 1
    # reordering: each generator of b passes every higher generator of a
    for bit in range(3):
        if b >> bit & 1:
            higher = a >> (bit + 1)
            if bin(higher).count("1") % 2:
                sign = -sign
    common = a & b
    for bit in range(3):
        if common >> bit & 1:
            sign *= _SQUARES[bit]
    return sign, a ^ b


def _build_table():
    table = []
    for ma, sa in _BLADES:
        row = []
        for mb, sb in _BLADES:
            s, m = _ascending_product(ma, mb)
            k, sk = _MASK_INDEX[m]
            row.append((s * sa * sb * sk, k))
        table.append(tuple(row))
    return tuple(table)


PRODUCT_TABLE = _build_table()


@dataclass(frozen=True)
class Multivector:
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 8:
            raise ValueError("a multivector has 8 coefficients")

    @classmethod
    def blade(cls, name: str, coeff=1) -> "Multivector":
        c = [0] * 8
        c[BLADE_NAMES.index(name)] = coeff
        return cls(tuple(c))

    @classmethod
    def vector(cls, x, y, z) -> "Multivector":
        return cls((0, x, y, z, 0, 0, 0, 0))

    @classmethod
    def scalar(cls, a) -> "Multivector":
        return cls((a, 0, 0, 0, 0, 0, 0, 0))

    def grade(self, g: int) -> "Multivector":
        keep = {0: (0,), 1: (1, 2, 3), 2: (4, 5, 6), 3: (7,)}[g]
        return Multivector(tuple(c if i in keep else 0 for i, c in enumerate(self.coeffs)))

    def __add__(self, o):
        return Multivector(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, o):
        return Multivector(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self):
        return Multivector(tuple(-a for a in self.coeffs))

    def __mul__(self, o):
        if isinstance(o, Multivector):
            return geometric_product(self, o)
        return Multivector(tuple(a * o for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self):
        terms = [f"{c}{'' if n == '1' else n}" for c, n in zip(self.coeffs, BLADE_NAMES) if c]
        return " + ".join(terms).replace("+ -", "- ") or "0"


F1 = Multivector.blade("f1")
F2 = Multivector.blade("f2")
F3 = Multivector.blade("f3")
ONE = Multivector.scalar(1)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    out = [0] * 8
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        row = PRODUCT_TABLE[i]
        for j, y in enumerate(b.coeffs):
            if y:
                s, k = row[j]
                out[k] += s * x * y
    return Multivector(tuple(out))


_SIGMA_IMAGE = (SIGMA0, SIGMA1, SIGMA2, SIGMA3, SIGMA3, -SIGMA1, -SIGMA2, -SIGMA0)


def sigma_rep(a: Multivector) -> Mat2:
    """Homomorphism R_{2,1} -> M(2, R). Not injective: 1 and -f1f2f3 coincide."""
    acc = Mat2(0, 0, 0, 0)
    for c, s in zip(a.coeffs, _SIGMA_IMAGE):
        if c:
            acc = acc + s.scale(c)
    return acc


def kwat_to_mat(q: Element) -> Mat2:
    """a + bi + cj + dk -> a s0 + b s1 + c s2 + d s3."""
    if q.kind is not AlgebraKind.KWATERNION:
        raise ValueError("expected a kwaternion")
    a, b, c, d = q.coeffs
    return Mat2(a - c, b + d, b - d, a + c)


def mat_to_kwat(M: Mat2) -> Element:
    half = Fraction(1, 2)
    a = exact(half * (M.a + M.d))
    c = exact(half * (M.d - M.a))
    b = exact(half * (M.b + M.c))
    d = exact(half * (M.b - M.c))
    return Element(AlgebraKind.KWATERNION, (a, b, c, d))


def kwaternion_vector(x, y, t) -> Element:
    return Element(AlgebraKind.KWATERNION, (0, x, y, t))


def lorentz_conjugate(q: Element, v: Element) -> Element:
    """v -> q v q^-1 for a transformation kwaternion q (norm +-1)."""
    n = algebra.norm2(q)
    if isinstance(n, float):
        # rotors: snap to the nearest sign within tolerance
        if abs(abs(n) - 1) > ROTOR_TOL:
            raise NotUnit(f"norm2(q) = {n}, expected +-1")
        n = 1 if n > 0 else -1
    elif not (n == 1 or n == -1):
        raise NotUnit(f"norm2(q) = {n}, expected +-1")
    if v.coeffs[0] != 0:
        raise NotVector("v has a real part")
    # q^-1 = conj(q) / n, and n = +-1
    return algebra.mul(algebra.mul(q, v), algebra.conj(q) * n)


ROTOR_TOL = 1e-9


class RotorKind(Enum):
    ROT_XY = "rot-xy"
    BOOST_X = "boost-x"
    BOOST_Y = "boost-y"


def rotor(kind: RotorKind, phi: float) -> Element:
    """Floating-point transformation kwaternions.

    Conjugating by cosh + i sinh fixes the i (x) component, so it boosts along y;
    cosh + j sinh boosts along x.
    """
    h = phi / 2
    if kind is RotorKind.ROT_XY:
        c = (math.cos(h), 0.0, 0.0, math.sin(h))
    elif kind is RotorKind.BOOST_Y:
        c = (math.cosh(h), math.sinh(h), 0.0, 0.0)
    elif kind is RotorKind.BOOST_X:
        c = (math.cosh(h), 0.0, math.sinh(h), 0.0)
    else:
        raise ValueError(kind)
    return Element(AlgebraKind.KWATERNION, c)
