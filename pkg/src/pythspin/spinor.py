"""Pythagorean spinors: Euclid's map as the spinor square of R^{2,1}.

Triples live in Minkowski space with quadratic form -x^2 - y^2 + z^2. Their
matrix images are stored doubled, ``T = 2 * v~ = [[-y, x+z], [x-z, y]]``, so
that every integer triple has an integer matrix. Formulas below carry the
compensating factors.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple, Tuple

from . import algebra
from .algebra import AlgebraKind
from .errors import (
    NonZeroTrace,
    NotEuclidForm,
    NotIntegerSpinor,
    NotOnCone,
    NotRankOneCone,
)
from .matrices import SIGMA1, SIGMA2, SIGMA3, Mat2, Mat3, exact


class Spinor(NamedTuple):
    m: int
    n: int

    def __neg__(self):
        return Spinor(-self.m, -self.n)


class Triple(NamedTuple):
    x: int
    y: int
    z: int

    def scaled(self, k) -> "Triple":
        return Triple(k * self.x, k * self.y, k * self.z)


def minkowski_norm(v) -> int:
    x, y, z = v
    return -x * x - y * y + z * z


def minkowski_dot(v, w) -> int:
    return -v[0] * w[0] - v[1] * w[1] + v[2] * w[2]


def is_pythagorean(v) -> bool:
    return minkowski_norm(v) == 0 and v[2] > 0


def is_primitive_triple(v) -> bool:
    return is_pythagorean(v) and gcd(gcd(v[0], v[1]), v[2]) == 1


def is_primitive_pair(u) -> bool:
    """Coprime m > n > 0 of opposite parity."""
    m, n = u
    return m > n > 0 and gcd(m, n) == 1 and (m + n) % 2 == 1


def euclid(u) -> Triple:
    m, n = u
    return Triple(m * m - n * n, 2 * m * n, m * m + n * n)


def complex_square(u) -> Triple:
    """z = m + ni squared as a Gaussian integer, with |z^2| = |z|^2 as the third entry."""
    z = algebra.element(AlgebraKind.COMPLEX, *u)
    sq = algebra.mul(z, z)
    return Triple(sq.coeffs[0], sq.coeffs[1], algebra.norm2(z))


def _canonical(m: int, n: int) -> Spinor:
    if m < 0 or (m == 0 and n < 0):
        return Spinor(-m, -n)
    return Spinor(m, n)


def spinor_of(v) -> Spinor:
    """Invert Euclid's map. Returns the representative with m > 0 (or m = 0, n > 0).

    Needs z + x and z - x to be twice squares, which for primitive triples
    means x odd; swap the legs (or use :func:`dual`) otherwise.
    """
    x, y, z = v
    if minkowski_norm(v) != 0 or z < 0:
        raise NotOnCone(f"{tuple(v)} is not a Pythagorean triple")
    p, q = z + x, z - x
    if p % 2 or q % 2:
        raise NotEuclidForm(f"{tuple(v)}: z +- x is odd; swap the legs first")
    m, n = isqrt(p // 2), isqrt(q // 2)
    if m * m != p // 2 or n * n != q // 2:
        raise NotEuclidForm(f"{tuple(v)}: (z +- x)/2 are not both squares; swap the legs first")
    if 2 * m * n == -y:
        n = -n
    elif 2 * m * n != y:
        raise NotEuclidForm(f"{tuple(v)}: y != 2mn")
    return _canonical(m, n)


def symplectic(u, w) -> int:
    return u[0] * w[1] - u[1] * w[0]


def conj_spinor(u) -> Tuple[int, int]:
    """Row covector u* = (-n, m); symplectic(u, w) == conj_spinor(u) . w."""
    m, n = u
    return (-n, m)


def covector_times(row, A: Mat2) -> Tuple:
    p, q = row
    return (p * A.a + q * A.c, p * A.b + q * A.d)


def tilde(v) -> Mat2:
    x, y, z = v
    return Mat2(-y, x + z, x - z, y)


def untilde(T: Mat2) -> Triple:
    """Read coefficients back: v^i = -det(sigma_i) Tr(T sigma_i) / 2."""
    if T.trace() != 0:
        raise NonZeroTrace(f"{T} is not traceless")
    half = Fraction(1, 2)
    coords = [
        exact(half * -s.det() * (T @ s).trace()) for s in (SIGMA1, SIGMA2, SIGMA3)
    ]
    return Triple(*coords)


def trace_dot(v, w):
    """Minkowski scalar product through the matrix side: -Tr(T_v T_w) / 2."""
    return exact(Fraction(-(tilde(v) @ tilde(w)).trace(), 2))


def tensor_split(u) -> Mat2:
    """2 (u (x) u*) = 2 [[-mn, m^2], [-n^2, mn]]."""
    m, n = u
    p, q = conj_spinor(u)
    return Mat2(2 * m * p, 2 * m * q, 2 * n * p, 2 * n * q)


def rank1_factor(T: Mat2) -> Spinor:
    if T.trace() != 0 or T.det() != 0 or T == Mat2(0, 0, 0, 0):
        raise NotRankOneCone(f"{T} is not a nonzero traceless rank-one matrix")
    if any(e % 2 for e in (T.a, T.b, T.c, T.d)):
        raise NotIntegerSpinor(f"{T} has odd entries")
    m2, n2, mn = T.b // 2, -T.c // 2, T.d // 2
    m, n = isqrt(max(m2, 0)), isqrt(max(n2, 0))
    if m * m != m2 or n * n != n2:
        raise NotIntegerSpinor(f"{T}: off-diagonal entries are not twice squares")
    if m * n == -mn:
        n = -n
    elif m * n != mn:
        raise NotIntegerSpinor(f"{T}: diagonal inconsistent with m, n")
    return _canonical(m, n)


def spin_act(A: Mat2, v) -> Triple:
    """untilde(A T_v A*)."""
    return untilde(A @ tilde(v) @ A.adjugate())


def spinor_act(A: Mat2, u) -> Spinor:
    return Spinor(*(A @ tuple(u)))


def dual(u) -> Spinor:
    m, n = u
    return Spinor(m + n, m - n)


D_SWAP: Mat3 = ((0, 1, 0), (1, 0, 0), (0, 0, 1))
D_SPIN = Mat2(1, 1, 1, -1)


def dual_matrices() -> Tuple[Mat3, Mat2]:
    return D_SWAP, D_SPIN
