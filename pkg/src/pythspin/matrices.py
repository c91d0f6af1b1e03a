"""Exact 2x2 and 3x3 integer/rational matrices.

``Mat2`` is a small value type; 3x3 matrices are plain nested tuples
manipulated by the ``mat3_*`` helpers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

Number = Union[int, Fraction]
Mat3 = Tuple[Tuple[Number, Number, Number], ...]
Vec3 = Tuple[Number, Number, Number]


def exact(x):
    """Collapse an integral Fraction to int; leave everything else alone."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class Mat2:
    """[[a, b], [c, d]]"""

    a: Number
    b: Number
    c: Number
    d: Number

    @classmethod
    def of(cls, rows: Sequence[Sequence[Number]]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, o):
        if isinstance(o, Mat2):
            return Mat2(
                self.a * o.a + self.b * o.c,
                self.a * o.b + self.b * o.d,
                self.c * o.a + self.d * o.c,
                self.c * o.b + self.d * o.d,
            )
        m, n = o
        return (self.a * m + self.b * n, self.c * m + self.d * n)

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, k) -> "Mat2":
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def exact(self) -> "Mat2":
        return Mat2(exact(self.a), exact(self.b), exact(self.c), exact(self.d))

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def adjugate(A: Mat2) -> Mat2:
    return A.adjugate()


SIGMA0 = Mat2(1, 0, 0, 1)
SIGMA1 = Mat2(0, 1, 1, 0)
SIGMA2 = Mat2(-1, 0, 0, 1)
SIGMA3 = Mat2(0, 1, -1, 0)
SIGMAS = (SIGMA0, SIGMA1, SIGMA2, SIGMA3)


def mat3(rows) -> Mat3:
    return tuple(tuple(r) for r in rows)


IDENTITY3: Mat3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat3_mul(A: Mat3, B: Mat3) -> Mat3:
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )


def mat3_apply(A: Mat3, v: Sequence[Number]) -> Vec3:
    x, y, z = v
    return tuple(r[0] * x + r[1] * y + r[2] * z for r in A)


def mat3_transpose(A: Mat3) -> Mat3:
    return tuple(tuple(A[j][i] for j in range(3)) for i in range(3))


def mat3_scale(k, A: Mat3) -> Mat3:
    return tuple(tuple(k * x for x in r) for r in A)


def mat3_det(A: Mat3):
    (a, b, c), (d, e, f), (g, h, i) = A
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
