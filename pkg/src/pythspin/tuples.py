"""Pythagorean n-tuples from spinor splits over composition algebras.

A ``PythTuple`` with signature (k, l) holds k + l integers whose first k
squares sum to the last l squares.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from . import algebra
from .algebra import AlgebraKind, Element


@dataclass(frozen=True)
class PythTuple:
    signature: Tuple[int, int]
    values: Tuple[int, ...]

    @property
    def lhs(self):
        return self.values[: self.signature[0]]

    @property
    def rhs(self):
        return self.values[self.signature[0]:]

    def holds(self) -> bool:
        return sum(v * v for v in self.lhs) == sum(v * v for v in self.rhs)


@dataclass(frozen=True)
class SpinorPair:
    p: Element
    q: Element

    def __post_init__(self):
        if self.p.kind is not self.q.kind:
            raise algebra.KindMismatch("spinor components must share an algebra")

    @classmethod
    def of(cls, kind: AlgebraKind, params: Sequence[int]) -> "SpinorPair":
        d = kind.dim
        if len(params) != 2 * d:
            raise ValueError(f"{kind.label} spinor pair needs {2 * d} parameters")
        return cls(Element(kind, tuple(params[:d])), Element(kind, tuple(params[d:])))


def quadruple(m: int, n: int, p: int, q: int) -> PythTuple:
    """(a, b, c, d) with a^2 + b^2 + c^2 = d^2, from z = m + ni, w = p + qi."""
    a = m * m + n * n - p * p - q * q
    b = 2 * (m * p + n * q)
    c = 2 * (n * p - m * q)
    d = m * m + n * n + p * p + q * q
    return PythTuple((3, 1), (a, b, c, d))


def quadruple_classical(m: int, n: int, p: int) -> PythTuple:
    """The older three-parameter family; misses e.g. (3, 36, 8, 37)."""
    s = m * m + n * n
    return PythTuple((3, 1), (2 * m * p, 2 * n * p, p * p - s, p * p + s))


def hexad(m: Sequence[int], n: Sequence[int]) -> PythTuple:
    """Returns values (a1, a2, a3, a4, a5, a0) with a1^2 + ... + a5^2 = a0^2."""
    m0, m1, m2, m3 = m
    n0, n1, n2, n3 = n
    mm = m0 * m0 + m1 * m1 + m2 * m2 + m3 * m3
    nn = n0 * n0 + n1 * n1 + n2 * n2 + n3 * n3
    mn = m0 * n0 + m1 * n1 + m2 * n2 + m3 * n3
    a0 = mm + nn
    a1 = 2 * (n0 * m1 - n1 * m0 + m3 * n2 - m2 * n3)
    a2 = 2 * (n0 * m2 - n2 * m0 + m1 * n3 - m3 * n1)
    a3 = 2 * (n0 * m3 - n3 * m0 + m2 * n1 - m1 * n2)
    a4 = 2 * mn
    a5 = mm - nn
    return PythTuple((5, 1), (a1, a2, a3, a4, a5, a0))


def general_tuple(pq: SpinorPair) -> PythTuple:
    """Split [[a+b, c], [c*, a-b]] = 2 [p; q] (x) [p* q*] over any supported algebra.

    a = |p|^2 + |q|^2, b = |p|^2 - |q|^2, c = 2 p q*, so a^2 - b^2 = |c|^2.
    For an algebra of norm signature (r, s) the output has signature
    (r + 1, s + 1), laid out as (b, positive-norm components of c) followed by
    (a, negative-norm components of c), each group in basis order.
    """
    p, q = pq.p, pq.q
    np_, nq = algebra.norm2(p), algebra.norm2(q)
    a, b = np_ + nq, np_ - nq
    c = algebra.mul(p, algebra.conj(q)) * 2
    signs = p.kind.norm_signs
    pos = tuple(x for x, s in zip(c.coeffs, signs) if s > 0)
    neg = tuple(x for x, s in zip(c.coeffs, signs) if s < 0)
    r, s_ = p.kind.signature
    return PythTuple((r + 1, s_ + 1), (b,) + pos + (a,) + neg)


# general_tuple over the quaternions lists (a5, a4, a1, a2, a3, a0) of hexad(m, n)
QUATERNION_TO_HEXAD = (4, 3, 0, 1, 2, 5)


def enumerate_primitive_quadruples(bound_d: int) -> List[PythTuple]:
    """All primitive 0 < a <= b <= c with a^2 + b^2 + c^2 = d^2 <= bound_d^2."""
    out = []
    for d in range(1, bound_d + 1):
        dd = d * d
        for a in range(1, d):
            for b in range(a, d):
                cc = dd - a * a - b * b
                if cc < b * b:
                    break
                c = isqrt(cc)
                if c * c == cc and gcd(gcd(a, b), gcd(c, d)) == 1:
                    out.append(PythTuple((3, 1), (a, b, c, d)))
    out.sort(key=lambda t: (t.values[3], t.values))
    return out


def canonical_quadruple(values) -> Tuple[int, int, int, int]:
    a, b, c, d = values
    return tuple(sorted((abs(a), abs(b), abs(c)))) + (abs(d),)


@functools.lru_cache(maxsize=4)
def quadruple_preimages(bound: int) -> Dict[Tuple[int, ...], Tuple[int, int, int, int]]:
    """First parameter vector (in search order) hitting each canonical quadruple."""
    found: Dict[Tuple[int, ...], Tuple[int, int, int, int]] = {}
    rng = range(-bound, bound + 1)
    for params in itertools.product(rng, repeat=4):
        key = canonical_quadruple(quadruple(*params).values)
        found.setdefault(key, params)
    return found


def surjectivity_failures(bound_d: int = 60, param_bound: int = 8) -> List[PythTuple]:
    """Primitive quadruples with d <= bound_d that no parameters in the box reach."""
    hits = quadruple_preimages(param_bound)
    return [t for t in enumerate_primitive_quadruples(bound_d) if t.values not in hits]


def find_quadruple_params(target, bound: int = 8) -> Optional[Tuple[int, int, int, int]]:
    return quadruple_preimages(bound).get(canonical_quadruple(target))
