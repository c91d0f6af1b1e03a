"""Self-contained identity suites behind ``pythspin verify``.

Each suite returns a list of ``Check`` results; nothing here depends on pytest.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, List

from . import algebra, clifford, gasket, hall, spinor, tuples
from .algebra import AlgebraKind
from .matrices import Mat2, mat3_apply, mat3_det, mat3_mul, mat3_transpose


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _rand_element(rng, kind, lo=-9, hi=9):
    return algebra.Element(kind, tuple(rng.randint(lo, hi) for _ in range(kind.dim)))


def suite_algebra(rng: random.Random, n: int = 300) -> List[Check]:
    out = []
    for kind in AlgebraKind:
        units = [algebra.basis(kind, i) for i in range(kind.dim)]
        basis_ok = all(
            algebra.norm2(a * b) == algebra.norm2(a) * algebra.norm2(b) for a in units for b in units
        )
        pairs = [(_rand_element(rng, kind), _rand_element(rng, kind)) for _ in range(n)]
        rand_ok = all(algebra.norm2(a * b) == algebra.norm2(a) * algebra.norm2(b) for a, b in pairs)
        out.append(Check("algebra", f"{kind.label}: norm multiplicative", basis_ok and rand_ok))
        anti = all(algebra.conj(a * b) == algebra.conj(b) * algebra.conj(a) for a, b in pairs)
        out.append(Check("algebra", f"{kind.label}: conj(ab) = conj(b)conj(a)", anti))
        triples = [tuple(_rand_element(rng, kind) for _ in range(3)) for _ in range(n // 3)]
        if kind.associative:
            ok = all((a * b) * c == a * (b * c) for a, b, c in triples)
            out.append(Check("algebra", f"{kind.label}: associative", ok))
        else:
            ok = all(a * (a * b) == (a * a) * b and (b * a) * a == b * (a * a) for a, b, _ in triples)
            out.append(Check("algebra", f"{kind.label}: alternative laws", ok))
    return out


def suite_clifford(rng: random.Random, n: int = 300) -> List[Check]:
    blades = [clifford.Multivector.blade(b) for b in clifford.BLADE_NAMES]
    hom = all(
        clifford.sigma_rep(a * b) == clifford.sigma_rep(a) @ clifford.sigma_rep(b)
        for a in blades
        for b in blades
    )
    out = [Check("clifford", "sigma_rep homomorphism on 64 blade pairs", hom)]
    K = AlgebraKind.KWATERNION
    qs = [_rand_element(rng, K) for _ in range(n)]
    rt = all(clifford.mat_to_kwat(clifford.kwat_to_mat(q)) == q for q in qs)
    det = all(clifford.kwat_to_mat(q).det() == algebra.norm2(q) for q in qs)
    mult = all(
        clifford.kwat_to_mat(p * q) == clifford.kwat_to_mat(p) @ clifford.kwat_to_mat(q)
        for p, q in zip(qs, qs[1:])
    )
    out.append(Check("clifford", "kwaternion <-> matrix round trip", rt))
    out.append(Check("clifford", "det(kwat_to_mat(q)) = norm2(q)", det))
    out.append(Check("clifford", "kwat_to_mat multiplicative", mult))
    spins = [clifford.mat_to_kwat(hall.hall_spin(ch)) for ch in hall.ALPHABET]
    conj_ok = True
    for _ in range(n):
        word = [rng.choice(spins) for _ in range(rng.randint(1, 5))]
        q = algebra.unit(K)
        for s in word:
            q = q * s
        v = clifford.kwaternion_vector(*(rng.randint(-20, 20) for _ in range(3)))
        w = clifford.lorentz_conjugate(q, v)
        conj_ok &= w.coeffs[0] == 0 and algebra.norm2(w) == algebra.norm2(v)
    out.append(Check("clifford", "Lorentz conjugation preserves norm and vectors", conj_ok))
    worst = max(
        abs(algebra.norm2(clifford.rotor(k, phi)) - 1)
        for k in clifford.RotorKind
        for phi in [x / 10 for x in range(-50, 51)]
    )
    out.append(Check("clifford", "rotor norm within 1e-9", worst < 1e-9, f"max error {worst:.2e}"))
    return out


def suite_spinor(rng: random.Random, n: int = 1000) -> List[Check]:
    out = []
    us = [spinor.Spinor(rng.randint(-50, 50), rng.randint(-50, 50)) for _ in range(n)]
    out.append(Check("spinor", "euclid lands on the cone",
                     all(spinor.minkowski_norm(spinor.euclid(u)) == 0 for u in us)))
    out.append(Check("spinor", "euclid(-u) = euclid(u)", all(spinor.euclid(-u) == spinor.euclid(u) for u in us)))
    out.append(Check("spinor", "tensor_split = tilde o euclid",
                     all(spinor.tensor_split(u) == spinor.tilde(spinor.euclid(u)) for u in us)))
    nz = [u for u in us if u != (0, 0)]
    out.append(Check("spinor", "rank1_factor inverts tensor_split up to sign",
                     all(spinor.rank1_factor(spinor.tensor_split(u)) in (u, -u) for u in nz)))
    vs = [spinor.Triple(*(rng.randint(-100, 100) for _ in range(3))) for _ in range(n)]
    mag = all(
        spinor.tilde(v).det() == spinor.minkowski_norm(v)
        and spinor.tilde(v).trace() == 0
        and spinor.untilde(spinor.tilde(v)) == v
        and spinor.trace_dot(v, w) == spinor.minkowski_dot(v, w)
        for v, w in zip(vs, vs[1:])
    )
    out.append(Check("spinor", "magic correspondence (det, trace, coefficients)", mag))
    D, Dt = spinor.dual_matrices()
    grid = [spinor.Spinor(m, k) for m in range(-30, 31) for k in range(-30, 31)]
    comm = all(
        spinor.euclid(spinor.spinor_act(hall.hall_spin(ch), u)) == mat3_apply(hall.hall_matrix(ch), spinor.euclid(u))
        for ch in hall.ALPHABET
        for u in grid
    )
    out.append(Check("spinor", "euclid(M~ u) = M euclid(u) on |m|,|n| <= 30", comm))
    dual = all(
        spinor.euclid(spinor.spinor_act(Dt, u)) == tuple(2 * c for c in mat3_apply(D, spinor.euclid(u)))
        for u in grid
    )
    out.append(Check("spinor", "euclid(D~ u) = 2 D euclid(u)", dual))
    mats = [Mat2(*(rng.randint(-5, 5) for _ in range(4))) for _ in range(200)]
    mats = [A for A in mats if A.det() in (1, -1)] + [hall.hall_spin(c) for c in hall.ALPHABET]
    symp = all(
        spinor.symplectic(A @ u, A @ w) == A.det() * spinor.symplectic(u, w)
        for A in mats
        for u, w in zip(us[:50], us[1:51])
    )
    out.append(Check("spinor", "symplectic form preserved up to det", symp))
    prim = all(
        (gcd(gcd(*spinor.euclid((m, k))[:2]), spinor.euclid((m, k))[2]) == 1)
        == ((m + k) % 2 == 1)
        for m in range(2, 41)
        for k in range(1, m)
        if gcd(m, k) == 1
    )
    out.append(Check("spinor", "primitive Euclid pairs give primitive triples (m <= 40)", prim))
    return out


def suite_hall(rng: random.Random, n: int = 200) -> List[Check]:
    out = []
    L, R, U = (hall.hall_matrix(c) for c in "LRU")
    ident = (
        mat3_mul(hall.R3, hall.R1) == L
        and mat3_mul(hall.R3, hall.R2) == R
        and mat3_mul(mat3_mul(hall.R3, hall.R1), hall.R2) == U
    )
    out.append(Check("hall", "R3 R1 = L, R3 R2 = R, R3 R1 R2 = U", ident))
    S = clifford.F1 + clifford.F2 + clifford.F3
    cl = (
        clifford.sigma_rep(S * clifford.F1) == hall.hall_spin("L")
        and clifford.sigma_rep(S * clifford.F2) == hall.hall_spin("R")
        and clifford.sigma_rep(S * -clifford.F3) == hall.hall_spin("U")
    )
    out.append(Check("hall", "Clifford reflections give U~, L~, R~", cl))
    ex = (
        hall.apply_word("L") == (5, 12, 13)
        and hall.apply_word("R") == (15, 8, 17)
        and hall.apply_word("U") == (21, 20, 29)
        and hall.apply_word("URLLU") == (3115, 3348, 4573)
    )
    out.append(Check("hall", "worked examples", ex))
    words = ["".join(rng.choice(hall.ALPHABET) for _ in range(rng.randint(0, 10))) for _ in range(n)]
    lor = all(
        mat3_mul(mat3_mul(mat3_transpose(M), hall.G), M) == hall.G for M, _ in map(hall.eval_word, words)
    )
    out.append(Check("hall", "words preserve the Lorentz form", lor))
    dets = mat3_det(U) == -1 and mat3_det(L) == 1 and mat3_det(R) == 1
    sdet = [hall.hall_spin(c).det() for c in "ULR"] == [-1, 1, 1]
    out.append(Check("hall", "det U = -1, det L = det R = 1 (both representations)", dets and sdet))
    inv = all(hall.word_of(hall.apply_word(w)) == w for w in words)
    out.append(Check("hall", "word_of inverts apply_word", inv))
    nodes = hall.enumerate_triples(max_c=100)
    oracle = {
        (a, b, c)
        for c in range(1, 101)
        for a in range(1, c)
        for b in range(1, c)
        if a * a + b * b == c * c and gcd(a, b) == 1 and a % 2 == 1
    }
    got = [t for _, t in nodes]
    out.append(Check("hall", "tree to c <= 100 equals gcd oracle (16 triples)",
                     set(got) == oracle and len(got) == len(set(got)) == 16))
    return out


def suite_gasket(rng: random.Random) -> List[Check]:
    out = []
    circles = gasket.expand(depth=5)
    out.append(Check("gasket", "integral circles to depth 5", all(g.circle.is_integral() for g in circles)))
    quads = gasket.quadruples(depth=4)
    out.append(Check("gasket", "Descartes relations to depth 4", all(gasket.is_descartes(q) for q, _ in quads)))
    sub = [g.circle for g in gasket.expand(depth=4)
           if gasket.is_subboundary(g.circle) and gasket.is_first_quadrant(g.circle)]
    prim = all(spinor.is_primitive_triple(gasket.primitive_part(gasket.triple_of_subboundary(X))) for X in sub)
    out.append(Check("gasket", "subboundary circles give Pythagorean rays", prim))
    act = True
    for X in sub:
        t = gasket.triple_of_subboundary(X)
        for op, letter in (("CA", "L"), ("CB", "R"), ("CBA", "U")):
            Y = gasket.symmetry(op, X)
            act &= gasket.triple_of_subboundary(Y) == mat3_apply(hall.hall_matrix(letter), t)
    out.append(Check("gasket", "CA, CB, CBA act as L, R, U", act))
    pairs = gasket.tangent_pairs(depth=4)
    ok = True
    for c1, c2 in pairs:
        x, y, z = gasket.triple_of_pair(c1, c2)
        ok &= x * x + y * y == z * z
    out.append(Check("gasket", "tangent pairs give integer right triangles", ok))
    return out


def suite_tuples(rng: random.Random, n: int = 2000) -> List[Check]:
    out = []
    r = lambda k: [rng.randint(-10, 10) for _ in range(k)]
    out.append(Check("tuples", "quadruple identity", all(tuples.quadruple(*r(4)).holds() for _ in range(n))))
    out.append(Check("tuples", "classical quadruple identity",
                     all(tuples.quadruple_classical(*r(3)).holds() for _ in range(n))))
    out.append(Check("tuples", "hexad identity", all(tuples.hexad(r(4), r(4)).holds() for _ in range(n))))
    for kind in AlgebraKind:
        ok = all(tuples.general_tuple(tuples.SpinorPair.of(kind, r(2 * kind.dim))).holds()
                 for _ in range(n // 4))
        out.append(Check("tuples", f"general tuple over {kind.label}", ok))
    ex = (
        tuples.quadruple(4, 2, 4, 1).values == (3, 36, 8, 37)
        and sorted(map(abs, tuples.hexad((1, 2, 2, 1), (2, 1, 1, 1)).values[:5])) == [2, 3, 4, 8, 14]
    )
    out.append(Check("tuples", "worked examples", ex))
    fails = tuples.surjectivity_failures(60, 8)
    out.append(Check("tuples", "every primitive quadruple with d <= 60 is reached", not fails,
                     f"{len(fails)} missing"))
    return out


SUITES: Dict[str, Callable[[random.Random], List[Check]]] = {
    "algebra": suite_algebra,
    "clifford": suite_clifford,
    "spinor": suite_spinor,
    "hall": suite_hall,
    "gasket": suite_gasket,
    "tuples": suite_tuples,
}


def run(names=None, seed: int = 0) -> List[Check]:
    names = list(SUITES) if names in (None, "all") else names
    results = []
    for name in names:
        results.extend(SUITES[name](random.Random(f"{seed}:{name}")))
    return results
