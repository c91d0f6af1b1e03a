"""Hall matrices, the ternary tree of primitive triples, and hyperbolic reflections.

A word such as ``"URLLU"`` denotes the matrix product U R L L U acting on the
root (3, 4, 5); the rightmost letter acts first. Children of a node are
obtained by left multiplication, so the child of word ``w`` by letter ``X``
is ``X + w``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd
from typing import Iterator, List, Optional, Tuple

from .errors import DomainError, NotNormalized, NotPrimitive, NullNormal
from .matrices import IDENTITY3, Mat2, Mat3, mat3_apply, mat3_mul, mat3_transpose, exact
from .spinor import Triple, minkowski_dot

ALPHABET = "ULR"
ROOT = Triple(3, 4, 5)
G: Mat3 = ((1, 0, 0), (0, 1, 0), (0, 0, -1))

HALL = {
    "U": ((1, 2, 2), (2, 1, 2), (2, 2, 3)),
    "L": ((1, -2, 2), (2, -1, 2), (2, -2, 3)),
    "R": ((-1, 2, 2), (-2, 1, 2), (-2, 2, 3)),
}
HALL_SPIN = {
    "U": Mat2(2, 1, 1, 0),
    "L": Mat2(2, -1, 1, 0),
    "R": Mat2(1, 2, 0, 1),
}
# X^-1 = G X^T G for X in O(2,1)
HALL_INV = {k: mat3_mul(mat3_mul(G, mat3_transpose(X)), G) for k, X in HALL.items()}

_RANK = str.maketrans(ALPHABET, "012")


def normalize_word(word: str) -> str:
    w = word.strip().upper()
    if w in ("-", ""):
        return ""
    bad = set(w) - set(ALPHABET)
    if bad:
        raise ValueError(f"word may only contain U, L, R (got {''.join(sorted(bad))!r})")
    return w


def word_key(word: str) -> Tuple[int, str]:
    """Canonical order: shorter words first, then lexicographic with U < L < R."""
    return len(word), word.translate(_RANK)


def hall_matrix(letter: str) -> Mat3:
    return HALL[letter.upper()]


def hall_spin(letter: str) -> Mat2:
    return HALL_SPIN[letter.upper()]


def eval_word(word: str) -> Tuple[Mat3, Mat2]:
    M, S = IDENTITY3, Mat2.identity()
    for ch in normalize_word(word):
        M = mat3_mul(M, HALL[ch])
        S = S @ HALL_SPIN[ch]
    return M, S


def apply_word(word: str, v=ROOT) -> Triple:
    v = tuple(v)
    for ch in reversed(normalize_word(word)):
        v = mat3_apply(HALL[ch], v)
    return Triple(*v)


def normalize_legs(v) -> Tuple[Triple, bool]:
    """Put the odd leg first. Returns (triple, swapped)."""
    x, y, z = v
    if x % 2 == 0 and y % 2 == 1:
        return Triple(y, x, z), True
    return Triple(x, y, z), False


def _check_tree_triple(v) -> Triple:
    x, y, z = v
    if x <= 0 or y <= 0 or z <= 0 or x * x + y * y != z * z or gcd(gcd(x, y), z) != 1:
        raise NotPrimitive(f"{tuple(v)} is not a positive primitive Pythagorean triple")
    if x % 2 == 0:
        raise NotNormalized(f"{tuple(v)}: first leg must be odd; swap the legs")
    return Triple(x, y, z)


def parent(v) -> Tuple[str, Triple]:
    """One step towards the root: returns (letter, p) with v = letter . p."""
    v = _check_tree_triple(v)
    if v == ROOT:
        raise DomainError("(3, 4, 5) is the root and has no parent")
    found = []
    for letter in ALPHABET:
        p = mat3_apply(HALL_INV[letter], v)
        if p[0] > 0 and p[1] > 0 and p[2] < v[2]:
            found.append((letter, Triple(*p)))
    if len(found) != 1:
        raise AssertionError(f"descent from {tuple(v)} is not unique: {found}")
    return found[0]


def word_of(v) -> str:
    v = _check_tree_triple(v)
    letters = []
    while v != ROOT:
        letter, v = parent(v)
        letters.append(letter)
    return "".join(letters)


def _children(word: str, v: Triple):
    for ch in ALPHABET:
        yield ch + word, Triple(*mat3_apply(HALL[ch], v))


def _subtree(word: str, v: Triple, depth: Optional[int], max_c: Optional[int]):
    """All nodes of the subtree rooted at (word, v), in level order."""
    out = []
    level = [(word, v)]
    d = len(word)
    while level:
        out.extend(level)
        if depth is not None and d >= depth:
            break
        level = [
            (w, t)
            for node in level
            for w, t in _children(*node)
            if max_c is None or t.z <= max_c
        ]
        d += 1
    return out


def enumerate_triples(
    depth: Optional[int] = None, max_c: Optional[int] = None, workers: int = 1
) -> List[Tuple[str, Triple]]:
    """Breadth-first listing of the primitive-triple tree.

    Bounded by word length ``depth``, by hypotenuse ``max_c``, or both. Output
    order is ``word_key`` whatever the number of worker processes.
    """
    if depth is None and max_c is None:
        raise ValueError("give a depth or a hypotenuse bound")
    if max_c is not None and max_c < ROOT.z:
        return []
    if workers <= 1 or depth == 0:
        nodes = _subtree("", ROOT, depth, max_c)
    else:
        # fan out over the first-level subtrees (and deeper if there are many workers)
        split = 1 if workers <= 3 else 2
        if depth is not None:
            split = min(split, depth)
        top = _subtree("", ROOT, split, max_c)
        head = [n for n in top if len(n[0]) < split]
        frontier = [n for n in top if len(n[0]) == split]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futures = [ex.submit(_subtree, w, t, depth, max_c) for w, t in frontier]
            nodes = head + [n for f in futures for n in f.result()]
    nodes.sort(key=lambda n: word_key(n[0]))
    return nodes


def iter_triples(depth=None, max_c=None, workers=1) -> Iterator[Tuple[str, Triple]]:
    yield from enumerate_triples(depth, max_c, workers)


def reflection_matrix(n) -> Mat3:
    """Matrix of v -> v - 2 <v,n>/<n,n> n in the form -x^2 - y^2 + z^2."""
    nn = minkowski_dot(n, n)
    if nn == 0:
        raise NullNormal(f"{tuple(n)} is a null vector")
    cols = []
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        cols.append(reflect(n, e))
    return mat3_transpose(tuple(cols))


def reflect(n, v) -> Triple:
    nn = minkowski_dot(n, n)
    if nn == 0:
        raise NullNormal(f"{tuple(n)} is a null vector")
    k = Fraction(2 * minkowski_dot(v, n), nn)
    return Triple(*(exact(a - k * b) for a, b in zip(v, n)))


N_A = (1, 0, 0)
N_B = (0, 1, 0)
N_C = (1, 1, 1)
R1 = reflection_matrix(N_A)
R2 = reflection_matrix(N_B)
R3 = reflection_matrix(N_C)
