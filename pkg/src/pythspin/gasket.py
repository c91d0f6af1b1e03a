"""The Apollonian window in exact inversive coordinates.

A circle is stored as ``(b, bx, by)``: signed curvature and curvature times
centre. The boundary circle has ``b = -1``. Descartes reflections are integer
linear maps on these coordinates, so every circle of the window has integer
data.

Circle inversion is available two ways: :func:`invert_in_circle` maps three
points of the circle and takes the circumcircle, :func:`invert_linear` applies
a 4x4 rational matrix to augmented coordinates ``(cobend, b, bx, by)``.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import Degenerate, NonIntegerResult, NotSubboundary, NotTangent
from .matrices import exact
from .spinor import Triple, spinor_of

F = Fraction


class Circle(NamedTuple):
    b: object
    bx: object
    by: object

    @classmethod
    def from_center(cls, cx, cy, r, inward: bool = False) -> "Circle":
        b = F(1) / F(r)
        if inward:
            b = -b
        return cls(exact(b), exact(b * cx), exact(b * cy))

    @property
    def center(self) -> Tuple[Fraction, Fraction]:
        if self.b == 0:
            raise Degenerate("a line has no centre")
        return F(self.bx) / self.b, F(self.by) / self.b

    @property
    def radius(self) -> Fraction:
        return 1 / abs(F(self.b))

    @property
    def cobend(self):
        """Curvature of the image under inversion in the unit circle."""
        return exact((F(self.bx) ** 2 + F(self.by) ** 2 - 1) / self.b)

    def augmented(self):
        return (self.cobend, self.b, self.bx, self.by)

    def same_set(self, other: "Circle") -> bool:
        """Equal as point sets, ignoring orientation."""
        return self.center == other.center and self.radius == other.radius

    def is_integral(self) -> bool:
        return all(F(v).denominator == 1 for v in self)


Quadruple = Tuple[Circle, Circle, Circle, Circle]

BOUNDARY = Circle(-1, 0, 0)
WINDOW: Quadruple = (BOUNDARY, Circle(2, 1, 0), Circle(2, -1, 0), Circle(3, 0, 2))


def window() -> Quadruple:
    """Boundary, right and left half-radius circles, and the upper b = 3 circle."""
    return WINDOW


def _descartes_form(u, v):
    return 2 * sum(a * b for a, b in zip(u, v)) - sum(u) * sum(v)


def is_tangent(c1: Circle, c2: Circle) -> bool:
    """Oriented tangency: centre distance equals |1/b1 + 1/b2|."""
    (x1, y1), (x2, y2) = c1.center, c2.center
    s = F(1) / c1.b + F(1) / c2.b
    return (x2 - x1) ** 2 + (y2 - y1) ** 2 == s * s


def is_descartes(q: Sequence[Circle]) -> bool:
    """Pairwise tangent, and the curvature-centre quadratic relations hold.

    With F(u, v) = 2 sum(u_i v_i) - sum(u) sum(v):
    F(b, b) = 0, F(bx, bx) = F(by, by) = 4, F(b, bx) = F(b, by) = F(bx, by) = 0.
    """
    if len(q) != 4:
        return False
    if not all(is_tangent(q[i], q[j]) for i in range(4) for j in range(i + 1, 4)):
        return False
    b, bx, by = ([c[k] for c in q] for k in range(3))
    return (
        _descartes_form(b, b) == 0
        and _descartes_form(bx, bx) == 4
        and _descartes_form(by, by) == 4
        and _descartes_form(b, bx) == 0
        and _descartes_form(b, by) == 0
        and _descartes_form(bx, by) == 0
    )


def descartes_reflect(q: Sequence[Circle], i: int) -> Quadruple:
    """Replace circle i by 2 (sum of the other three) - circle i."""
    others = [c for k, c in enumerate(q) if k != i]
    new = Circle(*(2 * sum(c[t] for c in others) - q[i][t] for t in range(3)))
    out = list(q)
    out[i] = new
    return tuple(out)


class GasketCircle(NamedTuple):
    circle: Circle
    depth: int
    path: Tuple[int, ...]


def _grow(quad, path, last, depth, max_b):
    """Nodes (quad, path, last) of the subtree below one quadruple, root included."""
    out = []
    level = [(quad, path, last)]
    while level:
        out.extend(level)
        if depth is not None and len(level[0][1]) >= depth:
            break
        nxt = []
        for q, p, l in level:
            for i in range(4):
                if i == l:
                    continue
                nq = descartes_reflect(q, i)
                if max_b is not None and nq[i].b > max_b:
                    continue
                nxt.append((nq, p + (i,), i))
        level = nxt
    return out


def quadruples(
    depth: Optional[int] = None, max_curvature=None, workers: int = 1
) -> List[Tuple[Quadruple, Tuple[int, ...]]]:
    """Every quadruple reached from the window, with the path of replaced indices.

    Curvatures never decrease along a path, so a curvature bound prunes safely.
    Order is by (depth, path), independent of ``workers``.
    """
    if depth is None and max_curvature is None:
        raise ValueError("give a depth or a curvature bound")
    root = (WINDOW, (), None)
    if workers <= 1 or depth == 0:
        nodes = _grow(*root, depth, max_curvature)
    else:
        children = [n for n in _grow(*root, 1, max_curvature) if n[1]]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futs = [ex.submit(_grow, q, p, l, depth, max_curvature) for q, p, l in children]
            nodes = [root] + [n for f in futs for n in f.result()]
    nodes.sort(key=lambda n: (len(n[1]), n[1]))
    return [(q, p) for q, p, _ in nodes]


def expand(depth: Optional[int] = None, max_curvature=None, workers: int = 1) -> List[GasketCircle]:
    """Circles of the window in canonical breadth-first order."""
    out = []
    for q, path in quadruples(depth, max_curvature, workers):
        if not path:
            out.extend(GasketCircle(c, 0, ()) for c in q)
        else:
            out.append(GasketCircle(q[path[-1]], len(path), path))
    return out


def tangent_pairs(depth: Optional[int] = None, max_curvature=None) -> List[Tuple[Circle, Circle]]:
    seen = set()
    out = []
    for q, _ in quadruples(depth, max_curvature):
        for i in range(4):
            for j in range(i + 1, 4):
                key = frozenset((q[i], q[j]))
                if key not in seen:
                    seen.add(key)
                    out.append((q[i], q[j]))
    return out


# --- inversion -------------------------------------------------------------

def invert_point(C: Circle, p):
    (cx, cy), rho2 = C.center, C.radius ** 2
    dx, dy = F(p[0]) - cx, F(p[1]) - cy
    d2 = dx * dx + dy * dy
    if d2 == 0:
        raise Degenerate("cannot invert the centre of inversion")
    return cx + rho2 * dx / d2, cy + rho2 * dy / d2


def circumcircle(p1, p2, p3) -> Tuple[Tuple[Fraction, Fraction], Fraction]:
    """Exact centre and squared radius of the circle through three points."""
    (ax, ay), (bx, by), (cx, cy) = [(F(x), F(y)) for x, y in (p1, p2, p3)]
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0:
        raise Degenerate("points are collinear")
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return (ux, uy), (ax - ux) ** 2 + (ay - uy) ** 2


def _sqrt_fraction(q: Fraction) -> Fraction:
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n != q.numerator or d * d != q.denominator:
        raise NonIntegerResult(f"{q} is not a rational square")
    return F(n, d)


def invert_in_circle(C: Circle, X: Circle) -> Circle:
    """Image of X under inversion in C, computed pointwise.

    Orientation flips exactly when the centre of C lies inside X.
    """
    if C.b == 0 or X.b == 0:
        raise Degenerate("lines are not supported")
    (x, y), r = X.center, X.radius
    (cx, cy) = C.center
    d = (x - cx) ** 2 + (y - cy) ** 2 - r * r
    if d == 0:
        raise Degenerate("X passes through the centre of inversion; its image is a line")
    pts = [invert_point(C, p) for p in ((x + r, y), (x - r, y), (x, y + r))]
    (ux, uy), rr = circumcircle(*pts)
    radius = _sqrt_fraction(rr)
    sign = (1 if X.b > 0 else -1) * (1 if d > 0 else -1)
    return Circle.from_center(ux, uy, radius, inward=sign < 0)


def _matmul4(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(4)) for j in range(4)) for i in range(4))


def _translate(tx, ty):
    # (cobend, b, bx, by) -> (cobend + 2 t.bz + b|t|^2, b, bx + b tx, by + b ty)
    tt = tx * tx + ty * ty
    return ((1, tt, 2 * tx, 2 * ty), (0, 1, 0, 0), (0, tx, 1, 0), (0, ty, 0, 1))


def _scale(lam):
    return ((lam, 0, 0, 0), (0, 1 / lam, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


_UNIT_INVERSION = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def inversion_matrix(C: Circle):
    """4x4 rational matrix of inversion in C acting on (cobend, b, bx, by)."""
    (cx, cy), rho = C.center, C.radius
    # move C to the unit circle, invert there, move back (rightmost acts first)
    M = _translate(-cx, -cy)
    for step in (_scale(1 / rho), _UNIT_INVERSION, _scale(rho), _translate(cx, cy)):
        M = _matmul4(step, M)
    return M


def invert_linear(C: Circle, X: Circle) -> Circle:
    M = inversion_matrix(C)
    v = X.augmented()
    cob, b, bx, by = (sum(M[i][k] * v[k] for k in range(4)) for i in range(4))
    if b == 0:
        raise Degenerate("image is a line")
    return Circle(exact(F(b)), exact(F(bx)), exact(F(by)))


# --- the window's symmetries ------------------------------------------------

def tangency_point_of_pair(c1: Circle, c2: Circle):
    if not is_tangent(c1, c2):
        raise NotTangent(f"{c1} and {c2} are not tangent")
    (x1, y1), (x2, y2) = c1.center, c2.center
    # point dividing the centres in ratio r1 : r2, signed radii 1/b
    r1, r2 = F(1) / c1.b, F(1) / c2.b
    t = r1 / (r1 + r2)
    return x1 + t * (x2 - x1), y1 + t * (y2 - y1)


def _derive_c_circle() -> Circle:
    bd, right, _, top = WINDOW
    pts = [tangency_point_of_pair(bd, right), tangency_point_of_pair(bd, top),
           tangency_point_of_pair(right, top)]
    (ux, uy), rr = circumcircle(*pts)
    return Circle.from_center(ux, uy, _sqrt_fraction(rr))


C_CIRCLE = _derive_c_circle()


def symmetry(op: str, X: Circle) -> Circle:
    """A: mirror in the vertical axis, B: in the horizontal axis, C: invert in C_CIRCLE.

    A composite like "CBA" applies the rightmost map first.
    """
    for ch in reversed(op.upper()):
        if ch == "A":
            X = Circle(X.b, -X.bx, X.by)
        elif ch == "B":
            X = Circle(X.b, X.bx, -X.by)
        elif ch == "C":
            X = invert_linear(C_CIRCLE, X)
        else:
            raise ValueError(f"unknown symmetry {ch!r}")
    return X


# --- triples ----------------------------------------------------------------

def is_subboundary(X: Circle) -> bool:
    return X.b != 0 and F(X.b) > 1 and F(X.bx) ** 2 + F(X.by) ** 2 == (F(X.b) - 1) ** 2


def is_first_quadrant(X: Circle) -> bool:
    return F(X.bx) > 0 and F(X.by) > 0


def tangency_point(X: Circle):
    """Where a subboundary circle touches the unit boundary: centre * b / (b - 1)."""
    if not is_subboundary(X):
        raise NotSubboundary(f"{X} does not touch the boundary from inside")
    k = F(X.b) - 1
    return F(X.bx) / k, F(X.by) / k


def triple_of_subboundary(X: Circle) -> Triple:
    """(bx, by, b - 1). Primitive when bx is odd, twice a primitive triple otherwise."""
    if not is_subboundary(X):
        raise NotSubboundary(f"{X} does not touch the boundary from inside")
    if not X.is_integral():
        raise NonIntegerResult(f"{X} has non-integer inversive coordinates")
    if X.bx == 0 or X.by == 0:
        raise Degenerate(f"{X} is centred on an axis")
    return Triple(X.bx, X.by, X.b - 1)


def primitive_part(v) -> Triple:
    g = gcd(gcd(v[0], v[1]), v[2])
    return Triple(*(c // g for c in v))


def triple_of_pair(c1: Circle, c2: Circle) -> Triple:
    """Centre offset c2 - c1 and centre distance, divided by r1 r2 (radii signed 1/b)."""
    if c1 == c2 or not is_tangent(c1, c2):
        raise NotTangent(f"{c1} and {c2} are not tangent")
    b1, b2 = F(c1.b), F(c2.b)
    out = (b1 * c2.bx - b2 * c1.bx, b1 * c2.by - b2 * c1.by, b1 + b2)
    if any(v.denominator != 1 for v in out):
        raise NonIntegerResult(f"triangle of {c1}, {c2} is not integral: {out}")
    return Triple(*(int(v) for v in out))


# --- output -----------------------------------------------------------------

@dataclass(frozen=True)
class SvgOptions:
    labels: str = "none"  # none | triples | spinors
    precision: int = 12
    size: int = 800
    stroke: str = "black"
    stroke_width: str = "0.002"
    font_size: str = "0.025"


def fixed(x, digits: int = 12) -> str:
    """Exact decimal rendering of a rational with a fixed number of digits."""
    scaled = round(F(x) * 10**digits)
    sign = "-" if scaled < 0 else ""
    ip, fp = divmod(abs(scaled), 10**digits)
    return f"{sign}{ip}.{fp:0{digits}d}" if digits else f"{sign}{ip}"


def _label(X: Circle, kind: str) -> Optional[str]:
    if not (is_subboundary(X) and is_first_quadrant(X)):
        return None
    t = triple_of_subboundary(X)
    if kind == "triples":
        return f"{t.x},{t.y},{t.z}"
    if kind == "spinors":
        m, n = spinor_of(t)
        return f"({m},{n})"
    raise ValueError(f"unknown label kind {kind!r}")


def render_svg(circles: Iterable, options: SvgOptions = SvgOptions()) -> str:
    circles = [c.circle if isinstance(c, GasketCircle) else c for c in circles]
    p = options.precision
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.05 -1.05 2.1 2.1" '
        f'width="{options.size}" height="{options.size}">',
        f'<g fill="none" stroke="{options.stroke}" stroke-width="{options.stroke_width}">',
    ]
    for X in circles:
        cx, cy = X.center
        lines.append(f'<circle cx="{fixed(cx, p)}" cy="{fixed(-cy, p)}" r="{fixed(X.radius, p)}"/>')
    lines.append("</g>")
    if options.labels != "none":
        lines.append(
            f'<g font-family="monospace" font-size="{options.font_size}" text-anchor="start">'
        )
        for X in circles:
            text = _label(X, options.labels)
            if text is not None:
                tx, ty = tangency_point(X)
                lines.append(f'<text x="{fixed(tx, p)}" y="{fixed(-ty, p)}">{text}</text>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def to_jsonl(circles: Iterable[GasketCircle]) -> str:
    def num(v):
        v = exact(v)
        return v if isinstance(v, int) else str(v)

    return "".join(
        json.dumps({"b": num(g.circle.b), "bx": num(g.circle.bx), "by": num(g.circle.by),
                    "depth": g.depth}) + "\n"
        for g in circles
    )

