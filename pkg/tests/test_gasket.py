import json
from fractions import Fraction as F
from math import gcd, isqrt
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from pythspin import gasket, hall, spinor
from pythspin.errors import Degenerate, NonIntegerResult, NotSubboundary, NotTangent
from pythspin.gasket import BOUNDARY, C_CIRCLE, Circle
from pythspin.matrices import mat3_apply

DATA = Path(__file__).parent / "data"
RIGHT, LEFT, TOP = Circle(2, 1, 0), Circle(2, -1, 0), Circle(3, 0, 2)
D4 = [g.circle for g in gasket.expand(depth=4)]
SUB4 = [X for X in D4 if gasket.is_subboundary(X) and gasket.is_first_quadrant(X)]
PAIRS4 = gasket.tangent_pairs(depth=4)


def test_window():
    assert gasket.window() == (BOUNDARY, RIGHT, LEFT, TOP)
    assert gasket.is_descartes(gasket.window())
    assert TOP.center == (0, F(2, 3)) and TOP.radius == F(1, 3)


def test_descartes_reflect_example():
    q = gasket.descartes_reflect(gasket.window(), 2)
    assert q[2] == (6, 3, 4)
    assert q[2].center == (F(1, 2), F(2, 3))
    assert gasket.descartes_reflect(q, 2) == gasket.window()


def test_all_quadruples_satisfy_descartes():
    for q, _ in gasket.quadruples(depth=4):
        assert gasket.is_descartes(q)


def test_integrality_depth5():
    circles = gasket.expand(depth=5)
    assert len(circles) == 4 + 4 * sum(3 ** k for k in range(5))
    for g in circles:
        assert g.circle.is_integral()
        assert (g.circle.b > 0) != (g.circle == BOUNDARY)


def test_expansion_order_and_parallel():
    serial = gasket.expand(depth=5)
    assert [g.path for g in serial[4:]] == sorted((g.path for g in serial[4:]), key=lambda p: (len(p), p))
    assert gasket.expand(depth=5, workers=3) == serial
    assert gasket.expand(max_curvature=300, workers=2) == gasket.expand(max_curvature=300)


def test_curvature_bound_prunes_safely():
    # curvature never decreases along a path, so the bounded expansion is exactly the filter
    deep = {g.circle for g in gasket.expand(depth=12, max_curvature=60)}
    bounded = {g.circle for g in gasket.expand(max_curvature=60)}
    assert deep == bounded
    assert all(X.b <= 60 for X in bounded)


def _circumcircle_oracle(p1, p2, p3):
    # solve x^2 + y^2 + D x + E y + G = 0 through the three points by Cramer's rule
    rows = [(F(x), F(y), F(1), -(F(x) ** 2 + F(y) ** 2)) for x, y in (p1, p2, p3)]

    def det3(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    A = [r[:3] for r in rows]
    rhs = [r[3] for r in rows]
    d = det3(A)
    sol = []
    for k in range(3):
        Ak = [list(r) for r in A]
        for i in range(3):
            Ak[i][k] = rhs[i]
        sol.append(det3(Ak) / d)
    D, E, G = sol
    cx, cy = -D / 2, -E / 2
    return (cx, cy), cx * cx + cy * cy - G


def test_inversion_circle_derivation():
    pts = [(1, 0), (0, 1), (F(1, 5), F(2, 5))]
    assert gasket.tangency_point_of_pair(BOUNDARY, RIGHT) == (1, 0)
    assert gasket.tangency_point_of_pair(BOUNDARY, TOP) == (0, 1)
    assert gasket.tangency_point_of_pair(RIGHT, TOP) == (F(1, 5), F(2, 5))
    centre, rr = _circumcircle_oracle(*pts)
    assert centre == (1, 1) and rr == 1
    assert C_CIRCLE.center == (1, 1) and C_CIRCLE.radius == 1


def test_inversion_fixes_own_circle_and_boundary():
    image = gasket.invert_in_circle(C_CIRCLE, C_CIRCLE)
    assert image.same_set(C_CIRCLE)
    assert gasket.invert_linear(C_CIRCLE, C_CIRCLE).same_set(C_CIRCLE)
    assert gasket.invert_in_circle(C_CIRCLE, BOUNDARY) == BOUNDARY
    assert gasket.invert_linear(C_CIRCLE, BOUNDARY) == BOUNDARY


def test_inversion_routes_agree():
    inversions = [C_CIRCLE, Circle(1, 0, 0), Circle(2, 1, 0), Circle.from_center(F(1, 3), -2, F(5, 2))]
    for C in inversions:
        for X in D4[:120]:
            try:
                a = gasket.invert_in_circle(C, X)
            except (Degenerate, NonIntegerResult):
                continue
            assert a == gasket.invert_linear(C, X)


def test_inversion_involutive_and_preserves_tangency():
    for c1, c2 in PAIRS4[:50]:
        i1, i2 = (gasket.invert_linear(C_CIRCLE, c) for c in (c1, c2))
        assert gasket.is_tangent(i1, i2)
        assert gasket.invert_linear(C_CIRCLE, i1) == c1


def test_window_is_invariant_under_symmetries():
    circles = set(D4)
    deeper = {g.circle for g in gasket.expand(depth=7)}
    for X in circles:
        for op in "ABC":
            assert gasket.symmetry(op, X) in deeper


def test_symmetry_examples():
    assert gasket.symmetry("A", RIGHT) == LEFT
    assert gasket.symmetry("B", RIGHT) == RIGHT
    assert gasket.symmetry("B", Circle(15, 0, 4)) == Circle(15, 0, -4)
    X = Circle(6, 3, 4)
    assert gasket.symmetry("CA", X) == (14, 5, 12)
    assert gasket.symmetry("CB", X) == (18, 15, 8)
    assert gasket.symmetry("CBA", X) == (30, 21, 20)
    with pytest.raises(ValueError):
        gasket.symmetry("D", X)


def test_symmetries_act_as_hall_matrices():
    for X in SUB4:
        t = gasket.triple_of_subboundary(X)
        for op, letter in (("CA", "L"), ("CB", "R"), ("CBA", "U")):
            Y = gasket.symmetry(op, X)
            assert gasket.is_subboundary(Y) and gasket.is_first_quadrant(Y)
            assert gasket.triple_of_subboundary(Y) == mat3_apply(hall.hall_matrix(letter), t)
        # C alone acts as the reflection R3 on (bx, by, b - 1)
        Z = gasket.symmetry("C", X)
        assert (Z.bx, Z.by, Z.b - 1) == mat3_apply(hall.R3, t)


def test_tangency_point_examples():
    assert gasket.tangency_point(Circle(6, 3, 4)) == (F(3, 5), F(4, 5))
    assert gasket.tangency_point(RIGHT) == (1, 0)
    assert gasket.tangency_point(TOP) == (0, 1)
    with pytest.raises(NotSubboundary):
        gasket.tangency_point(Circle(15, 0, 4))


def test_tangency_points_on_unit_circle():
    for X in D4:
        if gasket.is_subboundary(X):
            px, py = gasket.tangency_point(X)
            assert px * px + py * py == 1
            assert gasket.tangency_point_of_pair(BOUNDARY, X) == (px, py)


def test_triple_of_subboundary_examples():
    assert gasket.triple_of_subboundary(Circle(6, 3, 4)) == (3, 4, 5)
    with pytest.raises(Degenerate):
        gasket.triple_of_subboundary(TOP)
    with pytest.raises(NotSubboundary):
        gasket.triple_of_subboundary(Circle(15, 0, 4))


def test_subboundary_triples():
    for X in (g.circle for g in gasket.expand(depth=5)):
        if gasket.is_subboundary(X) and X.bx and X.by:
            t = gasket.triple_of_subboundary(X)
            assert spinor.minkowski_norm(t) == 0
            assert gasket.tangency_point(X) == (F(t.x, t.z), F(t.y, t.z))


def test_subboundary_gcd_is_one_or_two():
    for X in SUB4:
        t = gasket.triple_of_subboundary(X)
        g = gcd(gcd(t.x, t.y), t.z)
        assert g == (1 if t.x % 2 else 2)
        assert spinor.is_primitive_triple(gasket.primitive_part(t))


def test_subboundary_circles_match_coprime_spinors():
    B = 401
    found = {}
    for g in gasket.expand(max_curvature=B):
        X = g.circle
        if gasket.is_subboundary(X) and gasket.is_first_quadrant(X):
            u = spinor.spinor_of(gasket.triple_of_subboundary(X))
            assert u not in found
            assert X.b == u.m ** 2 + u.n ** 2 + 1
            found[u] = X
    expected = {(m, n) for m in range(1, 21) for n in range(1, m)
                if gcd(m, n) == 1 and m * m + n * n + 1 <= B}
    assert set(found) == expected


def test_every_small_primitive_triple_appears():
    reps = set()
    for g in gasket.expand(max_curvature=401):
        X = g.circle
        if gasket.is_subboundary(X) and gasket.is_first_quadrant(X):
            reps.add(tuple(gasket.primitive_part(gasket.triple_of_subboundary(X))))
    for c in range(1, 201):
        for a in range(1, c):
            b = isqrt(c * c - a * a)
            if b and a * a + b * b == c * c and gcd(a, b) == 1:
                assert (a, b, c) in reps


def test_triple_of_pair_examples():
    assert gasket.triple_of_pair(RIGHT, TOP) == (-3, 4, 5)
    assert gasket.triple_of_pair(TOP, RIGHT) == (3, -4, 5)
    assert gasket.triple_of_pair(RIGHT, LEFT) == (-4, 0, 4)
    with pytest.raises(NotTangent):
        gasket.triple_of_pair(LEFT, Circle(6, 3, 4))


def test_triple_of_pair_against_geometry():
    for c1, c2 in PAIRS4:
        t = gasket.triple_of_pair(c1, c2)
        (x1, y1), (x2, y2) = c1.center, c2.center
        r1, r2 = F(1) / c1.b, F(1) / c2.b
        assert (t.x, t.y) == ((x2 - x1) / (r1 * r2), (y2 - y1) / (r1 * r2))
        dist2 = ((x2 - x1) ** 2 + (y2 - y1) ** 2) / (r1 * r2) ** 2
        assert t.z ** 2 == dist2 and t.x ** 2 + t.y ** 2 == t.z ** 2


def test_svg_depth0():
    svg = gasket.render_svg(gasket.expand(depth=0))
    assert svg.count("<circle ") == 4
    assert 'viewBox="-1.05 -1.05 2.1 2.1"' in svg
    assert "<text" not in svg


def test_svg_golden_depth3():
    svg = gasket.render_svg(gasket.expand(depth=3), gasket.SvgOptions(labels="triples"))
    assert svg == (DATA / "window_depth3_triples.svg").read_text()
    labels = [line for line in svg.splitlines() if line.startswith("<text")]
    expected = {f"{t.x},{t.y},{t.z}" for t in map(gasket.triple_of_subboundary, (
        g.circle for g in gasket.expand(depth=3)
        if gasket.is_subboundary(g.circle) and gasket.is_first_quadrant(g.circle)))}
    assert {line.split(">")[1].split("<")[0] for line in labels} == expected
    assert '<text x="0.600000000000" y="-0.800000000000">3,4,5</text>' in svg


def test_svg_spinor_labels():
    svg = gasket.render_svg(gasket.expand(depth=2), gasket.SvgOptions(labels="spinors"))
    assert ">(2,1)</text>" in svg


def test_fixed():
    assert gasket.fixed(F(1, 3), 4) == "0.3333"
    assert gasket.fixed(F(-2, 3), 3) == "-0.667"
    assert gasket.fixed(2, 2) == "2.00"


def test_jsonl():
    rows = [json.loads(l) for l in gasket.to_jsonl(gasket.expand(depth=1)).splitlines()]
    assert rows[0] == {"b": -1, "bx": 0, "by": 0, "depth": 0}
    assert len(rows) == 8 and rows[-1]["depth"] == 1


@given(st.integers(1, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_from_center_round_trip(b, bx, by):
    X = Circle(b, bx, by)
    (cx, cy), r = X.center, X.radius
    assert Circle.from_center(cx, cy, r) == X
