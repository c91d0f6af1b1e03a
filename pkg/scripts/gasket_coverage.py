"""Which primitive triples show up as window tangency points, by depth and by curvature."""
import argparse
from math import gcd, isqrt

from pythspin import gasket


def oracle(N):
    return {(a, isqrt(c * c - a * a), c) for c in range(1, N + 1) for a in range(1, c)
            if isqrt(c * c - a * a) ** 2 == c * c - a * a and isqrt(c * c - a * a) and gcd(a, c) == 1}


def rays(circles):
    return {tuple(gasket.primitive_part(gasket.triple_of_subboundary(g.circle))) for g in circles
            if gasket.is_subboundary(g.circle) and gasket.is_first_quadrant(g.circle)}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-c", type=int, default=200)
    ap.add_argument("--max-depth", type=int, default=8)
    args = ap.parse_args()
    want = oracle(args.max_c)
    print(f"{len(want)} oriented primitive triples with c <= {args.max_c}")
    for d in range(args.max_depth + 1):
        got = rays(gasket.expand(depth=d)) & want
        print(f"depth {d}: {len(got)} present")
    B = 2 * args.max_c + 1
    print(f"curvature <= {B}: {len(rays(gasket.expand(max_curvature=B)) & want)} present")


if __name__ == "__main__":
    main()
