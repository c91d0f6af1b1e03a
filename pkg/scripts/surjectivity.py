"""How large a parameter box does the complex quadruple formula need?

For each bound d, report the smallest box |m|,|n|,|p|,|q| <= B reaching every
primitive quadruple with hypotenuse at most d.
"""
import argparse

from pythspin import tuples


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bounds", type=int, nargs="+", default=[20, 40, 60, 80])
    ap.add_argument("--max-box", type=int, default=10)
    args = ap.parse_args()
    for d in args.bounds:
        total = len(tuples.enumerate_primitive_quadruples(d))
        for B in range(1, args.max_box + 1):
            missing = tuples.surjectivity_failures(d, B)
            if not missing:
                print(f"d <= {d}: {total} primitive quadruples, all reached with box {B}")
                break
        else:
            print(f"d <= {d}: {len(missing)} of {total} unreached with box {args.max_box}")


if __name__ == "__main__":
    main()
