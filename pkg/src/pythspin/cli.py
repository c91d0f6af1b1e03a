"""Command-line entry point.

Exit codes: 0 success, 1 domain error (bad mathematical input), 2 usage error.
Output formats: human (default), json (one object per line), csv (header row).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import List, Sequence

from . import gasket, hall, spinor, tuples, verify
from .algebra import AlgebraKind
from .errors import DomainError

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _emit(rows: List[dict], fields: Sequence[str], fmt: str, human) -> str:
    if fmt == "json":
        return "".join(json.dumps({k: r[k] for k in fields}) + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for r in rows:
            w.writerow([r[k] for k in fields])
        return buf.getvalue()
    return "".join(human(r) + "\n" for r in rows)


def cmd_triples(args) -> str:
    if args.depth is None and args.max_c is None:
        raise UsageError("triples needs --depth or --max-c")
    nodes = hall.enumerate_triples(args.depth, args.max_c, workers=args.jobs)
    rows = [{"word": w or "-", "x": t.x, "y": t.y, "z": t.z} for w, t in nodes]
    return _emit(rows, ("word", "x", "y", "z"), args.format,
                 lambda r: f"{r['word']} {r['x']} {r['y']} {r['z']}")


def cmd_word(args) -> str:
    v, swapped = hall.normalize_legs((args.a, args.b, args.c))
    if swapped:
        print(f"note: legs swapped to {v.x} {v.y} {v.z}", file=sys.stderr)
    return (hall.word_of(v) or "-") + "\n"


def cmd_triple(args) -> str:
    t = hall.apply_word(args.word)
    return f"{t.x} {t.y} {t.z}\n"


def cmd_spinor(args) -> str:
    u = spinor.spinor_of((args.a, args.b, args.c))
    return f"{u.m} {u.n}\n"


def cmd_euclid(args) -> str:
    t = spinor.euclid((args.m, args.n))
    return f"{t.x} {t.y} {t.z}\n"


def _param_sets(args, width: int) -> List[List[int]]:
    if args.params is not None:
        if len(args.params) % width:
            raise UsageError(f"--params needs a multiple of {width} integers")
        return [args.params[i:i + width] for i in range(0, len(args.params), width)]
    rng = random.Random(args.seed)
    r = args.range
    return [[rng.randint(-r, r) for _ in range(width)] for _ in range(args.count)]


def _tuple_rows(params_list, make) -> List[dict]:
    rows = []
    for params in params_list:
        t = make(params)
        rows.append({
            "params": " ".join(map(str, params)),
            "signature": f"{t.signature[0]},{t.signature[1]}",
            "values": " ".join(map(str, t.values)),
        })
    return rows


def _emit_tuples(rows, fmt) -> str:
    if fmt == "json":
        return "".join(
            json.dumps({"params": [int(x) for x in r["params"].split()],
                        "signature": [int(x) for x in r["signature"].split(",")],
                        "values": [int(x) for x in r["values"].split()]}) + "\n"
            for r in rows
        )
    return _emit(rows, ("params", "signature", "values"), fmt, lambda r: r["values"])


def cmd_quadruples(args) -> str:
    rows = _tuple_rows(_param_sets(args, 4), lambda p: tuples.quadruple(*p))
    return _emit_tuples(rows, args.format)


def cmd_hexads(args) -> str:
    rows = _tuple_rows(_param_sets(args, 8), lambda p: tuples.hexad(p[:4], p[4:]))
    return _emit_tuples(rows, args.format)


def cmd_tuples(args) -> str:
    try:
        kind = AlgebraKind.parse(args.algebra)
    except ValueError as e:
        raise UsageError(str(e))
    rows = _tuple_rows(
        _param_sets(args, 2 * kind.dim),
        lambda p: tuples.general_tuple(tuples.SpinorPair.of(kind, p)),
    )
    return _emit_tuples(rows, args.format)


def cmd_verify(args) -> str:
    results = verify.run(args.suite, seed=args.seed)
    lines = []
    for c in results:
        mark = "PASS" if c.ok else "FAIL"
        extra = f" ({c.detail})" if c.detail else ""
        lines.append(f"{mark} [{c.suite}] {c.name}{extra}")
    failed = sum(not c.ok for c in results)
    lines.append(f"{len(results) - failed}/{len(results)} identities passed")
    args.exit_code = 1 if failed else 0
    return "\n".join(lines) + "\n"


def cmd_gasket(args) -> str:
    if args.depth is None and args.max_curvature is None:
        raise UsageError("gasket needs --depth or --max-curvature")
    circles = gasket.expand(args.depth, args.max_curvature, workers=args.jobs)
    if args.svg is not None:
        doc = gasket.render_svg(circles, gasket.SvgOptions(labels=args.labels))
        if args.svg == "-":
            return doc
        with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(doc)
        print(f"wrote {len(circles)} circles to {args.svg}", file=sys.stderr)
        return ""
    if args.format == "json":
        return gasket.to_jsonl(circles)
    rows = [{"depth": g.depth, "b": g.circle.b, "bx": g.circle.bx, "by": g.circle.by} for g in circles]
    return _emit(rows, ("depth", "b", "bx", "by"), args.format,
                 lambda r: f"{r['depth']} {r['b']} {r['bx']} {r['by']}")


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pythspin", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("human", "json", "csv"), default="human")

    s = sub.add_parser("triples", help="enumerate the Hall tree")
    s.add_argument("--depth", type=_nonneg)
    s.add_argument("--max-c", type=_nonneg)
    s.add_argument("--format", **fmt)
    s.add_argument("--jobs", type=_positive, default=1)
    s.set_defaults(func=cmd_triples)

    s = sub.add_parser("word", help="Hall word of a primitive triple")
    for name in "abc":
        s.add_argument(name, type=int)
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("triple", help="apply a Hall word to (3, 4, 5)")
    s.add_argument("word")
    s.set_defaults(func=cmd_triple)

    s = sub.add_parser("spinor", help="Euclid parameters of a triple")
    for name in "abc":
        s.add_argument(name, type=int)
    s.set_defaults(func=cmd_spinor)

    s = sub.add_parser("euclid", help="triple from Euclid parameters")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_euclid)

    for name, func, helptext in (
        ("quadruples", cmd_quadruples, "Pythagorean quadruples from 4 parameters"),
        ("hexads", cmd_hexads, "Pythagorean hexads from 8 parameters"),
        ("tuples", cmd_tuples, "tuples from a spinor pair over a composition algebra"),
    ):
        s = sub.add_parser(name, help=helptext)
        if name == "tuples":
            s.add_argument("--algebra", required=True,
                           help="complex, duplex, quaternion, kwaternion or octonion")
        s.add_argument("--count", type=_nonneg, default=10)
        s.add_argument("--seed", type=int, default=DEFAULT_SEED)
        s.add_argument("--range", type=_nonneg, default=10, help="random parameters in [-R, R]")
        s.add_argument("--params", type=int, nargs="+", help="explicit parameters instead of random ones")
        s.add_argument("--format", **fmt)
        s.set_defaults(func=func)

    s = sub.add_parser("verify", help="run identity suites")
    s.add_argument("--suite", choices=("all",) + tuple(verify.SUITES), default="all")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gasket", help="expand or render the Apollonian window")
    s.add_argument("--depth", type=_nonneg)
    s.add_argument("--max-curvature", type=int)
    s.add_argument("--svg", metavar="PATH", help="write SVG to PATH ('-' for stdout)")
    s.add_argument("--labels", choices=("triples", "spinors", "none"), default="none")
    s.add_argument("--format", **fmt)
    s.add_argument("--jobs", type=_positive, default=1)
    s.set_defaults(func=cmd_gasket)
    return p


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(args, "suite", None) not in (None, "all"):
        args.suite = [args.suite]
    args.exit_code = 0
    try:
        out = args.func(args)
    except UsageError as e:
        print(f"pythspin {args.command}: error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"pythspin {args.command}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"pythspin {args.command}: error: {e}", file=sys.stderr)
        return 2
    stdout.write(out)
    return args.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
