"""Command-line front end.

    trinomial triangle  --source ones --K 4 [--sums] [--format plain|csv]
    trinomial transform --source tribonacci --count 9 [--diag L] [--format plain|csv|bfile]
    trinomial coeffs    --spec-file spec.json
    trinomial sums      --source fibonacci --count 10
    trinomial charpoly  --source tribonacci
    trinomial verify    --suite symbolic|fuzz|tables|oeis|explore|all
    trinomial export    --source fibonacci --count 100 [--diag L] [--sums s|s_bar] [--output FILE]
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import catalog, verify
from . import triangle as tri
from .ternary import (
    SpecError,
    TernarySpec,
    char_poly,
    char_poly_transform,
    derive,
    diagonal_fast,
    sequence,
    sums_fast,
)

MAX_SIZE = 10000

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class CliError(Exception):
    """User-facing error; the message is printed and the exit status is 2."""


class _Source:
    def __init__(self, label: str, generator, spec: TernarySpec | None):
        self.label = label
        self.generator = generator
        self.spec = spec


def _load_source(args) -> _Source:
    if bool(args.source) == bool(args.spec_file):
        raise CliError("exactly one of --source or --spec-file is required")
    if args.source:
        try:
            entry = catalog.get(args.source)
        except catalog.UnknownSequenceError as exc:
            raise CliError(str(exc)) from None
        return _Source(entry.name, entry.generator, entry.ternary_embedding)
    try:
        spec = TernarySpec.from_file(args.spec_file)
    except OSError as exc:
        raise CliError(f"cannot read spec file {args.spec_file}: {exc.strerror}") from None
    except SpecError as exc:
        raise CliError(f"bad spec file {args.spec_file}: {exc}") from None
    return _Source(args.spec_file, sequence(spec), spec)


def _require_spec(src: _Source) -> TernarySpec:
    if src.spec is None:
        raise CliError(f"{src.label} has no ternary recurrence")
    return src.spec


def _bounded(name: str, lo: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if not lo <= v <= MAX_SIZE:
            raise argparse.ArgumentTypeError(f"{name} must be in {lo}..{MAX_SIZE}")
        return v

    return parse


def format_table(rows: Sequence[Sequence[str]]) -> list[str]:
    """Right-align cells column by column."""
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    return [" ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def render_triangle(t: tri.TransformTriangle, fmt: str, sums: bool) -> list[str]:
    K = t.K
    body = [[str(n)] + [""] * n + [str(v) for v in t.row(n)] for n in range(K + 1)]
    if sums:
        s, s_bar = tri.column_sums(t)
        body.append(["s"] + [str(v) for v in s])
        body.append(["s_bar"] + [str(v) for v in s_bar])
    header = ["n\\k"] + [str(k) for k in range(K + 1)]
    if fmt == "csv":
        return [",".join(["n"] + header[1:])] + [",".join(r) for r in body]
    return format_table([header] + body)


def render_sequence(values: Sequence[int], fmt: str, label: str = "value") -> list[str]:
    if fmt == "bfile":
        return [f"{n} {v}" for n, v in enumerate(values)]
    if fmt == "csv":
        return [f"n,{label}"] + [f"{n},{v}" for n, v in enumerate(values)]
    return [", ".join(map(str, values))]


def _diagonal(src: _Source, ell: int, count: int) -> list[int]:
    if src.spec is not None:
        return diagonal_fast(src.spec, ell, count)
    t = tri.build(src.generator, count - 1 + ell)
    return tri.diagonal(t, ell, count)


def cmd_triangle(args, out: TextIO) -> int:
    if args.format == "bfile":
        raise CliError("triangle supports --format plain or csv")
    src = _load_source(args)
    t = tri.build(src.generator, args.K)
    print("\n".join(render_triangle(t, args.format, args.sums)), file=out)
    return EXIT_OK


def cmd_transform(args, out: TextIO) -> int:
    src = _load_source(args)
    values = _diagonal(src, args.diag, args.count)
    print("\n".join(render_sequence(values, args.format)), file=out)
    return EXIT_OK


def cmd_coeffs(args, out: TextIO) -> int:
    spec = _require_spec(_load_source(args))
    d = derive(spec)
    lines = [
        f"alpha={spec.alpha} beta={spec.beta} gamma={spec.gamma}",
        f"A={d.A}",
        f"B={d.B}",
        f"C={d.C}",
        f"P={d.P}",
        f"Q={d.Q}",
        "sum6=" + " ".join(map(str, d.sum6)),
        "alt6=" + " ".join(map(str, d.alt6)),
    ]
    print("\n".join(lines), file=out)
    return EXIT_OK


def cmd_sums(args, out: TextIO) -> int:
    src = _load_source(args)
    if src.spec is not None:
        s, s_bar = sums_fast(src.spec, args.count)
    else:
        t = tri.build(src.generator, args.count - 1)
        s, s_bar = tri.column_sums(t)
    if args.format == "csv":
        lines = ["n,s,s_bar"] + [f"{n},{a},{b}" for n, (a, b) in enumerate(zip(s, s_bar))]
    elif args.format == "bfile":
        raise CliError("sums supports --format plain or csv; use export --sums for b-files")
    else:
        lines = ["s: " + ", ".join(map(str, s)), "s_bar: " + ", ".join(map(str, s_bar))]
    print("\n".join(lines), file=out)
    return EXIT_OK


def cmd_charpoly(args, out: TextIO) -> int:
    spec = _require_spec(_load_source(args))
    p = char_poly(spec)
    print(f"base: {p.format('t')}", file=out)
    print(f"transform: {char_poly_transform(p).format('s')}", file=out)
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    checks = verify.run(args.suite)
    for c in checks:
        print(c.line(), file=out)
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks hold", file=out)
    return EXIT_OK if failed == 0 else EXIT_FAILED


def cmd_export(args, out: TextIO) -> int:
    src = _load_source(args)
    if args.sums:
        if src.spec is not None:
            s, s_bar = sums_fast(src.spec, args.count)
        else:
            s, s_bar = tri.column_sums(tri.build(src.generator, args.count - 1))
        values = s if args.sums == "s" else s_bar
    else:
        values = _diagonal(src, args.diag, args.count)
    text = "".join(line + "\n" for line in render_sequence(values, "bfile"))
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trinomial", description="Trinomial transform triangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_source(p):
        p.add_argument("--source", help=f"catalog sequence: {', '.join(catalog.NAMES)}")
        p.add_argument("--spec-file", help="JSON file with alpha, beta, gamma, a0, a1, a2")
        return p

    p = with_source(sub.add_parser("triangle", help="render the transform triangle"))
    p.add_argument("--K", type=_bounded("K", 0), default=9)
    p.add_argument("--sums", action="store_true", help="append the s and s_bar rows")
    p.add_argument("--format", choices=("plain", "csv", "bfile"), default="plain")
    p.set_defaults(func=cmd_triangle)

    p = with_source(sub.add_parser("transform", help="trinomial transform or another diagonal"))
    p.add_argument("--count", type=_bounded("count", 1), default=10)
    p.add_argument("--diag", type=_bounded("diag", 0), default=0)
    p.add_argument("--format", choices=("plain", "csv", "bfile"), default="plain")
    p.set_defaults(func=cmd_transform)

    p = with_source(sub.add_parser("coeffs", help="derived recurrence coefficients"))
    p.set_defaults(func=cmd_coeffs)

    p = with_source(sub.add_parser("sums", help="column sums and alternating column sums"))
    p.add_argument("--count", type=_bounded("count", 1), default=10)
    p.add_argument("--format", choices=("plain", "csv", "bfile"), default="plain")
    p.set_defaults(func=cmd_sums)

    p = with_source(sub.add_parser("charpoly", help="characteristic polynomial of the transform"))
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.set_defaults(func=cmd_verify)

    p = with_source(sub.add_parser("export", help="write an OEIS b-file"))
    p.add_argument("--count", type=_bounded("count", 1), default=100)
    p.add_argument("--diag", type=_bounded("diag", 0), default=0)
    p.add_argument("--sums", choices=("s", "s_bar"), help="export a column-sum sequence instead")
    p.add_argument("--output", help="file to write (default stdout)")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"trinomial {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
    except tri.TriangleRangeError as exc:
        print(f"trinomial {args.command}: range error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
