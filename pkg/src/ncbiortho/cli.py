"""Command-line front end.

Exit status: 0 on success / PASS, 1 on a mathematical failure (a FAIL
report, a genericity violation, a degenerate normalization), 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import os
import random
import sys

from . import jsonio
from .biortho import build_system, random_generic_table, verify_biortho, verify_lemma
from .errors import (
    DegenerateNormalizationError,
    GenericityError,
    InconsistencyError,
    InsufficientBimomentsError,
    NCBError,
    QuasideterminantUndefinedError,
    RingMismatchError,
)
from .favard import FavardInput, favard_bimoments, favard_verify
from .linalg import quasidet
from .pairing import gram
from .recurrence import (
    KernelData,
    operator_size,
    random_kernel_table,
    required_table_shape,
    run_recurrence,
    synth_generic,
)
from .report import Report
from .ring import parse_ring

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

MATH_ERRORS = (GenericityError, DegenerateNormalizationError, QuasideterminantUndefinedError,
               InconsistencyError)


def _bool(text):
    low = text.lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NCB_SEED")
    return int(env) if env else 0


def _emit(report: Report, path):
    print(report.summary())
    if path:
        jsonio.write_json(path, report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_quasidet(args):
    m = jsonio.load_matrix(jsonio.read_json(args.matrix), args.matrix)
    n = m.rows
    if m.cols != n:
        raise jsonio.FormatError(args.matrix, f"matrix must be square, got {m.shape}")
    if not (1 <= args.row <= n and 1 <= args.col <= n):
        raise jsonio.FormatError(args.matrix, f"--row/--col must lie in 1..{n}")
    value = quasidet(m, args.row - 1, args.col - 1)
    dumped = m.ring.dump(value)
    print(dumped if isinstance(dumped, str) else " ".join(dumped))
    return EXIT_OK


def cmd_build(args):
    table = jsonio.load_table(jsonio.read_json(args.bimoments), args.bimoments)
    system = build_system(table, args.upto, normalized=args.normalized)
    jsonio.write_json(args.out, jsonio.dump_system(system))
    if args.out not in (None, "-"):
        print(f"built {system.normalization} system p_0..p_{args.upto - 1}, "
              f"q_0..q_{args.upto - 1} over {table.ring.value}")
    return EXIT_OK


def cmd_verify(args):
    system = jsonio.load_system(jsonio.read_json(args.system), args.system)
    table = jsonio.load_table(jsonio.read_json(args.bimoments), args.bimoments, system.ring)
    report = verify_biortho(system, table)
    lemma = verify_lemma(system, table)
    combined = Report("verify", data={"gram": report.data["gram"]})
    combined.merge(report).merge(lemma)
    return _emit(combined, args.report)


def _load_pq(args):
    if args.system:
        system = jsonio.load_system(jsonio.read_json(args.system), args.system)
        return system.ps, system.qs
    if not (args.p and args.q):
        raise jsonio.FormatError("arguments", "give --system or both --p and --q")
    ps = jsonio.load_poly_list(jsonio.read_json(args.p), args.p, var="x")
    qs = jsonio.load_poly_list(jsonio.read_json(args.q), args.q, ps[0].ring if ps else None,
                               var="y")
    return ps, qs


def cmd_gram(args):
    ps, qs = _load_pq(args)
    table = jsonio.load_table(jsonio.read_json(args.bimoments), args.bimoments,
                              ps[0].ring if ps else None)
    size = min(len(ps), len(qs)) if args.size is None else args.size
    g = gram(ps[:size], qs[:size], table)
    ring = table.ring
    out = [[ring.dump(x) for x in row] for row in g]
    jsonio.write_json(args.out, {"ring": ring.value, "gram": out})
    if args.out not in (None, "-"):
        for row in g:
            print("  ".join(str(x) for x in row))
    return EXIT_OK


def _kernel_polys(args, ring=None):
    f = jsonio.load_poly(jsonio.read_json(args.f), args.f, ring, central=True, var="x")
    g = jsonio.load_poly(jsonio.read_json(args.g), args.g, f.ring, central=True, var="y")
    return f, g


def cmd_synth_kernel(args):
    ring = parse_ring(args.ring) if args.ring else None
    f, g = _kernel_polys(args, ring)
    ring = f.ring
    rows, cols = args.size, args.cols or args.size
    rng = random.Random(_seed(args))
    if args.alpha is None and args.beta is None:
        kd, table = random_kernel_table((f, g), ring, rows, cols, rng,
                                        max_retries=args.max_retries)
    else:
        if args.alpha is None or args.beta is None:
            raise jsonio.FormatError("arguments", "give both --alpha and --beta or neither")
        _, alpha = jsonio.load_scalars(jsonio.read_json(args.alpha), args.alpha, ring)
        _, beta = jsonio.load_scalars(jsonio.read_json(args.beta), args.beta, ring)
        kd = KernelData(f, g, alpha, beta)
        try:
            table = synth_generic(kd, rows, cols, rng, max_retries=args.max_retries)
        except ValueError as exc:
            raise jsonio.FormatError("alpha/beta", str(exc)) from None
    jsonio.write_json(args.out, jsonio.dump_table(table))
    if args.kernel_out:
        jsonio.write_json(args.kernel_out, {
            "f": jsonio.dump_poly(kd.f),
            "g": jsonio.dump_poly(kd.g),
            "alpha": jsonio.dump_scalars(ring, kd.alpha),
            "beta": jsonio.dump_scalars(ring, kd.beta),
        })
    print(f"synthesized {rows}x{cols} {ring.value} table, deg f = {kd.n}, deg g = {kd.m}")
    return EXIT_OK


def cmd_recurrence(args):
    table = jsonio.load_table(jsonio.read_json(args.bimoments), args.bimoments)
    f, g = _kernel_polys(args, table.ring)
    _, alpha = jsonio.load_scalars(jsonio.read_json(args.alpha), args.alpha, table.ring)
    _, beta = jsonio.load_scalars(jsonio.read_json(args.beta), args.beta, table.ring)
    kd = KernelData(f, g, alpha, beta)
    size = operator_size(kd, args.upto)
    rows, cols = required_table_shape(kd, size)
    if table.rows < rows or table.cols < cols:
        print(f"recurrence up to k={args.upto} needs a {rows}x{cols} table, "
              f"got {table.rows}x{table.cols}", file=sys.stderr)
        return EXIT_USAGE
    _, _, report = run_recurrence(table, kd, args.upto)
    return _emit(report, args.report)


def cmd_favard(args):
    ps = jsonio.load_poly_list(jsonio.read_json(args.p), args.p, var="x")
    if not ps:
        raise jsonio.FormatError(args.p, "no polynomials")
    ring = ps[0].ring
    qs = jsonio.load_poly_list(jsonio.read_json(args.q), args.q, ring, var="y")
    if args.c:
        _, cs = jsonio.load_scalars(jsonio.read_json(args.c), args.c, ring)
    else:
        cs = [ring.one()] * len(ps)
    try:
        inp = FavardInput(ps, qs, cs)
    except (ValueError, RingMismatchError) as exc:
        raise jsonio.FormatError("favard input", str(exc)) from None
    try:
        table = favard_bimoments(inp, args.size)
    except ValueError as exc:
        raise jsonio.FormatError("favard input", str(exc)) from None
    jsonio.write_json(args.out, jsonio.dump_table(table))
    report = favard_verify(inp, table, args.size)
    print(report.summary(), file=sys.stderr if args.out in (None, "-") else sys.stdout)
    if args.report:
        jsonio.write_json(args.report, report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_random_table(args):
    ring = parse_ring(args.ring)
    table = random_generic_table(ring, args.size, random.Random(_seed(args)),
                                 max_retries=args.max_retries)
    jsonio.write_json(args.out, jsonio.dump_table(table))
    return EXIT_OK


def make_parser():
    parser = argparse.ArgumentParser(
        prog="ncbiortho",
        description="Exact noncommutative biorthogonal polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quasidet", help="quasideterminant |A|_{row,col} (1-based)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--col", type=int, required=True)
    p.set_defaults(func=cmd_quasidet)

    p = sub.add_parser("build", help="p_n, q_n from a bimoment table")
    p.add_argument("--bimoments", required=True)
    p.add_argument("--upto", type=_positive, required=True,
                   help="number of polynomials: builds degrees 0..UPTO-1")
    p.add_argument("--normalized", type=_bool, default=False,
                   help="true for the biorthonormal variant")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check biorthogonality of a system")
    p.add_argument("--system", required=True)
    p.add_argument("--bimoments", required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gram", help="Gram array <p_n, q_m>")
    p.add_argument("--bimoments", required=True)
    p.add_argument("--system")
    p.add_argument("--p")
    p.add_argument("--q")
    p.add_argument("--size", type=_positive)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("synth-kernel", help="bimoment table satisfying the kernel condition")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--size", type=_positive, required=True, help="table rows")
    p.add_argument("--cols", type=_positive, help="table columns (default: --size)")
    p.add_argument("--ring", choices=["rational", "quaternion"])
    p.add_argument("--seed", type=int)
    p.add_argument("--max-retries", type=_positive, default=50)
    p.add_argument("--out", default="-")
    p.add_argument("--kernel-out", help="write f, g, alpha, beta used")
    p.set_defaults(func=cmd_synth_kernel)

    p = sub.add_parser("recurrence", help="verify the finite-term recurrences")
    p.add_argument("--bimoments", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--upto", type=_positive, required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("favard", help="bimoments making given sequences biorthogonal")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--c")
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--report")
    p.set_defaults(func=cmd_favard)

    p = sub.add_parser("random-table", help="random generic bimoment table")
    p.add_argument("--ring", choices=["rational", "quaternion"], default="rational")
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-retries", type=_positive, default=50)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_random_table)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MATH_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (jsonio.FormatError, InsufficientBimomentsError, RingMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NCBError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
