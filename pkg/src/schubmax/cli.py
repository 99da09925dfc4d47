"""Command-line entry point: ``schubmax <subcommand> ...``.

Data goes to stdout (or ``--output``); the config header, progress and
notes go to stderr. Exit status is 0 iff every requested check passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import time
from typing import Sequence

import mpmath

from . import conjectures as cj
from .constants import (
    bound_scan, integral_identity_grid, limit_gap_scan, plot_rows,
    solve_constants, verify_max_lemma,
)
from .layered import build, diff_against_appendix, format_fixed, load_appendix
from .perm import Permutation, complement, format_composition, layered, shifted, w0
from .proctor import F, F_superfactorial, antidiagonal, log2_exact, plane_partition_count
from .upsilon import sweep, upsilon

log = logging.getLogger("schubmax")

THREADS_ENV = "SCHUBMAX_THREADS"

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)  # v(300) has ~7800 decimal digits


def _default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


class _Out:
    """Collects the data stream and writes it once, to a file or stdout."""

    def __init__(self, path: str | None):
        self.path = path
        self.buf = io.StringIO()

    def write(self, text: str) -> None:
        self.buf.write(text)

    def line(self, text: str = "") -> None:
        self.buf.write(text + "\n")

    def close(self) -> None:
        if self.path:
            with open(self.path, "w", newline="") as fh:
                fh.write(self.buf.getvalue())
        else:
            sys.stdout.write(self.buf.getvalue())
            sys.stdout.flush()


def _csv(out: _Out, rows, delimiter=","):
    writer = csv.writer(out, delimiter=delimiter, lineterminator="\n")
    writer.writerows(rows)


def _table(out: _Out, header: Sequence[str], rows) -> None:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    out.line("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    out.line("  ".join("-" * w for w in widths))
    for r in rows:
        out.line("  ".join(c.rjust(w) for c, w in zip(r, widths)))


# -- subcommands ------------------------------------------------------------

def cmd_upsilon(args, out: _Out) -> int:
    try:
        w = Permutation.parse(args.perm)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    value = upsilon(w)
    if args.pair:
        partner = complement(w)
        pv = upsilon(partner)
        if args.format == "json":
            out.line(json.dumps({"perm": str(w), "upsilon": value, "partner": str(partner),
                                 "partner_upsilon": pv, "product": value * pv}))
        else:
            out.line(f"{value}")
            out.line(f"{pv}")
            out.line(f"{value * pv}")
    elif args.format == "json":
        out.line(json.dumps({"perm": str(w), "upsilon": value}))
    else:
        out.line(str(value))
    return 0


def cmd_vmax(args, out: _Out) -> int:
    t = time.perf_counter()
    table = build(args.n)
    log.info("dp to n=%d in %.2fs", args.n, time.perf_counter() - t)
    rows = table.rows()
    if args.format == "json":
        payload = []
        for n, comp, f6 in rows:
            payload.append({"n": n, "composition": list(comp), "f": f6,
                            "v": str(table.v[n]), "bits": table.v[n].bit_length()})
        out.line(json.dumps(payload))
    elif args.format == "table":
        _table(out, ["n", "(..., b_2, b_1)", "f(n)"], [(n, format_composition(c), f) for n, c, f in rows])
    else:
        out.line("n,composition,f6")
        _csv(out, [(n, format_composition(c), f) for n, c, f in rows])
    if not args.diff:
        return 0
    entries = diff_against_appendix(table, load_appendix())
    hard = [e for e in entries if e.kind != "last-digit"]
    for e in entries:
        tag = "MISMATCH" if e.kind != "last-digit" else "note"
        print(f"{tag} n={e.n} {e.kind}: ours={e.ours} appendix={e.theirs}", file=sys.stderr)
    checked = min(args.n, len(load_appendix()))
    print(f"diff: {checked} rows, {len(hard)} mismatches, "
          f"{len(entries) - len(hard)} truncated last digits", file=sys.stderr)
    return 1 if hard else 0


def cmd_constants(args, out: _Out) -> int:
    bundle = solve_constants(args.tol, method=args.method)
    d = args.precision
    if args.format == "json":
        out.line(json.dumps({
            "alpha": format_fixed(bundle.alpha, d),
            "gamma": format_fixed(bundle.gamma, d),
            "gamma_over_log2": format_fixed(bundle.gamma_over_log2, d),
            "tol": args.tol, "method": bundle.method,
        }))
    else:
        out.line(f"alpha={format_fixed(bundle.alpha, d)}")
        out.line(f"gamma={format_fixed(bundle.gamma, d)}")
        out.line(f"gamma/log2={format_fixed(bundle.gamma_over_log2, d)}")
    if args.plot:
        with open(args.plot, "w", newline="") as fh:
            fh.write("x\tf(x)\tq(x)\tgamma*x^2+f(x)\n")
            for row in plot_rows(bundle, args.points):
                fh.write("\t".join(format_fixed(v, 12) for v in row) + "\n")
        log.info("plot data written to %s", args.plot)
    return 0


def _verify_proctor(out: _Out) -> bool:
    ok = True
    checks = [
        ("F == F_superfactorial, m,p <= 30",
         all(F(m, p) == F_superfactorial(m, p) for m in range(31) for p in range(1, 31))),
        ("F == plane_partition_count, m,p <= 5",
         all(F(m, p) == plane_partition_count(m, p) for m in range(6) for p in range(1, 6))),
        ("F == upsilon(1^m x w0(p)), m+p <= 8",
         all(F(m, p) == upsilon(shifted(m, w0(p))) for m in range(8) for p in range(1, 9 - m))),
        ("antidiagonal == F, n <= 60",
         all(val == F(n - p, p) for n in range(1, 61) for p, val in antidiagonal(n))),
    ]
    for name, passed in checks:
        out.line(f"{'PASS' if passed else 'FAIL'} proctor: {name}")
        ok &= passed
    return ok


def cmd_verify(args, out: _Out) -> int:
    suites = ["proctor", "lemma", "integral", "bounds", "limit"] if args.suite == "all" else [args.suite]
    ok = True
    bundle = None
    for suite in suites:
        t = time.perf_counter()
        if suite == "proctor":
            ok &= _verify_proctor(out)
        elif suite == "lemma":
            bundle = bundle or solve_constants()
            rep = verify_max_lemma(bundle, args.grid_points, strict=False)
            out.line(f"{'PASS' if rep.ok else 'FAIL'} lemma: max of f+gamma*x^2 = "
                     f"{rep.grid_max:.15f} at x={rep.grid_argmax}, 2gamma+f''(alpha)="
                     f"{mpmath.nstr(rep.curvature, 10)}")
            for msg in rep.failures:
                out.line(f"VIOLATION lemma {msg}")
            ok &= rep.ok
        elif suite == "integral":
            side = args.grid
            reps = integral_identity_grid(range(1, side + 1), range(1, side + 1), workers=args.threads)
            worst = max(reps, key=lambda r: r.rel_error)
            bad = [r for r in reps if not r.ok]
            out.line(f"{'PASS' if not bad else 'FAIL'} integral: {len(reps)} pairs, worst rel error "
                     f"{worst.rel_error:.3e} at (m,p)=({worst.m},{worst.p})")
            for r in bad:
                out.line(f"VIOLATION integral m={r.m} p={r.p} rel_error={r.rel_error:.3e}")
            ok &= not bad
        elif suite == "bounds":
            rep = bound_scan(args.max_n, strict=False)
            out.line(f"{'PASS' if rep.ok else 'FAIL'} bounds: {rep.pairs_checked} pairs up to n={args.max_n}, "
                     f"{len(rep.failures)} violations, max nonzero upper gap {mpmath.nstr(rep.max_upper, 10)}")
            for m, n, msg in rep.failures:
                out.line(f"VIOLATION bounds m={m} n={n} {msg}")
            ok &= rep.ok
        elif suite == "limit":
            bundle = bundle or solve_constants()
            rep = limit_gap_scan(build(args.max_n), bundle, strict=False)
            last = args.max_n
            out.line(f"{'PASS' if rep.ok else 'FAIL'} limit: |log v(n) - gamma n^2| <= 4n for 2 <= n <= {last}, "
                     f"gap/n at n={last}: {mpmath.nstr(rep.gap_over_n(last), 10) if last >= 2 else 'n/a'}")
            for n, msg in rep.failures:
                out.line(f"VIOLATION limit n={n} {msg}")
            ok &= rep.ok
        log.info("suite %s done in %.2fs", suite, time.perf_counter() - t)
    return 0 if ok else 1


_CONJECTURES = {
    "ms": cj.check_merzon_smirnov,
    "cauchy": cj.check_cauchy,
    "uprime": cj.u_prime_table,
    "kron": cj.check_kron,
    "weigandt": cj.check_weigandt,
}


def cmd_conjectures(args, out: _Out) -> int:
    try:
        rep = _CONJECTURES[args.name](args.n, allow_large=args.large)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        out.line(rep.to_json())
    elif args.name == "uprime":
        _table(out, ["n", "u'(n)", "w"], [(r["n"], r["u_prime"], r["witness"]) for r in rep.witnesses])
        out.line(f"status: {rep.status}")
    else:
        out.line(f"{rep.name}: {rep.status} on n in {rep.range_checked[0]}..{rep.range_checked[1]}")
        for wit in rep.witnesses:
            prefix = "VIOLATION" if not rep.ok else "witness"
            out.line(prefix + " " + " ".join(f"{k}={v}" for k, v in wit.items()))
    return 0 if rep.ok else 1


def cmd_sweep(args, out: _Out) -> int:
    if args.n >= cj.LARGE_N and not args.large:
        print(f"error: n={args.n} is a large job; pass --large", file=sys.stderr)
        return 2
    sw = sweep(args.n)
    if args.format == "json":
        out.line(json.dumps(sw.summary()))
    else:
        out.line("n,permutation,upsilon")
        _csv(out, ((args.n, str(w), val) for w, val in sw.items()))
    return 0


def cmd_ftable(args, out: _Out) -> int:
    out.line("m,p,bitlength,log2")
    rows = []
    for n in range(1, args.max_n + 1):
        for p, value in antidiagonal(n):
            rows.append((n - p, p, value.bit_length(), format_fixed(log2_exact(value).value, 12)))
    rows.sort()
    _csv(out, rows)
    return 0


def cmd_matrix(args, out: _Out) -> int:
    if args.perm:
        w = Permutation.parse(args.perm)
    else:
        table = build(args.vmax)
        w = layered(table.composition(args.vmax))
    out.line("row,col")
    _csv(out, ((i, wi) for i, wi in enumerate(w, start=1)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubmax", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    parser.add_argument("--threads", type=int, default=_default_threads(),
                        help=f"worker cap (default: ${THREADS_ENV} or CPU count)")
    parser.add_argument("-o", "--output", help="write data here instead of stdout")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("upsilon", help="exact Y_w for a permutation")
    p.add_argument("perm", help='one-line notation, "15243" or "1,4,3,2,12,..."')
    p.add_argument("--pair", action="store_true", help="also print Y of the w0 partner and the product")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_upsilon)

    p = sub.add_parser("vmax", help="layered maxima v(n) in appendix format")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diff", action="store_true", help="compare with the shipped appendix table")
    p.add_argument("--format", choices=["csv", "json", "table"], default="csv")
    p.set_defaults(func=cmd_vmax)

    p = sub.add_parser("constants", help="alpha, gamma, gamma/log 2")
    p.add_argument("--tol", type=float, default=1e-14)
    p.add_argument("--method", choices=["newton", "bisection"], default="newton")
    p.add_argument("--precision", type=int, default=10, help="printed decimals")
    p.add_argument("--plot", help="write x, f, q, gamma x^2 + f as TSV")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("verify", help="numeric certification suites")
    p.add_argument("--suite", choices=["bounds", "limit", "integral", "proctor", "lemma", "all"], default="all")
    p.add_argument("--max-n", type=int, default=300)
    p.add_argument("--grid", type=int, default=20, help="integral suite: (m, p) in {1..grid}^2")
    p.add_argument("--grid-points", type=int, default=10**6, help="lemma suite grid size")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjectures", help="exhaustive small-n checks")
    p.add_argument("--name", choices=sorted(_CONJECTURES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--large", action="store_true", help="allow n >= 9")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_conjectures)

    p = sub.add_parser("sweep", help="Y_w over all of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--large", action="store_true", help="allow n >= 9")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("ftable", help="F(m, p) bit lengths and log2 for m + p <= max-n")
    p.add_argument("--max-n", type=int, default=50)
    p.set_defaults(func=cmd_ftable)

    p = sub.add_parser("matrix", help="permutation-matrix coordinates")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--perm")
    g.add_argument("--vmax", type=int, help="the optimal layered permutation of this size")
    p.set_defaults(func=cmd_matrix)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    config = {k: v for k, v in vars(args).items() if k not in ("func", "verbose")}
    print("# schubmax " + json.dumps(config, sort_keys=True), file=sys.stderr)
    out = _Out(args.output)
    try:
        status = args.func(args, out)
    finally:
        out.close()
    return status


if __name__ == "__main__":
    sys.exit(main())
