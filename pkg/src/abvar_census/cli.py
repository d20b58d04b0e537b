"""abvar-census: tables and verification reports for supersingular censuses.

Exit status: 0 ok, 2 usage, 3 verification mismatch, 4 integrality failure.
"""

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .arith import IntegralityError, is_prime, primes_in
from .census import (DEFERRED, VerificationError, H_sqrt_p, census_report, delta,
                     delta_bottom_up, h_neg, mass, sp1_count, sp2_count)
from .cm_quartic import class_number_cm
from .dimension import dim_of, enumerate_multiple, enumerate_simple
from .quadratics import class_number_real, format_rational, varpi, zeta_minus_one
from .weil import PrimePower

EXIT_USAGE, EXIT_VERIFY, EXIT_INTEGRALITY = 2, 3, 4

TABLE_COLUMNS = {
    "sp1": ["p", "sp1_odd", "sp1_even"],
    "sp2": ["p", "H_sqrt_p", "delta", "sp2"],
    "mass": ["p", "sp2", "mass", "ratio"],
    "zeta": ["p", "zeta_F(-1)"],
    "classno": ["p", "h(-p)", "h(p)", "varpi_p", "h(K_p3)", "h(K_2p1)", "h(K_3p3)"],
}
APPROX_OF = {"mass": ["mass", "ratio"], "zeta": ["zeta_F(-1)"]}


class UsageError(Exception):
    pass


def _rat(x):
    if x is None:
        return None
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else format_rational(x)


def _ctx(args):
    if not is_prime(args.p):
        raise UsageError(f"--p {args.p} is not prime")
    if args.a < 1:
        raise UsageError("--a must be >= 1")
    return PrimePower(args.p, args.a)


def emit(text, out=None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# --- weil-list ---------------------------------------------------------------------------

def cmd_weil_list(args):
    ctx = _ctx(args)
    if args.dim < 1:
        raise UsageError("--dim must be >= 1")
    if args.dim > 4 and args.nmax is None:
        raise UsageError("--dim above 4 needs --nmax")
    if args.multiple:
        rows = [{"class": str(pi), "dim": pi.dim} for pi in enumerate_multiple(ctx, args.dim, args.nmax)]
    else:
        rows = [{"sign": "+" if w.sign == 1 else "-", "n": w.n, "dim": dim_of(w).dim}
                for w in enumerate_simple(ctx, args.dim, args.nmax)]
    if args.format == "json":
        rec = {"command": "weil-list",
               "params": {"p": args.p, "a": args.a, "dim": args.dim, "nmax": args.nmax,
                          "multiple": args.multiple},
               "rows": rows}
        emit(dump_json(rec), args.out)
    else:
        keys = list(rows[0]) if rows else ["sign", "n", "dim"]
        emit(_aligned(keys, [[str(r[k]) for k in keys] for r in rows]), args.out)
    return 0


def _aligned(header, rows):
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


# --- census ------------------------------------------------------------------------------

def _verify(ctx, rep):
    checks = {"per_class_sum": {"formula": rep.total, "sum": rep.per_class_sum,
                                "agree": rep.total == rep.per_class_sum}}
    if rep.dim == 1:
        from .oracle import MAX_Q, MAX_Q_SMALL_CHAR, brute_curve_census
        q = ctx.q if ctx.even else ctx.p  # odd exponents share one count
        limit = MAX_Q_SMALL_CHAR if ctx.p in (2, 3) else MAX_Q
        if q <= limit:
            got = brute_curve_census(q)
            checks["oracle"] = {"field": q, "brute_force": got, "agree": got == rep.total}
        else:
            checks["oracle"] = {"field": q, "skipped": "field too large for brute force"}
    else:
        top = delta(ctx.p)
        bottom = delta_bottom_up(ctx.p)
        checks["delta_cross_path"] = {"closed_form": top, "sum_over_classes": bottom,
                                      "agree": top == bottom}
    return checks


def cmd_census(args):
    ctx = _ctx(args)
    if args.dim == 2 and ctx.even:
        raise UsageError(DEFERRED)
    rep = census_report(ctx, args.dim)
    rec = {
        "command": "census",
        "params": {"p": args.p, "a": args.a, "dim": args.dim, "verify": args.verify},
        "result": {
            "total": rep.total,
            "per_class": [{"class": str(pi), "count": c, "source": tag} for pi, c, tag in rep.per_class],
            "mass": _rat(rep.mass),
            "mass_ratio": _rat(rep.mass_ratio),
        },
        "provenance": "formula",
    }
    ok = True
    if args.verify:
        checks = _verify(ctx, rep)
        rec["checks"] = checks
        rec["provenance"] = "formula+oracle"
        ok = all(c.get("agree", True) for c in checks.values())
    if args.format == "json":
        emit(dump_json(rec), args.out)
    else:
        rows = [[r["class"], str(r["count"]), r["source"]] for r in rec["result"]["per_class"]]
        text = _aligned(["class", "count", "source"], rows)
        text += f"total {rep.total}\n"
        if rep.mass is not None:
            text += f"mass {_rat(rep.mass)}  ratio {_rat(rep.mass_ratio)}\n"
        for name, c in rec.get("checks", {}).items():
            text += f"check {name}: {'agree' if c.get('agree', True) else 'MISMATCH'}\n"
        emit(text, args.out)
    return 0 if ok else EXIT_VERIFY


# --- table -------------------------------------------------------------------------------

def _classno_cell(f, *args):
    try:
        return str(f(*args))
    except ValueError:
        return ""


def table_row(what, p):
    """Cells for one prime, exact values as strings."""
    if what == "sp1":
        return [p, sp1_count(PrimePower(p, 1)), sp1_count(PrimePower(p, 2))]
    if what == "sp2":
        return [p, H_sqrt_p(p), delta(p), sp2_count(PrimePower(p, 1))]
    if what == "mass":
        if p <= 5:
            return [p, sp2_count(PrimePower(p, 1)), "", ""]
        m = mass(p)
        s = sp2_count(PrimePower(p, 1))
        return [p, s, _rat(m), _rat(Fraction(s) / m)]
    if what == "zeta":
        return [p, _rat(zeta_minus_one(p))]
    if what == "classno":
        vp = varpi(p) if p % 4 == 1 else ""
        return [p, h_neg(p), class_number_real(p), vp,
                _classno_cell(class_number_cm, p, 3),
                _classno_cell(class_number_cm, 2 * p, 1),
                _classno_cell(class_number_cm, 3 * p, 3)]
    raise UsageError(f"unknown table {what}")


def _row_job(job):
    return [str(c) for c in table_row(*job)]


def _workers():
    env = os.environ.get("ABVAR_CENSUS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError("ABVAR_CENSUS_THREADS must be an integer")
    return os.cpu_count() or 1


def parse_range(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--range expects LO..HI, got {text!r}")
    if lo > hi or hi < 2:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def compute_rows(what, primes, workers=1):
    jobs = [(what, p) for p in primes]
    if workers <= 1 or len(jobs) < 8:
        return [_row_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_row_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def cmd_table(args):
    lo, hi = parse_range(args.range)
    primes = primes_in(lo, hi)
    header = list(TABLE_COLUMNS[args.what])
    rows = compute_rows(args.what, primes, _workers())
    if args.approx and args.what in APPROX_OF:
        extra = [header.index(c) for c in APPROX_OF[args.what]]
        header += [header[i] + "~" for i in extra]
        for r in rows:
            r += [f"{float(Fraction(r[i])):.6f}" if r[i] else "" for i in extra]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    emit(buf.getvalue(), args.out)
    return 0


TABLE_HELP = """columns:
  sp1      p, sp1_odd (|Sp_1(F_p)|), sp1_even (|Sp_1(F_p^2)|)
  sp2      p, H_sqrt_p, delta, sp2 (|Sp_2(F_p)| = H_sqrt_p + delta)
  mass     p, sp2, mass, ratio (sp2 / mass; blank for p <= 5)
  zeta     p, zeta_F(-1) for F = Q(sqrt p)
  classno  p, h(-p), h(p), varpi_p (p = 1 mod 4), h(K_p3), h(K_2p1), h(K_3p3)
exact rationals are written num/den; --approx appends float columns marked ~"""


def build_parser():
    ap = argparse.ArgumentParser(prog="abvar-census",
                                 description="Supersingular isogeny classes and superspecial counts over finite fields.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    w = sub.add_parser("weil-list", help="list W_q(d) or MW_q(d)")
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--a", type=int, default=1)
    w.add_argument("--dim", type=int, required=True)
    w.add_argument("--nmax", type=int)
    w.add_argument("--multiple", action="store_true", help="list products, not just simple classes")
    w.add_argument("--format", choices=["text", "json"], default="text")
    w.add_argument("--out")
    w.set_defaults(func=cmd_weil_list)

    c = sub.add_parser("census", help="count superspecial curves or surfaces")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--a", type=int, default=1)
    c.add_argument("--dim", type=int, choices=[1, 2], required=True)
    c.add_argument("--verify", action="store_true", help="also run the independent paths")
    c.add_argument("--format", choices=["text", "json"], default="json")
    c.add_argument("--out")
    c.set_defaults(func=cmd_census)

    t = sub.add_parser("table", help="CSV over a prime range", epilog=TABLE_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    t.add_argument("--range", required=True, help="inclusive LO..HI")
    t.add_argument("--what", choices=list(TABLE_COLUMNS), required=True)
    t.add_argument("--approx", action="store_true")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"abvar-census: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        print(f"abvar-census: verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except IntegralityError as e:
        print(f"abvar-census: integrality failure: {e}", file=sys.stderr)
        return EXIT_INTEGRALITY


if __name__ == "__main__":
    sys.exit(main())
