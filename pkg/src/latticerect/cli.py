"""Command-line interface.

Verbs:

* ``compute``    one exact value F(n)
* ``table``      F(1..N) via the all-values algorithm
* ``verify``     cross-check several algorithms on a range of n
* ``bench``      median wall-clock timings with a result digest
* ``asymptotic`` residual (F(n) - A n^4 ln n) / n^4 along powers of two

Output formats are plain text, CSV (with optional header) or JSON lines;
exact values are serialized as decimal strings.  Exit codes: 0 success,
1 verification mismatch, 2 usage error, 3 resource-limit refusal.
"""

from __future__ import annotations

import argparse
import sys
import time

from .allvalues import compute_table
from .arith import to_decimal
from .asymptotics import constants, residual
from .onevalue import ALGORITHMS, AUTO_CUTOFF, f_auto

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

#: refuse table/verify sizes beyond this without --force
TABLE_LIMIT = 2 ** 22
VERIFY_LIMIT = 2 ** 20

_ALGO_CHOICES = tuple(ALGORITHMS) + ("auto",)


def _algo(name: str):
    if name == "auto":
        return f_auto
    return ALGORITHMS[name]


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _emit_rows(rows, header, fmt, out):
    """Write rows of tuples; the caller handles any CSV header line."""
    if fmt == "csv":
        for row in rows:
            out.write(",".join(str(c) for c in row))
            out.write("\n")
    elif fmt == "jsonl":
        import json

        for row in rows:
            out.write(json.dumps(dict(zip(header, row)), sort_keys=True))
            out.write("\n")
    else:
        for row in rows:
            out.write(" ".join(str(c) for c in row))
            out.write("\n")


def digest(value: int) -> str:
    """Compact stamp of an exact integer: first 8 digits plus digit count."""
    s = to_decimal(value)
    if s.startswith("-"):
        s = s[1:]
    return f"{s[:8]}:{len(s)}"


def _cmd_compute(args) -> int:
    fn = _algo(args.algo)
    value = fn(args.n)
    out, close = _open_out(args.out)
    try:
        if args.format == "csv":
            if args.header:
                out.write("n,value\n")
            out.write(f"{args.n},{to_decimal(value)}\n")
        elif args.format == "jsonl":
            import json

            out.write(json.dumps(
                {"n": args.n, "value": to_decimal(value),
                 "algo": args.algo}, sort_keys=True) + "\n")
        else:
            out.write(f"{to_decimal(value)}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def _cmd_table(args) -> int:
    if args.max > TABLE_LIMIT and not args.force:
        print(f"table size {args.max} exceeds limit {TABLE_LIMIT} "
              f"(use --force to override)", file=sys.stderr)
        return EXIT_RESOURCE
    values = compute_table(args.max)
    rows = [(n + 1, to_decimal(v)) for n, v in enumerate(values)]
    out, close = _open_out(args.out)
    try:
        if args.format == "jsonl":
            import json

            for n, v in rows:
                out.write(json.dumps({"n": n, "value": v},
                                     sort_keys=True) + "\n")
        else:
            if args.format == "csv" and args.header:
                out.write("n,value\n")
            _emit_rows(rows, ("n", "value"),
                       "csv" if args.format == "csv" else "plain", out)
    finally:
        if close:
            out.close()
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.max_n > VERIFY_LIMIT and not args.force:
        print(f"verify bound {args.max_n} exceeds limit {VERIFY_LIMIT} "
              f"(use --force to override)", file=sys.stderr)
        return EXIT_RESOURCE
    algos = (list(ALGORITHMS) if args.algos == "all"
             else args.algos.split(","))
    for name in algos:
        if name not in _ALGO_CHOICES:
            print(f"unknown algorithm {name!r}", file=sys.stderr)
            return EXIT_USAGE
    if len(algos) < 2:
        print("verify needs at least two algorithms", file=sys.stderr)
        return EXIT_USAGE
    ns = range(1, args.max_n + 1) if args.n is None else [args.n]
    checked = 0
    for n in ns:
        vals = {name: _algo(name)(n) for name in algos}
        checked += 1
        if len(set(vals.values())) != 1:
            # fail fast, reporting the first divergence
            detail = ", ".join(f"{k}={to_decimal(v)}" for k, v in vals.items())
            print(f"MISMATCH n={n}: {detail}")
            return EXIT_MISMATCH
    print(f"ok: {len(algos)} algorithms agree on {checked} value(s)")
    return EXIT_OK


def _cmd_bench(args) -> int:
    algos = (list(ALGORITHMS) if args.algos == "all"
             else args.algos.split(","))
    for name in algos:
        if name not in _ALGO_CHOICES:
            print(f"unknown algorithm {name!r}", file=sys.stderr)
            return EXIT_USAGE
    if args.repeats < 1:
        print("--repeats must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    ns = [2 ** k for k in range(args.k1, args.k2 + 1)]
    rows = []
    for name in algos:
        fn = _algo(name)
        for n in ns:
            fn(n)  # warmup, discarded
            times = []
            value = None
            for _ in range(args.repeats):
                t0 = time.monotonic()
                value = fn(n)
                times.append(time.monotonic() - t0)
            times.sort()
            k = len(times)
            med = (times[k // 2] if k % 2
                   else 0.5 * (times[k // 2 - 1] + times[k // 2]))
            rows.append((name, n, f"{med:.6f}", args.repeats, digest(value)))
    out, close = _open_out(args.out)
    try:
        if args.format == "jsonl":
            import json

            for r in rows:
                out.write(json.dumps(dict(zip(
                    ("algo", "n", "seconds", "repeats", "digest"), r)),
                    sort_keys=True) + "\n")
        else:
            if args.format == "csv" and args.header:
                out.write("algo,n,seconds,repeats,digest\n")
            _emit_rows(rows, ("algo", "n", "seconds", "repeats", "digest"),
                       "csv" if args.format == "csv" else "plain", out)
    finally:
        if close:
            out.close()
    return EXIT_OK


def _cmd_asymptotic(args) -> int:
    if args.k1 > args.k2:
        print("need k1 <= k2", file=sys.stderr)
        return EXIT_USAGE
    c = constants()
    rows = []
    for k in range(args.k1, args.k2 + 1):
        n = 2 ** k
        value = _algo(args.algo)(n)
        r = residual(n, value)
        rows.append((k, n, f"{r:.12f}", f"{r - c.B:+.3e}"))
    out, close = _open_out(args.out)
    try:
        if args.format == "jsonl":
            import json

            for k, n, r, d in rows:
                out.write(json.dumps(
                    {"k": k, "n": n, "residual": r, "residual_minus_B": d},
                    sort_keys=True) + "\n")
        else:
            if args.format == "csv" and args.header:
                out.write("k,n,residual,residual_minus_B\n")
            _emit_rows(rows, ("k", "n", "residual", "residual_minus_B"),
                       "csv" if args.format == "csv" else "plain", out)
    finally:
        if close:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latticerect",
        description="Exact rectangle counting on an n x n lattice grid.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, with_header=True):
        p.add_argument("--format", choices=("plain", "csv", "jsonl"),
                       default="plain")
        p.add_argument("--out", default=None,
                       help="output path ('-' for stdout)")
        if with_header:
            p.add_argument("--header", action="store_true",
                           help="emit a CSV header row")

    p = sub.add_parser("compute", help="one exact value F(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algo", choices=_ALGO_CHOICES, default="auto")
    common(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("table", help="F(1..N) via the all-values algorithm")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--force", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="cross-check algorithms")
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--n", type=int, default=None,
                   help="verify a single n instead of a range")
    p.add_argument("--algos", default="baseline,sqrt,cuberoot,"
                                      "tenmoment,divisorlayer")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="median timings over powers of two")
    p.add_argument("k1", type=int, help="first exponent of two")
    p.add_argument("k2", type=int, help="last exponent of two")
    p.add_argument("--algos", default="divisorlayer")
    p.add_argument("--repeats", type=int, default=5,
                   help="timed repetitions (plus one discarded warmup)")
    common(p)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("asymptotic",
                       help="residuals along n = 2^k1 .. 2^k2")
    p.add_argument("k1", type=int)
    p.add_argument("k2", type=int)
    p.add_argument("--algo", choices=_ALGO_CHOICES, default="auto")
    common(p)
    p.set_defaults(func=_cmd_asymptotic)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors already
        return int(e.code) if e.code else EXIT_OK
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
