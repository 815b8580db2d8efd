"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 size-cap or I/O error. The default size cap is read from ``RANEY_CAP``.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Iterable
from pathlib import Path

from . import coral, numbers, webs
from .coral import DEFAULT_CAP, SizeLimitError
from .records import Record, format_record
from .trees import to_dot
from .verify import run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _default_cap() -> int:
    raw = os.environ.get("RANEY_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return _positive(raw)
    except (ValueError, argparse.ArgumentTypeError):
        raise UsageError(f"RANEY_CAP must be a positive integer, got {raw!r}") from None


def table(header: list[str], rows: Iterable[list]) -> list[str]:
    """Right-aligned columns; integers printed in full."""
    rows = [[str(x) for x in row] for row in rows]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    return [" ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in [header, *rows]]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="raney", description="Raney numbers, coral diagrams and tree webs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=None):
        sp.add_argument("--out", type=Path, help="output file (directory for --format dot)")
        if formats:
            sp.add_argument("--format", choices=formats, default=formats[0])

    sp = sub.add_parser("raney", help="table of R_{p,r}(0..k_max)")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--r", type=_positive, required=True)
    sp.add_argument("--k-max", type=_nonneg, required=True)
    sp.add_argument("--check", action="store_true", help="add composition-sum and convolution columns")
    common(sp, ["table"])

    sp = sub.add_parser("catalan", help="table of p-Catalan numbers")
    sp.add_argument("--p", type=_positive, default=2)
    sp.add_argument("--k-max", type=_nonneg, required=True)
    common(sp, ["table"])

    sp = sub.add_parser("enumerate", help="list every (p,r)-coral diagram with k stars")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--r", type=_positive, required=True)
    sp.add_argument("--k", type=_nonneg, required=True)
    sp.add_argument("--method", choices=["tuple", "tiered"], default="tuple")
    sp.add_argument("--cap", type=_positive)
    common(sp, ["records", "dot"])

    sp = sub.add_parser("webs", help="list connected tree webs")
    sp.add_argument("variant", choices=["constant", "minus"])
    sp.add_argument("--k", type=_nonneg, required=True)
    sp.add_argument("--p", type=_positive, default=2, help="valence minus one (constant variant only)")
    sp.add_argument("--cap", type=_positive)
    common(sp, ["records", "dot"])

    sp = sub.add_parser("verify", help="run every identity and bijection check")
    sp.add_argument("--k-max", type=_nonneg, help="trim every k range to this value")
    sp.add_argument("--cap", type=_positive)
    common(sp)

    sp = sub.add_parser("conjecture", help="predicted sl_n tree-web counts (UNVERIFIED)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--k-max", type=_nonneg, required=True)
    common(sp, ["table"])
    return parser


def cmd_raney(args) -> tuple[list[str], int]:
    p, r = args.p, args.r
    if not args.check:
        return table(["k", f"R_{p},{r}(k)"], ([k, numbers.raney_closed(p, r, k)] for k in range(args.k_max + 1))), EXIT_OK
    rows, ok = [], True
    for k in range(args.k_max + 1):
        vals = [numbers.raney_closed(p, r, k), numbers.raney_composition_sum(p, r, k),
                numbers.raney_convolution(p, r, k)]
        agree = len(set(vals)) == 1
        ok &= agree
        rows.append([k, *vals, "ok" if agree else "MISMATCH"])
    return table(["k", "closed", "composition_sum", "convolution", "agree"], rows), EXIT_OK if ok else EXIT_FAIL


def cmd_catalan(args) -> tuple[list[str], int]:
    rows = ([k, numbers.p_catalan(args.p, k)] for k in range(args.k_max + 1))
    return table(["k", f"{args.p}-catalan"], rows), EXIT_OK


def cmd_conjecture(args) -> tuple[list[str], int]:
    n, j = args.n, args.j
    if n < 3 or not 1 <= j <= n - 1:
        raise UsageError(f"need n >= 3 and 1 <= j <= n-1, got n={n}, j={j}")
    rows = []
    for k in range(args.k_max + 1):
        vals = webs.conjecture_values(n, j, k)
        rows.append([k, vals.constant, vals.mixed])
    banner = [f"# UNVERIFIED conjectured counts for sl_{n} tree webs (n={n}, j={j})",
              "# constant = (n-2)^k R_{n+1,n-1}(k); mixed = (n-2)^k R_{n-1,n-j}(k)"]
    return banner + table(["k", "constant", "mixed"], rows), EXIT_OK


def cmd_verify(args) -> tuple[list[str], int]:
    results = run_suites(k_max=args.k_max, cap=args.cap)
    width = max(len(res.name) for res in results)
    lines = []
    for res in results:
        line = f"{'PASS' if res.passed else 'FAIL'}  {res.name.ljust(width)}  {res.checks} checks"
        if res.detail:
            line += f"  [{res.detail}]"
        lines.append(line)
    passed = sum(res.passed for res in results)
    lines.append(f"{passed}/{len(results)} suites passed")
    return lines, EXIT_OK if passed == len(results) else EXIT_FAIL


def _write_dot_files(items: list[tuple[str, str]], out: Path | None) -> list[str]:
    if out is None:
        return [text.rstrip("\n") for _, text in items]
    out.mkdir(parents=True, exist_ok=True)
    for name, text in items:
        (out / f"{name}.dot").write_text(text)
    return []


def cmd_enumerate(args) -> tuple[list[str], int]:
    p, r, k = args.p, args.r, args.k
    coral.check_size(numbers.raney_closed(p, r, k), args.cap)
    gen = coral.enumerate_coral_tuple if args.method == "tuple" else coral.enumerate_coral_tiered
    diagrams = list(gen(p, r, k))
    if args.format == "records":
        return [format_record(Record(p, r, k, d.code)) for d in diagrams], EXIT_OK
    items = []
    for i, d in enumerate(diagrams):
        name = f"coral_p{p}_r{r}_k{k}_{i:04d}"
        items.append((name, to_dot(d.tree, name=name)))
    return _write_dot_files(items, args.out), EXIT_OK


def cmd_webs(args) -> tuple[list[str], int]:
    k = args.k
    if args.variant == "constant":
        p = args.p
        if p < 2:
            raise UsageError("--p must be at least 2")
        coral.check_size(numbers.raney_closed(p * p, p, k), args.cap)
        found = list(webs.enumerate_sourcesink_trees(p, k))
        params = (p * p, p, k)
    else:
        if args.p != 2:
            raise UsageError("the minus variant is only defined for p = 2")
        found = list(webs.enumerate_a2_tree_webs_minus(k, args.cap))
        params = (4, 1, k)
    if args.format == "records":
        return [format_record(Record(*params, w.code, w.boundary, w.classes)) for w in found], EXIT_OK
    items = []
    for i, w in enumerate(found):
        name = f"web_{args.variant}_k{k}_{i:04d}"
        items.append((name, webs.web_to_dot(w, name=name)))
    return _write_dot_files(items, args.out), EXIT_OK


COMMANDS = {
    "raney": cmd_raney,
    "catalan": cmd_catalan,
    "enumerate": cmd_enumerate,
    "webs": cmd_webs,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "cap", None) is None and hasattr(args, "cap"):
            args.cap = _default_cap()
        lines, status = COMMANDS[args.command](args)
        text = "".join(line + "\n" for line in lines)
        if args.out is not None and getattr(args, "format", None) != "dot":
            args.out.write_text(text)
        else:
            sys.stdout.write(text)
    except UsageError as exc:
        print(f"raney: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"raney: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OSError as exc:
        print(f"raney: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    return status


if __name__ == "__main__":
    sys.exit(main())
