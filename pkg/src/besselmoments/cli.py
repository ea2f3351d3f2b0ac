"""Command-line verification harness.

    besselmoments --list
    besselmoments --suite table1
    besselmoments --suite lvalues --prec-bits 512 --out lv.json --format json

Exit status is 0 iff every certificate in the run passed.
"""

from __future__ import annotations

import argparse
import sys

from .certificates import emit, render
from .config import SuiteConfig
from .suites import SUITE_DESCRIPTIONS, all_suite_names, run_suite


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="besselmoments",
        description="Certify Bessel-moment sum rules, operator identities and L-value relations.",
    )
    p.add_argument(
        "--suite",
        action="append",
        metavar="NAME",
        help="suite to run (repeatable); default: all suites",
    )
    p.add_argument("--prec-bits", type=int, metavar="N", help="working precision in bits")
    p.add_argument("--trunc", type=int, metavar="N", help="q-series truncation order")
    p.add_argument("--out", metavar="PATH", help="write certificates to PATH")
    p.add_argument(
        "--format",
        choices=("json", "csv", "markdown"),
        default=None,
        help="output format (default json)",
    )
    p.add_argument("--config", metavar="PATH", help="key = value config file")
    p.add_argument(
        "--list", action="store_true", help="list available suites and exit"
    )
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.list:
        for name in all_suite_names():
            print(f"{name:22s} {SUITE_DESCRIPTIONS[name]}")
        return 0
    try:
        cfg = SuiteConfig.load(args.config)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.prec_bits:
        cfg.precision_bits = args.prec_bits
    if args.trunc:
        cfg.trunc_order = args.trunc
    if args.out:
        cfg.out = args.out
    if args.format:
        cfg.format = args.format

    names = args.suite or all_suite_names()
    certs = []
    for name in names:
        try:
            batch = run_suite(name, cfg)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        certs.extend(batch)
        for c in batch:
            print(f"[{c.status:4s}] {c.identity_id:42s} residual {c.residual}")
    if cfg.out:
        emit(certs, cfg.format, cfg.out)
        print(f"wrote {len(certs)} certificates to {cfg.out}")
    elif cfg.format != "json":
        print(render(certs, cfg.format))
    failures = [c for c in certs if not c.passed]
    if failures:
        print(f"{len(failures)} of {len(certs)} certificates FAILED", file=sys.stderr)
        return 1
    print(f"all {len(certs)} certificates passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
