"""``ccs`` command line: generate, verify, profile, enumerate.

Exit codes: 0 confirmed/ok, 1 I/O or parse failure, 2 invalid parameters
or indices, 3 claim refuted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import ValidationError
from .correlation import KINDS, profile
from .enumeration import ENUMERABLE, enumerate_parameters
from .fileio import (
    FileFormatError,
    atomic_write,
    family_to_json,
    generate,
    load_config,
    profile_to_csv,
    profile_to_json,
    read_family,
    report_to_json,
)
from .verification import verify_claim

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_REFUTED = 0, 1, 2, 3


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _load_family(path):
    try:
        return read_family(path)
    except (OSError, FileFormatError) as exc:
        _err(str(exc))
        return None


def cmd_generate(args) -> int:
    try:
        cfg = load_config(args.config)
    except (OSError, FileFormatError) as exc:
        _err(str(exc))
        return EXIT_IO
    try:
        family = generate(cfg)
    except ValidationError as exc:
        for v in exc.violations:
            _err(v)
        return EXIT_INVALID
    try:
        atomic_write(args.out, family_to_json(family))
    except OSError as exc:
        _err(str(exc))
        return EXIT_IO
    print(f"wrote {args.out}: M={family.M} N={family.N} L={family.L} q={family.q}")
    return EXIT_OK


def _parse_claim(text: str | None):
    if text is None:
        return None, None
    kind, _, z = text.partition(",")
    kind = kind.strip().upper()
    if kind not in KINDS:
        raise ValueError(f"unknown claim kind {kind!r}; choose from {', '.join(KINDS)}")
    if not z:
        return kind, None
    return kind, z.strip()


def cmd_verify(args) -> int:
    family = _load_family(args.family)
    if family is None:
        return EXIT_IO
    try:
        kind, z = _parse_claim(args.claim)
        if z is not None:
            z = family.L if z.upper() == "L" else int(z)
        report = verify_claim(family, kind, z)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INVALID
    text = report_to_json(report)
    if args.out:
        try:
            atomic_write(args.out, text)
        except OSError as exc:
            _err(str(exc))
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.confirmed else EXIT_REFUTED


def cmd_profile(args) -> int:
    family = _load_family(args.family)
    if family is None:
        return EXIT_IO
    try:
        i, j = (int(x) for x in args.pair.split(","))
        prof = profile(family, i, j)
    except (ValueError, IndexError) as exc:
        _err(f"bad --pair {args.pair!r}: {exc}")
        return EXIT_INVALID
    text = profile_to_json(prof) if args.out.endswith(".json") else profile_to_csv(prof)
    try:
        atomic_write(args.out, text)
    except OSError as exc:
        _err(str(exc))
        return EXIT_IO
    return EXIT_OK


def _fmt(val) -> str:
    if val is None:
        return "-"
    if isinstance(val, list):
        return "(" + ",".join(map(str, val)) + ")"
    return str(val)


def cmd_enumerate(args) -> int:
    try:
        rows = enumerate_parameters(args.q, args.theorem, args.max_length, args.all_orders)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INVALID
    if args.json:
        for row in rows:
            print(json.dumps(row, sort_keys=True))
        return EXIT_OK
    cols = ["m", "v", "d", "d_prime", "u", "shape", "a_digits", "M", "N", "L", "Z"]
    if args.all_orders:
        cols.append("partition")
    table = [cols] + [
        [_fmt(r["config"]["partition"] if c == "partition" else r[c]) for c in cols] for r in rows
    ]
    widths = [max(len(line[k]) for line in table) for k in range(len(cols))]
    for line in table:
        print("  ".join(cell.rjust(w) for cell, w in zip(line, widths)))
    print(f"{len(rows)} tuple(s)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ccs", description="Complementary code sets from extended Boolean functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a family from a construction config")
    g.add_argument("--config", required=True)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="verify a family file by exact brute force")
    v.add_argument("family")
    v.add_argument("--claim", help="KIND[,Z], e.g. zccs,16 or mocs (Z may be L)")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("profile", help="set correlation magnitudes for one pair of sets")
    p.add_argument("family")
    p.add_argument("--pair", required=True, help="I,J (0-based set indices)")
    p.add_argument("--out", required=True, help="CSV path, or .json for exact coefficients")
    p.set_defaults(func=cmd_profile)

    e = sub.add_parser("enumerate", help="list valid parameter tuples")
    e.add_argument("--q", type=int, required=True)
    e.add_argument("--theorem", required=True, choices=ENUMERABLE)
    e.add_argument("--max-length", type=int, default=256)
    e.add_argument("--all-orders", action="store_true", help="also enumerate within-block variable orders")
    e.add_argument("--json", action="store_true", help="one JSON object per line, with a ready config")
    e.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
