"""Command line: ``validate``, ``analyze`` and ``reproduce``.

Exit codes: 0 success, 2 axiom violation, 3 parse error, 4 cap exceeded,
5 reproduction mismatch, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import CHECKS, DEFAULT_CHECKS, AnalysisConfig, analyze, reproduce
from .errors import AxiomViolation, CapExceeded, ShapeError
from .golden import EXAMPLES
from .projections import DEFAULT_SEARCH_CAP
from .semiring import builtin, classify, semiring_from_json
from .sublattice import DEFAULT_ENUMERATION_CAP

EXIT_OK = 0
EXIT_AXIOM = 2
EXIT_PARSE = 3
EXIT_CAP = 4
EXIT_MISMATCH = 5
EXIT_USAGE = 64


class UsageError(Exception):
    pass


def resolve_source(src: str, *, full_report=False):
    """``builtin:NAME`` or a path to a semiring JSON document."""
    if src.startswith("builtin:"):
        try:
            return builtin(src[len("builtin:"):])
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    path = Path(src)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ShapeError(f"cannot read {src}: {exc}") from None
    if not isinstance(doc, dict):
        raise ShapeError(f"{src}: top level must be a JSON object")
    return semiring_from_json(doc, full_report=full_report)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _parse_checks(text):
    if text in ("all",):
        return CHECKS
    if text in ("none", ""):
        return ()
    return tuple(c.strip() for c in text.split(",") if c.strip())


def cmd_validate(args) -> int:
    S = resolve_source(args.source, full_report=True)
    sys.stdout.write(_dump({"valid": True, "name": S.name, "elements": list(S.labels),
                            "classification": classify(S)}))
    return EXIT_OK


def cmd_analyze(args) -> int:
    S = resolve_source(args.source)
    try:
        config = AnalysisConfig(source=args.source, rank=args.rank, cap_subs=args.cap_subs,
                                cap_proj=args.cap_proj, out=args.out, dot=args.dot,
                                checks=_parse_checks(args.checks), timing=args.timing)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report, dots = analyze(S, config)
    text = _dump(report)
    if config.out or config.dot:
        out = Path(config.out or ".")
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(text, encoding="utf-8")
        for name, body in dots.items():
            (out / name).write_text(body, encoding="utf-8")
    sys.stdout.write(text)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    if args.example not in EXAMPLES:
        raise UsageError(f"unknown example {args.example!r}; choose from {sorted(EXAMPLES)}")
    diffs = reproduce(args.example)
    if diffs:
        for d in diffs:
            print(f"MISMATCH {d}")
        return EXIT_MISMATCH
    print(f"{args.example}: all tables and Hasse diagrams match")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semimodlat",
        description="Subsemimodule lattices, splitting posets and projections of S^k.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a semiring definition")
    p.add_argument("source", help="builtin:bool|z4|zN|chainN or a JSON file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="run the full pipeline on S^k")
    p.add_argument("source")
    p.add_argument("--rank", "-k", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="write Hasse diagrams as DOT files")
    p.add_argument("--out", help="directory for report.json and DOT files")
    p.add_argument("--cap-subs", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument("--cap-proj", type=int, default=DEFAULT_SEARCH_CAP)
    p.add_argument("--checks", default=",".join(DEFAULT_CHECKS),
                   help=f"comma list from {','.join(CHECKS)}, or 'all' / 'none'")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock timings (makes the report non-reproducible)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("reproduce", help="compare against the reference examples")
    p.add_argument("example", help="example1 | example2")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AxiomViolation as exc:
        print("invalid semiring:", file=sys.stderr)
        labels = exc.labels
        for axiom, witness in exc.violations:
            shown = [labels[w] for w in witness] if labels else list(witness)
            print(f"  {axiom}: witness {shown}", file=sys.stderr)
        return EXIT_AXIOM
    except ShapeError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
