"""Command-line front end: analyze, verify, catalog.

Exit codes: 0 success / all checks agree, 1 verification disagreement,
2 usage or parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import filter_entries, load_catalog
from .classify import classify_structure
from .errors import (
    FlexgroupError,
    OrderCapExceeded,
    ParseError,
)
from .flexibility import cycliciser, flexibility_profile, min_generators
from .report import (
    canonical_json,
    render_analysis_csv,
    render_analysis_md,
    render_catalog_csv,
    render_catalog_md,
    render_verify_csv,
    render_verify_md,
)
from .specs import parse_group_spec, parse_spec
from .verify import SUITE_NAMES, run_verification

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _analyze_doc(spec_text: str, symmetry_reduction: bool) -> dict:
    spec = parse_spec(spec_text)
    group = parse_group_spec(spec_text)
    rank = min_generators(group)
    cyc = cycliciser(group)
    tag = classify_structure(group)
    profile = flexibility_profile(group, symmetry_reduction=symmetry_reduction)
    return {
        "schema": 1,
        "spec": spec.to_text(),
        "origin": group.origin,
        "order": group.order,
        "d": rank.d,
        "witness": list(rank.witness),
        "witness_labels": [group.labels[i] for i in rank.witness],
        "cycliciser": cyc.to_json(),
        "structure": tag.to_json(),
        "profile": [v.to_json() for v in profile],
    }


def cmd_analyze(args: argparse.Namespace) -> int:
    doc = _analyze_doc(args.spec, args.symmetry_reduction)
    if args.format == "json":
        _emit(canonical_json(doc), args.out)
    elif args.format == "md":
        _emit(render_analysis_md(doc), args.out)
    else:
        _emit(render_analysis_csv(doc), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    doc = run_verification(
        args.suite,
        max_order=args.max_order,
        jobs=args.jobs,
        spec=args.spec,
        all_normals=args.all_normals,
        symmetry_reduction=args.symmetry_reduction,
    )
    if args.format == "json":
        _emit(canonical_json(doc), args.out)
    elif args.format == "md":
        _emit(render_verify_md(doc), args.out)
    else:
        _emit(render_verify_csv(doc), args.out)
    bad = doc["summary"]["disagreements"]
    if args.out:
        total = doc["summary"]["checks"]
        sys.stdout.write(f"{args.suite}: {total} checks, {bad} disagreements "
                         f"-> {args.out}\n")
    return EXIT_DISAGREEMENT if bad else EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    entries = filter_entries(load_catalog(), max_order=args.max_order,
                             tags=args.tags)
    doc = {"schema": 1, "entries": [e.to_json() for e in entries]}
    if args.format == "json":
        _emit(canonical_json(doc), args.out)
    elif args.format == "md":
        _emit(render_catalog_md(doc), args.out)
    else:
        _emit(render_catalog_csv(doc), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flexgroup",
        description="Finite-group workbench: generation ranks, cyclicisers, "
                    "and k-flexibility by exhaustive search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, default_format: str = "json") -> None:
        p.add_argument("--format", choices=("json", "md", "csv"),
                       default=default_format)
        p.add_argument("--out", metavar="PATH", default=None,
                       help="write the report to a file instead of stdout")

    p_analyze = sub.add_parser("analyze", help="analyze one group spec")
    p_analyze.add_argument("spec")
    p_analyze.add_argument("--symmetry-reduction", action="store_true",
                           help="restrict flexibility checks to one subgroup "
                                "per conjugacy orbit (same output)")
    common(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--spec", default=None,
                          help="verify a single group instead of the catalog")
    p_verify.add_argument("--max-order", type=int, default=128)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--all-normals", action="store_true",
                          help="check the quotient-rank condition over all "
                               "normal subgroups, not just minimal ones")
    p_verify.add_argument("--symmetry-reduction", action="store_true",
                          help="check one subgroup per conjugacy orbit in "
                               "flexibility verdicts (same output)")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_catalog = sub.add_parser("catalog", help="list the built-in catalog")
    p_catalog.add_argument("--max-order", type=int, default=None)
    p_catalog.add_argument("--tags", nargs="*", default=None)
    common(p_catalog)
    p_catalog.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except OrderCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, FlexgroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())
