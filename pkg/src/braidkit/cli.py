"""Command-line driver.

Subcommands:

    family   print a family braid word in the signed-integer text format
    check    run one named verification and report its status
    sweep    walk a (genus, power, variant) grid from a config file
    emit     re-emit a JSON report as json, csv, or an aligned table

Exit codes: 0 everything verified, 1 error or refuted, 2 a certifier
returned inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import FamilyError, VARIANTS, family_braid, format_braid_text
from .checks import (
    CheckParamError,
    STATUS_EXIT,
    check_names,
    exit_code_for,
    run_check,
)
from .report import (
    ReportFormatError,
    build_report,
    canonical_json,
    emit_csv,
    emit_json,
    emit_table,
    validate_report,
)
from .sweep import ConfigError, parse_config, run_sweep

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidkit",
        description="Braid family construction and verification toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="print a family braid word")
    fam.add_argument("--genus", type=int, required=True)
    fam.add_argument("--power", type=int, default=0)
    fam.add_argument("--variant", choices=VARIANTS, default="original")
    fam.add_argument(
        "--fixture",
        action="store_true",
        help="allow the sweep fixture stirring word for enhanced genus != 2",
    )
    fam.add_argument("--json", action="store_true", dest="as_json")

    chk = sub.add_parser("check", help="run one named verification")
    chk.add_argument("name", choices=check_names())
    chk.add_argument("--genus", type=int)
    chk.add_argument("--power", type=int)
    chk.add_argument("--variant", choices=VARIANTS)
    chk.add_argument("--word", help="braid text: strand count then letters")
    chk.add_argument("--twist-word", help='two-twist word, e.g. "A B-"')
    chk.add_argument("--fixture", action="store_true")
    chk.add_argument("--json", action="store_true", dest="as_json")

    swp = sub.add_parser("sweep", help="run a parameter sweep")
    swp.add_argument("--config", required=True)
    swp.add_argument("--output", help="override the config output path")
    swp.add_argument("--parallelism", type=int)

    emt = sub.add_parser("emit", help="re-emit a report")
    emt.add_argument("--input", required=True)
    emt.add_argument(
        "--format", choices=("json", "csv", "table"), default="json"
    )
    emt.add_argument("--output")
    return parser


def _cmd_family(args) -> int:
    try:
        word = family_braid(
            args.genus,
            args.power,
            args.variant,
            allow_extension_fixture=args.fixture,
        )
    except (FamilyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.as_json:
        payload = {
            "genus": args.genus,
            "power": args.power,
            "variant": args.variant,
            "strands": word.strands,
            "word": format_braid_text(word),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(format_braid_text(word))
    return EXIT_OK


def _cmd_check(args) -> int:
    params: dict = {}
    for key in ("genus", "power", "variant", "word"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.twist_word is not None:
        params["twist_word"] = args.twist_word
    if args.fixture:
        params["phi_fixture"] = True
    try:
        record = run_check(args.name, params)
    except CheckParamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.as_json:
        print(json.dumps(record, sort_keys=True))
    else:
        summary = " ".join(
            f"{k}={record[k]}"
            for k in ("check", "status", "genus", "power", "variant")
            if k in record
        )
        print(summary)
        if "message" in record:
            print(f"  {record['message']}")
    return STATUS_EXIT.get(record.get("status", "error"), EXIT_ERROR)


def _cmd_sweep(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as handle:
            config = parse_config(handle.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.parallelism is not None:
        config = type(config)(
            **{**config.__dict__, "parallelism": args.parallelism}
        )
    if args.output is not None:
        config = type(config)(**{**config.__dict__, "output": args.output})
    records = run_sweep(config)
    document = build_report(records, timing=config.timing)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as handle:
            if config.format == "json":
                emit_json(document, handle)
            elif config.format == "csv":
                emit_csv(document, handle)
            else:
                emit_table(document, handle)
        target = config.output
    else:
        if config.format == "json":
            emit_json(document, sys.stdout)
        elif config.format == "csv":
            emit_csv(document, sys.stdout)
        else:
            emit_table(document, sys.stdout)
        target = "stdout"
    counts: dict[str, int] = {}
    for record in records:
        counts[record["status"]] = counts.get(record["status"], 0) + 1
    summary = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    print(f"records={len(records)} {summary} -> {target}", file=sys.stderr)
    return exit_code_for(records)


def _cmd_emit(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as handle:
            document = json.load(handle)
        validate_report(document)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (json.JSONDecodeError, ReportFormatError) as exc:
        print(f"report error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.output:
        handle = open(args.output, "w", encoding="utf-8")
    else:
        handle = sys.stdout
    try:
        if args.format == "json":
            handle.write(canonical_json(document))
        elif args.format == "csv":
            emit_csv(document, handle)
        else:
            emit_table(document, handle)
    finally:
        if args.output:
            handle.close()
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "family":
        return _cmd_family(args)
    if args.command == "check":
        return _cmd_check(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    if args.command == "emit":
        return _cmd_emit(args)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
