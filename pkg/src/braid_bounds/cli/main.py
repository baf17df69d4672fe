"""
braid-bounds command line.

    braid-bounds bounds --chi -1 --b 3
    braid-bounds invariants "B3: 1 -2 1 -2"
    braid-bounds foliation check cert.json
    braid-bounds decide --word "B3: 1 -2 1 -2" --chi -1 --n 2
    braid-bounds census --g 1 --n 3 --output census.jsonl
    braid-bounds table validate [PATH]

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from braid_bounds.bounds import (
    BoundsDomainError,
    asymptotic_lb,
    braided_cable_lb,
    regularity,
    satellite_combined_lb,
    theorem_bounds,
)
from braid_bounds.braid_core import parse_braid_word
from braid_bounds.cli.knot_table import TableValidationError, find_row, validate_table
from braid_bounds.foliation import CheckStatus, FoliationCertificate, check_all
from braid_bounds.invariants import (
    Fingerprint,
    alexander_genus_lb,
    fingerprint,
    homfly,
    mfw_lower_bound,
)
from braid_bounds.search import EnumerationCapError, census, decide_braid_index_leq, write_jsonl
from braid_bounds.utils.config import set_log_level, setup_logger

logger = setup_logger("cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

INPUT_ERRORS = (ValueError, KeyError, OSError, EnumerationCapError)


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_bounds(args) -> int:
    if args.row:
        row = find_row(args.row, args.table)
        chi, b, crossings = row.chi, row.braid_index, row.crossing_number
    else:
        if args.chi is None or args.b is None:
            raise ValueError("bounds needs --chi and --b, or --row")
        chi, b, crossings = args.chi, args.b, args.c
    if b == 1:
        raise BoundsDomainError("braid index 1 is the unknot: crossing number 0, no bound needed")

    report = theorem_bounds(chi, b)
    payload = report.to_json()
    lines = [f"{report.lower} <= c <= {report.upper}  (chi={chi}, b={b})"]
    if crossings is not None:
        corollaries = {
            "contains_c": report.contains(crossings),
            "regularity": str(regularity(b)),
            "asymptotic_lb": str(asymptotic_lb(crossings, b)),
            "braided_2_cable_lb": str(braided_cable_lb(crossings, b, 2)),
            "satellite_combined_lb": str(satellite_combined_lb(crossings, b)),
        }
        payload["corollaries"] = corollaries
        lines.extend(f"  {key}: {value}" for key, value in corollaries.items())
    _emit(args, payload, "\n".join(lines))
    if crossings is not None and not report.contains(crossings):
        return EXIT_FAILED
    return EXIT_OK


def cmd_invariants(args) -> int:
    w = parse_braid_word(args.word)
    fp = fingerprint(w)
    payload = {"word": str(w), "fingerprint": fp.to_json()}
    lines = [str(w), f"  components: {fp.components}", f"  jones: {fp.jones}"]
    p = homfly(w)
    payload["homfly"] = p.to_json()
    payload["mfw_lower_bound"] = mfw_lower_bound(p)
    lines.append(f"  homfly: {p}")
    lines.append(f"  mfw braid index >= {payload['mfw_lower_bound']}")
    if fp.alexander is not None:
        payload["alexander_genus_lb"] = alexander_genus_lb(fp.alexander)
        lines.append(f"  alexander: {fp.alexander}")
        lines.append(f"  genus >= {payload['alexander_genus_lb']}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def cmd_foliation_check(args) -> int:
    certificate = FoliationCertificate.from_json(_read_text(args.certificate))
    reports = check_all(certificate)
    payload = {"checks": [report.to_json() for report in reports]}
    lines = []
    for report in reports:
        lines.append(f"{report.name}: {report.status.value}")
        for identity in report.identities:
            lines.append(
                f"  {identity.label}: {identity.lhs} {identity.relation} {identity.rhs}"
                f" (delta {identity.delta})"
            )
    _emit(args, payload, "\n".join(lines))
    failed = any(report.status == CheckStatus.FAIL for report in reports)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_decide(args) -> int:
    if args.word:
        target = fingerprint(parse_braid_word(args.word))
    elif args.fingerprint:
        target = Fingerprint.from_json(json.loads(_read_text(args.fingerprint)))
    else:
        raise ValueError("decide needs --word or --fingerprint")
    result = decide_braid_index_leq(target, args.chi, args.n, workers=args.workers, cap=args.cap)
    text = f"{result.verdict.value}"
    if result.witness is not None:
        text += f" (witness {result.witness}; fingerprint match, not a proof of isotopy)"
    text += f"\n  words visited: {result.words_visited}, deduped: {result.deduped}"
    _emit(args, result.to_json(), text)
    return EXIT_OK


def cmd_census(args) -> int:
    report = census(args.g, args.n, workers=args.workers, cap=args.cap)
    if args.output:
        write_jsonl(report.entries, Path(args.output), report.residue)
    if args.json:
        for entry in report.entries:
            print(json.dumps(entry.to_json(), sort_keys=True))
        for entry in report.residue:
            print(json.dumps(entry.to_json(residue=True), sort_keys=True))
        print(json.dumps({"summary": report.summary()}, sort_keys=True))
        return EXIT_OK
    print(
        f"g={report.g}, n={report.n}, budget {report.budget}: "
        f"{len(report.entries)} certified, {len(report.residue)} residue"
    )
    for entry in report.entries:
        print(f"  {entry.witness}  jones {entry.fingerprint.jones}")
    for entry in report.residue:
        print(
            f"  {entry.witness}  jones {entry.fingerprint.jones}  residue "
            f"genus {list(entry.genus_bounds)} braid index {list(entry.braid_index_bounds)}"
        )
    return EXIT_OK


def cmd_table_validate(args) -> int:
    try:
        results = validate_table(args.path)
    except TableValidationError as e:
        logger.error(f"Table validation failed at {e}")
        print(f"FAILED {e}")
        return EXIT_FAILED
    payload = {"rows": [r.to_json() for r in results], "valid": True}
    lines = [
        f"{r.row.name:8} {r.bounds.lower} <= {r.row.crossing_number} <= {r.bounds.upper}"
        f"  mfw={r.mfw}"
        for r in results
    ]
    lines.append(f"{len(results)} rows valid")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braid-bounds",
        description="Crossing-number bounds, braid invariants and bounded braid searches",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    parser.add_argument("--cap", type=int, default=None, help="raw word-count cap")
    parser.add_argument("--workers", type=int, default=None, help="enumeration processes")
    sub = parser.add_subparsers(dest="command", required=True)

    bounds = sub.add_parser("bounds", help="crossing-number sandwich from chi and b")
    bounds.add_argument("--chi", type=int)
    bounds.add_argument("--b", type=int)
    bounds.add_argument("--c", type=int, help="known crossing number, adds corollaries")
    bounds.add_argument("--row", help="use a knot table row by name")
    bounds.add_argument("--table", type=Path, default=None)
    bounds.set_defaults(handler=cmd_bounds)

    invariants = sub.add_parser("invariants", help="fingerprint of a braid closure")
    invariants.add_argument("word", help="braid word, e.g. 'B3: 1 -2 1 -2'")
    invariants.set_defaults(handler=cmd_invariants)

    foliation = sub.add_parser("foliation", help="foliation certificate tools")
    foliation_sub = foliation.add_subparsers(dest="action", required=True)
    check = foliation_sub.add_parser("check", help="check a certificate JSON file")
    check.add_argument("certificate", help="path, or - for stdin")
    check.set_defaults(handler=cmd_foliation_check)

    decide = sub.add_parser("decide", help="is the braid index <= n?")
    decide.add_argument("--word")
    decide.add_argument("--fingerprint", help="fingerprint JSON file")
    decide.add_argument("--chi", type=int, required=True)
    decide.add_argument("--n", type=int, required=True)
    decide.set_defaults(handler=cmd_decide)

    census_parser = sub.add_parser("census", help="knots of genus g and braid index n")
    census_parser.add_argument("--g", type=int, required=True)
    census_parser.add_argument("--n", type=int, required=True)
    census_parser.add_argument("--output", help="write certified entries as JSON lines")
    census_parser.set_defaults(handler=cmd_census)

    table = sub.add_parser("table", help="bundled knot table")
    table_sub = table.add_subparsers(dest="action", required=True)
    validate = table_sub.add_parser("validate", help="re-verify every row")
    validate.add_argument("path", nargs="?", type=Path, default=None)
    validate.set_defaults(handler=cmd_table_validate)

    return parser


def run_cli(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    if args.verbose:
        set_log_level("DEBUG")
    try:
        return args.handler(args)
    except INPUT_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
