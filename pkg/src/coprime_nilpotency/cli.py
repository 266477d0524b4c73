"""Command-line interface.

Exit codes: 0 property holds / consistent / factorization found,
1 property fails / not found, 2 usage or input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from . import report
from .catalog import load_catalog, load_group
from .errors import ParseError, ResourceLimitError
from .factorization import DEFAULT_BUDGET, EXHAUSTIVE, FIRST_HIT, search_sylow_factorization
from .groups import DEFAULT_MAX_ELEMENTS
from .properties import MAX_TUPLE_SIZE, check_property_a_tuples, is_nilpotent_lcs, is_nilpotent_sylow, verify_theorem
from .sylow import all_sylow_subgroups, prime_decomposition, sylow_subgroup

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS,
                        help="enumeration cap for any single group (default %(default)s)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="factorization budget in multiplications (default %(default)s)")
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit generation time and wall-clock timings from the report")
    common.add_argument("-o", "--output", help="write the report to this file instead of stdout")

    parser = _Parser(prog="coprime-nil", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("order", parents=[common], help="print |G|")
    p.add_argument("group", help="path to a .grp file or a builtin name such as A5")

    check = sub.add_parser("check", help="check Property A or nilpotency")
    check_sub = check.add_subparsers(dest="check", required=True, parser_class=_Parser)
    p = check_sub.add_parser("property-a", parents=[common])
    p.add_argument("group")
    p.add_argument("--tuple-size", type=int, default=2, help=f"2..{MAX_TUPLE_SIZE}")
    p = check_sub.add_parser("nilpotent", parents=[common])
    p.add_argument("group")
    p.add_argument("--method", choices=("sylow", "lcs", "both"), default="both")

    p = sub.add_parser("sylow", parents=[common], help="a Sylow p-subgroup, or all of them")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("--all", action="store_true", help="list every Sylow p-subgroup")
    p.add_argument("group")

    p = sub.add_parser("factorize", parents=[common], help="search for G = S1 S2 ... Sr")
    p.add_argument("group")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--prime-order", help="comma-separated multiplication order of the primes, e.g. 3,2,5")

    p = sub.add_parser("verify-theorem", parents=[common], help="check all three verdicts agree over a catalog")
    p.add_argument("--catalog", required=True, help="catalog spec file, or 'default'")
    return parser


def _timed(timings, key, fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    timings[key] = round(time.perf_counter() - t0, 6)
    return out


def _cmd_check_property_a(args, doc, timings):
    G = load_group(args.group, args.max_elements)
    res = _timed(timings, "property_a", check_property_a_tuples, G, args.tuple_size)
    doc["group"] = report.group_info(None, G)
    doc["property_a"] = report.property_a(res)
    return EXIT_OK if res.holds else EXIT_FAIL


def _cmd_check_nilpotent(args, doc, timings):
    G = load_group(args.group, args.max_elements)
    doc["group"] = report.group_info(None, G)
    results = []
    if args.method in ("sylow", "both"):
        results.append(_timed(timings, "nilpotent_sylow", is_nilpotent_sylow, G))
        doc["nilpotent_sylow"] = report.nilpotency(results[-1])
    if args.method in ("lcs", "both"):
        results.append(_timed(timings, "nilpotent_lcs", is_nilpotent_lcs, G))
        doc["nilpotent_lcs"] = report.nilpotency(results[-1])
    verdicts = {r.nilpotent for r in results}
    doc["consistent"] = len(verdicts) == 1
    return EXIT_OK if verdicts == {True} else EXIT_FAIL


def _cmd_sylow(args, doc, timings):
    G = load_group(args.group, args.max_elements)
    p = args.prime
    if p < 2 or prime_decomposition(p).factors != ((p, 1),):
        raise _UsageError(f"{p} is not a prime")
    if G.order % p:
        raise _UsageError(f"{p} does not divide |G| = {G.order}")
    doc["group"] = report.group_info(None, G)
    doc["prime"] = p
    doc["p_part"] = prime_decomposition(G.order).p_part(p)
    if args.all:
        subs = _timed(timings, "sylow", all_sylow_subgroups, G, p)
        doc["count"] = len(subs)
        doc["subgroups"] = [report.subgroup_info(S) for S in subs]
    else:
        doc["subgroup"] = report.subgroup_info(_timed(timings, "sylow", sylow_subgroup, G, p))
    return EXIT_OK


def _cmd_factorize(args, doc, timings):
    G = load_group(args.group, args.max_elements)
    doc["group"] = report.group_info(None, G)
    mode = EXHAUSTIVE if args.exhaustive else FIRST_HIT
    order = None
    if args.prime_order:
        try:
            order = [int(p) for p in args.prime_order.split(",")]
        except ValueError:
            raise _UsageError(f"bad --prime-order {args.prime_order!r}") from None
    res = _timed(timings, "factorization", search_sylow_factorization, G, mode, args.budget, order)
    doc["factorization"] = report.factorization(res)
    return EXIT_OK if res.found else EXIT_FAIL


def _cmd_verify_theorem(args, doc, timings):
    catalog = load_catalog(args.catalog, args.max_elements)
    doc["catalog"] = args.catalog
    entries = []
    counts = {"groups": 0, "consistent": 0, "property_a": 0, "nilpotent": 0}
    for name, G in catalog:
        t0 = time.perf_counter()
        v = verify_theorem(G)
        entry = {"group": report.group_info(name, G), **report.verdict(v)}
        if not args.no_timestamp:
            entry["wall_time_s"] = round(time.perf_counter() - t0, 6)
        entries.append(entry)
        counts["groups"] += 1
        counts["consistent"] += v.consistent
        counts["property_a"] += v.property_a.holds
        counts["nilpotent"] += v.sylow.nilpotent
    doc["groups"] = entries
    doc["summary"] = dict(counts, all_consistent=counts["consistent"] == counts["groups"])
    return EXIT_OK if doc["summary"]["all_consistent"] else EXIT_FAIL


def _emit(text: str, path: Optional[str], stdout) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def run_command(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    """Run one CLI invocation and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        if args.command == "order":
            G = load_group(args.group, args.max_elements)
            _emit(f"{G.order}\n", args.output, stdout)
            return EXIT_OK

        handlers = {
            ("check", "property-a"): _cmd_check_property_a,
            ("check", "nilpotent"): _cmd_check_nilpotent,
            ("sylow", None): _cmd_sylow,
            ("factorize", None): _cmd_factorize,
            ("verify-theorem", None): _cmd_verify_theorem,
        }
        command = args.command if args.command != "check" else f"check {args.check}"
        doc = report.envelope(command, timestamp=not args.no_timestamp)
        timings = {}
        code = handlers[(args.command, getattr(args, "check", None))](args, doc, timings)
        if timings and not args.no_timestamp:
            doc["timings_s"] = timings
        _emit(report.dumps(doc), args.output, stdout)
        return code
    except ResourceLimitError as exc:
        stderr.write(f"resource limit: {exc}\n")
        if exc.stats:
            stderr.write(f"partial statistics: {exc.stats}\n")
        return EXIT_RESOURCE
    except (_UsageError, ParseError, FileNotFoundError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
