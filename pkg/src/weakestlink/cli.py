#!/usr/bin/env python
"""weakestlink command line.

Subcommands::

    weakestlink crack-time --bits 40
    weakestlink crack-time --charset alphanumeric --length 8
    weakestlink min-charset --length 16
    weakestlink tables --which 1,2,3 --format markdown
    weakestlink assess office.conf lab.conf --format json
    weakestlink oracle --max-space 100000

Exit status is 0 for a secure audit, 1 for an insecure one and 2 for a
usage or config error.

Attributes:
    log (logging.Logger): the log object for the module.
    FILE_EXTENSIONS (dict): output format -> report file extension.

"""
import argparse
import asyncio
import logging
import os
import sys
from dataclasses import dataclass
from typing import Any, List, Mapping, Optional, Sequence, Tuple

from weakestlink.config import (
    AuditConfig,
    attack_from_settings,
    budget_from_settings,
    build_stack,
    create_settings,
    get_frozen_copy,
    get_unfrozen_copy,
    load_audit_config,
    parse_rate,
)
from weakestlink.constants import OUTPUT_FORMATS, STATUSES
from weakestlink.duration import format_duration, format_significant, to_exact
from weakestlink.exceptions import InvalidSpecError, WeakestLinkException
from weakestlink.keyspace import (
    AttackModel,
    LifetimeBudget,
    cipher_keyspace,
    crack_duration,
    get_character_set,
    is_secure,
    keyspace_bits,
    passphrase_keyspace,
    to_fraction,
)
from weakestlink.log import contextual_log_handler, update_logging_config
from weakestlink.oracle import equivalence_sweep, extrapolate_local_crack_time
from weakestlink.report import TABLE_FORMATS, render_report, render_rows, report_status
from weakestlink.stack import recommend_min_charset, weakest_link
from weakestlink.tables import render_tables
from weakestlink.utils import makedirs, raise_future_exceptions, semaphore_wrapper, write_to_file
from weakestlink.version import __version_string__

log = logging.getLogger(__name__)

FILE_EXTENSIONS = {
    "text": "txt",
    "markdown": "md",
    "csv": "csv",
    "json": "json",
    "yaml": "yaml",
}


# run_audit {{{1
def run_audit(config: AuditConfig, output_format: str = "text") -> Tuple[str, int]:
    """Assess the stack an audit config describes.

    Args:
        config (AuditConfig): the parsed config.
        output_format (str, optional): one of ``OUTPUT_FORMATS``.  Defaults to ``text``.

    Returns:
        tuple: (report document, exit status).  Status is 0 when every
            assessable component is secure, 1 otherwise.

    """
    report = weakest_link(build_stack(config))
    return render_report(report, output_format), report_status(report)


@dataclass(frozen=True)
class AuditOutcome:
    """The result of auditing one config file in a batch.

    ``document`` is None when the config couldn't be audited; ``error`` then
    says why.

    """

    path: str
    document: Optional[str]
    status: int
    error: Optional[str] = None
    report_path: Optional[str] = None


def _report_path(path: str, output_dir: str, output_format: str) -> str:
    stem = os.path.splitext(os.path.basename(path))[0]
    return os.path.join(output_dir, "{}.{}".format(stem, FILE_EXTENSIONS[output_format]))


def audit_file(
    path: str, settings: Mapping[str, Any], output_format: str = "text", output_dir: Optional[str] = None, log_each: bool = False
) -> AuditOutcome:
    """Load, audit and optionally write out the report for one config file.

    Config and registry errors are caught and turned into a status 2 outcome
    so one bad file doesn't stop a batch.

    """

    def _audit() -> AuditOutcome:
        try:
            config = load_audit_config(path, settings=settings)
            document, status = run_audit(config, output_format)
        except WeakestLinkException as exc:
            log.error("{}: {}".format(path, exc))
            return AuditOutcome(path=path, document=None, status=exc.exit_code, error=str(exc))
        report_path = None
        if output_dir:
            report_path = _report_path(path, output_dir, output_format)
            write_to_file(report_path, document)
            log.info("Wrote {}".format(report_path))
        return AuditOutcome(path=path, document=document, status=status, report_path=report_path)

    if not log_each:
        return _audit()
    log_dir = output_dir or os.path.dirname(os.path.abspath(path))
    log_path = os.path.join(log_dir, "{}.log".format(os.path.splitext(os.path.basename(path))[0]))
    with contextual_log_handler(settings, log_path, thread_only=True):
        return _audit()


async def assess_files(
    paths: Sequence[str], settings: Mapping[str, Any], output_format: str = "text", output_dir: Optional[str] = None, log_each: bool = False
) -> List[AuditOutcome]:
    """Audit several config files concurrently.

    At most ``settings["max_concurrent_audits"]`` run at once, each in a
    worker thread.  Outcomes come back in the order of ``paths``.

    """
    if output_dir:
        makedirs(output_dir)
    loop = asyncio.get_running_loop()
    semaphore = asyncio.Semaphore(settings["max_concurrent_audits"])

    async def _audit(path: str) -> AuditOutcome:
        return await loop.run_in_executor(None, audit_file, path, settings, output_format, output_dir, log_each)

    tasks = [asyncio.ensure_future(semaphore_wrapper(semaphore, _audit(path))) for path in paths]
    return await raise_future_exceptions(tasks)


def worst_status(statuses: Sequence[int]) -> int:
    """Return the most severe exit status: usage errors over insecure over secure."""
    return max(statuses, default=STATUSES["secure"])


# subcommands {{{1
def _attack(opts: argparse.Namespace, settings: Mapping[str, Any]) -> AttackModel:
    if opts.rate is None:
        return attack_from_settings(settings)
    try:
        rate = parse_rate(opts.rate)
    except ValueError as exc:
        raise InvalidSpecError("--rate: {}".format(exc))
    return AttackModel(rate_keys_per_second=rate, description="{} keys/second".format(rate))


def _budget(opts: argparse.Namespace, settings: Mapping[str, Any]) -> LifetimeBudget:
    if opts.budget_years is None:
        return budget_from_settings(settings)
    return LifetimeBudget(years=to_fraction(opts.budget_years))


def crack_time_command(opts: argparse.Namespace, settings: Mapping[str, Any]) -> int:
    """Print the keyspace, worst-case crack time and verdict of one key or passphrase."""
    attack = _attack(opts, settings)
    budget = _budget(opts, settings)
    if opts.bits is not None:
        if opts.length is not None:
            raise InvalidSpecError("--length needs --charset, not --bits")
        keyspace = cipher_keyspace(opts.bits)
        subject = "{}-bit cipher key".format(opts.bits)
    else:
        if opts.length is None:
            raise InvalidSpecError("--charset needs --length")
        charset = get_character_set(opts.charset)
        keyspace = passphrase_keyspace(charset.size, opts.length)
        subject = "{}-character passphrase over {} ({} symbols)".format(opts.length, charset.name, charset.size)
    duration = crack_duration(keyspace, attack)
    verdict = "secure" if is_secure(duration, budget) else "insecure"
    print(subject)
    print("keyspace: {} ({:.2f} bits)".format(keyspace, keyspace_bits(keyspace)))
    print("worst-case crack time: {} at {} keys/second".format(format_duration(duration), attack.rate_keys_per_second))
    print("verdict: {} against {} years".format(verdict, format_significant(budget.years)))
    return STATUSES["secure"]


def min_charset_command(opts: argparse.Namespace, settings: Mapping[str, Any]) -> int:
    """Print the minimum character-set size for a passphrase length."""
    recommendation = recommend_min_charset(opts.length, _budget(opts, settings), _attack(opts, settings))
    print("passphrase length: {}".format(recommendation.length))
    print("minimum set size: {}".format(format_significant(recommendation.real_value)))
    print("integer minimum: {}".format(recommendation.integer_ceiling))
    named = recommendation.named_set
    print("smallest named set: {}".format("{} ({})".format(named.name, named.size) if named else "none"))
    return STATUSES["secure"]


def _parse_which(value: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("expected table numbers like 1,2,3, got {!r}".format(value))


def tables_command(opts: argparse.Namespace, settings: Mapping[str, Any]) -> int:
    """Regenerate the strength tables."""
    sys.stdout.write(render_tables(opts.which, opts.format, attack=_attack(opts, settings), budget=_budget(opts, settings)))
    return STATUSES["secure"]


def assess_command(opts: argparse.Namespace, settings: Mapping[str, Any]) -> int:
    """Audit each config file and print or write its report."""
    outcomes = asyncio.run(assess_files(opts.files, settings, output_format=opts.format, output_dir=opts.output_dir, log_each=opts.log_each))
    for outcome in outcomes:
        if outcome.error is not None:
            print(outcome.error, file=sys.stderr)
        elif not opts.output_dir:
            if len(outcomes) > 1:
                print("==> {} <==".format(outcome.path))
            sys.stdout.write(outcome.document or "")
    return worst_status([outcome.status for outcome in outcomes])


ORACLE_HEADER = ("character set", "size", "length", "enumerated", "distinct", "expected", "elapsed (s)", "keys/second", "match")


def oracle_command(opts: argparse.Namespace, settings: Mapping[str, Any]) -> int:
    """Run the enumeration sweep and compare every count with ``s ** L``."""
    rows = equivalence_sweep(max_space=opts.max_space, cap=settings["enumeration_cap"])
    if not rows:
        raise InvalidSpecError("--max-space {} leaves nothing to enumerate".format(opts.max_space))
    table = []
    for row in rows:
        result = row.result
        table.append(
            [
                result.charset_name,
                get_character_set(result.charset_name).size,
                result.length,
                result.enumerated_count,
                result.distinct_count,
                row.expected,
                "{:.6f}".format(result.elapsed),
                "{:.0f}".format(result.throughput_keys_per_second),
                "yes" if row.matches else "NO",
            ]
        )
    sys.stdout.write(render_rows(ORACLE_HEADER, table, opts.format))
    largest = max(rows, key=lambda row: row.expected).result
    if opts.format == "text" and largest.throughput_keys_per_second > 0 and largest.elapsed > 0:
        keyspace = passphrase_keyspace(62, 8)
        estimate = format_duration(to_exact(extrapolate_local_crack_time(largest, keyspace)))
        print("\nAt {:.0f} keys/second this machine needs {} for an 8-character alphanumeric passphrase.".format(largest.throughput_keys_per_second, estimate))
    return STATUSES["secure"] if all(row.matches for row in rows) else STATUSES["insecure"]


# get_parser {{{1
def get_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    parser = argparse.ArgumentParser(prog="weakestlink", description="Brute-force weakest-link audit of 802.11 security stacks.")
    parser.add_argument("--settings", help="YAML or JSON runtime settings file (default: $WEAKESTLINK_SETTINGS)")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version_string__))
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_attack_options(subparser: argparse.ArgumentParser) -> None:
        subparser.add_argument("--rate", help="attack rate in keys/second, e.g. 10^12")
        subparser.add_argument("--budget-years", dest="budget_years", help="lifetime budget in years, e.g. 89.78")

    crack = subparsers.add_parser("crack-time", help="worst-case crack time of a key or passphrase")
    target = crack.add_mutually_exclusive_group(required=True)
    target.add_argument("--bits", type=int, help="effective cipher key size")
    target.add_argument("--charset", help="character set name or size")
    crack.add_argument("--length", type=int, help="passphrase length, with --charset")
    add_attack_options(crack)
    crack.set_defaults(func=crack_time_command)

    minimum = subparsers.add_parser("min-charset", help="minimum character-set size for a passphrase length")
    minimum.add_argument("--length", type=int, required=True)
    add_attack_options(minimum)
    minimum.set_defaults(func=min_charset_command)

    tables = subparsers.add_parser("tables", help="regenerate the strength tables")
    tables.add_argument("--which", type=_parse_which, default=(1, 2, 3), help="comma-separated table numbers (default: 1,2,3)")
    tables.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    add_attack_options(tables)
    tables.set_defaults(func=tables_command)

    assess = subparsers.add_parser("assess", help="audit one or more config files")
    assess.add_argument("files", nargs="+", metavar="FILE")
    assess.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    assess.add_argument("--output-dir", dest="output_dir", help="write one report per config here instead of stdout")
    assess.add_argument("--log-each", dest="log_each", action="store_true", help="write a log file per config")
    assess.set_defaults(func=assess_command)

    oracle = subparsers.add_parser("oracle", help="enumerate small keyspaces to check the counting model")
    oracle.add_argument("--max-space", dest="max_space", type=int, default=10 ** 5)
    oracle.add_argument("--format", choices=TABLE_FORMATS, default="text")
    oracle.set_defaults(func=oracle_command)
    return parser


# main {{{1
def main(args: Optional[Sequence[str]] = None) -> None:
    """Weakestlink entry point.

    Args:
        args (list, optional): the commandline args to parse. If ``None``, use
            ``sys.argv[1:]``. Defaults to ``None``.

    Raises:
        SystemExit: always, with the command's exit status.

    """
    opts = get_parser().parse_args(sys.argv[1:] if args is None else args)
    try:
        settings = create_settings(opts.settings)
        if opts.verbose:
            settings = get_frozen_copy(dict(get_unfrozen_copy(settings), verbose=True))
        update_logging_config(settings)
        status = opts.func(opts, settings)
    except WeakestLinkException as exc:
        log.debug("{} failed".format(opts.command), exc_info=True)
        print("weakestlink: {}".format(exc), file=sys.stderr)
        sys.exit(exc.exit_code)
    sys.exit(status)


__name__ == "__main__" and main()
