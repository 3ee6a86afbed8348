from argparse import Namespace
import logging
import sys

from app.cli.common import corpus_source, load_graphs
from app.core.exceptions import EXIT_INCOMPLETE, EXIT_OK, EXIT_VIOLATIONS
from app.schemas.campaign import CampaignReport
from app.services.campaigns import verify_theorem1, verify_theorem2
from app.services.corpus import corpus_service
from app.utils.report_writer import ReportWriter, summary_table

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 6


def _finish(args: Namespace, report: CampaignReport) -> int:
    with ReportWriter(args.output) as writer:
        for record in report.records:
            writer.write(record)
        writer.write_line(report.summary.model_dump_json())
    if args.summary:
        print(summary_table(report.records), file=sys.stderr)
    summary = report.summary
    if not args.quiet:
        print(f"violations: {summary.violations}  unknowns: {summary.unknowns}", file=sys.stderr)
    if not summary.holds:
        return EXIT_VIOLATIONS
    if not summary.complete:
        return EXIT_INCOMPLETE
    return EXIT_OK


def _graphs(args: Namespace):
    source = corpus_source(args, DEFAULT_MAX_N)
    if source is None:
        return load_graphs(args)
    return corpus_service.iter_graphs(source)


def verify_thm1(args: Namespace) -> int:
    report = verify_theorem1(
        _graphs(args),
        jobs=args.jobs,
        time_limit_ms=args.time_limit_ms,
        full_scan=args.full_scan or None,
        quiet=args.quiet,
    )
    return _finish(args, report)


def verify_thm2(args: Namespace) -> int:
    report = verify_theorem2(
        _graphs(args),
        jobs=args.jobs,
        time_limit_ms=args.time_limit_ms,
        quiet=args.quiet,
    )
    return _finish(args, report)


def register(subparsers, parents) -> None:
    for name, handler, help_text in (
        ("verify-thm1", verify_thm1, "F-free chordal graphs are b-perfect"),
        ("verify-thm2", verify_thm2, "F-free C4-free graphs are b-perfect"),
    ):
        parser = subparsers.add_parser(name, parents=parents, help=help_text)
        parser.add_argument("--summary", action="store_true", help="Print a per-n table")
        parser.set_defaults(handler=handler)
