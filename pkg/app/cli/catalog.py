from argparse import Namespace
import logging

from app.core.exceptions import EXIT_OK, EXIT_VIOLATIONS
from app.services.pattern_catalog import pattern_catalog
from app.utils.report_writer import ReportWriter

logger = logging.getLogger(__name__)


def validate_catalog(args: Namespace) -> int:
    report = pattern_catalog.validate_catalog()
    with ReportWriter(args.output) as writer:
        for check in report.checks:
            writer.write(check)
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def catalog_dump(args: Namespace) -> int:
    with ReportWriter(args.output) as writer:
        for line in pattern_catalog.dump_catalog():
            writer.write_line(line)
    return EXIT_OK


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("validate-catalog", parents=parents,
                                   help="Check chi, b, minimality and twin structure of every pattern")
    parser.set_defaults(handler=validate_catalog)

    parser = subparsers.add_parser("catalog-dump", parents=parents, help="Patterns as JSON lines")
    parser.set_defaults(handler=catalog_dump)
