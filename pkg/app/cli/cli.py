from argparse import ArgumentParser
from typing import Optional, Sequence
import logging

from app.cli import campaigns, catalog, graphs, structure
from app.cli.common import global_flags
from app.core.config import settings
from app.core.exceptions import EXIT_USAGE, BPerfError

logger = logging.getLogger(__name__)


def build_parser() -> ArgumentParser:
    flags = global_flags()
    parser = ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="b-perfection toolkit: chordality, exact b-colorings, forbidden patterns, theorem campaigns",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    # Include all subcommand groups
    graphs.register(subparsers, [flags])
    structure.register(subparsers, [flags])
    catalog.register(subparsers, [flags])
    campaigns.register(subparsers, [flags])
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run the subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.quiet:
        logging.getLogger().setLevel(logging.WARNING)

    try:
        return args.handler(args)
    except BPerfError as e:
        logger.error(e.detail)
        return e.exit_code
    except (ValueError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
