from argparse import ArgumentParser, Namespace
from typing import List, Optional
import logging
import sys

from app.core.config import settings
from app.graph.core import Graph
from app.schemas.campaign import CorpusSource
from app.services.corpus import corpus_service
from app.utils.parsers import graph_file_parser

logger = logging.getLogger(__name__)


def global_flags() -> ArgumentParser:
    """Flags shared by every subcommand (attached as a parent parser)."""
    parser = ArgumentParser(add_help=False)
    parser.add_argument("--input", help="Graph file, graph6 or edge list (auto-detected); '-' for stdin")
    parser.add_argument("--format", dest="fmt", choices=["g6", "edges"], help="Force the input format")
    parser.add_argument("--max-n", type=int, default=None, help="Builtin enumeration up to this order")
    parser.add_argument("--jobs", type=int, default=settings.BPERF_JOBS, help="Worker processes")
    parser.add_argument("--time-limit-ms", type=int, default=settings.BPERF_TIME_LIMIT_MS,
                        help="Per-call solver time limit")
    parser.add_argument("--seed", type=int, default=settings.BPERF_SEED, help="Random seed")
    parser.add_argument("--output", help="Write JSON lines here instead of stdout")
    parser.add_argument("--quiet", action="store_true", help="Only warnings and errors on stderr")
    parser.add_argument("--random", type=int, default=None, metavar="COUNT",
                        help="Use COUNT random graphs as the corpus")
    parser.add_argument("--order", type=int, default=8, help="Order of random graphs")
    parser.add_argument("--edge-prob", type=float, default=settings.BPERF_RANDOM_EDGE_PROB,
                        help="Edge probability of random graphs")
    parser.add_argument("--filter", choices=["chordal", "c4free", "c5host"], default=None,
                        help="Restrict the random or builtin corpus to a class")
    parser.add_argument("--full-scan", action="store_true", default=settings.BPERF_FULL_SCAN,
                        help="Scan all 22 patterns even on chordal hosts")
    return parser


def corpus_source(args: Namespace, default_max_n: Optional[int] = None) -> Optional[CorpusSource]:
    """CorpusSource from the flags; None means read graphs from stdin."""
    if args.input and args.input != "-":
        return CorpusSource(kind="file", path=args.input, fmt=args.fmt)
    if args.random is not None:
        return CorpusSource(
            kind="random", count=args.random, order=args.order,
            edge_prob=args.edge_prob, seed=args.seed, filter=args.filter,
        )
    max_n = args.max_n if args.max_n is not None else default_max_n
    if max_n is not None:
        return CorpusSource(kind="builtin", max_n=max_n, filter=args.filter)
    return None


def load_graphs(args: Namespace, default_max_n: Optional[int] = None) -> List[Graph]:
    source = corpus_source(args, default_max_n)
    if source is None:
        logger.debug("Reading graphs from stdin")
        return graph_file_parser.parse(sys.stdin.read(), args.fmt)
    return list(corpus_service.iter_graphs(source))
