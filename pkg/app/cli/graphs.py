"""Per-graph subcommands: chordality, chi, b, pattern scan, recognition, enumeration."""
from argparse import Namespace
import logging

from app.cli.common import load_graphs
from app.core.exceptions import EXIT_OK, EXIT_VIOLATIONS
from app.graph.bits import to_list
from app.graph.chordal import is_chordal, omega_chordal
from app.graph.coloring import first_b_vertex, validate_coloring
from app.graph.graph6 import emit_graph6
from app.schemas.campaign import CorpusSource
from app.schemas.graph import ChordalRecord, ColoringRecord, ScanRecord
from app.schemas.verdict import EmbeddingCertificate, VerdictRecord, VerdictStatus
from app.services.color_solver import color_solver
from app.services.corpus import corpus_service
from app.services.pattern_catalog import pattern_catalog
from app.services.recognizer import recognizer
from app.utils.report_writer import ReportWriter

logger = logging.getLogger(__name__)


def chordal(args: Namespace) -> int:
    with ReportWriter(args.output) as writer:
        for index, g in enumerate(load_graphs(args)):
            certificate = is_chordal(g)
            if certificate.is_chordal:
                omega, clique = omega_chordal(g, certificate)
                writer.write(ChordalRecord(
                    input_index=index, n=g.n, chordal=True,
                    peo=list(certificate.ordering.order), omega=omega, clique=to_list(clique),
                ))
            else:
                writer.write(ChordalRecord(
                    input_index=index, n=g.n, chordal=False, hole=list(certificate.hole),
                ))
    return EXIT_OK


def chi(args: Namespace) -> int:
    with ReportWriter(args.output) as writer:
        for index, g in enumerate(load_graphs(args)):
            value, coloring = color_solver.chi_exact(g, args.time_limit_ms)
            writer.write(ColoringRecord(
                input_index=index, n=g.n, value=value, coloring=coloring.as_list(),
            ))
    return EXIT_OK


def bchrom(args: Namespace) -> int:
    with ReportWriter(args.output) as writer:
        for index, g in enumerate(load_graphs(args)):
            value, coloring = color_solver.b_chromatic(g, args.time_limit_ms)
            analysis = validate_coloring(g, coloring)
            writer.write(ColoringRecord(
                input_index=index, n=g.n, value=value, coloring=coloring.as_list(),
                b_vertices=[first_b_vertex(analysis, color) for color in range(1, value + 1)],
            ))
    return EXIT_OK


def scan(args: Namespace) -> int:
    with ReportWriter(args.output) as writer:
        for index, g in enumerate(load_graphs(args)):
            found = pattern_catalog.scan_family(g, full_scan=args.full_scan or None)
            certificate = None
            if found is not None:
                certificate = EmbeddingCertificate(pattern=found[0], mapping=list(found[1].mapping))
            writer.write(ScanRecord(input_index=index, n=g.n, found=certificate))
    return EXIT_OK


def recognize(args: Namespace) -> int:
    exit_code = EXIT_OK
    with ReportWriter(args.output) as writer:
        for index, g in enumerate(load_graphs(args)):
            verdict = recognizer.recognize(g, full_scan=args.full_scan or None, brute=args.brute)
            if verdict.status == VerdictStatus.B_IMPERFECT and verdict.brute_witness is not None:
                exit_code = EXIT_VIOLATIONS
            writer.write(VerdictRecord(input_index=index, n=g.n, **verdict.model_dump()))
    return exit_code


def enumerate_cmd(args: Namespace) -> int:
    """graph6 lines, one per isomorphism class, ascending order."""
    max_n = args.max_n if args.max_n is not None else 4
    source = CorpusSource(kind="builtin", max_n=max_n, filter=args.filter)
    with ReportWriter(args.output) as writer:
        for g in corpus_service.iter_graphs(source):
            writer.write_line(emit_graph6(g))
    return EXIT_OK


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("chordal", parents=parents, help="Chordality with PEO or hole certificate")
    parser.set_defaults(handler=chordal)

    parser = subparsers.add_parser("chi", parents=parents, help="Exact chromatic number with witness")
    parser.set_defaults(handler=chi)

    parser = subparsers.add_parser("bchrom", parents=parents, help="Exact b-chromatic number with witness")
    parser.set_defaults(handler=bchrom)

    parser = subparsers.add_parser("scan", parents=parents, help="First induced member of the family")
    parser.set_defaults(handler=scan)

    parser = subparsers.add_parser("recognize", parents=parents, help="Decide b-perfection")
    parser.add_argument("--brute", action="store_true",
                        help="Re-decide hosts outside both theorem classes by brute force")
    parser.set_defaults(handler=recognize)

    parser = subparsers.add_parser("enumerate", parents=parents,
                                   help="All graphs (or --filter class members) up to --max-n, one per isomorphism class")
    parser.set_defaults(handler=enumerate_cmd)
