"""Proof-structure subcommands: C5 reduction rounds and decomposition claims."""
from argparse import Namespace
import logging

from app.cli.common import load_graphs
from app.core.exceptions import EXIT_OK, EXIT_VIOLATIONS, SiteError
from app.graph.bits import to_list
from app.graph.graph6 import emit_graph6
from app.schemas.claims import ClaimsRecord
from app.schemas.reduction import ReductionRecord
from app.services import c5_reduction
from app.services.color_solver import color_solver
from app.services.proof_structure import check_all, decompositions_for, seed_vertices
from app.utils.report_writer import ReportWriter

logger = logging.getLogger(__name__)


def reduce_c5(args: Namespace) -> int:
    """One reduction round on the first induced C5 of each graph, using a maximum b-coloring."""
    exit_code = EXIT_OK
    with ReportWriter(args.output) as writer:
        for index, g in enumerate(load_graphs(args)):
            count, cycles = c5_reduction.count_and_find_c5(g)
            if not count:
                logger.info(f"Graph {index} has no induced C5; skipped")
                continue
            try:
                site = c5_reduction.extract_site(g, to_list(cycles[0]))
            except SiteError as e:
                logger.warning(f"Graph {index}: {e.detail}")
                exit_code = EXIT_VIOLATIONS
                continue
            _, coloring = color_solver.b_chromatic(g, args.time_limit_ms)
            result = c5_reduction.reduce(g, site, coloring)
            report = c5_reduction.verify_reduction(g, site, result)
            if not report.passed:
                exit_code = EXIT_VIOLATIONS
            writer.write(ReductionRecord(
                input_index=index,
                cycle=list(site.z),
                attached=to_list(site.x),
                ell=result.ell,
                renaming=result.renaming,
                reduced_graph6=emit_graph6(result.g_prime),
                new_vertices=list(result.new_vertices),
                lifted_b_coloring=result.lifted_b_coloring.as_list(),
                recolored_chi=result.recolored_chi.as_list(),
                report=report,
            ))
    return exit_code


def claims(args: Namespace) -> int:
    """Claim reports per graph; failures count as violations only on chordal F-free hosts."""
    exit_code = EXIT_OK
    with ReportWriter(args.output) as writer:
        for index, g in enumerate(load_graphs(args)):
            seed, decompositions = decompositions_for(g, exhaustive=args.all_decompositions)
            record = ClaimsRecord(input_index=index, graph6=emit_graph6(g))
            if seed is not None:
                record.two_k2 = seed_vertices(seed)
                record.reports = check_all(g, decompositions, args.seed)
            for report in record.reports:
                if report.chordal and report.f_free and not report.passed:
                    exit_code = EXIT_VIOLATIONS
            writer.write(record)
    return exit_code


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("reduce-c5", parents=parents, help="C5 reduction round with verification")
    parser.set_defaults(handler=reduce_c5)

    parser = subparsers.add_parser("claims", parents=parents, help="Decomposition claim checks")
    parser.add_argument("--all-decompositions", action="store_true",
                        help="Check every maximal S instead of the greedy one (n <= 8)")
    parser.set_defaults(handler=claims)
