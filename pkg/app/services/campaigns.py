"""
Theorem verification campaigns.

Each graph is analysed by a pure worker function; a multiprocessing pool maps
it over the corpus with ``imap`` so records come back in input order.
"""
from functools import partial
from multiprocessing import Pool
from typing import Callable, Iterable, List, Optional, Tuple
import logging
import time

from tqdm import tqdm

from app.core.exceptions import SiteError, SolverTimeoutError
from app.graph.bits import to_list
from app.graph.chordal import is_chordal, omega_chordal
from app.graph.core import Graph
from app.graph.graph6 import emit_graph6
from app.schemas.campaign import CampaignReport, CampaignSummary, GraphRecord
from app.schemas.verdict import EmbeddingCertificate
from app.services import c5_reduction
from app.services.color_solver import color_solver
from app.services.pattern_catalog import CHORDAL_FAMILY, pattern_catalog
from app.services.proof_structure import claim_checker, find_2K2, grow_maximal_S

logger = logging.getLogger(__name__)


def _ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000.0, 3)


def _solve(record: GraphRecord, g: Graph, time_limit_ms: Optional[int]):
    """Fill chi and b; returns the b witness or None on timeout."""
    start = time.perf_counter()
    try:
        record.chi, _ = color_solver.chi_exact(g, time_limit_ms)
        record.b, witness = color_solver.b_chromatic(g, time_limit_ms)
    except SolverTimeoutError as e:
        record.status = "unknown"
        record.violations.append(e.detail)
        return None
    finally:
        record.timings["solve"] = _ms(start)
    return witness


def _scan(record: GraphRecord, g: Graph, chordal: bool, full_scan: Optional[bool]) -> None:
    start = time.perf_counter()
    found = pattern_catalog.scan_family(g, full_scan=full_scan, chordal=chordal)
    record.timings["scan"] = _ms(start)
    if found is not None:
        name, embedding = found
        record.f_member = EmbeddingCertificate(pattern=name, mapping=list(embedding.mapping))


def _judge(record: GraphRecord) -> None:
    """The theorem's two implications on one graph."""
    if record.f_member is None and record.b != record.chi:
        record.violations.append(f"F-free but b={record.b} > chi={record.chi}")
    if record.f_member is not None:
        record.verdict = "B_IMPERFECT"
    else:
        record.verdict = "B_PERFECT"


def analyse_chordal(
    item: Tuple[int, Graph],
    time_limit_ms: Optional[int] = None,
    full_scan: Optional[bool] = None,
    with_claims: bool = True
) -> GraphRecord:
    index, g = item
    certificate = is_chordal(g)
    record = GraphRecord(
        index=index, graph6=emit_graph6(g), n=g.n, status="ok",
        chordal=certificate.is_chordal, c4free=certificate.is_chordal,
    )
    if not certificate.is_chordal or g.n == 0:
        record.status = "skipped"
        return record

    if _solve(record, g, time_limit_ms) is None:
        return record
    omega, _ = omega_chordal(g, certificate)
    if omega != record.chi:
        record.violations.append(f"chi={record.chi} differs from omega={omega}")

    _scan(record, g, True, full_scan)
    _judge(record)
    if record.b > record.chi and record.f_member and record.f_member.pattern not in CHORDAL_FAMILY:
        record.violations.append(f"b > chi witnessed only by {record.f_member.pattern}")

    if with_claims and record.f_member is None:
        seed = find_2K2(g)
        if seed is not None:
            start = time.perf_counter()
            report, _ = claim_checker.check_claims(g, grow_maximal_S(g, seed))
            record.timings["claims"] = _ms(start)
            record.claim_results.append(report)
            for result in report.results:
                if result.passed is False:
                    record.violations.append(f"{result.claim} failed: {result.witness}")

    if record.violations:
        record.status = "violation"
    return record


def analyse_c4_free(
    item: Tuple[int, Graph],
    time_limit_ms: Optional[int] = None,
    full_scan: Optional[bool] = True,
    with_reduction: bool = True
) -> GraphRecord:
    index, g = item
    chordal = is_chordal(g).is_chordal
    c4free = chordal or pattern_catalog.find_induced(g, pattern_catalog.get("C4")) is None
    record = GraphRecord(
        index=index, graph6=emit_graph6(g), n=g.n, status="ok",
        chordal=chordal, c4free=c4free,
    )
    if not c4free or g.n == 0:
        record.status = "skipped"
        return record

    witness = _solve(record, g, time_limit_ms)
    if witness is None:
        return record
    _scan(record, g, chordal, full_scan)
    _judge(record)

    if with_reduction and record.f_member is None:
        count, cycles = c5_reduction.count_and_find_c5(g)
        if count:
            start = time.perf_counter()
            try:
                site = c5_reduction.extract_site(g, to_list(cycles[0]))
                result = c5_reduction.reduce(g, site, witness)
                record.reduction = c5_reduction.verify_reduction(g, site, result)
                for check in record.reduction.failures():
                    record.violations.append(f"reduction check {check.name} failed: {check.detail}")
            except SiteError as e:
                record.violations.append(e.detail)
            record.timings["reduction"] = _ms(start)

    if record.violations:
        record.status = "violation"
    return record


def run_campaign(
    theorem: str,
    worker: Callable[[Tuple[int, Graph]], GraphRecord],
    graphs: Iterable[Graph],
    jobs: int = 1,
    quiet: bool = False,
    total: Optional[int] = None
) -> CampaignReport:
    """Map ``worker`` over the corpus, in input order, and summarise."""
    logger.info(f"Starting {theorem} campaign with {jobs} job(s)")
    items = enumerate(graphs)
    records: List[GraphRecord] = []
    progress = dict(desc=theorem, total=total, disable=quiet, unit="graph")
    if jobs <= 1:
        for item in tqdm(items, **progress):
            records.append(worker(item))
    else:
        with Pool(processes=jobs) as pool:
            for record in tqdm(pool.imap(worker, items, chunksize=16), **progress):
                records.append(record)

    summary = summarize(theorem, records)
    logger.info(
        f"{theorem} finished: {summary.total} graphs, {summary.checked} checked, "
        f"{summary.skipped} skipped, violations: {summary.violations}, unknowns: {summary.unknowns}"
    )
    return CampaignReport(records=records, summary=summary)


def summarize(theorem: str, records: List[GraphRecord]) -> CampaignSummary:
    summary = CampaignSummary(theorem=theorem, total=len(records))
    for record in records:
        if record.status == "skipped":
            summary.skipped += 1
            continue
        summary.checked += 1
        if record.status == "unknown":
            summary.unknowns += 1
        if record.status == "violation":
            summary.violations += 1
            summary.violation_indices.append(record.index)
        if record.f_member is not None:
            summary.imperfect += 1
        if record.reduction is not None:
            summary.reductions += 1
    return summary


def verify_theorem1(
    graphs: Iterable[Graph],
    jobs: int = 1,
    time_limit_ms: Optional[int] = None,
    full_scan: Optional[bool] = None,
    quiet: bool = False,
    total: Optional[int] = None
) -> CampaignReport:
    """F-free chordal graphs are b-perfect; b > chi on a chordal graph means some F1-F9 is induced."""
    worker = partial(analyse_chordal, time_limit_ms=time_limit_ms, full_scan=full_scan)
    return run_campaign("verify-thm1", worker, graphs, jobs, quiet, total)


def verify_theorem2(
    graphs: Iterable[Graph],
    jobs: int = 1,
    time_limit_ms: Optional[int] = None,
    quiet: bool = False,
    total: Optional[int] = None
) -> CampaignReport:
    """F-free C4-free graphs are b-perfect; F-free hosts with a C5 also get one reduction round."""
    worker = partial(analyse_c4_free, time_limit_ms=time_limit_ms)
    return run_campaign("verify-thm2", worker, graphs, jobs, quiet, total)
