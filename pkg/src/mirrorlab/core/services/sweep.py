"""
(a, p) 스윕 실행 서비스
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, List, Optional, Tuple

from sympy import primerange

from mirrorlab.core.models.config import SweepJob
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.services.dwork import IntegralityReport, integrality_report

Cell = Tuple[HGParams, int]


def sweep_cells(job: SweepJob) -> List[Cell]:
    """Good primes p <= pmax for each parameter list, in input order."""
    cells = []
    for a in job.params:
        for p in primerange(2, job.pmax + 1):
            if a.is_good_prime(p):
                cells.append((a, int(p)))
    return cells


def evaluate_cell(a: HGParams, p: int, order: int, checks: Tuple[str, ...]) -> IntegralityReport:
    """Top-level worker so that it pickles for the process pool."""
    return integrality_report(a, p, order, checks)


def iter_sweep(job: SweepJob) -> Iterator[IntegralityReport]:
    """Reports in cell order; with jobs > 1 cells run in a process pool."""
    cells = sweep_cells(job)
    if job.jobs <= 1 or len(cells) <= 1:
        for a, p in cells:
            yield evaluate_cell(a, p, job.order, job.checks)
        return

    with ProcessPoolExecutor(max_workers=job.jobs) as pool:
        yield from pool.map(
            evaluate_cell,
            [a for a, _ in cells],
            [p for _, p in cells],
            [job.order] * len(cells),
            [job.checks] * len(cells),
        )


def run_sweep(
    job: SweepJob, on_result: Optional[Callable[[IntegralityReport], None]] = None
) -> List[IntegralityReport]:
    """Collect every report, handing each one to on_result as soon as it is ready."""
    reports = []
    for report in iter_sweep(job):
        if on_result is not None:
            on_result(report)
        reports.append(report)
    return reports
