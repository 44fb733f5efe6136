"""
Dwork 연산자와 p-정수성 검사 관련 명령어 모듈
"""

from typing import Optional, Tuple

import rich_click as click
from rich.panel import Panel
from rich.progress import BarColumn, Progress, TextColumn

from mirrorlab.cli.options import (
    RATIONAL,
    current_settings,
    finish,
    format_option,
    handle_errors,
    jobs_option,
    order_option,
    params_option,
)
from mirrorlab.core.errors import BadPrime
from mirrorlab.core.models.config import SweepJob, parse_checks
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.models.series import format_rational
from mirrorlab.core.services.dwork import (
    CHECKS,
    DEFAULT_CHECKS,
    IntegralityReport,
    congruence_is_equality,
    dwork_params,
    dwork_structure_witness,
    dwork_theorem_check,
    fast_congruence,
    integrality_report,
)
from mirrorlab.core.services.sweep import run_sweep, sweep_cells
from mirrorlab.core.utils.file_io import console
from mirrorlab.core.utils.output import Emitter

CHECKS_HELP = f"Comma-separated checks ({', '.join(CHECKS)})."


def _checks_option(func):
    return click.option(
        "--checks",
        multiple=True,
        default=DEFAULT_CHECKS,
        show_default=True,
        help=CHECKS_HELP,
    )(func)


@click.command(name="dwork-check")
@params_option()
@click.option("--p", "p", type=click.IntRange(min=2), required=True, help="Good prime p.")
@order_option(60)
@_checks_option
@format_option
@handle_errors
def dwork_check(a: HGParams, p: int, order: int, checks: Tuple[str, ...], fmt: str):
    """[bold green]조건 검사와 p-정수성[/] 을 하나의 (a, p) 에 대해 실행합니다."""
    if not a.is_good_prime(p):
        raise BadPrime(f"p={p} divides a parameter denominator of {a}")
    report = integrality_report(a, p, order, parse_checks(checks))
    with Emitter(fmt) as emitter:
        emitter.emit(report.to_dict())
    ok = not report.failed and report.consistent
    finish(ok, None if ok else f"non-integrality found for a={a}, p={p}")


@click.command(name="sweep")
@params_option(multiple=True)
@click.option("--pmax", type=click.IntRange(min=2), default=None, help="Prime bound P.")
@order_option(None)
@_checks_option
@jobs_option
@format_option
@handle_errors
def sweep_cmd(
    a: Tuple[HGParams, ...],
    pmax: Optional[int],
    order: Optional[int],
    checks: Tuple[str, ...],
    jobs: int,
    fmt: str,
):
    """모든 good prime p <= P 에 대해 [bold green](a, p) 스윕[/] 을 실행합니다.

    결과는 셀마다 한 줄씩 바로 출력됩니다.
    """
    settings = current_settings()
    job = SweepJob(
        params=list(a),
        pmax=pmax or settings.sweep_pmax,
        order=order or settings.sweep_order,
        checks=parse_checks(checks),
        jobs=jobs,
    )
    total = len(sweep_cells(job))
    with Emitter(fmt, title="sweep") as emitter, Progress(
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("{task.completed}/{task.total}"),
        console=console,
        transient=True,
    ) as progress:
        task = progress.add_task("[cyan]스윕 진행 중[/]", total=total)

        def on_result(report: IntegralityReport) -> None:
            emitter.emit(report.to_dict())
            progress.advance(task)

        reports = run_sweep(job, on_result=on_result)

    failures = sum(1 for r in reports if r.failed or not r.consistent)

    console.print(
        Panel(
            f"{total - failures}/{total} cells without a non-integrality witness",
            title="Sweep",
            border_style="green" if not failures else "red",
        )
    )
    finish(failures == 0)


@click.command(name="congruence")
@params_option()
@click.option("--p", "p", type=click.IntRange(min=2), required=True, help="Good prime p.")
@order_option(None, "Truncation order (default 3p).")
@format_option
@handle_errors
def congruence_cmd(a: HGParams, p: int, order: Optional[int], fmt: str):
    """[bold green]G/F 합동식[/]: 정리 형태 검사와 빠른 합동식 검사."""
    if not a.is_good_prime(p):
        raise BadPrime(f"p={p} divides a parameter denominator of {a}")
    order = order or 3 * p
    theorem_failure = dwork_theorem_check(a, p, order)
    fast_failure = fast_congruence(a, p, order)
    record = {
        "params": str(a),
        "prime": p,
        "order": order,
        "delta_params": str(dwork_params(a, p)),
        "theorem_failure": theorem_failure,
        "fast_congruence_failure": fast_failure,
        "fast_congruence_equal": congruence_is_equality(a, p, order),
    }
    with Emitter(fmt) as emitter:
        emitter.emit(record)
    finish(theorem_failure is None and fast_failure is None)


@click.command(name="witness")
@click.option("--x", "x", type=RATIONAL, required=True, help="Rational x in (0, 1).")
@click.option("--item", type=click.IntRange(1, 4), required=True, help="Structure item 1-4.")
@click.option("--q", "q", type=click.IntRange(min=2), default=None, help="Auxiliary prime q.")
@click.option("--m", "m", type=click.IntRange(min=0), default=0, show_default=True, help="Item 4 exponent.")
@click.option("--bound", type=click.IntRange(min=2), default=10_000, show_default=True, help="Prime search bound.")
@format_option
@handle_errors
def witness_cmd(x, item: int, q: Optional[int], m: int, bound: int, fmt: str):
    """소수 클래스에서 [bold green]delta_p(x) 의 형태[/] 를 확인합니다."""
    p, delta = dwork_structure_witness(x, item, q=q, m=m, bound=bound)
    with Emitter(fmt) as emitter:
        emitter.emit(
            {
                "x": format_rational(x),
                "item": item,
                "q": q,
                "prime": p,
                "delta": format_rational(delta),
            }
        )
