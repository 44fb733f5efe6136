"""
상수 N, 유카와 결합과 정수성 스위트 관련 명령어 모듈
"""

from pathlib import Path
from typing import Optional

import rich_click as click
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn

from mirrorlab.cli.options import (
    current_settings,
    finish,
    format_option,
    handle_errors,
    jobs_option,
    order_option,
    params_option,
)
from mirrorlab.core.errors import PreconditionError
from mirrorlab.core.models.config import CYCase, default_cases, load_cases
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.models.series import format_rational
from mirrorlab.core.services.modular import (
    case_n,
    instanton_numbers,
    n_constant_report,
    suite,
    yukawa,
)
from mirrorlab.core.utils.file_io import console
from mirrorlab.core.utils.output import Emitter


@click.command(name="nconst")
@params_option()
@order_option(30, "Order of the F(Nz) integrality check.")
@format_option
@handle_errors
def nconst_cmd(a: HGParams, order: int, fmt: str):
    """F(Nz) 를 정수 계수로 만드는 [bold green]상수 N[/] 을 계산합니다."""
    report = n_constant_report(a, order)
    with Emitter(fmt) as emitter:
        emitter.emit(report.to_dict())
    if report.reducible_by:
        console.print(
            f"[warning]N/p 로도 충분: p = {', '.join(str(p) for p in report.reducible_by)}[/]"
        )
    finish(report.sufficient, None if report.sufficient else f"F({report.N}z) is not integral")


def _resolve_case(
    a: Optional[HGParams], case_file: Optional[str], n0: Optional[int], big_n: Optional[int]
) -> CYCase:
    if (a is None) == (case_file is None):
        raise PreconditionError("give exactly one of --a or --case-file")
    if case_file is not None:
        cases = load_cases(case_file)
        if len(cases) != 1:
            raise PreconditionError(f"{case_file} holds {len(cases)} cases; yukawa takes one")
        case = cases[0]
    else:
        known = {c.params: c for c in default_cases()}
        case = known.get(a) or CYCase(label=str(a), params=a)
    if n0 is not None:
        case.n0 = n0
    if big_n is not None:
        case.N = big_n
    return case


@click.command(name="yukawa")
@params_option(required=False)
@click.option("--case-file", type=click.Path(exists=True, dir_okay=False), default=None, help="Case file (YAML/JSON).")
@click.option("--n0", type=click.IntRange(min=1), default=None, help="Yukawa normalization n0.")
@click.option("--N", "big_n", type=click.IntRange(min=1), default=None, help="Rescaling constant (default: auto).")
@order_option(None, "Truncation order in q.")
@click.option("--dmax", type=click.IntRange(min=1), default=None, help="Number of instanton numbers.")
@format_option
@handle_errors
def yukawa_cmd(
    a: Optional[HGParams],
    case_file: Optional[str],
    n0: Optional[int],
    big_n: Optional[int],
    order: Optional[int],
    dmax: Optional[int],
    fmt: str,
):
    """[bold green]유카와 결합[/] 과 인스탄톤 수 n_d 를 계산합니다."""
    settings = current_settings()
    case = _resolve_case(a, case_file, n0, big_n)
    dmax = dmax or settings.instanton_depth
    order = order or max(settings.yukawa_order, dmax)
    if order < dmax:
        raise PreconditionError(f"--order {order} is below --dmax {dmax}")
    y = yukawa(case, order)
    instantons = instanton_numbers(y, dmax)
    with Emitter(fmt) as emitter:
        emitter.emit(
            {
                "case": case.label,
                "params": case.params.to_strings(),
                "N": case_n(case),
                "n0": case.n0,
                "yukawa": y.to_strings(),
                "instantons": [format_rational(n) for n in instantons],
            }
        )


@click.command(name="suite")
@click.option("--cases", "cases_file", type=click.Path(exists=True, dir_okay=False), default=None, help="Case file (default: the packaged 14 cases).")
@order_option(None, "Order in q of the integrality checks.")
@click.option("--dmax", type=click.IntRange(min=1), default=None, help="Number of instanton numbers.")
@jobs_option
@format_option
@handle_errors
def suite_cmd(
    cases_file: Optional[str], order: Optional[int], dmax: Optional[int], jobs: int, fmt: str
):
    """모든 케이스에 대해 [bold green]u_i(z(q)) 정수성[/] 과 인스탄톤 수를 계산합니다."""
    settings = current_settings()
    cases = load_cases(Path(cases_file)) if cases_file else default_cases()
    order = order or settings.suite_order_q
    dmax = dmax or settings.instanton_depth

    with Progress(
        SpinnerColumn(), TextColumn("[progress.description]{task.description}"), console=console, transient=True
    ) as progress:
        progress.add_task(description=f"[cyan]{len(cases)}개 케이스 계산 중[/]", total=None)
        reports = suite(cases, order_q=order, dmax=dmax, jobs=jobs)

    with Emitter(fmt, title="suite") as emitter:
        for report in reports:
            emitter.emit(report.to_dict())

    bad = [r.case.label for r in reports if not r.integrality.integral]
    console.print(
        Panel(
            f"{len(reports) - len(bad)}/{len(reports)} cases integral to q^{order}",
            title="Suite",
            border_style="red" if bad else "green",
        )
    )
    finish(not bad, f"non-integral: {', '.join(bad)}" if bad else None)
