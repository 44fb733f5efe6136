"""
φ-분할 분류, 생성함수, 기준 표와 삼각군 관련 명령어 모듈
"""

import math
from typing import Optional

import rich_click as click
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn

from mirrorlab.cli.options import (
    RATIONAL,
    current_settings,
    finish,
    format_option,
    handle_errors,
)
from mirrorlab.core.errors import PreconditionError
from mirrorlab.core.models.series import format_rational
from mirrorlab.core.services.classify import (
    TABLE1_SIZES,
    dwork_reduction_search,
    enumerate_candidates,
    enumerate_n2,
    genfun_coeffs,
    table1_diff,
    triangle_grid,
    triangle_type,
)
from mirrorlab.core.utils.file_io import console
from mirrorlab.core.utils.output import FORMATS, Emitter


def _index_text(m) -> str:
    return "inf" if m == math.inf else str(m)


@click.command(name="classify")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of parameters n.")
@click.option("--bound", type=click.IntRange(min=2), default=None, help="Denominator bound D for n=2, prime bound otherwise.")
@format_option
@handle_errors
def classify_cmd(n: int, bound: Optional[int], fmt: str):
    """[bold green]N-정수 후보[/] 를 φ-분할로 열거합니다."""
    settings = current_settings()
    with Emitter(fmt, title=f"n={n}") as emitter:
        if n == 2:
            bound = bound or settings.n2_denominator_bound
            console.print(f"[info]denominator bound D = {bound}[/]")
            for a1, a2 in enumerate_n2(bound):
                emitter.emit(
                    {
                        "n": 2,
                        "params": [format_rational(a1), format_rational(a2)],
                        "representatives": [format_rational(a1), format_rational(a2)],
                    }
                )
            return
        for entry in enumerate_candidates(n, bound or settings.classify_verify_bound):
            emitter.emit(entry.to_dict())


@click.command(name="genfun")
@click.option("--terms", type=click.IntRange(min=1), default=7, show_default=True, help="Number of coefficients T.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(FORMATS),
    default=None,
    help="Output format (default: one comma-separated line).",
)
@handle_errors
def genfun_cmd(terms: int, fmt: Optional[str]):
    """생성함수 [bold green]24x^2 - 1 + prod 1/(1 - x^phi(m))[/] 의 계수를 출력합니다."""
    coeffs = genfun_coeffs(terms)
    if fmt is None:
        click.echo(",".join(str(c) for c in coeffs))
        return
    with Emitter(fmt, title="genfun") as emitter:
        for k, c in enumerate(coeffs, start=1):
            emitter.emit({"k": k, "coeff": c})


@click.command(name="table1")
@click.argument("n", type=click.Choice([str(k) for k in sorted(TABLE1_SIZES)]))
@click.option("--bound", type=click.IntRange(min=12), default=None, help="Denominator bound D for n=2.")
@format_option
@handle_errors
def table1_cmd(n: str, bound: Optional[int], fmt: str):
    """열거 결과를 [bold green]기준 표[/] 픽스처와 비교합니다."""
    size = int(n)
    bound = bound or current_settings().n2_denominator_bound
    with Progress(
        SpinnerColumn(), TextColumn("[progress.description]{task.description}"), console=console, transient=True
    ) as progress:
        progress.add_task(description=f"[cyan]n={size} 열거 및 비교 중[/]", total=None)
        rows, diff = table1_diff(size, bound)
    with Emitter(fmt, title=f"table1, n={size}") as emitter:
        for row in rows:
            emitter.emit({"n": size, "params": [format_rational(v) for v in row]})

    if diff:
        console.print("\n".join(diff), markup=False, highlight=False)
    verdict = f"{len(rows)} rows, expected {TABLE1_SIZES[size]}, diff {'empty' if not diff else 'non-empty'}"
    console.print(Panel(verdict, title=f"table1 (n={size})", border_style="red" if diff else "green"))
    finish(not diff)


@click.command(name="triangle")
@click.option("--a", "pair", type=(RATIONAL, RATIONAL), default=None, help="Pair a1 a2 with a1 >= a2.")
@click.option("--mmax", type=click.IntRange(min=1), default=None, help="List the grid m1 <= m2 <= mmax.")
@format_option
@handle_errors
def triangle_cmd(pair, mmax: Optional[int], fmt: str):
    """[bold green]삼각군 타입[/] (m1, m2, inf) 을 계산하거나 격자를 나열합니다."""
    if (pair is None) == (mmax is None):
        raise PreconditionError("give exactly one of --a or --mmax")
    with Emitter(fmt) as emitter:
        if pair is not None:
            m1, m2 = triangle_type(*pair)
            emitter.emit(
                {
                    "a1": format_rational(pair[0]),
                    "a2": format_rational(pair[1]),
                    "m1": _index_text(m1),
                    "m2": _index_text(m2),
                }
            )
            return
        for m1, m2, a1, a2 in triangle_grid(mmax):
            emitter.emit(
                {
                    "m1": _index_text(m1),
                    "m2": _index_text(m2),
                    "a1": format_rational(a1),
                    "a2": format_rational(a2),
                }
            )


@click.command(name="reduce")
@click.option("--q", "q", type=click.Choice(["2", "3"]), required=True, help="Auxiliary prime q.")
@click.option("--bound", type=click.IntRange(min=2), default=None, help="Denominator bound.")
@format_option
@handle_errors
def reduce_cmd(q: str, bound: Optional[int], fmt: str):
    """delta_p(a_i) = q a_i - i 형태의 [bold green]n=4 해[/] 를 찾습니다."""
    bound = bound or current_settings().reduce_denominator_bound
    with Emitter(fmt) as emitter:
        for a1, a2 in dwork_reduction_search(int(q), bound):
            emitter.emit({"q": int(q), "a1": format_rational(a1), "a2": format_rational(a2)})
