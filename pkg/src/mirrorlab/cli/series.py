"""
급수 계수 출력 관련 명령어 모듈
"""

import rich_click as click

from mirrorlab.cli.options import (
    RATIONAL,
    finish,
    format_option,
    handle_errors,
    order_option,
    params_option,
)
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.models.series import Series, format_rational, revert
from mirrorlab.core.services.hypergeom import (
    euler_identity_check,
    mirror_q,
    ratio_GF,
    series_F,
    series_G,
)
from mirrorlab.core.utils.output import Emitter

KINDS = ("F", "G", "ratio", "q", "z-of-q")


def compute_series(a: HGParams, kind: str, order: int) -> Series:
    """kind 별 급수 계산 (q 와 z-of-q 는 z^order 까지)"""
    if kind == "F":
        return series_F(a, order)
    if kind == "G":
        return series_G(a, order)
    if kind == "ratio":
        return ratio_GF(a, order)
    q = mirror_q(a, order)
    if kind == "q":
        return q
    return revert(q)


@click.command(name="series")
@params_option()
@click.option(
    "--kind", type=click.Choice(KINDS), default="q", show_default=True, help="Which series to print."
)
@order_option(10)
@format_option
@handle_errors
def series_cmd(a: HGParams, kind: str, order: int, fmt: str):
    """[bold green]F, G, G/F, q 또는 z(q)[/] 의 계수를 출력합니다."""
    series = compute_series(a, kind, order)
    with Emitter(fmt, title=f"{kind}({a})") as emitter:
        for k, c in enumerate(series.coeffs):
            emitter.emit({"params": str(a), "kind": kind, "k": k, "coeff": format_rational(c)})


@click.command(name="euler")
@click.option("--a", "a1", type=RATIONAL, required=True, help="First parameter a.")
@click.option("--b", "b1", type=RATIONAL, required=True, help="Second parameter b.")
@order_option(20)
@format_option
@handle_errors
def euler_cmd(a1, b1, order: int, fmt: str):
    """[bold green]오일러 변환[/] 2F1(a,b;1|z) = (1-z)^(1-a-b) 2F1(1-a,1-b;1|z) 을 검사합니다."""
    holds = euler_identity_check(a1, b1, order)
    with Emitter(fmt) as emitter:
        emitter.emit(
            {"a": format_rational(a1), "b": format_rational(b1), "order": order, "holds": holds}
        )
    finish(holds, None if holds else "Euler identity does not hold")

