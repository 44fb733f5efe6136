"""
공통 CLI 옵션, 파라미터 타입과 오류 처리
"""

import functools
from typing import Callable, Optional

import rich_click as click

from mirrorlab.core.errors import (
    ClassificationError,
    FormViolation,
    InvalidParams,
    MirrorLabError,
)
from mirrorlab.core.models.config import Settings
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.models.series import parse_rational
from mirrorlab.core.utils.file_io import console
from mirrorlab.core.utils.output import FORMATS

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class ParamsType(click.ParamType):
    """쉼표로 구분된 유리수 목록 → HGParams"""

    name = "rationals"

    def convert(self, value, param, ctx):
        if isinstance(value, HGParams):
            return value
        try:
            return HGParams.parse(value)
        except InvalidParams as e:
            self.fail(str(e), param, ctx)


class RationalType(click.ParamType):
    """p/q 형식의 유리수"""

    name = "rational"

    def convert(self, value, param, ctx):
        try:
            return parse_rational(str(value))
        except InvalidParams as e:
            self.fail(str(e), param, ctx)


PARAMS = ParamsType()
RATIONAL = RationalType()


def format_option(func: Callable) -> Callable:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(FORMATS),
        default="json",
        show_default=True,
        help="Output format.",
    )(func)


def order_option(default: int, help_text: str = "Truncation order M.") -> Callable:
    return click.option(
        "--order", "-m", type=click.IntRange(min=1), default=default, show_default=True, help=help_text
    )


def jobs_option(func: Callable) -> Callable:
    return click.option(
        "--jobs", "-j", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes."
    )(func)


def params_option(required: bool = True, multiple: bool = False) -> Callable:
    return click.option(
        "--a",
        "a",
        type=PARAMS,
        required=required,
        multiple=multiple,
        help="Parameters, e.g. 1/5,2/5,3/5,4/5.",
    )


def handle_errors(func: Callable) -> Callable:
    """MirrorLabError 를 종료 코드로 변환 (형식 위반과 분류 실패는 1, 나머지는 2)"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (FormViolation, ClassificationError) as e:
            console.print(f"[error]검사 실패:[/] {e}")
            raise SystemExit(EXIT_FAILURE)
        except MirrorLabError as e:
            console.print(f"[error]입력 오류:[/] {e}")
            raise SystemExit(EXIT_USAGE)

    return wrapper


def finish(ok: bool, message: Optional[str] = None) -> None:
    """검사 결과에 따라 종료 (실패 시 1)"""
    if ok:
        if message:
            console.print(f"[success]{message}[/]")
        return
    if message:
        console.print(f"[error]{message}[/]")
    raise SystemExit(EXIT_FAILURE)


def current_settings() -> Settings:
    """루트 컨텍스트의 설정 (없으면 패키지 기본값)"""
    ctx = click.get_current_context(silent=True)
    root = ctx.find_root() if ctx is not None else None
    if root is not None and isinstance(root.obj, Settings):
        return root.obj
    return Settings.load()
