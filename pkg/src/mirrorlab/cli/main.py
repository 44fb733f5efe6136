"""
mirrorlab CLI 메인 엔트리포인트
"""

import rich_click as click

from mirrorlab import __version__
from mirrorlab.cli.classify import classify_cmd, genfun_cmd, reduce_cmd, table1_cmd, triangle_cmd
from mirrorlab.cli.dwork import congruence_cmd, dwork_check, sweep_cmd, witness_cmd
from mirrorlab.cli.modular import nconst_cmd, suite_cmd, yukawa_cmd
from mirrorlab.cli.series import euler_cmd, series_cmd
from mirrorlab.core.models.config import Settings
from mirrorlab.core.utils.file_io import console

# rich-click 설정
click.rich_click.USE_RICH_MARKUP = True
click.rich_click.USE_MARKDOWN = False
click.rich_click.SHOW_ARGUMENTS = True
click.rich_click.GROUP_ARGUMENTS_OPTIONS = True
click.rich_click.STYLE_ERRORS_SUGGESTION = "magenta italic"
click.rich_click.ERRORS_SUGGESTION = "Try running the '--help' flag for more information."
click.rich_click.STYLE_OPTION = "bold cyan"
click.rich_click.STYLE_ARGUMENT = "bold green"
click.rich_click.STYLE_COMMAND = "bold"
click.rich_click.STYLE_SWITCH = "bold blue"


@click.group(invoke_without_command=True)
@click.option("--version", "-v", is_flag=True, help="Show version and exit")
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Settings YAML overlaying the packaged defaults.",
)
@click.pass_context
def main(ctx, version, config):
    """[bold cyan]mirrorlab[/] - 초기하 거울 사상의 정수성 실험 도구

    Dwork 합동식, N-정수성 분류와 인스탄톤 수를 계산하는 CLI 도구입니다.
    """
    if version:
        console.print(f"[bold cyan]mirrorlab[/] 버전 [green]{__version__}[/]")
        return

    settings = Settings.load(config)
    settings.apply_cache()
    ctx.obj = settings

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


# 명령어 추가
main.add_command(series_cmd)
main.add_command(euler_cmd)
main.add_command(dwork_check)
main.add_command(sweep_cmd)
main.add_command(congruence_cmd)
main.add_command(witness_cmd)
main.add_command(classify_cmd)
main.add_command(genfun_cmd)
main.add_command(table1_cmd)
main.add_command(triangle_cmd)
main.add_command(reduce_cmd)
main.add_command(nconst_cmd)
main.add_command(yukawa_cmd)
main.add_command(suite_cmd)


if __name__ == "__main__":
    main()
