# _author: Coke
# _date: 2024/9/20 15:10
# _description: 命令行主入口, 包含了日志初始化、错误处理及退出码映射

import functools
import logging
import logging.config
import os
import sys
from collections.abc import Sequence

import click
import typer

from src.cli import app
from src.config import settings
from src.constants import PROGRAM_NAME
from src.exceptions import DetailedException, ParseError, message, status
from src.utils import create_dir, join_path


@functools.cache
def setup_logging() -> None:
    """
    读取 logging.ini 初始化日志, 配置文件不存在时只输出到标准错误

    :return:
    """
    config_path = join_path("..", settings.LOG_CONFIG)
    if os.path.exists(config_path):
        create_dir("logs")
        logging.config.fileConfig(config_path, disable_existing_loggers=False)
    else:
        logging.basicConfig(stream=sys.stderr, format="%(asctime)s %(levelname)s %(message)s")
    logging.getLogger().setLevel(settings.LOGGING_LEVEL)


def _report(exc: DetailedException) -> None:
    """把主动抛出的异常写入标准错误, 调试环境下附带详细信息"""
    text = f"{exc.name}: {exc.DETAIL}"
    if isinstance(exc, ParseError) and exc.location:
        text += f" (at {exc.location})"
    typer.echo(text, err=True)
    if exc.ERRORS and settings.ENVIRONMENT.is_debug:
        typer.echo(f"{exc.ERRORS}", err=True)


def run_command(argv: Sequence[str]) -> int:
    """
    执行一条命令并返回退出码, 不调用 sys.exit

    :param argv: 不含程序名的参数列表
    :return: 0 成功, 1 证书无效, 2 代数前提不满足, 64 用法错误, 65 解析失败, 70 内部错误
    """
    command = typer.main.get_command(app)
    if not argv:
        with click.Context(command, info_name=PROGRAM_NAME) as ctx:
            typer.echo(command.get_help(ctx), err=True)
        return status.EXIT_64_USAGE

    try:
        result = command.main(args=list(argv), prog_name=PROGRAM_NAME, standalone_mode=False)
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return status.EXIT_64_USAGE
    except click.Abort:
        typer.echo(message.EXIT_64_USAGE, err=True)
        return status.EXIT_64_USAGE
    except DetailedException as exc:
        _report(exc)
        return exc.STATUS_CODE
    except Exception:
        logging.exception(f"{PROGRAM_NAME} {' '.join(argv)}")
        typer.echo(f"InternalError: {message.EXIT_70_INTERNAL}", err=True)
        return status.EXIT_70_INTERNAL

    return result if isinstance(result, int) else status.EXIT_0_OK


def main() -> None:
    setup_logging()
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
