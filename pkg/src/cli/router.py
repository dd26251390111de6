# _author: Coke
# _date: 2024/9/20 14:00
# _description: 命令行子命令: factor / verify / ge2 / gen / bench

import logging
import time
from typing import Annotated, Optional

import typer
from rich.console import Console
from rich.table import Table

from src.algebra.certify import dumps_certificate, verify_certificate
from src.algebra.exactmat import MatrixModel
from src.algebra.ge import GEDecompositionModel, ge2_decompose
from src.algebra.ipn import factor_singular
from src.config import settings
from src.constants import PROGRAM_NAME
from src.exceptions import status
from src.utils import write_bytes

from .constants import BENCH_COLUMNS, BENCH_TITLE, RING_HELP, STRATEGY_HELP
from .service import generate_matrix, parse_ring, parse_strategy, read_certificate, read_matrix, run_bench
from .types import GenSpec

app = typer.Typer(
    name=PROGRAM_NAME,
    help="欧几里得整环上奇异方阵的幂等分解",
    add_completion=False,
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)

InPath = Annotated[str, typer.Option("--in", help="输入文件, - 表示标准输入")]
OutPath = Annotated[str, typer.Option("--out", help="输出文件, - 表示标准输出")]
RingOption = Annotated[str, typer.Option("--ring", help=RING_HELP)]
SeedOption = Annotated[int, typer.Option("--seed", min=0, max=(1 << 64) - 1, help="splitmix64 种子")]
BoundOption = Annotated[int, typer.Option("--bound", min=1, help="元素绝对值上界 / 多项式次数上界")]


def _elapsed(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


@app.command()
def factor(in_path: InPath = "-", out_path: OutPath = "-") -> int:
    """
    读取奇异方阵 JSON, 输出幂等分解证书
    """
    start = time.perf_counter()
    matrix = read_matrix(in_path)
    certificate = factor_singular(matrix)
    write_bytes(out_path, dumps_certificate(certificate))

    logging.info(f"factor: {matrix.rows}x{matrix.cols} -> {len(certificate.factors)} factors in {_elapsed(start)} ms")
    return status.EXIT_0_OK


@app.command()
def verify(in_path: InPath = "-") -> int:
    """
    校验证书, 通过时退出码为 0, 不通过时为 1
    """
    start = time.perf_counter()
    certificate = read_certificate(in_path)
    verdict = verify_certificate(certificate)
    write_bytes("-", verdict.canonical_json())

    logging.info(f"verify: {len(certificate.factors)} factors, valid={verdict.valid} in {_elapsed(start)} ms")
    if not verdict.valid:
        typer.echo(f"Invalid: {verdict.reason}", err=True)
        return status.EXIT_1_INVALID
    return status.EXIT_0_OK


@app.command()
def ge2(
    in_path: InPath = "-",
    out_path: OutPath = "-",
    strategy: Annotated[str, typer.Option("--strategy", help=STRATEGY_HELP)] = "euclid",
) -> int:
    """
    把 2×2 可逆矩阵分解为 GE 因子 (初等矩阵、对角矩阵、对换)
    """
    matrix = read_matrix(in_path)
    chosen, shift = parse_strategy(strategy, matrix.ring)
    factors = ge2_decompose(matrix, chosen, shift)
    write_bytes(out_path, GEDecompositionModel.from_factors(matrix.ring, factors).canonical_json())

    logging.info(f"ge2: strategy {chosen.value} -> {len(factors)} factors")
    return status.EXIT_0_OK


@app.command()
def gen(
    ring: RingOption = "integer",
    size: Annotated[int, typer.Option("--size", min=1, help="矩阵阶数")] = 3,
    seed: SeedOption = 0,
    bound: BoundOption = 9,
    out_path: OutPath = "-",
) -> int:
    """
    生成可复现的随机奇异矩阵 (n×(n-1) 与 (n-1)×n 矩阵的乘积)
    """
    spec = GenSpec(ring=parse_ring(ring), size=size, seed=seed, bound=bound)
    matrix = generate_matrix(spec)
    write_bytes(out_path, MatrixModel.from_matrix(matrix).canonical_json())

    logging.info(f"gen: {spec.ring} n={spec.size} seed={spec.seed} bound={spec.bound}")
    return status.EXIT_0_OK


@app.command()
def bench(
    ring: RingOption = "integer",
    size: Annotated[int, typer.Option("--size", min=2, help="最大阶数, 从 2 开始逐个测试")] = 5,
    count: Annotated[Optional[int], typer.Option("--count", min=1, help="每个阶数的矩阵数量")] = None,
    seed: SeedOption = 0,
    bound: BoundOption = 9,
) -> int:
    """
    统计随机奇异矩阵的分解与校验耗时
    """
    rows = run_bench(parse_ring(ring), size, count or settings.BENCH_COUNT, seed, bound)

    table = Table(title=BENCH_TITLE)
    for column in BENCH_COLUMNS:
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(str(row.size), str(row.count), f"{row.mean_factors:.2f}", f"{row.mean_ms:.3f}")
    Console().print(table)
    return status.EXIT_0_OK
