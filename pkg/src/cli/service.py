# _author: Coke
# _date: 2024/9/20 10:00
# _description: 命令行业务逻辑: 参数解析、矩阵读写、随机生成及 bench

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor

from pydantic import ValidationError

from src.algebra.certify import FactorizationCertificate, loads_certificate, verify_certificate
from src.algebra.exactmat import ExactMatrix, MatrixModel
from src.algebra.ge import Strategy
from src.algebra.ipn import factor_singular
from src.algebra.rings import (
    GaussInt,
    Integer,
    Rational,
    RingDescriptor,
    RingElement,
    RingKind,
    decode_element,
    element,
)
from src.config import ensure_size, settings
from src.exceptions import InternalError, ParseError, UsageError
from src.models import load_model
from src.utils import SplitMix64, read_text

from .constants import ErrorCode
from .types import BenchRow, GenSpec


def parse_ring(text: str) -> RingDescriptor:
    """
    解析 --ring 参数

    :param text: integer | rational | gauss | polymod:<p>
    :return:
    :raises UsageError: 无法识别或 p 不是素数时抛出
    """
    kind, _, modulus = text.partition(":")
    try:
        return RingDescriptor(kind=RingKind(kind), p=int(modulus) if modulus else None)
    except (ValueError, ValidationError) as exc:
        raise UsageError(f"{ErrorCode.BAD_RING}: {text}") from exc


def parse_strategy(text: str, ring: RingDescriptor) -> tuple[Strategy, RingElement | None]:
    """
    解析 --strategy 参数, unit-shift 的平移量使用元素编码 (高斯整数与多项式写作 JSON 数组)

    :param text: euclid | unit-shift:<x> | continuant
    :param ring: 矩阵所在的环
    :return: 策略及平移量
    :raises UsageError: 策略或平移量不合法时抛出
    """
    name, _, shift = text.partition(":")
    try:
        strategy = Strategy(name)
    except ValueError as exc:
        raise UsageError(f"{ErrorCode.BAD_STRATEGY}: {text}") from exc

    if strategy is not Strategy.UNIT_SHIFT:
        if shift:
            raise UsageError(f"{ErrorCode.BAD_STRATEGY}: {text}")
        return strategy, None

    code = shift
    if shift.startswith("["):
        try:
            code = json.loads(shift)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{ErrorCode.BAD_SHIFT}: {shift}") from exc
    try:
        return strategy, decode_element(ring, code, "strategy")
    except ParseError as exc:
        raise UsageError(f"{ErrorCode.BAD_SHIFT}: {shift}") from exc


def read_matrix(path: str) -> ExactMatrix:
    """
    读取矩阵 JSON 文件

    :param path: 文件路径, "-" 表示标准输入
    :return:
    :raises ParseError: JSON 或元素编码不合法时抛出
    :raises SizeLimitExceeded: 阶数超过 IDEMFACT_MAX_SIZE 时抛出
    """
    model = load_model(MatrixModel, read_text(path))
    ensure_size(max(model.rows, model.cols))
    return model.to_matrix()


def read_certificate(path: str) -> FactorizationCertificate:
    """
    读取证书 JSON 文件

    :param path: 文件路径, "-" 表示标准输入
    :return:
    :raises ParseError: 证书不合法时抛出
    :raises SizeLimitExceeded: 阶数超过 IDEMFACT_MAX_SIZE 时抛出
    """
    certificate = loads_certificate(read_text(path))
    ensure_size(max(certificate.target.rows, certificate.target.cols))
    return certificate


def draw_element(rng: SplitMix64, ring: RingDescriptor, bound: int) -> RingElement:
    """
    从生成器中抽取一个元素

    整数与有理数取 (next mod (2m+1)) - m; 高斯整数依次抽取实部与虚部;
    多项式依次抽取 m+1 个 [0, p) 内的系数 (从低次到高次)

    :param rng: splitmix64 生成器
    :param ring: 环描述
    :param bound: 上界 m
    :return:
    """
    match ring.kind:
        case RingKind.INTEGER:
            return Integer(rng.symmetric(bound))
        case RingKind.RATIONAL:
            return Rational(rng.symmetric(bound))
        case RingKind.GAUSS:
            re = rng.symmetric(bound)
            return GaussInt(re, rng.symmetric(bound))
        case _:
            p = ring.p or 0
            return element(ring, [rng.below(p) for _ in range(bound + 1)])


def _draw_matrix(rng: SplitMix64, ring: RingDescriptor, rows: int, cols: int, bound: int) -> ExactMatrix:
    return ExactMatrix(ring, [[draw_element(rng, ring, bound) for _ in range(cols)] for _ in range(rows)], check=False)


def draw_singular(rng: SplitMix64, ring: RingDescriptor, n: int, bound: int) -> ExactMatrix:
    """
    L·R, L 为 n×(n-1), R 为 (n-1)×n, 均按行优先抽取; n = 1 时为 1×1 零矩阵

    :param rng: splitmix64 生成器
    :param ring: 环描述
    :param n: 阶数
    :param bound: 上界 m
    :return: 奇异矩阵
    """
    if n == 1:
        return ExactMatrix.zero(ring, 1)
    left = _draw_matrix(rng, ring, n, n - 1, bound)
    right = _draw_matrix(rng, ring, n - 1, n, bound)
    return left @ right


def generate_matrix(spec: GenSpec) -> ExactMatrix:
    """
    按生成参数得到奇异矩阵

    :param spec: 生成参数
    :return:
    :raises SizeLimitExceeded: 阶数超过 IDEMFACT_MAX_SIZE 时抛出
    """
    ensure_size(spec.size)
    return draw_singular(SplitMix64(spec.seed), spec.ring, spec.size, spec.bound)


def _verify_timed(certificate: FactorizationCertificate) -> tuple[bool, float]:
    start = time.perf_counter()
    verdict = verify_certificate(certificate)
    return verdict.valid, (time.perf_counter() - start) * 1000


def run_bench(ring: RingDescriptor, size: int, count: int, seed: int, bound: int) -> list[BenchRow]:
    """
    对阶数 2..size 各生成 count 个矩阵, 统计分解与校验的耗时

    阶数 n 的矩阵来自种子为 seed + n 的生成器, 校验在 IDEMFACT_BENCH_WORKERS 个线程中并发执行

    :param ring: 环描述
    :param size: 最大阶数
    :param count: 每个阶数的矩阵数量
    :param seed: 种子
    :param bound: 元素上界
    :return: 按阶数排列的统计结果
    :raises InternalError: 有证书未通过校验时抛出
    """
    ensure_size(size)
    rows: list[BenchRow] = []
    with ThreadPoolExecutor(max_workers=settings.BENCH_WORKERS) as executor:
        for n in range(2, size + 1):
            rng = SplitMix64(seed + n)
            certificates: list[FactorizationCertificate] = []
            factor_ms: list[float] = []
            for _ in range(count):
                matrix = draw_singular(rng, ring, n, bound)
                start = time.perf_counter()
                certificates.append(factor_singular(matrix))
                factor_ms.append((time.perf_counter() - start) * 1000)

            results = list(executor.map(_verify_timed, certificates))
            if not all(valid for valid, _ in results):
                raise InternalError(f"{ErrorCode.BENCH_INVALID}: n = {n}")

            total_ms = [f + v for f, (_, v) in zip(factor_ms, results)]
            row = BenchRow(
                size=n,
                count=count,
                mean_factors=sum(len(c.factors) for c in certificates) / count,
                mean_ms=sum(total_ms) / count,
            )
            logging.info(f"bench n={n}: {row.mean_factors:.2f} factors, {row.mean_ms:.3f} ms")
            rows.append(row)
    return rows
