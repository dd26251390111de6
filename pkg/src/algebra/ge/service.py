# _author: Coke
# _date: 2024/9/13 14:20
# _description: 欧几里得整环上的三角化与 2×2 可逆矩阵的 GE₂ 分解

import logging
from collections.abc import Sequence

from src.algebra.exactmat import ExactMatrix, det_bareiss, mat_product, unimodular_inverse
from src.algebra.exactmat.exceptions import NotInvertible, ShapeMismatch
from src.algebra.idem2 import euclid_rseq
from src.algebra.rings import RingDescriptor, RingElement, canonical_associate, one

from .constants import ErrorCode, Strategy
from .exceptions import BadStrategy
from .types import DiagUnits, Elementary, GEFactor, Swap


def realize(factors: Sequence[GEFactor], ring: RingDescriptor, n: int) -> ExactMatrix:
    """
    GE 因子的有序乘积

    :param factors: GE 因子
    :param ring: 环描述
    :param n: 阶数
    :return:
    """
    return mat_product(ring, n, [factor.to_matrix(ring, n) for factor in factors])


def _is_trivial(factor: GEFactor) -> bool:
    match factor:
        case Elementary():
            return factor.c.is_zero()
        case DiagUnits():
            return factor.is_identity()
    return False


def _compact(factors: list[GEFactor]) -> list[GEFactor]:
    """去掉单位矩阵因子"""
    return [factor for factor in factors if not _is_trivial(factor)]


def continuant_factors(r: RingElement) -> list[GEFactor]:
    """
    [[r, 1], [1, 0]] = E₁₂(r)·E₂₁(1)·diag(1, -1)·E₁₂(1)·E₂₁(-1)

    :param r: 环中任意元素
    :return: 五个 GE 因子, r = 0 时省略 E₁₂(0)
    """
    e = one(r.ring)
    return _compact(
        [
            Elementary(i=1, j=2, c=r),
            Elementary(i=2, j=1, c=e),
            DiagUnits.of(e, -e),
            Elementary(i=1, j=2, c=e),
            Elementary(i=2, j=1, c=-e),
        ]
    )


def triangularize(matrix: ExactMatrix) -> tuple[list[GEFactor], ExactMatrix]:
    """
    用左乘的 GE 因子把方阵化为上三角矩阵

    逐列处理: 主元为零时与下方第一个非零行对换; 之后主元行与下方每一行交替做带余除法的消去,
    直到下方元素为零. 主元能被下方元素整除时商减一, 使主元变为下方元素而不是零;
    最后用对角因子把主元化为规范相伴元

    :param matrix: 方阵
    :return: (F₁, …, F_l), D, 满足 F_l⋯F₁·matrix = D
    """
    n = matrix.require_square()
    e = one(matrix.ring)
    rows = matrix.to_lists()
    factors: list[GEFactor] = []

    def swap(k: int, i: int) -> None:
        rows[k], rows[i] = rows[i], rows[k]
        factors.append(Swap(i=k + 1, j=i + 1))

    def transvect(target: int, source: int, q: RingElement) -> None:
        """row_target -= q·row_source"""
        if q.is_zero():
            return
        rows[target] = [a - q * b for a, b in zip(rows[target], rows[source])]
        factors.append(Elementary(i=target + 1, j=source + 1, c=-q))

    for k in range(n):
        if rows[k][k].is_zero():
            lower = next((i for i in range(k + 1, n) if not rows[i][k].is_zero()), None)
            if lower is None:
                continue
            swap(k, lower)
        for i in range(k + 1, n):
            while not rows[i][k].is_zero():
                transvect(i, k, divmod(rows[i][k], rows[k][k])[0])
                if rows[i][k].is_zero():
                    break
                q, r = divmod(rows[k][k], rows[i][k])
                transvect(k, i, q - e if r.is_zero() else q)

    units = [canonical_associate(rows[k][k])[0].inverse() for k in range(n)]
    if not all(u.is_one() for u in units):
        factors.append(DiagUnits(units=tuple(units)))
        rows = [[u * v for v in row] for u, row in zip(units, rows)]

    logging.debug(f"triangularized {n}x{n} matrix with {len(factors)} GE factors")
    return factors, ExactMatrix(matrix.ring, rows, check=False)


def _decompose_euclid(matrix: ExactMatrix) -> list[GEFactor]:
    factors, upper = triangularize(matrix)
    result: list[GEFactor] = [factor.inverse() for factor in factors]
    if not upper[0, 1].is_zero():
        result.append(Elementary(i=1, j=2, c=upper[0, 1]))
    return result


def _decompose_unit_shift(matrix: ExactMatrix, x: RingElement) -> list[GEFactor]:
    """A = diag(u, v)·E₂₁(v⁻¹(c + dx))·M(u⁻¹b)·M(-x), u = a + bx"""
    (a, b), (c, d) = matrix.entries
    u = a + b * x
    u_inv = u.inverse()
    v = d - (c + d * x) * u_inv * b
    factors: list[GEFactor] = [
        DiagUnits.of(u, v),
        Elementary(i=2, j=1, c=v.inverse() * (c + d * x)),
    ]
    factors += continuant_factors(u_inv * b)
    factors += continuant_factors(-x)
    return factors


def _decompose_continuant(matrix: ExactMatrix) -> list[GEFactor]:
    """
    A = E₂₁(c')·diag(1, d')·U, U = M(r_top)⋯M(r₀)·S 的第一行等于 A 的第一行,
    S = [[0, -1], [1, 0]] = Swap(1, 2)·diag(1, -1)
    """
    (a, b), _ = matrix.entries
    rseq = euclid_rseq(a, b)
    e = one(matrix.ring)

    transform: list[GEFactor] = []
    for r in reversed(rseq.coeffs):
        transform += continuant_factors(r)
    transform += [Swap(i=1, j=2), DiagUnits.of(e, -e)]

    reduced = matrix @ unimodular_inverse(realize(transform, matrix.ring, 2))
    head: list[GEFactor] = [Elementary(i=2, j=1, c=reduced[1, 0]), DiagUnits.of(e, reduced[1, 1])]
    return head + transform


def ge2_decompose(
    matrix: ExactMatrix, strategy: Strategy | str = Strategy.EUCLID, x: RingElement | None = None
) -> list[GEFactor]:
    """
    2×2 可逆矩阵分解为 GE 因子的乘积

    :param matrix: 2×2 矩阵, 行列式可逆
    :param strategy: euclid / unit-shift / continuant
    :param x: unit-shift 策略的平移量, 要求 a + bx 可逆
    :return: 有序 GE 因子, 乘积等于 matrix, 单位矩阵返回空列表
    :raises NotInvertible: 行列式不可逆时抛出
    :raises NotAUnit: a + bx 不可逆时抛出
    :raises BadStrategy: 策略未知或缺少平移量时抛出
    """
    n = matrix.require_square()
    if n != 2:
        raise ShapeMismatch(f"需要 2×2 矩阵, 实际为 {n}×{n}")
    if not det_bareiss(matrix).is_unit():
        raise NotInvertible()

    try:
        strategy = Strategy(strategy)
    except ValueError as exc:
        raise BadStrategy(f"{ErrorCode.BAD_STRATEGY}: {strategy}") from exc

    if matrix.is_identity():
        return []

    match strategy:
        case Strategy.EUCLID:
            factors = _decompose_euclid(matrix)
        case Strategy.UNIT_SHIFT:
            if x is None:
                raise BadStrategy(ErrorCode.MISSING_SHIFT)
            factors = _decompose_unit_shift(matrix, x)
        case _:
            factors = _decompose_continuant(matrix)

    factors = _compact(factors)
    logging.debug(f"ge2 {strategy.value} produced {len(factors)} factors")
    return factors
