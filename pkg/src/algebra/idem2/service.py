# _author: Coke
# _date: 2024/9/11 09:40
# _description: 2×2 奇异矩阵的幂等分解 (欧几里得整环)

import logging

from src.algebra.certify import FactorizationCertificate, build_certificate
from src.algebra.exactmat import (
    ExactMatrix,
    conjugate_all,
    det_bareiss,
    is_idempotent,
    left_null_row,
    squeeze_idempotents,
    unimodular_complete,
)
from src.algebra.exactmat.exceptions import NotSingular, ShapeMismatch
from src.algebra.rings import RingElement, divexact, ext_gcd
from src.constants import Algorithm

from .chain import coprime_factors
from .constants import TableCase
from .table import table_factor_2x2


def bottom_zero_factors(a: RingElement, b: RingElement) -> list[ExactMatrix]:
    """
    分解 [[a, b], [0, 0]] (a, b 不全为零)

    先提取 content d: [[a, b], [0, 0]] = [[d, 0], [0, 0]]·[[a', b'], [0, 0]],
    d ≠ 1 时第一个因子按情形 a 展开, 互素部分走欧几里得商序列

    :param a: 第一行第一个元素
    :param b: 第一行第二个元素
    :return: 幂等因子
    """
    d = ext_gcd(a, b).d
    factors: list[ExactMatrix] = []
    if not d.is_one():
        factors += table_factor_2x2(TableCase.A, d)
    factors += coprime_factors(divexact(a, d), divexact(b, d))
    return squeeze_idempotents(factors)


def factor_singular_2x2(matrix: ExactMatrix) -> FactorizationCertificate:
    """
    2×2 奇异矩阵分解为幂等矩阵的乘积

    零矩阵和幂等矩阵直接返回自身; 否则用左零化行补全的 P 把 A 共轭为 [[a, b], [0, 0]],
    分解后再把每个因子共轭回去

    :param matrix: 2×2 矩阵
    :return: 分解证书
    :raises NotSquare: 不是方阵时抛出
    :raises ShapeMismatch: 不是 2×2 矩阵时抛出
    :raises NotSingular: 行列式不为零时抛出
    """
    n = matrix.require_square()
    if n != 2:
        raise ShapeMismatch(f"需要 2×2 矩阵, 实际为 {n}×{n}")
    if not det_bareiss(matrix).is_zero():
        raise NotSingular()

    if matrix.is_zero():
        return build_certificate(matrix, [matrix], Algorithm.TRIVIAL)
    if is_idempotent(matrix):
        return build_certificate(matrix, [matrix], Algorithm.IDEMPOTENT)

    if matrix.row(1)[0].is_zero() and matrix.row(1)[1].is_zero():
        factors = bottom_zero_factors(*matrix.row(0))
    else:
        pair = unimodular_complete(left_null_row(matrix))
        core = pair.matrix @ matrix @ pair.inverse
        factors = conjugate_all(bottom_zero_factors(*core.row(0)), pair.inverse, pair.matrix)

    factors = squeeze_idempotents(factors)
    logging.debug(f"2x2 factorization produced {len(factors)} idempotents")
    return build_certificate(matrix, factors, Algorithm.IP2_EUCLID)
