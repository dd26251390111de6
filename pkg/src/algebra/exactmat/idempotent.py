# _author: Coke
# _date: 2024/9/7 10:30
# _description: 幂等判定及幂等矩阵的规范形

from typing import NamedTuple

from src.exceptions import InternalError

from .constants import ErrorCode
from .exceptions import NotIdempotent, NotInvertible
from .hermite import column_hnf, column_rank, unimodular_inverse
from .matrix import ExactMatrix, block_matrix


class CanonicalForm(NamedTuple):
    """C⁻¹·Y·C = diag(I_h, 0)"""

    basis: ExactMatrix
    basis_inverse: ExactMatrix
    rank: int


def is_idempotent(matrix: ExactMatrix) -> bool:
    """
    判断 F·F = F

    :param matrix: 方阵
    :return:
    :raises NotSquare: 不是方阵时抛出
    """
    matrix.require_square()
    return matrix @ matrix == matrix


def idempotent_canonical_form(matrix: ExactMatrix) -> CanonicalForm:
    """
    求可逆矩阵 C 使 C⁻¹·Y·C = diag(I_h, 0)

    Y 的列生成像空间, I - Y 的列生成核空间, 两者的列 Hermite 基拼成 C = [B1 | B0]

    :param matrix: 幂等矩阵 Y
    :return: C, C⁻¹ 及秩 h
    :raises NotIdempotent: Y 不是幂等矩阵时抛出
    :raises InternalError: 基矩阵不可逆时抛出
    """
    n = matrix.require_square()
    if not is_idempotent(matrix):
        raise NotIdempotent()

    image = column_hnf(matrix)
    kernel = column_hnf(ExactMatrix.identity(matrix.ring, n) - matrix)
    h, k = column_rank(image), column_rank(kernel)
    if h + k != n:
        raise InternalError(f"{ErrorCode.CANONICAL_FORM_FAILED}: 像空间秩 {h}, 核空间秩 {k}")

    blocks = []
    if h:
        blocks.append(image.result.select_columns(range(h)))
    if k:
        blocks.append(kernel.result.select_columns(range(k)))
    basis = block_matrix([blocks])
    try:
        inverse = unimodular_inverse(basis)
    except NotInvertible as exc:
        raise InternalError(ErrorCode.CANONICAL_FORM_FAILED) from exc
    return CanonicalForm(basis=basis, basis_inverse=inverse, rank=h)


def squeeze_idempotents(factors: list[ExactMatrix]) -> list[ExactMatrix]:
    """
    去掉单位矩阵因子并合并相邻的相同幂等因子 (E·E = E), 乘积不变

    :param factors: 幂等矩阵列表
    :return:
    """
    squeezed: list[ExactMatrix] = []
    for factor in factors:
        if factor.is_identity():
            continue
        if squeezed and squeezed[-1] == factor:
            continue
        squeezed.append(factor)
    return squeezed


def conjugate_all(factors: list[ExactMatrix], left: ExactMatrix, right: ExactMatrix) -> list[ExactMatrix]:
    """
    把每个因子 F 映射为 left·F·right, left·right = I 时幂等性与乘积关系保持不变

    :param factors: 矩阵列表
    :param left: 左乘矩阵
    :param right: 右乘矩阵
    :return:
    """
    if left.is_identity() and right.is_identity():
        return list(factors)
    return [left @ factor @ right for factor in factors]
