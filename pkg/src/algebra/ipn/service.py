# _author: Coke
# _date: 2024/9/18 10:30
# _description: 欧几里得整环上 n×n 奇异矩阵分解为幂等矩阵的乘积 (对阶数归纳)

import logging

from src.algebra.certify import FactorizationCertificate, build_certificate
from src.algebra.exactmat import (
    ExactMatrix,
    block_matrix,
    conjugate_all,
    det_bareiss,
    diag_blocks,
    idempotent_canonical_form,
    is_idempotent,
    left_null_row,
    permutation_matrix,
    squeeze_idempotents,
    unimodular_complete,
)
from src.algebra.exactmat.exceptions import NotSingular
from src.algebra.ge import Elementary, embed_ge_as_idempotents, realize, triangularize
from src.algebra.idem2 import factor_singular_2x2
from src.algebra.rings import zero
from src.constants import Algorithm
from src.exceptions import InternalError

from .constants import ErrorCode
from .types import BorderedForm


def bordered_form(matrix: ExactMatrix) -> BorderedForm:
    """
    把奇异方阵共轭为最后一行为零的矩阵

    P 的最后一行是左零化行 u, 因此 P·A 的最后一行为零; 最后一行已为零时 P = I

    :param matrix: 奇异方阵
    :return:
    :raises NotSingular: 矩阵非奇异时抛出
    """
    n = matrix.require_square()
    if all(v.is_zero() for v in matrix.row(n - 1)):
        identity = ExactMatrix.identity(matrix.ring, n)
        return BorderedForm(P=identity, P_inv=identity, core=matrix)

    pair = unimodular_complete(left_null_row(matrix))
    return BorderedForm(P=pair.matrix, P_inv=pair.inverse, core=pair.matrix @ matrix @ pair.inverse)


def _identity(matrix: ExactMatrix, n: int) -> ExactMatrix:
    return ExactMatrix.identity(matrix.ring, n)


def _factor_list(matrix: ExactMatrix) -> list[ExactMatrix]:
    """任意阶奇异矩阵的幂等因子"""
    n = matrix.rows
    if n == 1:
        if not matrix.is_zero():
            raise NotSingular()
        return [matrix]
    if n == 2:
        return factor_singular_2x2(matrix).factors
    if matrix.is_zero() or is_idempotent(matrix):
        return [matrix]

    form = bordered_form(matrix)
    block, column = form.block, form.column
    bottom = [ExactMatrix.zero(matrix.ring, 1, n - 1), ExactMatrix.zero(matrix.ring, 1)]
    head = block_matrix([[_identity(matrix, n - 1), column], bottom])

    if det_bareiss(block).is_zero():
        logging.debug(f"{n}x{n}: leading block singular, recursing on it")
        one_block = _identity(matrix, 1)
        factors = [head] + [diag_blocks(factor, one_block) for factor in _factor_list(block)]
    else:
        logging.debug(f"{n}x{n}: leading block nonsingular, reducing bordered form")
        factors = _reduce(form.core, block)

    return squeeze_idempotents(conjugate_all(factors, form.P_inv, form.P))


def _trim_identities(factors: list[ExactMatrix]) -> list[ExactMatrix]:
    trimmed = list(factors)
    while trimmed and trimmed[-1].is_identity():
        trimmed.pop()
    return trimmed


def reduce_bordered(core: ExactMatrix, block: ExactMatrix, column: ExactMatrix) -> list[ExactMatrix]:
    """
    分解 core = [[B, C], [0, 0]], B 非奇异

    1. 三角化 F_l⋯F₁·B = D, 依次给出 diag(F_k⁻¹, 0) 的幂等嵌入;
    2. 余下 R = [[D, F_l⋯F₁·C], [0, 0]] = [[d₁, top], [0, D₁]], 对 D₁ 递归得到 Y₁…Y_m,
       给出 diag(1, Y_j);
    3. W = [[d₁, top], [0, Y_m]] 经 G = diag(1, C_Y)·Π 共轭为单位块在前的形式,
       用嵌入的初等矩阵消去第 h+1 行的前 h 个元素, 再对右下角 (n-h) 阶块递归

    :param core: 最后一行为零的 n 阶矩阵
    :param block: core 左上角的 n-1 阶非奇异块 B
    :param column: core 最后一列的前 n-1 个元素 C
    :return: 幂等因子, 乘积为 core
    :raises InternalError: 递归结果与 B 非奇异矛盾时抛出
    """
    if is_idempotent(core):
        return [core]
    return _reduce(core, block)


def _reduce(core: ExactMatrix, block: ExactMatrix) -> list[ExactMatrix]:
    ring, n = core.ring, core.rows
    ge_factors, _ = triangularize(block)
    factors: list[ExactMatrix] = []
    for factor in ge_factors:
        factors += embed_ge_as_idempotents(factor.inverse(), n, ring)

    reducer = realize(list(reversed(ge_factors)), ring, n - 1)
    residual = diag_blocks(reducer, _identity(core, 1)) @ core
    d1, top, tail = residual[0, 0], residual.submatrix(0, 1, 1, n), residual.submatrix(1, n, 1, n)

    tail_factors = _trim_identities(_factor_list(tail))
    if not tail_factors:
        raise InternalError(ErrorCode.EMPTY_FACTORS)
    last = tail_factors[-1]
    if last.is_zero():
        raise InternalError(ErrorCode.ZERO_TAIL)
    one_block = _identity(core, 1)
    factors += [diag_blocks(one_block, factor) for factor in tail_factors]

    canonical = idempotent_canonical_form(last)
    h = canonical.rank
    if not 1 <= h <= n - 2:
        raise InternalError(f"{ErrorCode.RANK_OUT_OF_RANGE}: h = {h}")

    sigma = list(range(1, h + 1)) + [0] + list(range(h + 1, n))
    permutation = permutation_matrix(ring, sigma)
    conjugator = diag_blocks(one_block, canonical.basis) @ permutation
    conjugator_inv = permutation.transpose() @ diag_blocks(one_block, canonical.basis_inverse)

    z = zero(ring)
    tail_form = ExactMatrix(ring, [[d1, *top.row(0)]] + [[z, *row] for row in last.entries], check=False)
    reduced = conjugator_inv @ tail_form @ conjugator

    local: list[ExactMatrix] = []
    for k in range(h):
        t = reduced[h, k]
        if not t.is_zero():
            local += embed_ge_as_idempotents(Elementary(i=h + 1, j=k + 1, c=t), n, ring)
    trailing = reduced.submatrix(h, n, h, n)
    identity_h = _identity(core, h)
    local += [diag_blocks(identity_h, factor) for factor in _factor_list(trailing)]

    logging.debug(f"{n}x{n}: bordered reduction with rank-{h} tail idempotent")
    return factors + conjugate_all(local, conjugator, conjugator_inv)


def factor_singular(matrix: ExactMatrix) -> FactorizationCertificate:
    """
    n×n 奇异矩阵分解为幂等矩阵的乘积

    :param matrix: 方阵
    :return: 分解证书
    :raises NotSquare: 不是方阵时抛出
    :raises NotSingular: 行列式不为零时抛出
    """
    n = matrix.require_square()
    if not det_bareiss(matrix).is_zero():
        raise NotSingular()

    if matrix.is_zero():
        return build_certificate(matrix, [matrix], Algorithm.TRIVIAL)
    if is_idempotent(matrix):
        return build_certificate(matrix, [matrix], Algorithm.IDEMPOTENT)
    if n == 2:
        return factor_singular_2x2(matrix)

    factors = _factor_list(matrix)
    logging.info(f"factored {n}x{n} matrix over {matrix.ring} into {len(factors)} idempotents")
    return build_certificate(matrix, factors, Algorithm.IPN_INDUCTION)
