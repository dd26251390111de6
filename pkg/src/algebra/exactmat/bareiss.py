# _author: Coke
# _date: 2024/9/5 14:20
# _description: 无分式 Bareiss 消元求行列式

from src.algebra.rings import RingElement, divexact, one, zero

from .matrix import ExactMatrix


def det_bareiss(matrix: ExactMatrix) -> RingElement:
    """
    Bareiss 无分式消元求行列式, 中间的除法在整环内总是整除

    主元为零时与下方第一个非零行交换, 并翻转符号

    :param matrix: 方阵
    :return: 行列式
    :raises NotSquare: 不是方阵时抛出
    """
    n = matrix.require_square()
    m = matrix.to_lists()
    negate = False
    previous = one(matrix.ring)

    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return zero(matrix.ring)
            m[k], m[swap] = m[swap], m[k]
            negate = not negate

        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divexact(m[i][j] * pivot - m[i][k] * m[k][j], previous)
        previous = pivot

    det = m[n - 1][n - 1]
    return -det if negate else det


def cofactor_det(matrix: ExactMatrix) -> RingElement:
    """按第一行做 Laplace 展开, 仅用于小矩阵的对照"""
    n = matrix.require_square()
    if n == 1:
        return matrix[0, 0]

    total = zero(matrix.ring)
    for j in range(n):
        if matrix[0, j].is_zero():
            continue
        minor = ExactMatrix(matrix.ring, [row[:j] + row[j + 1 :] for row in matrix.entries[1:]])
        term = matrix[0, j] * cofactor_det(minor)
        total = total - term if j % 2 else total + term
    return total


def is_singular(matrix: ExactMatrix) -> bool:
    return det_bareiss(matrix).is_zero()
