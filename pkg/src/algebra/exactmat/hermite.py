# _author: Coke
# _date: 2024/9/6 15:40
# _description: 记录变换矩阵的列 Hermite 约化、单模行补全、可逆矩阵求逆

from collections.abc import Sequence
from typing import NamedTuple

from src.algebra.rings import RingElement, canonical_associate, divexact, divides, euclid_div, ext_gcd

from .exceptions import NotInvertible, NotUnimodular
from .matrix import ExactMatrix


class TrackedReduction(NamedTuple):
    """original·transform = result, transform·transform_inverse = I"""

    result: ExactMatrix
    transform: ExactMatrix
    transform_inverse: ExactMatrix


class InvertiblePair(NamedTuple):
    """matrix·inverse = I"""

    matrix: ExactMatrix
    inverse: ExactMatrix


class _ColumnReducer:
    """对工作矩阵做列变换, 同步更新变换矩阵 T 及其逆 (逆矩阵做对应的行变换)"""

    def __init__(self, matrix: ExactMatrix) -> None:
        self.ring = matrix.ring
        self.work = matrix.to_lists()
        self.transform = ExactMatrix.identity(matrix.ring, matrix.cols).to_lists()
        self.inverse = ExactMatrix.identity(matrix.ring, matrix.cols).to_lists()

    def swap(self, k: int, j: int) -> None:
        for row in self.work + self.transform:
            row[k], row[j] = row[j], row[k]
        self.inverse[k], self.inverse[j] = self.inverse[j], self.inverse[k]

    def subtract(self, j: int, k: int, q: RingElement) -> None:
        """col_j -= q·col_k"""
        for row in self.work + self.transform:
            row[j] = row[j] - q * row[k]
        self.inverse[k] = [a + q * b for a, b in zip(self.inverse[k], self.inverse[j])]

    def scale(self, k: int, unit: RingElement) -> None:
        """col_k *= unit⁻¹"""
        inv = unit.inverse()
        for row in self.work + self.transform:
            row[k] = row[k] * inv
        self.inverse[k] = [v * unit for v in self.inverse[k]]

    def combine(self, k: int, j: int, a: RingElement, b: RingElement) -> None:
        """用 [[x, -b/g], [y, a/g]] 把 (a, b) 变为 (g, 0)"""
        g, x, y = ext_gcd(a, b)
        ag, bg = divexact(a, g), divexact(b, g)
        for row in self.work + self.transform:
            left, right = row[k], row[j]
            row[k] = left * x + right * y
            row[j] = right * ag - left * bg
        top, bottom = self.inverse[k], self.inverse[j]
        self.inverse[k] = [ag * s + bg * t for s, t in zip(top, bottom)]
        self.inverse[j] = [x * t - y * s for s, t in zip(top, bottom)]

    def reduce_row(self, i: int, k: int) -> bool:
        """把第 i 行第 k 列之后的元素消为零, 返回是否产生了主元"""
        row = self.work[i]
        first = next((j for j in range(k, len(row)) if not row[j].is_zero()), None)
        if first is None:
            return False
        if first != k:
            self.swap(k, first)

        for j in range(k + 1, len(row)):
            a, b = row[k], row[j]
            if b.is_zero():
                continue
            if divides(a, b):
                self.subtract(j, k, divexact(b, a))
            else:
                self.combine(k, j, a, b)

        unit = canonical_associate(row[k])[0]
        if not unit.is_one():
            self.scale(k, unit)
        for j in range(k):
            if not row[j].is_zero():
                q = euclid_div(row[j], row[k])[0]
                if not q.is_zero():
                    self.subtract(j, k, q)
        return True

    def finish(self) -> TrackedReduction:
        return TrackedReduction(
            result=ExactMatrix(self.ring, self.work, check=False),
            transform=ExactMatrix(self.ring, self.transform, check=False),
            transform_inverse=ExactMatrix(self.ring, self.inverse, check=False),
        )


def column_hnf(matrix: ExactMatrix) -> TrackedReduction:
    """
    列 Hermite 约化

    主元从左到右、从上到下依次出现, 主元右侧元素为零, 主元为规范相伴元,
    主元左侧元素按带余除法约化; 零列留在最右侧

    :param matrix: 任意形状矩阵
    :return: result = matrix·transform 以及 transform 的逆
    """
    reducer = _ColumnReducer(matrix)
    k = 0
    for i in range(matrix.rows):
        if k >= matrix.cols:
            break
        if reducer.reduce_row(i, k):
            k += 1
    return reducer.finish()


def column_rank(reduction: TrackedReduction) -> int:
    """约化结果中的非零列数"""
    result = reduction.result
    return sum(1 for j in range(result.cols) if any(not v.is_zero() for v in result.column(j)))


def unimodular_inverse(matrix: ExactMatrix) -> ExactMatrix:
    """
    可逆矩阵的精确逆, 可逆矩阵的列 Hermite 形为单位矩阵, 此时变换矩阵即为逆

    :param matrix: 方阵
    :return: 逆矩阵
    :raises NotInvertible: 矩阵不可逆时抛出
    """
    matrix.require_square()
    reduction = column_hnf(matrix)
    if not reduction.result.is_identity():
        raise NotInvertible()
    return reduction.transform


def _reverse(matrix: ExactMatrix) -> ExactMatrix:
    """J·M·J, J 为反序置换"""
    return ExactMatrix(matrix.ring, [row[::-1] for row in matrix.entries[::-1]], check=False)


def unimodular_complete(vector: Sequence[RingElement]) -> InvertiblePair:
    """
    把单模行向量补全为可逆矩阵 P, 使 P 的最后一行等于该向量

    对反序后的行向量做列约化 (u·J·T = e_1), 取 P = J·T⁻¹·J, 因此 e_n 补全为单位矩阵

    :param vector: 非零单模行向量
    :return: P 及 P⁻¹
    :raises NotUnimodular: content 不可逆时抛出
    """
    ring = vector[0].ring
    reduction = column_hnf(ExactMatrix(ring, [list(vector)[::-1]]))
    if not reduction.result[0, 0].is_one():
        raise NotUnimodular(f"({', '.join(str(v) for v in vector)}) 不是单模行向量")
    return InvertiblePair(matrix=_reverse(reduction.transform_inverse), inverse=_reverse(reduction.transform))
