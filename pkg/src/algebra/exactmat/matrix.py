# _author: Coke
# _date: 2024/9/5 10:05
# _description: 精确稠密矩阵, 构造后不可修改

from collections.abc import Callable, Iterator, Sequence
from typing import Any

from src.algebra.rings import RingDescriptor, RingElement, element, one, zero
from src.algebra.rings.exceptions import RingMismatch

from .constants import ErrorCode
from .exceptions import NotSquare, ShapeMismatch

Rows = tuple[tuple[RingElement, ...], ...]


class ExactMatrix:
    """行优先存储的 rows × cols 矩阵, 所有元素属于同一个环"""

    __slots__ = ("ring", "rows", "cols", "_entries")

    def __init__(self, ring: RingDescriptor, entries: Sequence[Sequence[RingElement]], check: bool = True) -> None:
        data: Rows = tuple(tuple(row) for row in entries)
        if check:
            if not data or not data[0]:
                raise ShapeMismatch(ErrorCode.EMPTY_MATRIX)
            if any(len(row) != len(data[0]) for row in data):
                raise ShapeMismatch("矩阵各行长度不一致")
            for row in data:
                for value in row:
                    if value.ring != ring:
                        raise RingMismatch(f"{value.ring} 的元素不能放入 {ring} 矩阵")
        self.ring = ring
        self.rows = len(data)
        self.cols = len(data[0])
        self._entries = data

    @classmethod
    def from_rows(cls, ring: RingDescriptor, rows: Sequence[Sequence[Any]]) -> "ExactMatrix":
        """
        使用元素载荷构造矩阵, 载荷格式见 rings.element

        :param ring: 环描述
        :param rows: 二维载荷
        :return:
        """
        return cls(ring, [[element(ring, value) for value in row] for row in rows])

    @classmethod
    def identity(cls, ring: RingDescriptor, n: int) -> "ExactMatrix":
        z, e = zero(ring), one(ring)
        return cls(ring, [[e if i == j else z for j in range(n)] for i in range(n)], check=False)

    @classmethod
    def zero(cls, ring: RingDescriptor, rows: int, cols: int | None = None) -> "ExactMatrix":
        z = zero(ring)
        return cls(ring, [[z] * (rows if cols is None else cols) for _ in range(rows)], check=False)

    @classmethod
    def unit_matrix(cls, ring: RingDescriptor, n: int, i: int, j: int) -> "ExactMatrix":
        """矩阵单位 e_ij (下标从 0 开始)"""
        z, e = zero(ring), one(ring)
        return cls(ring, [[e if (r, c) == (i, j) else z for c in range(n)] for r in range(n)], check=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Rows:
        return self._entries

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[RingElement, ...]:
        return self._entries[i]

    def column(self, j: int) -> tuple[RingElement, ...]:
        return tuple(row[j] for row in self._entries)

    def to_lists(self) -> list[list[RingElement]]:
        """返回可修改的二维列表副本"""
        return [list(row) for row in self._entries]

    def require_square(self) -> int:
        """
        校验方阵并返回阶数

        :return:
        :raises NotSquare: 不是方阵时抛出
        """
        if not self.is_square:
            raise NotSquare(f"{self.rows}×{self.cols} 不是方阵")
        return self.rows

    def map(self, func: Callable[[RingElement], RingElement]) -> "ExactMatrix":
        return ExactMatrix(self.ring, [[func(v) for v in row] for row in self._entries], check=False)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ring, list(zip(*self._entries)), check=False)

    def submatrix(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> "ExactMatrix":
        return ExactMatrix(self.ring, [row[col_start:col_stop] for row in self._entries[row_start:row_stop]])

    def select_columns(self, indices: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(self.ring, [[row[j] for j in indices] for row in self._entries])

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self._entries for v in row)

    def is_identity(self) -> bool:
        return self.is_square and all(
            (v.is_one() if i == j else v.is_zero()) for i, row in enumerate(self._entries) for j, v in enumerate(row)
        )

    def trace(self) -> RingElement:
        total = zero(self.ring)
        for i in range(min(self.rows, self.cols)):
            total = total + self._entries[i][i]
        return total

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} 与 {other.ring} 矩阵不能混合运算")
        if other.shape != self.shape:
            raise ShapeMismatch(f"{self.shape} 与 {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)], check=False
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)], check=False
        )

    def __neg__(self) -> "ExactMatrix":
        return self.map(lambda v: -v)

    def scale(self, factor: RingElement | int) -> "ExactMatrix":
        return self.map(lambda v: v * factor)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.ring == other.ring and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __iter__(self) -> Iterator[tuple[RingElement, ...]]:
        return iter(self._entries)

    def __getitem__(self, index: tuple[int, int]) -> RingElement:
        i, j = index
        return self._entries[i][j]

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(v) for v in row) for row in self._entries)
        return f"ExactMatrix[{self.ring}]({body})"


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """
    精确矩阵乘法

    :param a: 左矩阵
    :param b: 右矩阵
    :return: a·b
    :raises ShapeMismatch: a.cols != b.rows 时抛出
    :raises RingMismatch: 环不同时抛出
    """
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} 与 {b.ring} 矩阵不能相乘")
    if a.cols != b.rows:
        raise ShapeMismatch(f"{a.rows}×{a.cols} 与 {b.rows}×{b.cols} 不能相乘")

    z = zero(a.ring)
    # 只遍历非零元素
    sparse_b = [[(j, y) for j, y in enumerate(row) if not y.is_zero()] for row in b.entries]
    product = []
    for row in a.entries:
        out = [z] * b.cols
        for k, x in enumerate(row):
            if x.is_zero():
                continue
            for j, y in sparse_b[k]:
                out[j] = out[j] + x * y
        product.append(out)
    return ExactMatrix(a.ring, product, check=False)


def mat_product(ring: RingDescriptor, n: int, factors: Sequence[ExactMatrix]) -> ExactMatrix:
    """
    按顺序连乘, 空列表返回单位矩阵

    :param ring: 环描述
    :param n: 阶数
    :param factors: 矩阵列表
    :return:
    """
    if not factors:
        return ExactMatrix.identity(ring, n)
    result = factors[0]
    for factor in factors[1:]:
        result = result @ factor
    return result


def diag_blocks(*blocks: ExactMatrix) -> ExactMatrix:
    """
    分块对角矩阵 diag(B1, B2, ...)

    :param blocks: 方阵块, 至少一个
    :return:
    """
    ring = blocks[0].ring
    n = sum(block.rows for block in blocks)
    z = zero(ring)
    rows: list[list[RingElement]] = []
    offset = 0
    for block in blocks:
        for row in block.entries:
            rows.append([z] * offset + list(row) + [z] * (n - offset - block.cols))
        offset += block.cols
    return ExactMatrix(ring, rows)


def block_matrix(grid: Sequence[Sequence[ExactMatrix]]) -> ExactMatrix:
    """
    按块拼接矩阵 [[A, B], [C, D]]

    :param grid: 分块网格, 同一行的块行数一致, 同一列的块列数一致
    :return:
    """
    rows: list[list[RingElement]] = []
    for band in grid:
        for i in range(band[0].rows):
            rows.append([v for block in band for v in block.row(i)])
    return ExactMatrix(grid[0][0].ring, rows)


def permutation_matrix(ring: RingDescriptor, sigma: Sequence[int]) -> ExactMatrix:
    """
    置换矩阵 Π, Π[sigma[k]][k] = 1, 即 Π·e_k = e_sigma(k)

    :param ring: 环描述
    :param sigma: 置换 (下标从 0 开始)
    :return:
    """
    n = len(sigma)
    z, e = zero(ring), one(ring)
    rows = [[z] * n for _ in range(n)]
    for k, target in enumerate(sigma):
        rows[target][k] = e
    return ExactMatrix(ring, rows, check=False)
