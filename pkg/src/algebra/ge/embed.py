# _author: Coke
# _date: 2024/9/14 10:05
# _description: 把 (n-1) 阶 GE 因子或 2×2 行/列形式矩阵嵌入为 n 阶幂等矩阵的乘积

from src.algebra.exactmat import ExactMatrix
from src.algebra.rings import RingDescriptor, RingElement, one, zero

from .constants import ErrorCode
from .exceptions import NotEmbeddable, SizeTooSmall
from .types import DiagUnits, Elementary, GEFactor, Swap


class _Builder:
    """在 P = I - e_nn 的基础上修改若干元素 (下标从 0 开始)"""

    def __init__(self, ring: RingDescriptor, n: int) -> None:
        self.ring = ring
        self.n = n

    def projection(self) -> list[list[RingElement]]:
        z, e = zero(self.ring), one(self.ring)
        return [[e if i == j and i < self.n - 1 else z for j in range(self.n)] for i in range(self.n)]

    def build(
        self, changes: dict[tuple[int, int], RingElement], base: list[list[RingElement]] | None = None
    ) -> ExactMatrix:
        rows = base if base is not None else self.projection()
        for (i, j), value in changes.items():
            rows[i][j] = rows[i][j] + value
        return ExactMatrix(self.ring, rows, check=False)


def _embed_elementary(builder: _Builder, factor: Elementary) -> list[ExactMatrix]:
    """P·M·P, M = P + c·e_ij + e_in - c·e_nj"""
    last, i, j, c = builder.n - 1, factor.i - 1, factor.j - 1, factor.c
    p = builder.build({})
    middle = builder.build({(i, j): c, (i, last): one(c.ring), (last, j): -c})
    return [p, middle, p]


def _embed_swap(builder: _Builder, factor: Swap) -> list[ExactMatrix]:
    """P·T·P, T 在坐标 (i, j, n) 上为 [[0, 1, 1], [1, 0, -1], [-1, 1, 2]], 其余为单位矩阵"""
    last, i, j = builder.n - 1, factor.i - 1, factor.j - 1
    block = [[0, 1, 1], [1, 0, -1], [-1, 1, 2]]
    z = zero(builder.ring)
    rows = ExactMatrix.identity(builder.ring, builder.n).to_lists()
    coords = (i, j, last)
    for r, row in zip(coords, block):
        for c, value in zip(coords, row):
            rows[r][c] = z + value
    p = builder.build({})
    return [p, ExactMatrix(builder.ring, rows, check=False), p]


def _embed_diag(builder: _Builder, factor: DiagUnits) -> list[ExactMatrix]:
    """对每个 u_k ≠ 1 依次给出 (P - e_kn)·(P + (1 - u_k)·e_nk) = P + (u_k - 1)·e_kk"""
    last = builder.n - 1
    factors: list[ExactMatrix] = []
    for k, u in enumerate(factor.units):
        if u.is_one():
            continue
        factors.append(builder.build({(k, last): -one(u.ring)}))
        factors.append(builder.build({(last, k): 1 - u}))
    return factors or [builder.build({})]


def _embed_column(builder: _Builder, a: RingElement, b: RingElement) -> list[ExactMatrix]:
    """
    [[a, 0], [b, 0]] 的嵌入: (e11 + e22 + a·e1n + b·e2n)·e_nn·(e11 + e21 + e_n1),
    其余对角坐标为 1
    """
    last, e = builder.n - 1, one(a.ring)
    rest = builder.projection()
    for k in (0, 1):
        rest[k][k] = zero(a.ring)

    first = builder.build({(0, 0): e, (1, 1): e, (0, last): a, (1, last): b}, [row[:] for row in rest])
    middle = builder.build({(last, last): e}, [row[:] for row in rest])
    third = builder.build({(0, 0): e, (1, 0): e, (last, 0): e}, [row[:] for row in rest])
    return [first, middle, third]


def embed_ge_as_idempotents(factor: GEFactor | ExactMatrix, n: int, ring: RingDescriptor) -> list[ExactMatrix]:
    """
    把 (n-1) 阶矩阵 M 对应的 diag(M, 0) 写成 n 阶幂等矩阵的乘积

    GE 因子按 n-1 阶解释; 2×2 矩阵必须为 [[a, b], [0, 0]] 或 [[a, 0], [b, 0]],
    占据前两个坐标, 其余前 n-1 个对角坐标为 1

    :param factor: GE 因子或 2×2 矩阵
    :param n: 目标阶数, 至少为 3
    :param ring: 环描述
    :return: 幂等矩阵列表, 乘积为 diag(M, 0)
    :raises SizeTooSmall: n < 3 时抛出
    :raises BadIndex: GE 因子下标超出 n-1 时抛出
    :raises NotEmbeddable: 2×2 矩阵既不是行形式也不是列形式时抛出
    """
    if n < 3:
        raise SizeTooSmall(f"{ErrorCode.SIZE_TOO_SMALL}: n = {n}")

    builder = _Builder(ring, n)
    if isinstance(factor, ExactMatrix):
        if factor.shape != (2, 2):
            raise NotEmbeddable(f"{ErrorCode.NOT_EMBEDDABLE}: {factor.rows}×{factor.cols}")
        (a, b), (c, d) = factor.entries
        if c.is_zero() and d.is_zero():
            return [f.transpose() for f in reversed(_embed_column(builder, a, b))]
        if b.is_zero() and d.is_zero():
            return _embed_column(builder, a, c)
        raise NotEmbeddable()

    factor.check_size(n - 1)
    match factor:
        case Elementary():
            return _embed_elementary(builder, factor)
        case Swap():
            return _embed_swap(builder, factor)
    return _embed_diag(builder, factor)
