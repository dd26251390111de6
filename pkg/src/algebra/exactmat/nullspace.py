# _author: Coke
# _date: 2024/9/6 10:15
# _description: 奇异方阵的本原左零化行向量

import logging

from src.algebra.rings import FractionElement, RingElement, canonical_associate, divexact, gcd_all, lcm, one, zero

from .exceptions import NotSingular
from .matrix import ExactMatrix


def _rref(grid: list[list[FractionElement]]) -> list[int]:
    """分式域上原地化为简化行阶梯形, 返回各主元所在列"""
    rows, cols = len(grid), len(grid[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        found = next((i for i in range(r, rows) if not grid[i][c].is_zero()), None)
        if found is None:
            continue
        grid[r], grid[found] = grid[found], grid[r]
        inv = grid[r][c].inverse()
        grid[r] = [v * inv for v in grid[r]]
        for i in range(rows):
            if i != r and not grid[i][c].is_zero():
                factor = grid[i][c]
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
    return pivots


def left_null_row(matrix: ExactMatrix) -> tuple[RingElement, ...]:
    """
    求奇异方阵的左零化行向量 u, u·A = 0

    在分式域上对 Aᵀ 做消元, 没有自由变量时矩阵非奇异; 第一个自由变量取 1 其余取 0,
    然后通分并除以 content, 最后让第一个非零分量成为规范相伴元

    :param matrix: 奇异方阵
    :return: 本原行向量 u
    :raises NotSingular: 行列式不为零时抛出
    :raises NotSquare: 不是方阵时抛出
    """
    n = matrix.require_square()
    ring = matrix.ring
    if matrix.is_zero():
        return (one(ring),) + (zero(ring),) * (n - 1)

    grid = [[FractionElement(v) for v in row] for row in matrix.transpose().entries]
    pivots = _rref(grid)
    free = next((c for c in range(n) if c not in pivots), None)
    if free is None:
        raise NotSingular()

    solution = [FractionElement.zero_like(matrix[0, 0]) for _ in range(n)]
    solution[free] = FractionElement(one(ring))
    for r, c in enumerate(pivots):
        solution[c] = -grid[r][free]

    common = one(ring)
    for value in solution:
        common = lcm(common, value.den)
    vector = [value.num * divexact(common, value.den) for value in solution]

    content = gcd_all(vector)
    vector = [divexact(v, content) for v in vector]
    lead = next(v for v in vector if not v.is_zero())
    unit = canonical_associate(lead)[0].inverse()
    logging.debug(f"left null row of {n}×{n}: free column {free}")
    return tuple(v * unit for v in vector)
