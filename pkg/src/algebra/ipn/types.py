# _author: Coke
# _date: 2024/9/18 09:10
# _description: 最后一行为零的共轭形式

from typing import NamedTuple

from src.algebra.exactmat import ExactMatrix


class BorderedForm(NamedTuple):
    """P·A·P⁻¹ = core, core 的最后一行为零"""

    P: ExactMatrix
    P_inv: ExactMatrix
    core: ExactMatrix

    @property
    def block(self) -> ExactMatrix:
        """core 左上角的 (n-1)×(n-1) 块 B"""
        n = self.core.rows
        return self.core.submatrix(0, n - 1, 0, n - 1)

    @property
    def column(self) -> ExactMatrix:
        """core 最后一列去掉末尾元素后的列向量 C"""
        n = self.core.rows
        return self.core.submatrix(0, n - 1, n - 1, n)
