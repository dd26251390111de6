# _author: Coke
# _date: 2024/9/9 09:20
# _description: 2×2 幂等分解常量及错误信息

from enum import Enum


class TableCase(str, Enum):
    """分解表中的情形"""

    A = "a"
    A_PRIME = "a'"
    B = "b"
    B_PRIME = "b'"
    C = "c"
    C_PRIME = "c'"
    D = "d"
    E = "e"

    @property
    def arity(self) -> int:
        return 1 if self in (self.A, self.A_PRIME) else 2


class ErrorCode:
    """2×2 幂等分解错误信息"""

    NOT_BEZOUT = "四元组不满足 c·a + d·b = 1"
    NOT_COPRIME = "a, b 不互素"
    BAD_CHAIN = "幂等链与目标矩阵不符"
    NOT_NORMALIZED = "幂等链未规范化"
    BAD_LENGTH = "r 系数序列的长度必须为正奇数"
    BAD_TABLE_PARAMS = "分解表参数个数与情形不符"
    EMPTY_CHAIN = "幂等链不能为空"
