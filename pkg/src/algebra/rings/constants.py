# _author: Coke
# _date: 2024/9/3 10:02
# _description: 环相关常量及错误信息

from enum import Enum


class RingKind(str, Enum):
    INTEGER = "integer"
    RATIONAL = "rational"
    GAUSS = "gauss"
    POLYMOD = "polymod"

    @property
    def is_field(self) -> bool:
        return self == self.RATIONAL

    @property
    def is_polynomial(self) -> bool:
        return self == self.POLYMOD


class ErrorCode:
    """环运算错误信息"""

    RING_MISMATCH = "参与运算的元素不属于同一个环"
    DIVISION_BY_ZERO = "除数不能为零"
    BOTH_ZERO = "两个元素不能同时为零"
    NOT_A_UNIT = "元素不是可逆元"
    INEXACT_DIVISION = "除法不能整除"
    NOT_PRIME = "多项式环的模数必须为素数"
    MISSING_MODULUS = "polymod 环需要提供模数 p"
    UNEXPECTED_MODULUS = "只有 polymod 环可以提供模数 p"
    BAD_ELEMENT = "元素编码与环类型不符"
