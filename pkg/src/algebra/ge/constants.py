# _author: Coke
# _date: 2024/9/13 09:10
# _description: GE 因子类型、GE₂ 分解策略及错误信息

from enum import Enum


class FactorKind(str, Enum):
    """GE 因子的种类, 用作 JSON 中的 kind 字段"""

    ELEMENTARY = "elementary"
    DIAG = "diag"
    SWAP = "swap"


class Strategy(str, Enum):
    """GE₂ 分解策略"""

    EUCLID = "euclid"
    UNIT_SHIFT = "unit-shift"
    CONTINUANT = "continuant"


class ErrorCode:
    """GE 分解错误信息"""

    SAME_INDEX = "初等矩阵与对换的两个下标必须不同"
    BAD_INDEX = "GE 因子的下标超出矩阵范围"
    NOT_UNITS = "对角因子的元素必须全部可逆"
    SIZE_TOO_SMALL = "嵌入要求矩阵阶数至少为 3"
    BAD_STRATEGY = "未知的 GE₂ 分解策略"
    MISSING_SHIFT = "unit-shift 策略需要平移量 x"
    NOT_EMBEDDABLE = "只能嵌入第二行或第二列为零的 2×2 矩阵"
