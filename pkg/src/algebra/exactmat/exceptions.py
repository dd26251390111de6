# _author: Coke
# _date: 2024/9/5 09:32
# _description: 矩阵运算异常

from src.exceptions import DomainError

from .constants import ErrorCode


class ShapeMismatch(DomainError):
    """维度不匹配"""

    DETAIL = ErrorCode.SHAPE_MISMATCH


class NotSquare(DomainError):
    """不是方阵"""

    DETAIL = ErrorCode.NOT_SQUARE


class NotSingular(DomainError):
    """矩阵非奇异"""

    DETAIL = ErrorCode.NOT_SINGULAR


class NotIdempotent(DomainError):
    """不是幂等矩阵"""

    DETAIL = ErrorCode.NOT_IDEMPOTENT


class NotUnimodular(DomainError):
    """行向量不是单模的"""

    DETAIL = ErrorCode.NOT_UNIMODULAR


class NotInvertible(DomainError):
    """矩阵不可逆"""

    DETAIL = ErrorCode.NOT_INVERTIBLE
