# _author: Coke
# _date: 2024/9/13 09:15
# _description: GE 分解异常

from src.exceptions import DomainError, UsageError

from .constants import ErrorCode


class BadIndex(DomainError):
    """GE 因子下标不合法"""

    DETAIL = ErrorCode.BAD_INDEX


class SizeTooSmall(DomainError):
    """嵌入的目标阶数小于 3"""

    DETAIL = ErrorCode.SIZE_TOO_SMALL


class NotEmbeddable(DomainError):
    """2×2 矩阵不是行形式或列形式"""

    DETAIL = ErrorCode.NOT_EMBEDDABLE


class BadStrategy(UsageError):
    """GE₂ 分解策略不合法"""

    DETAIL = ErrorCode.BAD_STRATEGY
