# _author: Coke
# _date: 2024/9/9 09:25
# _description: 2×2 幂等分解异常

from src.exceptions import DomainError

from .constants import ErrorCode


class NotBezout(DomainError):
    """四元组不满足 Bézout 关系"""

    DETAIL = ErrorCode.NOT_BEZOUT


class NotCoprime(DomainError):
    """a, b 不互素"""

    DETAIL = ErrorCode.NOT_COPRIME


class BadChain(DomainError):
    """幂等链与目标不符或级联单位不可逆"""

    DETAIL = ErrorCode.BAD_CHAIN


class NotNormalized(DomainError):
    """幂等链未规范化"""

    DETAIL = ErrorCode.NOT_NORMALIZED


class BadLength(DomainError):
    """r 系数序列长度不是奇数"""

    DETAIL = ErrorCode.BAD_LENGTH


class BadTableParams(DomainError):
    """分解表参数错误"""

    DETAIL = ErrorCode.BAD_TABLE_PARAMS
