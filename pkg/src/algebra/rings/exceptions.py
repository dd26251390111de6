# _author: Coke
# _date: 2024/9/3 10:05
# _description: 环运算异常

from src.exceptions import DomainError, ParseError

from .constants import ErrorCode


class RingMismatch(DomainError):
    """元素不在同一个环"""

    DETAIL = ErrorCode.RING_MISMATCH


class DivisionByZero(DomainError):
    """除数为零"""

    DETAIL = ErrorCode.DIVISION_BY_ZERO


class BothZero(DomainError):
    """最大公因子的两个参数均为零"""

    DETAIL = ErrorCode.BOTH_ZERO


class NotAUnit(DomainError):
    """元素不可逆"""

    DETAIL = ErrorCode.NOT_A_UNIT


class InexactDivision(DomainError):
    """除法有余数"""

    DETAIL = ErrorCode.INEXACT_DIVISION


class BadElement(ParseError):
    """元素编码错误"""

    DETAIL = ErrorCode.BAD_ELEMENT
