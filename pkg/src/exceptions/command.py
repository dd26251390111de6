# _author: Coke
# _date: 2024/9/2 10:40
# _description: 命令异常基础类, STATUS_CODE 即进程退出码

from typing import Any

from src.exceptions import message, status


class DetailedException(Exception):
    STATUS_CODE = status.EXIT_70_INTERNAL
    DETAIL = message.EXIT_70_INTERNAL
    ERRORS: dict[str, Any] | None = None

    def __init__(self, detail: str | None = None, errors: dict[str, Any] | None = None) -> None:
        if detail is not None:
            self.DETAIL = detail
        if errors is not None:
            self.ERRORS = errors
        super().__init__(self.DETAIL)

    @property
    def name(self) -> str:
        """异常名称, 用于命令行输出"""
        return type(self).__name__


class UsageError(DetailedException):
    """命令行参数错误"""

    STATUS_CODE = status.EXIT_64_USAGE
    DETAIL = message.EXIT_64_USAGE


class ParseError(DetailedException):
    """输入解析失败, ERRORS 中记录出错位置"""

    STATUS_CODE = status.EXIT_65_PARSE
    DETAIL = message.EXIT_65_PARSE

    def __init__(self, detail: str | None = None, location: str | None = None) -> None:
        super(ParseError, self).__init__(detail, {"location": location} if location else None)

    @property
    def location(self) -> str | None:
        return self.ERRORS.get("location") if self.ERRORS else None


class DomainError(DetailedException):
    """输入不满足代数前提"""

    STATUS_CODE = status.EXIT_2_DOMAIN
    DETAIL = message.EXIT_2_DOMAIN


class InternalError(DetailedException):
    """内部不变量被破坏"""

    STATUS_CODE = status.EXIT_70_INTERNAL
    DETAIL = message.EXIT_70_INTERNAL


class SizeLimitExceeded(DomainError):
    """矩阵阶数超过 IDEMFACT_MAX_SIZE"""

    DETAIL = message.SIZE_LIMIT_EXCEEDED
