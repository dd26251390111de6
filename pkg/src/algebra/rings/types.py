# _author: Coke
# _date: 2024/9/3 10:11
# _description: 环描述及扩展欧几里得结果

from typing import TYPE_CHECKING, NamedTuple

from pydantic import ConfigDict, model_validator

from src.models import CustomModel

from .constants import ErrorCode, RingKind

if TYPE_CHECKING:
    from .elements import RingElement


def is_prime(p: int) -> bool:
    """
    试除法判断素数

    :param p: 待判断的自然数
    :return:
    """
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


class RingDescriptor(CustomModel):
    """环描述, 构造后不可修改"""

    model_config = ConfigDict(frozen=True)

    kind: RingKind
    p: int | None = None

    @model_validator(mode="after")
    def validate_modulus(self) -> "RingDescriptor":
        """校验模数 p 只在 polymod 环出现且为素数"""
        if self.kind.is_polynomial:
            if self.p is None:
                raise ValueError(ErrorCode.MISSING_MODULUS)
            if not is_prime(self.p):
                raise ValueError(ErrorCode.NOT_PRIME)
        elif self.p is not None:
            raise ValueError(ErrorCode.UNEXPECTED_MODULUS)

        return self

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.p}" if self.kind.is_polynomial else self.kind.value


class ExtGcdResult(NamedTuple):
    """a·x + b·y = d, d 为规范相伴元"""

    d: "RingElement"
    x: "RingElement"
    y: "RingElement"


INTEGER = RingDescriptor(kind=RingKind.INTEGER)
RATIONAL = RingDescriptor(kind=RingKind.RATIONAL)
GAUSS = RingDescriptor(kind=RingKind.GAUSS)
