# _author: Coke
# _date: 2024/9/9 10:02
# _description: Bézout 四元组、幂等链及 r 系数序列

from pydantic import ConfigDict, model_validator

from src.algebra.rings import RingElement
from src.models import CustomModel

from .constants import ErrorCode
from .exceptions import BadLength, NotBezout


class BezoutQuad(CustomModel):
    """(a, b, c, d), c·a + d·b = 1, 对应幂等矩阵 (a; b)(c, d)"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    a: RingElement
    b: RingElement
    c: RingElement
    d: RingElement

    @model_validator(mode="after")
    def validate_bezout(self) -> "BezoutQuad":
        """校验 c·a + d·b = 1"""
        if not (self.c * self.a + self.d * self.b).is_one():
            raise NotBezout(f"{ErrorCode.NOT_BEZOUT}: ({self.a}, {self.b}, {self.c}, {self.d})")

        return self

    @classmethod
    def of(cls, a: RingElement, b: RingElement, c: RingElement, d: RingElement) -> "BezoutQuad":
        return cls(a=a, b=b, c=c, d=d)

    def as_tuple(self) -> tuple[RingElement, RingElement, RingElement, RingElement]:
        return self.a, self.b, self.c, self.d


class IdemChain2(CustomModel):
    """Bézout 四元组链, normalized 表示满足 a₁ = c₁ = 1, b₁ = 0 以及链接关系"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    quads: list[BezoutQuad]
    normalized: bool = False

    def __len__(self) -> int:
        return len(self.quads)


class RSeq(CustomModel):
    """奇数长度的系数序列 r₀, …, r₂ₙ₋₂"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    coeffs: list[RingElement]

    @model_validator(mode="after")
    def validate_length(self) -> "RSeq":
        """校验长度为正奇数"""
        if len(self.coeffs) % 2 == 0:
            raise BadLength(f"{ErrorCode.BAD_LENGTH}: {len(self.coeffs)}")

        return self

    @property
    def chain_length(self) -> int:
        """对应幂等链的长度 n"""
        return (len(self.coeffs) + 1) // 2
