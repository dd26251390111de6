# _author: Coke
# _date: 2024/9/4 11:05
# _description: 分式域元素, 用于在分式域上做消元

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from .elements import RingElement, one, zero
from .exceptions import DivisionByZero
from .service import canonical_associate, divexact, ext_gcd


class FractionElement:
    """分式 num / den, 已约分且分母为规范相伴元"""

    __slots__ = ("num", "den")

    def __init__(self, num: RingElement, den: RingElement | None = None) -> None:
        if den is None:
            den = one(num.ring)
        if den.is_zero():
            raise DivisionByZero()
        if num.is_zero():
            self.num, self.den = num, one(num.ring)
            return

        g = ext_gcd(num, den).d
        if not g.is_one():
            num, den = divexact(num, g), divexact(den, g)
        unit, den = canonical_associate(den)
        self.num = num * unit.inverse()
        self.den = den

    @classmethod
    def zero_like(cls, element: RingElement) -> Self:
        return cls(zero(element.ring))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "FractionElement") -> "FractionElement":
        return FractionElement(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "FractionElement") -> "FractionElement":
        return self + (-other)

    def __neg__(self) -> "FractionElement":
        return FractionElement(-self.num, self.den)

    def __mul__(self, other: "FractionElement") -> "FractionElement":
        return FractionElement(self.num * other.num, self.den * other.den)

    def inverse(self) -> "FractionElement":
        return FractionElement(self.den, self.num)

    def __truediv__(self, other: "FractionElement") -> "FractionElement":
        return self * other.inverse()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FractionElement):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"FractionElement({self.num} / {self.den})"
