# _author: Coke
# _date: 2024/9/3 14:30
# _description: 四种欧几里得整环的元素: 整数、有理数、高斯整数、F_p[x] 多项式

from abc import ABC, abstractmethod
from collections.abc import Hashable, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Any

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from .constants import RingKind
from .exceptions import BadElement, DivisionByZero, NotAUnit, RingMismatch
from .types import GAUSS, INTEGER, RATIONAL, RingDescriptor


class RingElement(ABC):
    """交换欧几里得整环中的元素, 构造后不可修改"""

    __slots__ = ()

    @property
    @abstractmethod
    def ring(self) -> RingDescriptor: ...

    @abstractmethod
    def _key(self) -> Hashable: ...

    @abstractmethod
    def _lift(self, value: int) -> Self: ...

    @abstractmethod
    def _add(self, other: Self) -> Self: ...

    @abstractmethod
    def _mul(self, other: Self) -> Self: ...

    @abstractmethod
    def _divmod(self, other: Self) -> tuple[Self, Self]: ...

    @abstractmethod
    def _inverse(self) -> Self: ...

    @abstractmethod
    def _canonical_unit(self) -> Self:
        """返回可逆元 u, 使 self·u⁻¹ 为规范相伴元 (self 非零)"""

    @abstractmethod
    def __neg__(self) -> Self: ...

    @abstractmethod
    def is_zero(self) -> bool: ...

    @abstractmethod
    def is_unit(self) -> bool: ...

    @abstractmethod
    def norm(self) -> int:
        """欧几里得范数: 绝对值 / 模长平方 / 次数 / 0"""

    def _same_ring(self, other: "RingElement") -> bool:
        return type(other) is type(self)

    def _coerce(self, other: "RingElement | int") -> Self:
        if isinstance(other, int):
            return self._lift(other)
        if not isinstance(other, RingElement) or not self._same_ring(other):
            raise RingMismatch(f"{self.ring} 与 {getattr(other, 'ring', type(other).__name__)} 不能混合运算")
        return other  # type: ignore[return-value]

    def is_one(self) -> bool:
        return self == 1

    def inverse(self) -> Self:
        """
        求可逆元的逆

        :return:
        :raises NotAUnit: 元素不可逆时抛出
        """
        if not self.is_unit():
            raise NotAUnit(f"{self} 在 {self.ring} 中不可逆")
        return self._inverse()

    def __add__(self, other: "RingElement | int") -> Self:
        return self._add(self._coerce(other))

    def __radd__(self, other: int) -> Self:
        return self._add(self._coerce(other))

    def __sub__(self, other: "RingElement | int") -> Self:
        return self._add(-self._coerce(other))

    def __rsub__(self, other: int) -> Self:
        return self._coerce(other)._add(-self)

    def __mul__(self, other: "RingElement | int") -> Self:
        return self._mul(self._coerce(other))

    def __rmul__(self, other: int) -> Self:
        return self._mul(self._coerce(other))

    def __divmod__(self, other: "RingElement | int") -> tuple[Self, Self]:
        divisor = self._coerce(other)
        if divisor.is_zero():
            raise DivisionByZero()
        return self._divmod(divisor)

    def __floordiv__(self, other: "RingElement | int") -> Self:
        return divmod(self, other)[0]

    def __mod__(self, other: "RingElement | int") -> Self:
        return divmod(self, other)[1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._key() == self._lift(other)._key()
        if isinstance(other, RingElement):
            return self._same_ring(other) and self._key() == other._key()
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._key()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class Integer(RingElement):
    """整数环 Z"""

    __slots__ = ("value",)

    def __init__(self, value: int) -> None:
        self.value = value

    @property
    def ring(self) -> RingDescriptor:
        return INTEGER

    def _key(self) -> Hashable:
        return self.value

    def _lift(self, value: int) -> "Integer":
        return Integer(value)

    def _add(self, other: "Integer") -> "Integer":
        return Integer(self.value + other.value)

    def _mul(self, other: "Integer") -> "Integer":
        return Integer(self.value * other.value)

    def _divmod(self, other: "Integer") -> tuple["Integer", "Integer"]:
        q, r = divmod(self.value, other.value)
        # 余数取 0 ≤ r < |b|
        if r < 0:
            r -= other.value
            q += 1
        return Integer(q), Integer(r)

    def _inverse(self) -> "Integer":
        return Integer(self.value)

    def _canonical_unit(self) -> "Integer":
        return Integer(-1 if self.value < 0 else 1)

    def __neg__(self) -> "Integer":
        return Integer(-self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_unit(self) -> bool:
        return self.value in (1, -1)

    def norm(self) -> int:
        return abs(self.value)

    def __str__(self) -> str:
        return str(self.value)


class Rational(RingElement):
    """有理数域 Q, 任意非零元可逆"""

    __slots__ = ("value",)

    def __init__(self, value: Fraction | int) -> None:
        self.value = Fraction(value)

    @property
    def ring(self) -> RingDescriptor:
        return RATIONAL

    def _key(self) -> Hashable:
        return self.value

    def _lift(self, value: int) -> "Rational":
        return Rational(value)

    def _add(self, other: "Rational") -> "Rational":
        return Rational(self.value + other.value)

    def _mul(self, other: "Rational") -> "Rational":
        return Rational(self.value * other.value)

    def _divmod(self, other: "Rational") -> tuple["Rational", "Rational"]:
        return Rational(self.value / other.value), Rational(0)

    def _inverse(self) -> "Rational":
        return Rational(1 / self.value)

    def _canonical_unit(self) -> "Rational":
        return self

    def __neg__(self) -> "Rational":
        return Rational(-self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_unit(self) -> bool:
        return self.value != 0

    def norm(self) -> int:
        return 0

    def __str__(self) -> str:
        return str(self.value)


def _round_half_toward_zero(numerator: int, denominator: int) -> int:
    """numerator / denominator 四舍五入到整数, 恰为 .5 时向零取整 (denominator > 0)"""
    q, rem = divmod(numerator, denominator)
    twice = 2 * rem
    if twice > denominator:
        return q + 1
    if twice == denominator:
        return q if q >= 0 else q + 1
    return q


class GaussInt(RingElement):
    """高斯整数环 Z[i]"""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int = 0) -> None:
        self.re = re
        self.im = im

    @property
    def ring(self) -> RingDescriptor:
        return GAUSS

    def _key(self) -> Hashable:
        return self.re, self.im

    def _lift(self, value: int) -> "GaussInt":
        return GaussInt(value, 0)

    def _add(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def _mul(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def _divmod(self, other: "GaussInt") -> tuple["GaussInt", "GaussInt"]:
        # a / b = a·conj(b) / N(b), 每个坐标取最近整数
        n = other.norm()
        x = self.re * other.re + self.im * other.im
        y = self.im * other.re - self.re * other.im
        q = GaussInt(_round_half_toward_zero(x, n), _round_half_toward_zero(y, n))
        return q, self - other * q

    def _inverse(self) -> "GaussInt":
        return self.conjugate()

    def _canonical_unit(self) -> "GaussInt":
        # 规范相伴元落在 re > 0, im ≥ 0
        if self.re > 0 and self.im >= 0:
            return GaussInt(1, 0)
        if self.re <= 0 and self.im > 0:
            return GaussInt(0, 1)
        if self.re < 0 and self.im <= 0:
            return GaussInt(-1, 0)
        return GaussInt(0, -1)

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        return f"({self.re}{self.im:+d}i)"


@lru_cache(maxsize=64)
def polymod_ring(p: int) -> RingDescriptor:
    """返回 F_p[x] 的环描述 (会校验 p 为素数)"""
    return RingDescriptor(kind=RingKind.POLYMOD, p=p)


class PolyMod(RingElement):
    """F_p[x] 多项式, 系数从低次到高次, 不含尾部零"""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs: Sequence[int], p: int) -> None:
        reduced = [c % p for c in coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        self.coeffs: tuple[int, ...] = tuple(reduced)
        self.p = p

    @property
    def ring(self) -> RingDescriptor:
        return polymod_ring(self.p)

    @property
    def degree(self) -> int:
        """次数, 零多项式为 -1"""
        return len(self.coeffs) - 1

    def _same_ring(self, other: RingElement) -> bool:
        return isinstance(other, PolyMod) and other.p == self.p

    def _key(self) -> Hashable:
        return self.coeffs

    def _lift(self, value: int) -> "PolyMod":
        return PolyMod((value,), self.p)

    def _add(self, other: "PolyMod") -> "PolyMod":
        size = max(len(self.coeffs), len(other.coeffs))
        left = self.coeffs + (0,) * (size - len(self.coeffs))
        right = other.coeffs + (0,) * (size - len(other.coeffs))
        return PolyMod([a + b for a, b in zip(left, right)], self.p)

    def _mul(self, other: "PolyMod") -> "PolyMod":
        if not self.coeffs or not other.coeffs:
            return PolyMod((), self.p)
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return PolyMod(product, self.p)

    def _divmod(self, other: "PolyMod") -> tuple["PolyMod", "PolyMod"]:
        p = self.p
        divisor = other.coeffs
        remainder = list(self.coeffs)
        shift = len(remainder) - len(divisor)
        if shift < 0:
            return PolyMod((), p), self

        inv_lead = pow(divisor[-1], -1, p)
        quotient = [0] * (shift + 1)
        for k in range(shift, -1, -1):
            coef = remainder[k + len(divisor) - 1] * inv_lead % p
            quotient[k] = coef
            if coef:
                for j, d in enumerate(divisor):
                    remainder[k + j] = (remainder[k + j] - coef * d) % p
        return PolyMod(quotient, p), PolyMod(remainder, p)

    def _inverse(self) -> "PolyMod":
        return PolyMod((pow(self.coeffs[0], -1, self.p),), self.p)

    def _canonical_unit(self) -> "PolyMod":
        return PolyMod((self.coeffs[-1],), self.p)

    def __neg__(self) -> "PolyMod":
        return PolyMod([-c for c in self.coeffs], self.p)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def norm(self) -> int:
        return self.degree

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            coef = str(c) if c != 1 or k == 0 else ""
            terms.append(f"{coef}{power}")
        return " + ".join(terms)


def from_int(ring: RingDescriptor, value: int) -> RingElement:
    """
    将整数嵌入到指定环

    :param ring: 环描述
    :param value: 整数
    :return:
    """
    match ring.kind:
        case RingKind.INTEGER:
            return Integer(value)
        case RingKind.RATIONAL:
            return Rational(value)
        case RingKind.GAUSS:
            return GaussInt(value, 0)
        case _:
            return PolyMod((value,), ring.p or 0)


def zero(ring: RingDescriptor) -> RingElement:
    return from_int(ring, 0)


def one(ring: RingDescriptor) -> RingElement:
    return from_int(ring, 1)


def element(ring: RingDescriptor, payload: Any) -> RingElement:
    """
    根据载荷构造元素: 整数 / Fraction / (re, im) / 系数序列

    :param ring: 环描述
    :param payload: 元素载荷
    :return:
    :raises BadElement: 载荷与环类型不符时抛出
    """
    if isinstance(payload, RingElement):
        if payload.ring != ring:
            raise RingMismatch(f"{payload.ring} 的元素不能放入 {ring}")
        return payload

    match ring.kind:
        case RingKind.INTEGER if isinstance(payload, int):
            return Integer(payload)
        case RingKind.RATIONAL if isinstance(payload, int | Fraction):
            return Rational(payload)
        case RingKind.GAUSS if isinstance(payload, int):
            return GaussInt(payload, 0)
        case RingKind.GAUSS if isinstance(payload, Sequence) and len(payload) == 2:
            return GaussInt(int(payload[0]), int(payload[1]))
        case RingKind.POLYMOD if isinstance(payload, int):
            return PolyMod((payload,), ring.p or 0)
        case RingKind.POLYMOD if isinstance(payload, Sequence):
            return PolyMod([int(c) for c in payload], ring.p or 0)

    raise BadElement(f"{payload!r} 不是 {ring} 的元素")
