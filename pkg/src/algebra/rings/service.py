# _author: Coke
# _date: 2024/9/4 09:40
# _description: 带余除法、扩展欧几里得算法、规范相伴元等环运算

from collections.abc import Iterable

from .elements import RingElement, one, zero
from .exceptions import BothZero, InexactDivision, RingMismatch
from .types import ExtGcdResult


def _check_same_ring(a: RingElement, b: RingElement) -> None:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} 与 {b.ring} 不能混合运算")


def euclid_div(a: RingElement, b: RingElement) -> tuple[RingElement, RingElement]:
    """
    带余除法 a = b·q + r

    整数取 0 ≤ r < |b|, 高斯整数对商的每个坐标四舍五入 (恰为 .5 向零取整),
    多项式使用长除法, 有理数域 r 恒为 0

    :param a: 被除数
    :param b: 除数
    :return: (q, r)
    :raises DivisionByZero: b 为零时抛出
    :raises RingMismatch: a, b 不属于同一个环时抛出
    """
    _check_same_ring(a, b)
    return divmod(a, b)


def canonical_associate(a: RingElement) -> tuple[RingElement, RingElement]:
    """
    将元素拆分为 可逆元·规范相伴元

    整数取正数, 多项式取首一, 高斯整数取 re > 0, im ≥ 0, 有理数取 1, 零返回 (1, 0)

    :param a: 元素
    :return: (u, a'), 满足 a = u·a'
    """
    if a.is_zero():
        return one(a.ring), a
    unit = a._canonical_unit()
    return unit, a * unit.inverse()


def ext_gcd(a: RingElement, b: RingElement) -> ExtGcdResult:
    """
    扩展欧几里得算法

    :param a: 第一个元素
    :param b: 第二个元素
    :return: (d, x, y), a·x + b·y = d 且 d 为规范相伴元
    :raises BothZero: a, b 同时为零时抛出
    """
    _check_same_ring(a, b)
    if a.is_zero() and b.is_zero():
        raise BothZero()

    old_r, r = a, b
    old_s, s = one(a.ring), zero(a.ring)
    old_t, t = zero(a.ring), one(a.ring)
    while not r.is_zero():
        q, rem = divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t

    unit, d = canonical_associate(old_r)
    inv = unit.inverse()
    return ExtGcdResult(d=d, x=old_s * inv, y=old_t * inv)


def divexact(a: RingElement, b: RingElement) -> RingElement:
    """
    整除 a / b

    :param a: 被除数
    :param b: 除数
    :return: 商
    :raises InexactDivision: 有余数时抛出
    """
    q, r = euclid_div(a, b)
    if not r.is_zero():
        raise InexactDivision(f"{b} 不能整除 {a}")
    return q


def divides(d: RingElement, a: RingElement) -> bool:
    """d 是否整除 a (零只整除零)"""
    if d.is_zero():
        return a.is_zero()
    return divmod(a, d)[1].is_zero()


def gcd_all(values: Iterable[RingElement]) -> RingElement:
    """
    求一组元素的规范最大公因子 (content), 全为零时返回零

    :param values: 元素序列, 至少包含一个元素
    :return:
    """
    items = list(values)
    g = zero(items[0].ring)
    for v in items:
        if v.is_zero():
            continue
        g = canonical_associate(v)[1] if g.is_zero() else ext_gcd(g, v).d
        if g.is_one():
            break
    return g


def lcm(a: RingElement, b: RingElement) -> RingElement:
    """规范最小公倍数"""
    if a.is_zero() or b.is_zero():
        return zero(a.ring)
    return canonical_associate(divexact(a * b, ext_gcd(a, b).d))[1]
