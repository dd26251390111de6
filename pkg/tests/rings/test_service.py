# _author: Coke
# _date: 2024/9/21 11:10
# _description: 测试带余除法、扩展欧几里得算法及规范相伴元

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.algebra.rings import (
    FractionElement,
    GaussInt,
    Integer,
    RingElement,
    canonical_associate,
    divexact,
    divides,
    euclid_div,
    ext_gcd,
    gcd_all,
    lcm,
)
from src.algebra.rings.exceptions import BothZero, InexactDivision, RingMismatch
from tests.utils import gaussians, integers, poly, polys


@pytest.mark.parametrize(
    ("a", "b", "q", "r"),
    [
        (Integer(7), Integer(3), Integer(2), Integer(1)),
        (Integer(-3), Integer(5), Integer(-1), Integer(2)),
        (Integer(7), Integer(-3), Integer(-2), Integer(1)),
        (poly(1, 0, 1), poly(1, 1), poly(4, 1), poly(2)),
        (GaussInt(1), GaussInt(2), GaussInt(0), GaussInt(1)),
        (GaussInt(-1), GaussInt(2), GaussInt(0), GaussInt(-1)),
    ],
)
def test_euclid_div_examples(a: RingElement, b: RingElement, q: RingElement, r: RingElement) -> None:
    """测试带余除法的规范取法: 整数余数非负, 高斯整数 .5 向零取整"""

    assert euclid_div(a, b) == (q, r)


@given(a=integers(50), b=integers(50).filter(lambda v: not v.is_zero()))
def test_euclid_div_integer(a: Integer, b: Integer) -> None:
    """测试整数 a = b·q + r 且 0 ≤ r < |b|"""

    q, r = euclid_div(a, b)
    assert b * q + r == a
    assert 0 <= r.value < abs(b.value)


@given(a=gaussians(20), b=gaussians(20).filter(lambda v: not v.is_zero()))
def test_euclid_div_gauss(a: GaussInt, b: GaussInt) -> None:
    """测试高斯整数余数的范数不超过除数范数的一半"""

    q, r = euclid_div(a, b)
    assert b * q + r == a
    assert 2 * r.norm() <= b.norm()


@given(a=polys(5), b=polys(3).filter(lambda v: not v.is_zero()))
def test_euclid_div_polymod(a: RingElement, b: RingElement) -> None:
    """测试多项式余数的次数小于除数"""

    q, r = euclid_div(a, b)
    assert b * q + r == a
    assert r.norm() < b.norm() or r.is_zero()


def test_euclid_div_ring_mismatch() -> None:
    """测试不同环的带余除法"""

    with pytest.raises(RingMismatch):
        euclid_div(Integer(3), GaussInt(1))


@pytest.mark.parametrize(
    ("a", "b", "d", "x", "y"),
    [
        (Integer(12), Integer(18), Integer(6), Integer(-1), Integer(1)),
        (Integer(5), Integer(3), Integer(1), Integer(-1), Integer(2)),
        (poly(4, 0, 1), poly(4, 1), poly(4, 1), poly(), poly(1)),
    ],
)
def test_ext_gcd_examples(a: RingElement, b: RingElement, d: RingElement, x: RingElement, y: RingElement) -> None:
    """测试扩展欧几里得算法的确定性输出"""

    assert ext_gcd(a, b) == (d, x, y)


@given(data=st.data(), source=st.sampled_from(["integer", "gauss", "polymod"]))
def test_ext_gcd_bezout(data: st.DataObject, source: str) -> None:
    """测试 a·x + b·y = d, d 整除 a 与 b, 且 d 为规范相伴元"""

    strategy = {"integer": integers(30), "gauss": gaussians(10), "polymod": polys(4)}[source]
    a, b = data.draw(strategy), data.draw(strategy)
    if a.is_zero() and b.is_zero():
        with pytest.raises(BothZero):
            ext_gcd(a, b)
        return

    d, x, y = ext_gcd(a, b)
    assert a * x + b * y == d
    assert divides(d, a) and divides(d, b)
    assert canonical_associate(d)[0].is_one()


@pytest.mark.parametrize(
    ("value", "unit", "canonical"),
    [
        (Integer(-6), Integer(-1), Integer(6)),
        (poly(1, 3), poly(3), poly(2, 1)),
        (Integer(0), Integer(1), Integer(0)),
        (GaussInt(1, -1), GaussInt(0, -1), GaussInt(1, 1)),
    ],
)
def test_canonical_associate(value: RingElement, unit: RingElement, canonical: RingElement) -> None:
    """测试规范相伴元: 正数、首一、第一象限"""

    assert canonical_associate(value) == (unit, canonical)


@given(value=st.one_of(integers(50), gaussians(10), polys(4)))
def test_canonical_associate_idempotent(value: RingElement) -> None:
    """测试规范相伴元的规范相伴元是自身"""

    unit, canonical = canonical_associate(value)
    assert unit.is_unit()
    assert unit * canonical == value
    again = canonical_associate(canonical)
    assert again[0].is_one() and again[1] == canonical


def test_exact_division_helpers() -> None:
    """测试整除、content 及最小公倍数"""

    assert divexact(Integer(12), Integer(-4)) == -3
    with pytest.raises(InexactDivision):
        divexact(Integer(7), Integer(2))

    assert divides(Integer(0), Integer(0)) and not divides(Integer(0), Integer(3))
    assert gcd_all([Integer(0), Integer(-6), Integer(4)]) == 2
    assert gcd_all([Integer(0), Integer(0)]) == 0
    assert lcm(Integer(4), Integer(-6)) == 12
    assert lcm(poly(0, 1), poly(0, 2)) == poly(0, 1)


@given(p=integers(9), q=integers(9), r=integers(9), s=integers(9))
def test_fraction_sum_reduced(p: Integer, q: Integer, r: Integer, s: Integer) -> None:
    """测试分式求和后已约分且分母规范"""

    if q.is_zero() or s.is_zero():
        return
    total = FractionElement(p, q) + FractionElement(r, s)
    assert canonical_associate(total.den)[0].is_one()
    if not total.num.is_zero():
        assert ext_gcd(total.num, total.den).d.is_one()
