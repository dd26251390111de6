# _author: Coke
# _date: 2024/9/21 11:50
# _description: 测试元素文本编码

from fractions import Fraction
from typing import Any

import pytest

from src.algebra.rings import (
    GAUSS,
    INTEGER,
    RATIONAL,
    GaussInt,
    Integer,
    Rational,
    RingDescriptor,
    RingElement,
    decode_element,
    encode_element,
    polymod_ring,
)
from src.algebra.rings.exceptions import BadElement
from src.exceptions import ParseError, status
from tests.utils import poly


@pytest.mark.parametrize(
    ("value", "code"),
    [
        (Integer(-12), "-12"),
        (Rational(Fraction(-3, 4)), "-3/4"),
        (Rational(2), "2"),
        (GaussInt(1, -2), ["1", "-2"]),
        (poly(1, 0, 3), ["1", "0", "3"]),
        (poly(), []),
    ],
)
def test_encode_element(value: RingElement, code: Any) -> None:
    """测试元素编码"""

    assert encode_element(value) == code
    assert decode_element(value.ring, code) == value


@pytest.mark.parametrize(
    ("ring", "code", "value"),
    [
        (INTEGER, "+7", Integer(7)),
        (RATIONAL, "6/4", Rational(Fraction(3, 2))),
        (RATIONAL, "-5", Rational(-5)),
        (GAUSS, ["0", "-1"], GaussInt(0, -1)),
    ],
)
def test_decode_element(ring: RingDescriptor, code: Any, value: RingElement) -> None:
    """测试非规范写法也能解析"""

    assert decode_element(ring, code) == value


@pytest.mark.parametrize(
    ("ring", "code"),
    [
        (INTEGER, "1.5"),
        (INTEGER, 3),
        (INTEGER, "5\n"),
        (INTEGER, "\u0665"),
        (RATIONAL, "1/2\n"),
        (GAUSS, ["\uff11", "0"]),
        (RATIONAL, "3/0"),
        (RATIONAL, "1/-2"),
        (GAUSS, ["1"]),
        (GAUSS, "1"),
        (polymod_ring(5), ["1", "5"]),
        (polymod_ring(5), ["1", "0"]),
        (polymod_ring(5), "1"),
    ],
)
def test_decode_element_rejects(ring: RingDescriptor, code: Any) -> None:
    """测试非法编码抛出 BadElement 并记录位置"""

    with pytest.raises(BadElement) as exc_info:
        decode_element(ring, code, "entries.0.1")

    assert isinstance(exc_info.value, ParseError)
    assert exc_info.value.STATUS_CODE == status.EXIT_65_PARSE
    assert exc_info.value.location == "entries.0.1"
