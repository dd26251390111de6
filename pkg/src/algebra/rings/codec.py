# _author: Coke
# _date: 2024/9/4 14:10
# _description: 元素文本编码, 所有文件格式共用

import re
from fractions import Fraction
from typing import Any

from .constants import RingKind
from .elements import GaussInt, Integer, PolyMod, Rational, RingElement, element
from .exceptions import BadElement
from .types import RingDescriptor

INTEGER_PATTERN = re.compile(r"[+-]?\d+", re.ASCII)
RATIONAL_PATTERN = re.compile(r"[+-]?\d+(/\d+)?", re.ASCII)

ElementCode = str | list[str]


def encode_element(value: RingElement) -> ElementCode:
    """
    元素编码: 整数为十进制字符串, 有理数为 "n/d" 或 "n",
    高斯整数为 [re, im], 多项式为从低到高的系数数组

    :param value: 元素
    :return:
    """
    match value:
        case Integer():
            return str(value.value)
        case Rational():
            return str(value.value)
        case GaussInt():
            return [str(value.re), str(value.im)]
        case PolyMod():
            return [str(c) for c in value.coeffs]
    raise BadElement(f"未知的元素类型 {type(value).__name__}")


def _parse_integer(text: Any, location: str | None) -> int:
    if not isinstance(text, str) or not INTEGER_PATTERN.fullmatch(text):
        raise BadElement(f"{text!r} 不是十进制整数", location)
    return int(text)


def decode_element(ring: RingDescriptor, code: Any, location: str | None = None) -> RingElement:
    """
    按环类型解析元素编码

    :param ring: 环描述
    :param code: 编码后的元素
    :param location: 出错时报告的位置
    :return:
    :raises BadElement: 编码不合法时抛出
    """
    match ring.kind:
        case RingKind.INTEGER:
            return Integer(_parse_integer(code, location))
        case RingKind.RATIONAL:
            if not isinstance(code, str) or not RATIONAL_PATTERN.fullmatch(code):
                raise BadElement(f"{code!r} 不是有理数", location)
            num, _, den = code.partition("/")
            if den and int(den) == 0:
                raise BadElement(f"{code!r} 分母为零", location)
            return Rational(Fraction(int(num), int(den or "1")))
        case RingKind.GAUSS:
            if not isinstance(code, list) or len(code) != 2:
                raise BadElement(f"{code!r} 不是 [re, im]", location)
            return GaussInt(_parse_integer(code[0], location), _parse_integer(code[1], location))
        case _:
            if not isinstance(code, list):
                raise BadElement(f"{code!r} 不是系数数组", location)
            p = ring.p or 0
            coeffs = [_parse_integer(c, location) for c in code]
            if any(c < 0 or c >= p for c in coeffs):
                raise BadElement(f"{code!r} 的系数不在 [0, {p}) 内", location)
            if coeffs and coeffs[-1] == 0:
                raise BadElement(f"{code!r} 含有尾部零系数", location)
            return element(ring, coeffs)
