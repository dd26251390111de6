# _author: Coke
# _date: 2024/9/21 10:00
# _description: pytest 配置文件, 提供环描述及随机用例参数

import pytest
from hypothesis import HealthCheck, settings

from src.algebra.rings import GAUSS, INTEGER, RATIONAL, RingDescriptor, polymod_ring

from .types import RingCase

# 精确运算的用例耗时较长, 关闭 deadline
settings.register_profile("idemfact", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("idemfact")


@pytest.fixture
def integer() -> RingDescriptor:
    return INTEGER


@pytest.fixture
def rational() -> RingDescriptor:
    return RATIONAL


@pytest.fixture
def gauss() -> RingDescriptor:
    return GAUSS


@pytest.fixture
def f5() -> RingDescriptor:
    """F₅[x]"""
    return polymod_ring(5)


@pytest.fixture(
    params=[
        RingCase(ring=INTEGER, sizes=(2, 3, 4, 5), bound=9, count=1000, seconds=60),
        RingCase(ring=polymod_ring(5), sizes=(2, 3, 4), bound=3, count=300),
        RingCase(ring=GAUSS, sizes=(2, 3), bound=5, count=100),
    ],
    ids=lambda case: case.label,
)
def ring_case(request: pytest.FixtureRequest) -> RingCase:
    """
    各个环上的随机奇异矩阵用例

    :param request: <FixtureRequest> 对象
    :return:
    """
    return request.param
