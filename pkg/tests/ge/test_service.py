# _author: Coke
# _date: 2024/9/23 09:20
# _description: 测试 GE 因子、三角化及 GE₂ 分解

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.exactmat import ExactMatrix, mat_product
from src.algebra.exactmat.exceptions import NotInvertible
from src.algebra.ge import (
    DiagUnits,
    Elementary,
    GEDecompositionModel,
    Strategy,
    Swap,
    continuant_factors,
    ge2_decompose,
    realize,
    triangularize,
)
from src.algebra.ge.exceptions import BadIndex, BadStrategy
from src.algebra.rings import GAUSS, INTEGER, Integer, RingDescriptor, RingElement, one
from src.algebra.rings.exceptions import NotAUnit
from src.models import load_model
from src.utils import SplitMix64
from tests.utils import F5, ge_factors, random_ge_factor, square_matrices, zmat

RINGS = [INTEGER, F5, GAUSS]


def test_factor_validation() -> None:
    """测试因子下标与可逆性校验"""

    with pytest.raises(BadIndex):
        Elementary(i=1, j=1, c=Integer(3))

    with pytest.raises(BadIndex):
        Swap(i=2, j=2)

    with pytest.raises(NotAUnit):
        DiagUnits.of(Integer(1), Integer(2))

    with pytest.raises(BadIndex):
        Elementary(i=1, j=3, c=Integer(3)).to_matrix(INTEGER, 2)


def test_factor_matrices() -> None:
    """测试因子对应的矩阵及其逆"""

    factor = Elementary(i=2, j=1, c=Integer(5))
    assert factor.to_matrix(INTEGER, 2) == zmat([[1, 0], [5, 1]])
    assert factor.to_matrix(INTEGER, 2) @ factor.inverse().to_matrix(INTEGER, 2) == zmat([[1, 0], [0, 1]])

    assert Swap(i=1, j=3).to_matrix(INTEGER, 3) == zmat([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert DiagUnits.of(Integer(-1)).to_matrix(INTEGER, 3) == zmat([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_continuant_identity() -> None:
    """测试五个 GE 因子的乘积为 [[r, 1], [1, 0]]"""

    for r in (Integer(0), Integer(4), Integer(-7)):
        factors = continuant_factors(r)
        assert realize(factors, INTEGER, 2) == ExactMatrix(INTEGER, [[r, Integer(1)], [Integer(1), Integer(0)]])

    assert len(continuant_factors(Integer(4))) == 5
    assert len(continuant_factors(Integer(0))) == 4


def test_triangularize_examples() -> None:
    """测试三角化示例"""

    factors, upper = triangularize(zmat([[2, 1], [4, 3]]))
    assert factors == [Elementary(i=2, j=1, c=Integer(-2))]
    assert upper == zmat([[2, 1], [0, 1]])

    factors, upper = triangularize(zmat([[0, 1], [1, 0]]))
    assert factors == [Swap(i=1, j=2)]
    assert upper == zmat([[1, 0], [0, 1]])

    # 非零主元不对换, 主元与下方元素交替约化
    factors, upper = triangularize(zmat([[2, 0], [3, 1]]))
    assert factors == [
        Elementary(i=2, j=1, c=Integer(-1)),
        Elementary(i=1, j=2, c=Integer(-1)),
        Elementary(i=2, j=1, c=Integer(-1)),
    ]
    assert upper == zmat([[1, -1], [0, 2]])

    factors, upper = triangularize(zmat([[2, 1], [1, 1]]))
    assert factors == [Elementary(i=1, j=2, c=Integer(-1)), Elementary(i=2, j=1, c=Integer(-1))]
    assert upper == zmat([[1, 0], [0, 1]])


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=50)
@given(data=st.data())
def test_triangularize_tracks_factors(ring: RingDescriptor, data: st.DataObject) -> None:
    """测试 F_l⋯F₁·A = D 且 D 为上三角矩阵"""

    n = data.draw(st.integers(2, 4))
    matrix = data.draw(square_matrices(ring, n, 3))
    factors, upper = triangularize(matrix)

    assert realize(list(reversed(factors)), ring, n) @ matrix == upper
    assert all(upper[i, j].is_zero() for i in range(n) for j in range(i))


def test_ge2_euclid_example() -> None:
    """测试 euclid 策略的分解结果"""

    factors = ge2_decompose(zmat([[2, 1], [1, 1]]))
    assert factors == [Elementary(i=1, j=2, c=Integer(1)), Elementary(i=2, j=1, c=Integer(1))]

    assert ge2_decompose(zmat([[1, 0], [0, 1]])) == []
    assert ge2_decompose(zmat([[0, 1], [1, 0]])) == [Swap(i=1, j=2)]


def test_ge2_unit_shift() -> None:
    """测试 unit-shift 策略及其错误"""

    target = zmat([[2, 1], [1, 1]])
    factors = ge2_decompose(target, Strategy.UNIT_SHIFT, Integer(-1))
    assert realize(factors, INTEGER, 2) == target

    with pytest.raises(BadStrategy):
        ge2_decompose(target, "unit-shift")

    with pytest.raises(NotAUnit):
        ge2_decompose(target, Strategy.UNIT_SHIFT, Integer(0))

    with pytest.raises(BadStrategy):
        ge2_decompose(target, "gauss")


def test_ge2_continuant() -> None:
    """测试 continuant 策略"""

    target = zmat([[5, 3], [3, 2]])
    assert realize(ge2_decompose(target, Strategy.CONTINUANT), INTEGER, 2) == target


def test_ge2_not_invertible() -> None:
    """测试行列式不可逆的矩阵"""

    with pytest.raises(NotInvertible):
        ge2_decompose(zmat([[2, 0], [0, 1]]))

    with pytest.raises(NotInvertible):
        ge2_decompose(zmat([[1, 2], [2, 4]]))


def _shift(matrix: ExactMatrix) -> RingElement | None:
    """使 a + bx 可逆的平移量, 找不到时返回 None"""
    (a, b), _ = matrix.entries
    if a.is_unit():
        return a - a
    if b.is_unit():
        return b.inverse() * (one(a.ring) - a)
    return None


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=200)
@given(data=st.data())
def test_ge2_random_products(ring: RingDescriptor, data: st.DataObject) -> None:
    """测试随机 GE 因子乘积经各个策略分解后乘积不变"""

    generators = data.draw(st.lists(ge_factors(ring, 2), max_size=8))
    target = realize(generators, ring, 2)

    for strategy in (Strategy.EUCLID, Strategy.CONTINUANT):
        assert realize(ge2_decompose(target, strategy), ring, 2) == target

    x = _shift(target)
    if x is not None:
        assert realize(ge2_decompose(target, Strategy.UNIT_SHIFT, x), ring, 2) == target


@pytest.mark.acceptance
def test_ge2_full() -> None:
    """测试 200 个随机可逆 2×2 矩阵的分解及五因子恒等式"""

    rng = SplitMix64(6)
    e, z = Integer(1), Integer(0)
    for _ in range(200):
        generators = [random_ge_factor(rng, INTEGER, 2) for _ in range(rng.below(9))]
        target = realize(generators, INTEGER, 2)
        for strategy in (Strategy.EUCLID, Strategy.CONTINUANT):
            assert realize(ge2_decompose(target, strategy), INTEGER, 2) == target

        r = Integer(rng.symmetric(9))
        assert realize(continuant_factors(r), INTEGER, 2) == ExactMatrix(INTEGER, [[r, e], [e, z]])


def test_decomposition_model() -> None:
    """测试 GE 因子列表的 JSON 模型"""

    factors = ge2_decompose(zmat([[2, 1], [1, 1]]))
    model = GEDecompositionModel.from_factors(INTEGER, factors)
    data = model.canonical_json()

    assert data == (
        b'{"factors":[{"c":"1","i":1,"j":2,"kind":"elementary"},{"c":"1","i":2,"j":1,"kind":"elementary"}],'
        b'"ring":{"kind":"integer"}}'
    )
    assert load_model(GEDecompositionModel, data).to_factors() == factors
    assert mat_product(INTEGER, 2, [f.to_matrix(INTEGER, 2) for f in factors]) == zmat([[2, 1], [1, 1]])
