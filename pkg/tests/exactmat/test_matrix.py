# _author: Coke
# _date: 2024/9/21 14:00
# _description: 测试精确矩阵的构造、乘法、拼接及 JSON 模型

import pytest

from src.algebra.exactmat import (
    ExactMatrix,
    MatrixModel,
    block_matrix,
    diag_blocks,
    mat_mul,
    mat_product,
    permutation_matrix,
)
from src.algebra.exactmat.exceptions import NotSquare, ShapeMismatch
from src.algebra.rings import GAUSS, INTEGER, GaussInt, polymod_ring
from src.algebra.rings.exceptions import RingMismatch
from src.exceptions import ParseError
from src.models import load_model
from tests.utils import mat, poly, zmat


def test_mat_mul_examples() -> None:
    """测试精确乘法"""

    assert zmat([[1, 1], [0, 0]]) @ zmat([[-5, -3], [10, 6]]) == zmat([[5, 3], [0, 0]])

    a = zmat([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert ExactMatrix.identity(INTEGER, 3) @ a == a
    assert (ExactMatrix.zero(INTEGER, 2) @ zmat([[1, 2], [3, 4]])).is_zero()
    assert mat_mul(zmat([[1, 2]]), zmat([[3], [4]])) == zmat([[11]])


def test_mat_mul_errors() -> None:
    """测试维度与环不匹配"""

    with pytest.raises(ShapeMismatch):
        zmat([[1, 2]]) @ zmat([[1, 2]])
    with pytest.raises(RingMismatch):
        zmat([[1]]) @ mat(GAUSS, [[1]])


def test_construction_checks() -> None:
    """测试构造时的形状与环校验"""

    with pytest.raises(ShapeMismatch):
        zmat([[1, 2], [3]])
    with pytest.raises(ShapeMismatch):
        ExactMatrix(INTEGER, [])
    with pytest.raises(RingMismatch):
        ExactMatrix(INTEGER, [[GaussInt(1)]])
    with pytest.raises(NotSquare):
        zmat([[1, 2]]).require_square()


def test_matrix_helpers() -> None:
    """测试转置、子矩阵、迹及单位/零判定"""

    a = zmat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert a.transpose() == zmat([[1, 4, 7], [2, 5, 8], [3, 6, 9]])
    assert a.submatrix(1, 3, 0, 2) == zmat([[4, 5], [7, 8]])
    assert a.select_columns([2, 0]) == zmat([[3, 1], [6, 4], [9, 7]])
    assert a.trace() == 15
    assert a.row(1) == tuple(zmat([[4, 5, 6]]).row(0))
    assert a.column(0) == a.transpose().row(0)
    assert ExactMatrix.identity(INTEGER, 3).is_identity()
    assert not zmat([[1, 0], [0, 0]]).is_identity()
    assert -a + a == ExactMatrix.zero(INTEGER, 3)
    assert a.scale(2) - a == a
    assert ExactMatrix.unit_matrix(INTEGER, 2, 0, 1) == zmat([[0, 1], [0, 0]])


def test_block_helpers() -> None:
    """测试分块对角、分块拼接及置换矩阵"""

    assert diag_blocks(zmat([[2]]), zmat([[1, 1], [0, 1]])) == zmat([[2, 0, 0], [0, 1, 1], [0, 0, 1]])
    assert block_matrix([[zmat([[1, 0], [0, 1]]), zmat([[5], [6]])], [zmat([[0, 0]]), zmat([[0]])]]) == zmat(
        [[1, 0, 5], [0, 1, 6], [0, 0, 0]]
    )

    # Π·e_k = e_sigma(k)
    pi = permutation_matrix(INTEGER, [1, 2, 0])
    assert pi @ zmat([[1], [0], [0]]) == zmat([[0], [1], [0]])
    assert pi @ pi.transpose() == ExactMatrix.identity(INTEGER, 3)


def test_mat_product() -> None:
    """测试连乘, 空列表为单位矩阵"""

    assert mat_product(INTEGER, 2, []) == ExactMatrix.identity(INTEGER, 2)
    factors = [zmat([[1, 1], [0, 1]]), zmat([[1, 0], [1, 1]])]
    assert mat_product(INTEGER, 2, factors) == zmat([[2, 1], [1, 1]])


def test_matrix_model() -> None:
    """测试矩阵 JSON 的规范输出与解析"""

    a = mat(polymod_ring(5), [[[1, 2], 0], [[0, 1], [3]]])
    model = MatrixModel.from_matrix(a)
    data = model.canonical_json()

    assert data == (
        b'{"cols":2,"entries":[[["1","2"],[]],[["0","1"],["3"]]],'
        b'"ring":{"kind":"polymod","p":5},"rows":2}'
    )
    assert load_model(MatrixModel, data).to_matrix() == a
    assert a[1, 0] == poly(0, 1)


@pytest.mark.parametrize(
    ("data", "location"),
    [
        ('{"ring":{"kind":"integer"},"rows":2,"cols":1,"entries":[["1"]]}', "$"),
        ('{"ring":{"kind":"integer"},"rows":1,"cols":1}', "entries"),
        ('{"ring":{"kind":"polymod","p":6},"rows":1,"cols":1,"entries":[[[]]]}', "ring"),
        ('{"ring":{"kind":"integer"},"rows":1', "$"),
    ],
)
def test_matrix_model_rejects(data: str, location: str) -> None:
    """测试非法矩阵 JSON 抛出 ParseError 并给出位置"""

    with pytest.raises(ParseError) as exc_info:
        load_model(MatrixModel, data)

    assert exc_info.value.location == location


def test_matrix_model_bad_element() -> None:
    """测试元素编码错误的位置"""

    model = load_model(MatrixModel, '{"ring":{"kind":"integer"},"rows":1,"cols":2,"entries":[["1","x"]]}')
    with pytest.raises(ParseError) as exc_info:
        model.to_matrix("target")

    assert exc_info.value.location == "target.entries.0.1"
