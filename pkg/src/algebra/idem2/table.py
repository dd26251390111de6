# _author: Coke
# _date: 2024/9/9 14:00
# _description: 2×2 矩阵的幂等分解表及单位平移分解

from src.algebra.exactmat import ExactMatrix, squeeze_idempotents
from src.algebra.rings import RingElement, one, zero

from .constants import ErrorCode, TableCase
from .exceptions import BadTableParams


def _m(a: RingElement, b: RingElement | int, c: RingElement | int, d: RingElement | int) -> ExactMatrix:
    """按 [[a, b], [c, d]] 构造 2×2 矩阵, 整数按 a 所在的环提升"""
    z = zero(a.ring)
    return ExactMatrix(a.ring, [[a, z + b], [z + c, z + d]], check=False)


def _case_a(a: RingElement) -> list[ExactMatrix]:
    """[[a, 0], [0, 0]]"""
    e = one(a.ring)
    return [_m(e, a, 0, 0), _m(e - 1, 0, 0, 1), _m(e, 0, 1, 0)]


def _case_a_prime(a: RingElement) -> list[ExactMatrix]:
    """[[0, 0], [a, 0]]"""
    z = zero(a.ring)
    return [_m(z, 0, a, 1), _m(z + 1, 0, 0, 0), _m(z + 1, 0, 1, 0)]


def _case_b(a: RingElement, c: RingElement) -> list[ExactMatrix]:
    """[[a, ac], [0, 0]]"""
    return _case_a(a) + [_m(one(a.ring), c, 0, 0)]


def _case_b_prime(a: RingElement, c: RingElement) -> list[ExactMatrix]:
    """[[a, 0], [ca, 0]]"""
    e = one(a.ring)
    return [_m(e, 0, c, 0), _m(e, 1, 0, 0), _m(e - 1, 0, 0, 1), _m(e, 0, a, 0)]


def _case_c(a: RingElement, c: RingElement) -> list[ExactMatrix]:
    """[[ac, a], [0, 0]]"""
    z = zero(a.ring)
    return [_m(z + 1, a, 0, 0), _m(z, 0, c, 1)]


def _case_c_prime(a: RingElement, c: RingElement) -> list[ExactMatrix]:
    """[[ca, 0], [a, 0]]"""
    z = zero(a.ring)
    return [_m(z, c, 0, 1), _m(z + 1, 0, a, 0)]


def table_factor_2x2(case: TableCase | str, *params: RingElement, column: bool = False) -> list[ExactMatrix]:
    """
    按分解表给出 2×2 矩阵的幂等因子

    情形 d 要求 b 可逆, 情形 e 要求 a 可逆, 参数为 (a, b);
    column=True 时 d / e 分解的是 [[a, 0], [b, 0]]

    :param case: 分解表情形
    :param params: 情形对应的参数, a/a' 一个参数, 其余两个
    :param column: d / e 情形是否分解列形式
    :return: 幂等因子列表, 乘积为该情形左侧的矩阵
    :raises BadTableParams: 参数个数不符时抛出
    :raises NotAUnit: d / e 情形要求的元素不可逆时抛出
    """
    case = TableCase(case)
    if len(params) != case.arity:
        raise BadTableParams(f"{ErrorCode.BAD_TABLE_PARAMS}: {case.value} 需要 {case.arity} 个参数")

    match case:
        case TableCase.A:
            return _case_a(params[0])
        case TableCase.A_PRIME:
            return _case_a_prime(params[0])
        case TableCase.B:
            return _case_b(*params)
        case TableCase.B_PRIME:
            return _case_b_prime(*params)
        case TableCase.C:
            return _case_c(*params)
        case TableCase.C_PRIME:
            return _case_c_prime(*params)
        case TableCase.D:
            a, b = params
            inv = b.inverse()
            return _case_c_prime(b, a * inv) if column else _case_c(b, inv * a)
        case _:
            a, b = params
            inv = a.inverse()
            return _case_b_prime(a, b * inv) if column else _case_b(a, inv * b)


def scalar_factors(d: RingElement) -> list[ExactMatrix]:
    """[[d, 0], [0, 0]] 的幂等因子, d = 1 时即为单个幂等矩阵"""
    if d.is_one():
        e = one(d.ring)
        return [_m(e, 0, 0, 0)]
    return _case_a(d)


def factor_unit_shift(a: RingElement, b: RingElement, x: RingElement) -> tuple[list[ExactMatrix], ExactMatrix]:
    """
    a + b·x = u 为可逆元时分解 [[a, b], [0, 0]]

    [[a, b], [0, 0]] = [[u, 0], [0, 0]]·[[va, vb], [0, 0]], v = u⁻¹, 其中第二个因子等于
    [[1, 0], [0, 0]]·(1; x)(va, vb), 而 (1; x)(va, vb) 是幂等矩阵

    :param a: 第一行第一个元素
    :param b: 第一行第二个元素
    :param x: 平移量
    :return: (幂等因子, 补全矩阵 P), P 满足 [[a, b], [-x, 1]]·P = [[u, 0], [0, 1]]
    :raises NotAUnit: a + b·x 不可逆时抛出
    """
    u = a + b * x
    v = u.inverse()
    a1, b1 = v * a, v * b

    factors = squeeze_idempotents(scalar_factors(u) + [_m(a1, b1, x * a1, x * b1)])
    completion = _m(one(a.ring), -b1, x, 1 - x * b1)
    return factors, completion
