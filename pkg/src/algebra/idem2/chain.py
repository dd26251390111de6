# _author: Coke
# _date: 2024/9/10 10:15
# _description: 幂等链、r 系数序列与欧几里得商序列之间的相互转换

import logging
from collections.abc import Sequence

from src.algebra.exactmat import ExactMatrix, mat_product
from src.algebra.rings import RingElement, ext_gcd, one, zero

from .constants import ErrorCode
from .exceptions import BadChain, NotCoprime, NotNormalized
from .types import BezoutQuad, IdemChain2, RSeq


def idempotent_from_bezout(quad: BezoutQuad) -> ExactMatrix:
    """
    四元组对应的幂等矩阵 (a; b)(c, d) = [[ac, ad], [bc, bd]]

    :param quad: Bézout 四元组
    :return:
    """
    a, b, c, d = quad.as_tuple()
    return ExactMatrix(a.ring, [[a * c, a * d], [b * c, b * d]], check=False)


def chain_to_idempotents(chain: IdemChain2) -> list[ExactMatrix]:
    """
    幂等链展开为幂等矩阵列表, 规范链的乘积为 [[c_n, d_n], [0, 0]]

    :param chain: 幂等链
    :return:
    """
    return [idempotent_from_bezout(quad) for quad in chain.quads]


def normalize_chain(chain: IdemChain2, target: tuple[RingElement, RingElement]) -> IdemChain2:
    """
    把乘积为 [[a, b], [0, 0]] 的幂等链规范化

    首个四元组改写为 (1, 0, 1, a₁d₁), 之后逐个计算 u_i = c_i'·a_{i+1} + d_i'·b_{i+1},
    并把下一个四元组缩放为 (a·u⁻¹, b·u⁻¹, u·c, u·d), 每个幂等矩阵保持不变

    :param chain: 幂等链
    :param target: 目标第一行 (a, b)
    :return: 规范化的幂等链
    :raises BadChain: 乘积与目标不符或级联单位不可逆时抛出
    :raises NotCoprime: a, b 不互素时抛出
    """
    a, b = target
    if not chain.quads:
        raise BadChain(ErrorCode.EMPTY_CHAIN)

    ring = a.ring
    expected = ExactMatrix(ring, [[a, b], [zero(ring), zero(ring)]])
    if mat_product(ring, 2, chain_to_idempotents(chain)) != expected:
        raise BadChain(f"{ErrorCode.BAD_CHAIN}: 乘积不等于 [[{a}, {b}], [0, 0]]")
    if not ext_gcd(a, b).d.is_one():
        raise NotCoprime(f"{ErrorCode.NOT_COPRIME}: ({a}, {b})")

    first = chain.quads[0]
    if not first.b.is_zero() or not first.a.is_unit():
        raise BadChain(f"{ErrorCode.BAD_CHAIN}: 首个四元组必须满足 b₁ = 0 且 a₁ 可逆")

    quads = [BezoutQuad.of(one(ring), zero(ring), one(ring), first.a * first.d)]
    for quad in chain.quads[1:]:
        previous = quads[-1]
        unit = previous.c * quad.a + previous.d * quad.b
        if not unit.is_unit():
            raise BadChain(f"{ErrorCode.BAD_CHAIN}: 级联单位 {unit} 不可逆")
        inv = unit.inverse()
        quads.append(BezoutQuad.of(quad.a * inv, quad.b * inv, unit * quad.c, unit * quad.d))

    return IdemChain2(quads=quads, normalized=True)


def _check_normalized(chain: IdemChain2) -> None:
    if not chain.quads:
        raise NotNormalized(ErrorCode.EMPTY_CHAIN)
    first = chain.quads[0]
    if not (first.a.is_one() and first.c.is_one() and first.b.is_zero()):
        raise NotNormalized(f"{ErrorCode.NOT_NORMALIZED}: 首个四元组必须为 (1, 0, 1, d₁)")
    for k, (left, right) in enumerate(zip(chain.quads, chain.quads[1:]), start=1):
        if not (left.c * right.a + left.d * right.b).is_one():
            raise NotNormalized(f"{ErrorCode.NOT_NORMALIZED}: 第 {k} 个链接关系不成立")


def chain_to_rseq(chain: IdemChain2) -> RSeq:
    """
    规范幂等链转换为 r 系数序列

    r₀ = -d₁, 对 1 ≤ k ≤ n-1: r_{2k-1} = a_k·b_{k+1} - a_{k+1}·b_k, r_{2k} = c_{k+1}·d_k - c_k·d_{k+1}

    :param chain: 规范幂等链
    :return: 长度 2n-1 的系数序列
    :raises NotNormalized: 链未规范化时抛出
    """
    _check_normalized(chain)
    quads = chain.quads
    coeffs = [-quads[0].d]
    for left, right in zip(quads, quads[1:]):
        coeffs.append(left.a * right.b - right.a * left.b)
        coeffs.append(right.c * left.d - left.c * right.d)
    return RSeq(coeffs=coeffs)


def _solve_2x2(
    matrix: tuple[tuple[RingElement, RingElement], tuple[RingElement, RingElement]],
    rhs: tuple[RingElement, RingElement],
) -> tuple[RingElement, RingElement]:
    """Cramer 法则解 2×2 方程组, 系数行列式必须可逆"""
    (p, q), (r, s) = matrix
    inv = (p * s - q * r).inverse()
    return (rhs[0] * s - q * rhs[1]) * inv, (p * rhs[1] - r * rhs[0]) * inv


def rseq_to_chain(rseq: RSeq) -> IdemChain2:
    """
    r 系数序列还原为规范幂等链

    a₁ = c₁ = 1, b₁ = 0, d₁ = -r₀; 之后依次解
    a_i·b_{i+1} - b_i·a_{i+1} = r_{2i-1}, c_i·a_{i+1} + d_i·b_{i+1} = 1 求 (a_{i+1}, b_{i+1}),
    d_i·c_{i+1} - c_i·d_{i+1} = r_{2i}, a_{i+1}·c_{i+1} + b_{i+1}·d_{i+1} = 1 求 (c_{i+1}, d_{i+1}),
    两个方程组的系数行列式分别为 -1 和 1

    :param rseq: 奇数长度的系数序列
    :return: 规范幂等链
    """
    coeffs = rseq.coeffs
    ring = coeffs[0].ring
    e, z = one(ring), zero(ring)
    quads = [BezoutQuad.of(e, z, e, -coeffs[0])]
    for i in range(1, rseq.chain_length):
        a, b, c, d = quads[-1].as_tuple()
        a_next, b_next = _solve_2x2(((-b, a), (c, d)), (coeffs[2 * i - 1], e))
        c_next, d_next = _solve_2x2(((d, -c), (a_next, b_next)), (coeffs[2 * i], e))
        quads.append(BezoutQuad.of(a_next, b_next, c_next, d_next))
    return IdemChain2(quads=quads, normalized=True)


def continuant_matrix(r: RingElement) -> ExactMatrix:
    """M(r) = [[r, 1], [1, 0]]"""
    e, z = one(r.ring), zero(r.ring)
    return ExactMatrix(r.ring, [[r, e], [e, z]], check=False)


def rseq_matrix(rseq: RSeq) -> ExactMatrix:
    """
    M(r_top)⋯M(r₀)·S, S = [[0, -1], [1, 0]], 其第一行即 (1, 0) 映射到的 (a, b)

    :param rseq: 系数序列
    :return:
    """
    ring = rseq.coeffs[0].ring
    e, z = one(ring), zero(ring)
    factors = [continuant_matrix(r) for r in reversed(rseq.coeffs)]
    factors.append(ExactMatrix(ring, [[z, -e], [e, z]], check=False))
    return mat_product(ring, 2, factors)


def euclid_rseq(a: RingElement, b: RingElement) -> RSeq:
    """
    对 (-b, a) 做欧几里得算法得到商序列, 满足 (-b, a) = (g, 0)·M(q_t)⋯M(q₀)

    最后的余数 g 为非 1 的可逆元时在高位补 (0, -g⁻¹, g), 因为 (1, 0)·M(g)·M(-g⁻¹)·M(0) = (g, 0);
    长度为偶数时在高位补 (0, -1, 1), 因为 (1, 0)·M(1)·M(-1)·M(e) = (1, 0)

    :param a: 第一行第一个元素
    :param b: 第一行第二个元素
    :return: 奇数长度的系数序列, (a, b) = (1, 0)·M(r_top)⋯M(r₀)·S
    :raises NotCoprime: a, b 不互素时抛出
    """
    if not ext_gcd(a, b).d.is_one():
        raise NotCoprime(f"{ErrorCode.NOT_COPRIME}: ({a}, {b})")

    ring = a.ring
    quotients: list[RingElement] = []
    x, y = -b, a
    while not y.is_zero():
        q, r = divmod(x, y)
        quotients.append(q)
        x, y = y, r

    if not x.is_one():
        quotients += [zero(ring), -x.inverse(), x]
    if len(quotients) % 2 == 0:
        quotients += [zero(ring), -one(ring), one(ring)]

    logging.debug(f"euclid r-sequence of ({a}, {b}) has length {len(quotients)}")
    return RSeq(coeffs=quotients)


def coprime_factors(a: RingElement, b: RingElement) -> list[ExactMatrix]:
    """
    互素的 (a, b) 对应的 [[a, b], [0, 0]] 的幂等因子: 商序列 → 幂等链 → 幂等矩阵

    :param a: 第一行第一个元素
    :param b: 第一行第二个元素
    :return:
    """
    return chain_to_idempotents(rseq_to_chain(euclid_rseq(a, b)))


def chain_from_quads(quads: Sequence[tuple[RingElement, RingElement, RingElement, RingElement]]) -> IdemChain2:
    """由四元组元组构造 (未规范化的) 幂等链"""
    return IdemChain2(quads=[BezoutQuad.of(*quad) for quad in quads])
