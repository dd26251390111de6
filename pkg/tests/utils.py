# _author: Coke
# _date: 2024/9/21 09:40
# _description: 测试辅助函数及 hypothesis 策略

from collections.abc import Sequence
from typing import Any

from hypothesis import strategies as st

from src.algebra.exactmat import ExactMatrix, mat_product
from src.algebra.ge import DiagUnits, Elementary, GEFactor, Swap, realize
from src.algebra.rings import (
    GAUSS,
    INTEGER,
    RATIONAL,
    GaussInt,
    Integer,
    PolyMod,
    Rational,
    RingDescriptor,
    RingElement,
    divexact,
    ext_gcd,
    polymod_ring,
    zero,
)
from src.cli.service import draw_element
from src.utils import SplitMix64

F5 = polymod_ring(5)


def mat(ring: RingDescriptor, rows: Sequence[Sequence[Any]]) -> ExactMatrix:
    """用元素载荷构造矩阵"""
    return ExactMatrix.from_rows(ring, rows)


def zmat(rows: Sequence[Sequence[int]]) -> ExactMatrix:
    return mat(INTEGER, rows)


def poly(*coeffs: int) -> PolyMod:
    """F₅[x] 多项式, 系数从低次到高次"""
    return PolyMod(coeffs, 5)


def assert_idempotent_product(factors: Sequence[ExactMatrix], target: ExactMatrix) -> None:
    """每个因子幂等且有序乘积等于 target"""
    for factor in factors:
        assert factor @ factor == factor
    assert mat_product(target.ring, target.rows, factors) == target


def integers(bound: int = 9) -> st.SearchStrategy[RingElement]:
    return st.integers(-bound, bound).map(Integer)


def gaussians(bound: int = 5) -> st.SearchStrategy[RingElement]:
    return st.builds(GaussInt, st.integers(-bound, bound), st.integers(-bound, bound))


def polys(degree: int = 3) -> st.SearchStrategy[RingElement]:
    return st.lists(st.integers(0, 4), max_size=degree + 1).map(lambda coeffs: PolyMod(coeffs, 5))


def elements(ring: RingDescriptor, bound: int = 5) -> st.SearchStrategy[RingElement]:
    if ring == INTEGER:
        return integers(bound)
    if ring == GAUSS:
        return gaussians(bound)
    if ring == RATIONAL:
        return rationals(bound)
    return polys(3)


def square_matrices(ring: RingDescriptor, n: int, bound: int = 5) -> st.SearchStrategy[ExactMatrix]:
    rows = st.lists(st.lists(elements(ring, bound), min_size=n, max_size=n), min_size=n, max_size=n)
    return rows.map(lambda data: ExactMatrix(ring, data))


def rationals(bound: int = 5) -> st.SearchStrategy[RingElement]:
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=bound).map(Rational)


def random_unimodular(rng: SplitMix64, ring: RingDescriptor, n: int, steps: int = 6) -> tuple[ExactMatrix, ExactMatrix]:
    """随机初等矩阵的乘积 P 及其逆 (n ≥ 2)"""
    factors: list[Elementary] = []
    for _ in range(steps):
        i = rng.below(n)
        j = (i + 1 + rng.below(n - 1)) % n
        factors.append(Elementary(i=i + 1, j=j + 1, c=draw_element(rng, ring, 3)))
    inverse = [factor.inverse() for factor in reversed(factors)]
    return realize(factors, ring, n), realize(inverse, ring, n)


def random_idempotent_2x2(rng: SplitMix64, ring: RingDescriptor, bound: int = 9) -> ExactMatrix:
    """随机 Bézout 四元组对应的 2×2 幂等矩阵 (a; b)(x, y)"""
    while True:
        a, b = draw_element(rng, ring, bound), draw_element(rng, ring, bound)
        if not (a.is_zero() and b.is_zero()):
            break
    d = ext_gcd(a, b).d
    a, b = divexact(a, d), divexact(b, d)
    _, x, y = ext_gcd(a, b)
    return ExactMatrix(ring, [[a * x, a * y], [b * x, b * y]])


def units(ring: RingDescriptor) -> list[RingElement]:
    """环中的可逆元 (F₅[x] 取非零常数)"""
    if ring == INTEGER:
        return [Integer(1), Integer(-1)]
    if ring == GAUSS:
        return [GaussInt(1, 0), GaussInt(-1, 0), GaussInt(0, 1), GaussInt(0, -1)]
    return [PolyMod((k,), 5) for k in range(1, 5)]


def ge_factors(ring: RingDescriptor, n: int) -> st.SearchStrategy[GEFactor]:
    """作用于 n 阶矩阵的 GE 因子"""
    pairs = st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda p: p[0] != p[1])
    elementary = st.builds(lambda p, c: Elementary(i=p[0], j=p[1], c=c), pairs, elements(ring, 3))
    diag = st.lists(st.sampled_from(units(ring)), min_size=1, max_size=n).map(lambda us: DiagUnits(units=tuple(us)))
    swap = pairs.map(lambda p: Swap(i=p[0], j=p[1]))
    return st.one_of(elementary, diag, swap)


def random_nonsingular(rng: SplitMix64, ring: RingDescriptor, n: int) -> ExactMatrix:
    """P·diag(d₁, …, d_n)·Q, P, Q 为随机单模矩阵, d_k 非零 (n ≥ 2)"""
    entries: list[RingElement] = []
    while len(entries) < n:
        d = draw_element(rng, ring, 3)
        if not d.is_zero():
            entries.append(d)
    z = zero(ring)
    diagonal = ExactMatrix(ring, [[entries[i] if i == j else z for j in range(n)] for i in range(n)])
    p, _ = random_unimodular(rng, ring, n)
    q, _ = random_unimodular(rng, ring, n)
    return p @ diagonal @ q


def random_ge_factor(rng: SplitMix64, ring: RingDescriptor, n: int) -> GEFactor:
    """随机 GE 因子 (n ≥ 2), 初等、对换、对角各占三分之一"""
    i = rng.below(n)
    j = (i + 1 + rng.below(n - 1)) % n
    match rng.below(3):
        case 0:
            return Elementary(i=i + 1, j=j + 1, c=draw_element(rng, ring, 9))
        case 1:
            return Swap(i=i + 1, j=j + 1)
    choices = units(ring)
    return DiagUnits(units=tuple(choices[rng.below(len(choices))] for _ in range(n)))
