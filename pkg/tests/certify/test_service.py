# _author: Coke
# _date: 2024/9/24 15:20
# _description: 测试证书校验与规范序列化

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.certify import (
    CertificateMeta,
    FactorizationCertificate,
    build_certificate,
    dumps_certificate,
    loads_certificate,
    roundtrip_serialize,
    verify_certificate,
)
from src.algebra.certify.constants import Reason
from src.algebra.exactmat import ExactMatrix, is_idempotent, mat_product
from src.algebra.ipn import factor_singular
from src.algebra.rings import INTEGER, RingDescriptor
from src.cli.service import draw_singular
from src.exceptions import ParseError
from src.utils import SplitMix64
from tests.utils import F5, zmat

TARGET = zmat([[5, 3], [0, 0]])
FACTORS = [zmat([[1, 1], [0, 0]]), zmat([[-5, -3], [10, 6]])]


def _certificate(target: ExactMatrix, factors: list[ExactMatrix]) -> FactorizationCertificate:
    return build_certificate(target, factors, "test")


def test_verify_valid() -> None:
    """测试合法证书"""

    verdict = verify_certificate(_certificate(TARGET, FACTORS))
    assert verdict.valid
    assert verdict.reason is None

    identity = ExactMatrix.identity(INTEGER, 3)
    assert verify_certificate(_certificate(identity, [])).valid


def test_verify_rejects() -> None:
    """测试各类不合法的证书"""

    tampered = [FACTORS[0], zmat([[-5, -3], [10, 7]])]
    assert verify_certificate(_certificate(TARGET, tampered)).reason == f"{Reason.NOT_IDEMPOTENT}: 第 1 个因子"

    wrong_product = [FACTORS[1], FACTORS[0]]
    assert verify_certificate(_certificate(TARGET, wrong_product)).reason == Reason.PRODUCT_MISMATCH

    empty = verify_certificate(_certificate(TARGET, []))
    assert not empty.valid
    assert empty.reason == Reason.EMPTY_NOT_IDENTITY

    shape = verify_certificate(_certificate(TARGET, [ExactMatrix.identity(INTEGER, 3)]))
    assert not shape.valid
    assert shape.reason is not None and shape.reason.startswith(Reason.SHAPE_MISMATCH)

    ring = verify_certificate(_certificate(TARGET, [ExactMatrix.identity(F5, 2)]))
    assert not ring.valid
    assert ring.reason is not None and ring.reason.startswith(Reason.RING_MISMATCH)

    declared = FactorizationCertificate(
        ring=F5, target=TARGET, factors=FACTORS, meta=CertificateMeta(algorithm="test", count=2)
    )
    assert verify_certificate(declared).reason == Reason.RING_MISMATCH

    not_square = verify_certificate(_certificate(zmat([[1, 2, 3]]), []))
    assert not_square.reason == Reason.TARGET_NOT_SQUARE


def test_verify_single_entry_mutations() -> None:
    """测试对任意一个因子元素加一后校验不通过"""

    for k, factor in enumerate(FACTORS):
        for i in range(2):
            for j in range(2):
                rows = factor.to_lists()
                rows[i][j] = rows[i][j] + 1
                mutated = list(FACTORS)
                mutated[k] = ExactMatrix(INTEGER, rows)
                assert not verify_certificate(_certificate(TARGET, mutated)).valid


def test_single_entry_change_can_stay_valid() -> None:
    """测试单个元素的改动也可能恰好得到另一个合法分解"""

    p = zmat([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    changed = zmat([[1, 0, 5], [0, 1, 0], [0, 0, 0]])
    assert verify_certificate(_certificate(p, [changed, p])).valid


def _bump(matrix: ExactMatrix, i: int, j: int, delta: int) -> ExactMatrix:
    rows = matrix.to_lists()
    rows[i][j] = rows[i][j] + delta
    return ExactMatrix(matrix.ring, rows)


@pytest.mark.acceptance
def test_verify_mutations_full() -> None:
    """测试 200 个单元素改动: 改动目标矩阵一律不通过, 改动因子时结论与逐项重算一致"""

    rng = SplitMix64(15)
    for k in range(200):
        n = 2 + k % 3
        certificate = factor_singular(draw_singular(rng, INTEGER, n, 9))
        factors, target = list(certificate.factors), certificate.target
        index, i, j = rng.below(len(factors) + 1), rng.below(n), rng.below(n)
        delta = rng.symmetric(4) or 5

        if index == len(factors):
            verdict = verify_certificate(_certificate(_bump(target, i, j, delta), factors))
            assert not verdict.valid
            continue

        factors[index] = _bump(factors[index], i, j, delta)
        verdict = verify_certificate(_certificate(target, factors))
        expected = all(is_idempotent(f) for f in factors) and mat_product(INTEGER, n, factors) == target
        assert verdict.valid is expected


def test_canonical_bytes() -> None:
    """测试证书的规范 JSON 字节串"""

    certificate = build_certificate(TARGET, FACTORS, "ip2-euclid")
    data = dumps_certificate(certificate)

    assert data == (
        b'{"factors":[{"cols":2,"entries":[["1","1"],["0","0"]],"ring":{"kind":"integer"},"rows":2},'
        b'{"cols":2,"entries":[["-5","-3"],["10","6"]],"ring":{"kind":"integer"},"rows":2}],'
        b'"meta":{"algorithm":"ip2-euclid","count":2},"ring":{"kind":"integer"},'
        b'"target":{"cols":2,"entries":[["5","3"],["0","0"]],"ring":{"kind":"integer"},"rows":2}}'
    )
    assert dumps_certificate(loads_certificate(data)) == data


@pytest.mark.parametrize("ring", [INTEGER, F5], ids=str)
@settings(max_examples=25)
@given(seed=st.integers(0, 2**32), n=st.integers(2, 4))
def test_roundtrip(ring: RingDescriptor, seed: int, n: int) -> None:
    """测试序列化后再解析得到相等的证书"""

    certificate = factor_singular(draw_singular(SplitMix64(seed), ring, n, 3))
    again = roundtrip_serialize(certificate)

    assert again == certificate
    assert dumps_certificate(again) == dumps_certificate(certificate)
    assert verify_certificate(again).valid


def test_loads_rejects() -> None:
    """测试不合法的证书 JSON"""

    data = dumps_certificate(build_certificate(TARGET, FACTORS, "ip2-euclid"))
    with pytest.raises(ParseError):
        loads_certificate(data[:-7])

    with pytest.raises(ParseError) as exc_info:
        loads_certificate(data.replace(b'"10"', b'"ten"'))
    assert exc_info.value.location == "factors.1.entries.1.0"

    with pytest.raises(ParseError) as exc_info:
        loads_certificate(data.replace(b'"count":2', b'"count":-1'))
    assert exc_info.value.location == "meta.count"
