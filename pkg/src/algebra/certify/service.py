# _author: Coke
# _date: 2024/9/12 11:00
# _description: 证书构造、独立校验及规范序列化

from src.algebra.exactmat import ExactMatrix, mat_mul
from src.constants import Algorithm
from src.models import load_model

from .constants import Reason
from .models import CertificateModel
from .types import CertificateMeta, FactorizationCertificate, Verdict


def build_certificate(
    target: ExactMatrix, factors: list[ExactMatrix], algorithm: Algorithm | str
) -> FactorizationCertificate:
    """
    组装证书, 元信息中的因子个数按 factors 填写

    :param target: 目标矩阵
    :param factors: 幂等因子
    :param algorithm: 算法标签
    :return:
    """
    tag = algorithm.value if isinstance(algorithm, Algorithm) else algorithm
    return FactorizationCertificate(
        ring=target.ring,
        target=target,
        factors=factors,
        meta=CertificateMeta(algorithm=tag, count=len(factors)),
    )


def verify_certificate(certificate: FactorizationCertificate) -> Verdict:
    """
    独立校验证书, 只使用矩阵乘法与相等比较

    :param certificate: 证书
    :return: 校验结论, 任何不合法的输入都以不通过的结论返回
    """
    target = certificate.target
    if not target.is_square:
        return Verdict.invalid(Reason.TARGET_NOT_SQUARE)
    if target.ring != certificate.ring:
        return Verdict.invalid(Reason.RING_MISMATCH)

    for k, factor in enumerate(certificate.factors):
        if factor.ring != certificate.ring:
            return Verdict.invalid(f"{Reason.RING_MISMATCH}: 第 {k} 个因子")
        if factor.shape != target.shape:
            return Verdict.invalid(f"{Reason.SHAPE_MISMATCH}: 第 {k} 个因子为 {factor.rows}×{factor.cols}")

    if not certificate.factors:
        return Verdict.ok() if target.is_identity() else Verdict.invalid(Reason.EMPTY_NOT_IDENTITY)

    for k, factor in enumerate(certificate.factors):
        if mat_mul(factor, factor) != factor:
            return Verdict.invalid(f"{Reason.NOT_IDEMPOTENT}: 第 {k} 个因子")

    product = certificate.factors[0]
    for factor in certificate.factors[1:]:
        product = mat_mul(product, factor)
    if product != target:
        return Verdict.invalid(Reason.PRODUCT_MISMATCH)

    return Verdict.ok()


def dumps_certificate(certificate: FactorizationCertificate) -> bytes:
    """
    证书转换为规范 JSON 字节串, 相等的证书得到相同的字节

    :param certificate: 证书
    :return:
    """
    return CertificateModel.from_certificate(certificate).canonical_json()


def loads_certificate(data: bytes | str) -> FactorizationCertificate:
    """
    解析证书 JSON

    :param data: JSON 字节串或文本
    :return:
    :raises ParseError: JSON 不合法、字段缺失或元素编码错误时抛出, ERRORS 中记录出错位置
    """
    return load_model(CertificateModel, data).to_certificate()


def roundtrip_serialize(certificate: FactorizationCertificate) -> FactorizationCertificate:
    """
    序列化后再解析

    :param certificate: 证书
    :return: 与输入逐元素相等的证书
    """
    return loads_certificate(dumps_certificate(certificate))
