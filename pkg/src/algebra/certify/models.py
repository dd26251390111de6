# _author: Coke
# _date: 2024/9/12 10:20
# _description: 证书 JSON 模型

from pydantic import Field

from src.algebra.exactmat import MatrixModel
from src.algebra.rings import RingDescriptor
from src.models import CustomModel

from .types import CertificateMeta, FactorizationCertificate


class CertificateModel(CustomModel):
    """证书 JSON: {"ring", "target", "factors", "meta": {"algorithm", "count"}}"""

    ring: RingDescriptor
    target: MatrixModel
    factors: list[MatrixModel] = Field(..., description="按乘积顺序排列的幂等因子")
    meta: CertificateMeta

    @classmethod
    def from_certificate(cls, certificate: FactorizationCertificate) -> "CertificateModel":
        return cls(
            ring=certificate.ring,
            target=MatrixModel.from_matrix(certificate.target),
            factors=[MatrixModel.from_matrix(factor) for factor in certificate.factors],
            meta=certificate.meta,
        )

    def to_certificate(self) -> FactorizationCertificate:
        """
        解码全部矩阵

        :return:
        :raises BadElement: 元素编码错误时抛出, 位置形如 factors.1.entries.0.1
        """
        return FactorizationCertificate(
            ring=self.ring,
            target=self.target.to_matrix("target"),
            factors=[factor.to_matrix(f"factors.{k}") for k, factor in enumerate(self.factors)],
            meta=self.meta,
        )
