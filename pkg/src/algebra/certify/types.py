# _author: Coke
# _date: 2024/9/12 09:45
# _description: 分解证书及校验结论

from pydantic import ConfigDict, Field

from src.algebra.exactmat import ExactMatrix
from src.algebra.rings import RingDescriptor
from src.models import CustomModel


class CertificateMeta(CustomModel):
    """证书元信息"""

    algorithm: str = Field(..., description="生成证书的算法标签")
    count: int = Field(..., ge=0, description="因子个数")


class FactorizationCertificate(CustomModel):
    """分解证书: target 等于 factors 的有序乘积, 每个因子都是幂等矩阵"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ring: RingDescriptor
    target: ExactMatrix
    factors: list[ExactMatrix]
    meta: CertificateMeta

    @property
    def size(self) -> int:
        return self.target.rows


class Verdict(CustomModel):
    """校验结论, 不通过时 reason 给出原因"""

    valid: bool
    reason: str | None = None

    @classmethod
    def ok(cls) -> "Verdict":
        return cls(valid=True)

    @classmethod
    def invalid(cls, reason: str) -> "Verdict":
        return cls(valid=False, reason=reason)
