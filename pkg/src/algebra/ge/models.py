# _author: Coke
# _date: 2024/9/14 15:30
# _description: GE 因子列表 JSON 模型, 按 kind 区分因子种类

from typing import Annotated, Any, Literal

from pydantic import Field

from src.algebra.rings import RingDescriptor, decode_element, encode_element
from src.models import CustomModel

from .types import DiagUnits, Elementary, GEFactor, Swap


class ElementaryModel(CustomModel):
    kind: Literal["elementary"] = "elementary"
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)
    c: Any = Field(..., description="元素编码")


class DiagUnitsModel(CustomModel):
    kind: Literal["diag"] = "diag"
    units: list[Any] = Field(..., min_length=1, description="对角元素编码")


class SwapModel(CustomModel):
    kind: Literal["swap"] = "swap"
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)


GEFactorModel = Annotated[ElementaryModel | DiagUnitsModel | SwapModel, Field(discriminator="kind")]


class GEDecompositionModel(CustomModel):
    """ge2 命令输出: {"ring", "factors": [{"kind", ...}]}"""

    ring: RingDescriptor
    factors: list[GEFactorModel]

    @classmethod
    def from_factors(cls, ring: RingDescriptor, factors: list[GEFactor]) -> "GEDecompositionModel":
        items: list[ElementaryModel | DiagUnitsModel | SwapModel] = []
        for factor in factors:
            match factor:
                case Elementary():
                    items.append(ElementaryModel(i=factor.i, j=factor.j, c=encode_element(factor.c)))
                case DiagUnits():
                    items.append(DiagUnitsModel(units=[encode_element(u) for u in factor.units]))
                case Swap():
                    items.append(SwapModel(i=factor.i, j=factor.j))
        return cls(ring=ring, factors=items)

    def to_factors(self) -> list[GEFactor]:
        """
        解码为 GE 因子

        :return:
        :raises BadElement: 元素编码错误时抛出
        """
        factors: list[GEFactor] = []
        for k, item in enumerate(self.factors):
            location = f"factors.{k}"
            match item:
                case ElementaryModel():
                    c = decode_element(self.ring, item.c, f"{location}.c")
                    factors.append(Elementary(i=item.i, j=item.j, c=c))
                case DiagUnitsModel():
                    units = [decode_element(self.ring, u, f"{location}.units.{m}") for m, u in enumerate(item.units)]
                    factors.append(DiagUnits(units=tuple(units)))
                case SwapModel():
                    factors.append(Swap(i=item.i, j=item.j))
        return factors
