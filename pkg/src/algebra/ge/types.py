# _author: Coke
# _date: 2024/9/13 09:40
# _description: GE 因子: 初等矩阵、可逆对角矩阵、行对换, 下标从 1 开始

from typing import Literal

from pydantic import ConfigDict, Field, model_validator

from src.algebra.exactmat import ExactMatrix
from src.algebra.rings import RingDescriptor, RingElement
from src.algebra.rings.exceptions import NotAUnit
from src.models import CustomModel

from .constants import ErrorCode, FactorKind
from .exceptions import BadIndex


class _Factor(CustomModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    def check_size(self, n: int) -> None:
        if self.span > n:
            raise BadIndex(f"{ErrorCode.BAD_INDEX}: {self} 不能作用于 {n} 阶矩阵")

    @property
    def span(self) -> int:
        """因子涉及的最大下标"""
        raise NotImplementedError


class Elementary(_Factor):
    """I + c·e_ij, i ≠ j"""

    kind: Literal[FactorKind.ELEMENTARY] = FactorKind.ELEMENTARY
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)
    c: RingElement

    @model_validator(mode="after")
    def validate_indices(self) -> "Elementary":
        if self.i == self.j:
            raise BadIndex(ErrorCode.SAME_INDEX)

        return self

    @property
    def span(self) -> int:
        return max(self.i, self.j)

    def to_matrix(self, ring: RingDescriptor, n: int) -> ExactMatrix:
        self.check_size(n)
        rows = ExactMatrix.identity(ring, n).to_lists()
        rows[self.i - 1][self.j - 1] = self.c
        return ExactMatrix(ring, rows)

    def inverse(self) -> "Elementary":
        return Elementary(i=self.i, j=self.j, c=-self.c)

    def __str__(self) -> str:
        return f"Elementary({self.i}, {self.j}, {self.c})"


class DiagUnits(_Factor):
    """diag(u₁, …, u_k, 1, …, 1), 所有 u 可逆"""

    kind: Literal[FactorKind.DIAG] = FactorKind.DIAG
    units: tuple[RingElement, ...]

    @model_validator(mode="after")
    def validate_units(self) -> "DiagUnits":
        if not self.units or not all(u.is_unit() for u in self.units):
            raise NotAUnit(ErrorCode.NOT_UNITS)

        return self

    @classmethod
    def of(cls, *units: RingElement) -> "DiagUnits":
        return cls(units=units)

    @property
    def span(self) -> int:
        return len(self.units)

    def is_identity(self) -> bool:
        return all(u.is_one() for u in self.units)

    def to_matrix(self, ring: RingDescriptor, n: int) -> ExactMatrix:
        self.check_size(n)
        rows = ExactMatrix.identity(ring, n).to_lists()
        for k, u in enumerate(self.units):
            rows[k][k] = u
        return ExactMatrix(ring, rows)

    def inverse(self) -> "DiagUnits":
        return DiagUnits(units=tuple(u.inverse() for u in self.units))

    def __str__(self) -> str:
        return f"DiagUnits({', '.join(str(u) for u in self.units)})"


class Swap(_Factor):
    """交换第 i 行与第 j 行的置换矩阵"""

    kind: Literal[FactorKind.SWAP] = FactorKind.SWAP
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)

    @model_validator(mode="after")
    def validate_indices(self) -> "Swap":
        if self.i == self.j:
            raise BadIndex(ErrorCode.SAME_INDEX)

        return self

    @property
    def span(self) -> int:
        return max(self.i, self.j)

    def to_matrix(self, ring: RingDescriptor, n: int) -> ExactMatrix:
        self.check_size(n)
        rows = ExactMatrix.identity(ring, n).to_lists()
        rows[self.i - 1], rows[self.j - 1] = rows[self.j - 1], rows[self.i - 1]
        return ExactMatrix(ring, rows)

    def inverse(self) -> "Swap":
        return self

    def __str__(self) -> str:
        return f"Swap({self.i}, {self.j})"


GEFactor = Elementary | DiagUnits | Swap
