# _author: Coke
# _date: 2024/9/7 14:05
# _description: 矩阵 JSON 模型

from typing import Any

from pydantic import Field, model_validator

from src.algebra.rings import RingDescriptor, decode_element, encode_element
from src.models import CustomModel

from .matrix import ExactMatrix


class MatrixModel(CustomModel):
    """矩阵 JSON: {"ring", "rows", "cols", "entries"}"""

    ring: RingDescriptor
    rows: int = Field(..., ge=1, description="行数")
    cols: int = Field(..., ge=1, description="列数")
    entries: list[list[Any]] = Field(..., description="行优先的元素编码")

    @model_validator(mode="after")
    def validate_shape(self) -> "MatrixModel":
        """校验 entries 与 rows/cols 一致"""
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries 的形状与 {self.rows}×{self.cols} 不一致")

        return self

    @classmethod
    def from_matrix(cls, matrix: ExactMatrix) -> "MatrixModel":
        return cls(
            ring=matrix.ring,
            rows=matrix.rows,
            cols=matrix.cols,
            entries=[[encode_element(v) for v in row] for row in matrix.entries],
        )

    def to_matrix(self, location: str = "") -> ExactMatrix:
        """
        解码为 ExactMatrix

        :param location: 模型在外层文档中的位置, 用于报告错误
        :return:
        :raises BadElement: 元素编码错误时抛出
        """
        prefix = f"{location}." if location else ""
        rows = [
            [decode_element(self.ring, code, f"{prefix}entries.{i}.{j}") for j, code in enumerate(row)]
            for i, row in enumerate(self.entries)
        ]
        return ExactMatrix(self.ring, rows, check=False)
