# _author: Coke
# _date: 2024/9/20 09:20
# _description: 随机矩阵生成参数及 bench 结果

from pydantic import Field

from src.algebra.rings import RingDescriptor
from src.models import CustomModel


class GenSpec(CustomModel):
    """奇异矩阵生成参数, 相同参数总是生成相同的矩阵"""

    ring: RingDescriptor
    size: int = Field(..., ge=1, description="矩阵阶数 n")
    seed: int = Field(..., ge=0, lt=1 << 64, description="splitmix64 种子")
    bound: int = Field(..., ge=1, description="整数元素的绝对值上界 / 多项式的次数上界")


class BenchRow(CustomModel):
    """bench 表格中的一行"""

    size: int
    count: int
    mean_factors: float
    mean_ms: float
