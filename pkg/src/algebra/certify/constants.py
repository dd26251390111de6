# _author: Coke
# _date: 2024/9/12 09:30
# _description: 证书校验结论信息


class Reason:
    """校验不通过的原因"""

    TARGET_NOT_SQUARE = "目标矩阵不是方阵"
    RING_MISMATCH = "矩阵所属的环与证书声明的环不一致"
    SHAPE_MISMATCH = "因子与目标矩阵的形状不一致"
    EMPTY_NOT_IDENTITY = "因子列表为空但目标矩阵不是单位矩阵"
    NOT_IDEMPOTENT = "因子不是幂等矩阵"
    PRODUCT_MISMATCH = "因子乘积不等于目标矩阵"
