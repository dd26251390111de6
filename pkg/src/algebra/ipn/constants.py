# _author: Coke
# _date: 2024/9/18 09:05
# _description: n×n 幂等分解错误信息


class ErrorCode:
    """n×n 幂等分解错误信息"""

    EMPTY_FACTORS = "递归分解只得到单位矩阵因子, 子矩阵不可能奇异"
    ZERO_TAIL = "末尾幂等因子为零矩阵, 左上块必然奇异"
    RANK_OUT_OF_RANGE = "末尾幂等因子的秩超出范围"
