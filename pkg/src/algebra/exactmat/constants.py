# _author: Coke
# _date: 2024/9/5 09:30
# _description: 矩阵运算错误信息


class ErrorCode:
    """矩阵错误信息"""

    SHAPE_MISMATCH = "矩阵维度不匹配"
    EMPTY_MATRIX = "矩阵的行数和列数必须为正数"
    NOT_SQUARE = "矩阵不是方阵"
    NOT_SINGULAR = "矩阵非奇异 (行列式不为零)"
    NOT_IDEMPOTENT = "矩阵不是幂等矩阵"
    NOT_UNIMODULAR = "行向量不是单模的 (content 不可逆)"
    NOT_INVERTIBLE = "矩阵不可逆"
    CANONICAL_FORM_FAILED = "幂等矩阵的基矩阵不可逆"
