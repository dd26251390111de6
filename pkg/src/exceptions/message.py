# _author: Coke
# _date: 2024/9/2 10:33
# _description: 异常错误描述

EXIT_1_INVALID = "证书校验未通过"
EXIT_2_DOMAIN = "输入不满足代数前提"
EXIT_64_USAGE = "命令行参数错误"
EXIT_65_PARSE = "输入数据解析失败"
EXIT_70_INTERNAL = "程序内部错误"

SIZE_LIMIT_EXCEEDED = "矩阵阶数超过上限"
