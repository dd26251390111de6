# _author: Coke
# _date: 2024/9/20 09:10
# _description: 命令行常量及错误信息

RING_HELP = "环: integer | rational | gauss | polymod:<p>"
STRATEGY_HELP = "GE₂ 分解策略: euclid | unit-shift:<x> | continuant"
BENCH_TITLE = "factor + verify"
BENCH_COLUMNS = ("n", "count", "mean factors", "mean ms")


class ErrorCode:
    """命令行参数错误信息"""

    BAD_RING = "无法识别的环"
    BAD_STRATEGY = "无法识别的 GE₂ 分解策略"
    BAD_SHIFT = "unit-shift 的平移量不是合法的元素编码"
    BENCH_INVALID = "bench 生成的证书未通过校验"
