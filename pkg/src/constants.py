# _author: Coke
# _date: 2024/9/2 10:12
# _description: 当前环境信息及全局常量

from enum import Enum

PROGRAM_NAME = "idemfact"  # 命令行程序名称


class Environment(str, Enum):
    LOCAL = "LOCAL"
    TESTING = "TESTING"
    PRODUCTION = "PRODUCTION"

    @property
    def is_debug(self) -> bool:
        return self in (self.LOCAL, self.TESTING)

    @property
    def is_testing(self) -> bool:
        return self == self.TESTING


class Algorithm(str, Enum):
    """证书中记录的分解算法标识"""

    TRIVIAL = "trivial"
    IDEMPOTENT = "idempotent"
    IP2_EUCLID = "ip2-euclid"
    IPN_INDUCTION = "ipn-induction"
