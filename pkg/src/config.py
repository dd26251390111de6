# _author: Coke
# _date: 2024/9/2 10:20
# _description: 项目配置项, 所有环境变量以 IDEMFACT_ 开头

from pydantic import model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.constants import Environment

from .exceptions import SizeLimitExceeded


class Config(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="IDEMFACT_")

    ENVIRONMENT: Environment = Environment.PRODUCTION  # 当前环境

    LOGGING_LEVEL: str = "INFO"  # 日志等级
    LOG_CONFIG: str = "logging.ini"  # 日志配置文件

    MAX_SIZE: int = 64  # 允许处理的最大矩阵阶数

    BENCH_COUNT: int = 20  # bench 每个阶数生成的矩阵数量
    BENCH_WORKERS: int = 4  # bench 并发校验的线程数

    @model_validator(mode="after")
    def validate_limits(self) -> "Config":
        """校验数量类配置必须为正数"""
        if self.MAX_SIZE < 1:
            raise ValueError("IDEMFACT_MAX_SIZE 必须大于 0")
        if self.BENCH_COUNT < 1 or self.BENCH_WORKERS < 1:
            raise ValueError("IDEMFACT_BENCH_COUNT 与 IDEMFACT_BENCH_WORKERS 必须大于 0")

        return self


settings = Config()


def ensure_size(size: int) -> None:
    """
    判断矩阵阶数是否超出配置上限, 超出则抛出异常

    :param size: 矩阵阶数
    :return:
    :raises SizeLimitExceeded: 阶数大于 IDEMFACT_MAX_SIZE 时抛出
    """

    if size > settings.MAX_SIZE:
        raise SizeLimitExceeded(f"矩阵阶数 {size} 超过上限 {settings.MAX_SIZE}")
