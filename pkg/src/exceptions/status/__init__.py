from .command import (
    EXIT_0_OK,
    EXIT_1_INVALID,
    EXIT_2_DOMAIN,
    EXIT_64_USAGE,
    EXIT_65_PARSE,
    EXIT_70_INTERNAL,
)

__all__ = [
    "EXIT_0_OK",
    "EXIT_1_INVALID",
    "EXIT_2_DOMAIN",
    "EXIT_64_USAGE",
    "EXIT_65_PARSE",
    "EXIT_70_INTERNAL",
]
