from .command import DetailedException, DomainError, InternalError, ParseError, SizeLimitExceeded, UsageError

__all__ = [
    "DetailedException",
    "UsageError",
    "ParseError",
    "DomainError",
    "InternalError",
    "SizeLimitExceeded",
]
