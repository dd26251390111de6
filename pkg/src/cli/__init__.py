from .router import app

__all__ = ["app"]
