from .types import CustomModel, canonical_dumps, error_location, load_model

__all__ = ["CustomModel", "canonical_dumps", "error_location", "load_model"]
